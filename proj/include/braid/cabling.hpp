#pragma once

#include <cstdlib>
#include <vector>

#include "braid/errors.hpp"
#include "braid/mixed.hpp"
#include "braid/permutation.hpp"
#include "braid/word.hpp"

namespace braid {

/// Replaces every strand by a parallel bundle of k strands.  Each letter s_i^{+-1}
/// becomes the positive block crossing omega(k) of the bundles at positions i and i+1
/// (reindexed by (i-1)k), inverted for negative letters.  Extends multiplicatively, so
/// cable(a*b, k) = cable(a, k) * cable(b, k) letter by letter; preservation of the braid
/// relations (checked by the test suites) makes it a group homomorphism, which restricts
/// to the block-preserving and block-swapping subgroups.
inline BraidWord cable(const BraidWord& w, int k) {
    if (k < 1) throw IndexError("cable multiplicity must be >= 1");
    const BraidWord block = omega(k);
    std::vector<int> letters;
    letters.reserve(w.size() * block.size());
    for (int e : w.letters()) {
        const int shift = (std::abs(e) - 1) * k;
        if (e > 0) {
            for (int b : block.letters()) letters.push_back(b + shift);
        } else {
            for (auto it = block.letters().rbegin(); it != block.letters().rend(); ++it)
                letters.push_back(-(*it + shift));
        }
    }
    return BraidWord(w.strands() * k, std::move(letters));
}

/// The permutation a cabled word must induce: bundle r of strand i follows strand i.
inline Permutation inflate_permutation(const Permutation& p, int k) {
    std::vector<int> img(p.size() * k);
    for (int i = 1; i <= p.size(); ++i)
        for (int r = 1; r <= k; ++r)
            img[(i - 1) * k + r - 1] = (p(i) - 1) * k + r;
    return Permutation::from_images(std::move(img));
}

/// Cabling commutes with the block-swap sign: the sign of the cabled word in the
/// inflated context equals the sign of the original.
inline bool check_cabling_diagram(const BraidWord& w, int k, const MixedContext& ctx) {
    return pi_sign(cable(w, k), MixedContext(ctx.n * k)) == pi_sign(w, ctx);
}

}  // namespace braid
