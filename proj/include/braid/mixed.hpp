#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "braid/errors.hpp"
#include "braid/word.hpp"
#include "braid/z2.hpp"

namespace braid {

/// Two equal blocks of strands: block 1 = {1..n}, block 2 = {n+1..2n}.
struct MixedContext {
    int n;

    explicit MixedContext(int block_size) : n(block_size) {
        if (n < 1) throw IndexError("block size must be >= 1");
    }

    int strands() const { return 2 * n; }
    bool in_block1(int strand) const { return strand >= 1 && strand <= n; }
};

namespace detail {

inline void check_strands(const BraidWord& w, const MixedContext& ctx) {
    if (w.strands() != ctx.strands())
        throw StrandMismatch("word does not live on 2n strands");
}

// 0 = blocks preserved, 1 = blocks swapped, -1 = neither.
inline int block_action(const BraidWord& w, const MixedContext& ctx) {
    const Permutation p = permutation_of(w);
    bool preserves = true, swaps = true;
    for (int i = 1; i <= ctx.n; ++i) {
        if (!ctx.in_block1(p(i))) preserves = false;
        if (ctx.in_block1(p(i))) swaps = false;
    }
    if (preserves) return 0;
    if (swaps) return 1;
    return -1;
}

}  // namespace detail

/// Membership in B_{n,n}: the permutation maps each block onto itself.
inline bool in_bnn(const BraidWord& w, const MixedContext& ctx) {
    detail::check_strands(w, ctx);
    return detail::block_action(w, ctx) == 0;
}

/// Membership in B^2_{n,n}: the permutation preserves or swaps the two blocks.
inline bool in_bnn2(const BraidWord& w, const MixedContext& ctx) {
    detail::check_strands(w, ctx);
    return detail::block_action(w, ctx) != -1;
}

/// The Z2 quotient of B^2_{n,n} by B_{n,n}: 0 when the blocks are preserved, 1 when swapped.
inline Z2 pi_sign(const BraidWord& w, const MixedContext& ctx) {
    detail::check_strands(w, ctx);
    const int a = detail::block_action(w, ctx);
    if (a == -1) throw NotInB2nn("permutation neither preserves nor swaps the blocks");
    return Z2(a);
}

/// The Z2 crossing invariant on B_{n,n}: half the signed number of crossings between
/// strands originating in different blocks, mod 2.
///
/// On generators: s_k -> 0 for every in-block k, same-block A_{i,j} -> 0, cross-block
/// A_{i,j} -> 1.  A block-preserving braid crosses each cross-block strand pair an even
/// number of times (the blocks end where they started), which makes the halving integral;
/// that evenness is asserted per pair.  Additive: epsilon(ab) = epsilon(a) + epsilon(b).
inline Z2 epsilon(const BraidWord& w, const MixedContext& ctx) {
    detail::check_strands(w, ctx);
    if (detail::block_action(w, ctx) != 0)
        throw NotInBnn("crossing invariant requires a block-preserving word");

    const int m = ctx.strands();
    std::vector<int> occupant(m);
    std::iota(occupant.begin(), occupant.end(), 1);
    // counts[a-1][b-1] accumulates signed crossings of the strands starting at a and b.
    std::vector<std::vector<int>> counts(m,
                                         std::vector<int>(m, 0));
    for (int e : w.letters()) {
        const int i = std::abs(e);
        const int a = occupant[i - 1];
        const int b = occupant[i];
        counts[std::min(a, b) - 1][std::max(a, b) - 1] +=
            (e > 0) ? 1 : -1;
        std::swap(occupant[i - 1], occupant[i]);
    }

    long long half_sum = 0;
    for (int a = 1; a <= ctx.n; ++a)
        for (int b = ctx.n + 1; b <= m; ++b) {
            const int c = counts[a - 1][b - 1];
            if (c % 2 != 0)
                throw InternalError("odd cross-block crossing count for a block-preserving word");
            half_sum += c / 2;
        }
    return Z2::of(half_sum);
}

}  // namespace braid
