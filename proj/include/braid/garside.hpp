#pragma once

#include <cstdlib>
#include <deque>
#include <utility>
#include <vector>

#include "braid/errors.hpp"
#include "braid/permutation.hpp"
#include "braid/word.hpp"

namespace braid {

/// Garside left-greedy normal form D^inf * f_1 * ... * f_k of a braid on `strands` strands.
///
/// Each factor is a permutation braid (a positive braid in which every pair of strands
/// crosses at most once), recorded by its permutation; its positive word length equals the
/// permutation's inversion count.  Factors are never the identity or the half twist, and
/// consecutive factors (s, t) are left-weighted: every generator starting t already
/// finishes s.  Two words represent the same group element iff their normal forms compare
/// equal, so this struct is the library's equality certificate.
struct NormalForm {
    int strands = 1;
    int inf = 0;
    std::vector<Permutation> factors;

    int canonical_length() const { return static_cast<int>(factors.size()); }
    bool trivial() const { return inf == 0 && factors.empty(); }
    bool operator==(const NormalForm&) const = default;
};

namespace detail {

// Factor arithmetic works on raw one-line arrays (1-based images at 0-based slots).
using Factor = std::vector<int>;

inline Factor factor_identity(int m) {
    Factor f(m);
    for (int i = 0; i < m; ++i) f[i] = i + 1;
    return f;
}

inline Factor factor_reversal(int m) {
    Factor f(m);
    for (int i = 0; i < m; ++i) f[i] = m - i;
    return f;
}

inline bool factor_is_identity(const Factor& f) {
    for (int i = 0; i < static_cast<int>(f.size()); ++i)
        if (f[i] != i + 1) return false;
    return true;
}

inline bool factor_is_reversal(const Factor& f) {
    const int m = static_cast<int>(f.size());
    for (int i = 0; i < m; ++i)
        if (f[i] != m - i) return false;
    return true;
}

// Conjugation by the half twist: flip(f)(j) = m+1 - f(m+1-j).  An automorphism of the
// set of permutation braids; used to push half-twist powers to the front.
inline Factor factor_flip(const Factor& f) {
    const int m = static_cast<int>(f.size());
    Factor g(m);
    for (int j = 1; j <= m; ++j) g[j - 1] = m + 1 - f[m - j];
    return g;
}

// Makes the adjacent pair (s, t) left-weighted by moving initial crossings of t into s:
// s_i can move when i starts t (t(i) > t(i+1)) and does not yet finish s
// (s^-1(i) < s^-1(i+1)).  Returns whether anything moved.
inline bool left_weight_pair(Factor& s, Factor& t) {
    const int m = static_cast<int>(s.size());
    std::vector<int> sinv(m);
    for (int p = 1; p <= m; ++p) sinv[s[p - 1] - 1] = p;

    bool changed = false;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 1; i < m; ++i) {
            if (t[i - 1] > t[i] &&
                sinv[i - 1] < sinv[i]) {
                const int pi = sinv[i - 1];
                const int pj = sinv[i];
                s[pi - 1] = i + 1;
                s[pj - 1] = i;
                std::swap(sinv[i - 1], sinv[i]);
                std::swap(t[i - 1], t[i]);
                changed = progress = true;
            }
        }
    }
    return changed;
}

// Rewrites the factor sequence to a global fixpoint of pairwise left-weighting.  Local
// moves only push crossings leftward, so the process terminates; the fixpoint is the
// unique left-greedy sequence (up to trailing identities and leading half twists).
inline void left_weight_all(std::vector<Factor>& f) {
    const int pairs = static_cast<int>(f.size()) - 1;
    if (pairs < 1) return;
    std::deque<int> work;
    std::vector<char> queued(pairs, 1);
    for (int i = 0; i < pairs; ++i) work.push_back(i);
    while (!work.empty()) {
        const int i = work.front();
        work.pop_front();
        queued[i] = 0;
        if (left_weight_pair(f[i], f[i + 1])) {
            if (i > 0 && !queued[i - 1]) {
                queued[i - 1] = 1;
                work.push_back(i - 1);
            }
            if (i + 1 < pairs && !queued[i + 1]) {
                queued[i + 1] = 1;
                work.push_back(i + 1);
            }
        }
    }
}

}  // namespace detail

/// Computes the left-greedy normal form.  Letters become permutation-braid factors
/// (s_i^-1 contributes one inverse half twist plus the complementary factor D s_i^-1);
/// the factor sequence is then rewritten to its left-weighted fixpoint and half twists
/// are absorbed into the infimum.
inline NormalForm normal_form(const BraidWord& w) {
    const int m = w.strands();
    NormalForm nf;
    nf.strands = m;
    if (w.empty()) return nf;

    // Convert letters to factors right to left so each pending inverse half twist flips
    // everything to its left exactly once (flip is an involution, so only parity counts).
    std::vector<detail::Factor> factors(w.size());
    int negatives = 0;
    for (int t = static_cast<int>(w.size()) - 1; t >= 0; --t) {
        const int e = w.letters()[t];
        const int i = std::abs(e);
        detail::Factor f;
        if (e > 0) {
            const int idx = (negatives % 2 == 1) ? m - i : i;
            f = detail::factor_identity(m);
            std::swap(f[idx - 1], f[idx]);
        } else {
            // D s_i^-1: the permutation braid completing s_i to a half twist on the right.
            // Its one-line array is the reversal with the entries holding i and i+1 swapped,
            // which sit at positions m-i and m-i+1.
            f = detail::factor_reversal(m);
            std::swap(f[m - i - 1], f[m - i]);
            if (negatives % 2 == 1) f = detail::factor_flip(f);
            ++negatives;
        }
        factors[t] = std::move(f);
    }
    nf.inf = -negatives;

    detail::left_weight_all(factors);

    // Half twists have migrated to the front, identities to the back.
    std::size_t first = 0;
    while (first < factors.size() && detail::factor_is_reversal(factors[first])) {
        ++nf.inf;
        ++first;
    }
    std::size_t last = factors.size();
    while (last > first && detail::factor_is_identity(factors[last - 1])) --last;

    nf.factors.reserve(last - first);
    for (std::size_t k = first; k < last; ++k) {
        if (detail::factor_is_identity(factors[k]) || detail::factor_is_reversal(factors[k]))
            throw InternalError("normal form: stray trivial factor after weighting");
        nf.factors.push_back(Permutation::from_images(std::move(factors[k])));
    }
    return nf;
}

/// Decides group-element equality.
inline bool are_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw StrandMismatch("comparing words on different strand counts");
    if (a.writhe() != b.writhe()) return false;
    if (!(permutation_of(a) == permutation_of(b))) return false;
    return normal_form(a) == normal_form(b);
}

/// Decides triviality.
inline bool is_trivial(const BraidWord& w) {
    if (w.writhe() != 0) return false;
    if (!is_pure(w)) return false;
    return normal_form(w).trivial();
}

/// Generator indices that start the permutation braid (can be its first crossing).
inline std::vector<int> starting_set(const Permutation& p) {
    std::vector<int> r;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) r.push_back(i);
    return r;
}

/// Generator indices that finish the permutation braid (can be its last crossing).
inline std::vector<int> finishing_set(const Permutation& p) {
    return starting_set(p.inverse());
}

/// A positive word realizing the permutation braid of p, of length p.inversions().
inline BraidWord permutation_braid_word(const Permutation& p) {
    const int m = p.size();
    std::vector<int> img = p.images();
    std::vector<int> letters;
    letters.reserve(p.inversions());
    bool descent = true;
    while (descent) {
        descent = false;
        for (int i = 1; i < m; ++i) {
            if (img[i - 1] > img[i]) {
                letters.push_back(i);
                std::swap(img[i - 1], img[i]);
                descent = true;
                break;
            }
        }
    }
    return BraidWord(m, std::move(letters));
}

/// Rebuilds a braid word from a normal form (half-twist powers expanded literally).
inline BraidWord normal_form_word(const NormalForm& nf) {
    BraidWord d = delta(nf.strands);
    BraidWord r = power(d, nf.inf);
    for (const Permutation& f : nf.factors) r = compose(r, permutation_braid_word(f));
    return r;
}

}  // namespace braid
