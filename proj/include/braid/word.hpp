#pragma once

#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "braid/errors.hpp"
#include "braid/permutation.hpp"

namespace braid {

/// A braid word on a declared number of strands.
///
/// Letters are nonzero integers: +i stands for the Artin generator s_i (the strand in
/// position i crosses over the strand in position i+1), -i for its inverse.  Generator
/// indices are 1-based and must lie in [1, strands-1].
///
/// Words are plain sequences: construction never rewrites them, so displayed forms
/// stay inspectable letter by letter.  free_reduce() and compose() do reduce.
/// Equality (operator==) is letter-for-letter; group equality is decided by the
/// normal-form engine in garside.hpp.
class BraidWord {
public:
    BraidWord() : strands_(1) {}

    explicit BraidWord(int strands, std::vector<int> letters = {})
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) throw IndexError("strand count must be >= 1");
        for (int e : letters_) check_letter(e);
    }

    BraidWord(int strands, std::initializer_list<int> letters)
        : BraidWord(strands, std::vector<int>(letters)) {}

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// Sum of letter signs; invariant under the braid relations.
    int writhe() const {
        int s = 0;
        for (int e : letters_) s += (e > 0) ? 1 : -1;
        return s;
    }

    bool operator==(const BraidWord&) const = default;

private:
    void check_letter(int e) const {
        if (e == 0 || std::abs(e) > strands_ - 1)
            throw IndexError("letter index out of range for declared strand count");
    }

    int strands_;
    std::vector<int> letters_;
};

/// Removes all adjacent cancelling pairs.  Idempotent and length-nonincreasing.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int e : w.letters()) {
        if (!out.empty() && out.back() == -e)
            out.pop_back();
        else
            out.push_back(e);
    }
    return BraidWord(w.strands(), std::move(out));
}

/// Concatenation, freely reduced.
inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw StrandMismatch("composing words on different strand counts");
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    auto push = [&out](int e) {
        if (!out.empty() && out.back() == -e)
            out.pop_back();
        else
            out.push_back(e);
    };
    for (int e : a.letters()) push(e);
    for (int e : b.letters()) push(e);
    return BraidWord(a.strands(), std::move(out));
}

/// Reverses the letter order and flips every sign.
inline BraidWord inverse(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
    return BraidWord(w.strands(), std::move(out));
}

/// w^e; negative exponents use the inverse word.
inline BraidWord power(const BraidWord& w, int e) {
    BraidWord base = e >= 0 ? w : inverse(w);
    BraidWord r(w.strands());
    for (int k = std::abs(e); k > 0; --k) r = compose(r, base);
    return r;
}

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) { return compose(a, b); }

/// Image of the word under the projection to the symmetric group: strand starting in
/// position i ends in position permutation_of(w)(i).
inline Permutation permutation_of(const BraidWord& w) {
    const int m = w.strands();
    std::vector<int> occupant(m);  // occupant[p-1] = strand at position p
    std::iota(occupant.begin(), occupant.end(), 1);
    for (int e : w.letters()) {
        const int i = std::abs(e);
        std::swap(occupant[i - 1], occupant[i]);
    }
    std::vector<int> img(m);
    for (int p = 1; p <= m; ++p) img[occupant[p - 1] - 1] = p;
    return Permutation::from_images(std::move(img));
}

/// True iff the word induces the trivial permutation.
inline bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

/// The pure-braid generator A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1
/// on m strands; the strands starting at i and j wind around each other once.
inline BraidWord a_gen(int i, int j, int m) {
    if (!(1 <= i && i < j && j <= m)) throw IndexError("a_gen requires 1 <= i < j <= m");
    std::vector<int> letters;
    letters.reserve(2 * j - i);
    for (int k = j - 1; k >= i + 1; --k) letters.push_back(k);
    letters.push_back(i);
    letters.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
    return BraidWord(m, std::move(letters));
}

/// The cross-block form of A_{i,j} on 2n strands, for 1 <= i <= n < n+1 <= j <= 2n:
/// (s_{j-1}...s_{n+1}) (s_i^-1...s_{n-1}^-1) s_n^2 (s_i...s_{n-1}) (s_{n+1}^-1...s_{j-1}^-1).
/// Group-equal to a_gen(i, j, 2n); the equality is certified by the normal-form engine.
inline BraidWord a_gen_cross(int i, int j, int n) {
    if (n < 1 || !(1 <= i && i <= n) || !(n + 1 <= j && j <= 2 * n))
        throw IndexError("a_gen_cross requires 1 <= i <= n and n+1 <= j <= 2n");
    // The two halves around s_n^2 are mutual inverses: the outer pair walks strand j up
    // to position n+1, the inner pair walks strand i down to position n.
    std::vector<int> letters;
    for (int k = j - 1; k >= n + 1; --k) letters.push_back(k);
    for (int k = i; k <= n - 1; ++k) letters.push_back(-k);
    letters.push_back(n);
    letters.push_back(n);
    for (int k = n - 1; k >= i; --k) letters.push_back(k);
    for (int k = n + 1; k <= j - 1; ++k) letters.push_back(-k);
    return BraidWord(2 * n, std::move(letters));
}

/// The half twist D_m = (s_1 s_2 ... s_{m-1})(s_1 ... s_{m-2}) ... (s_1 s_2)(s_1),
/// of length m(m-1)/2.  Conjugation by it sends s_i to s_{m-i}.
inline BraidWord delta(int m) {
    if (m < 1) throw IndexError("delta requires m >= 1");
    std::vector<int> letters;
    letters.reserve(m * m - 1 / 2);
    for (int r = m - 1; r >= 1; --r)
        for (int k = 1; k <= r; ++k) letters.push_back(k);
    return BraidWord(m, std::move(letters));
}

/// The full twist D_m^2 written as the product A_{1,2}(A_{1,3}A_{2,3})...(A_{1,m}...A_{m-1,m});
/// generates the centre of the braid group.
inline BraidWord full_twist(int m) {
    if (m < 1) throw IndexError("full_twist requires m >= 1");
    std::vector<int> letters;
    for (int j = 2; j <= m; ++j)
        for (int i = 1; i <= j - 1; ++i) {
            const BraidWord a = a_gen(i, j, m);
            letters.insert(letters.end(), a.letters().begin(), a.letters().end());
        }
    return BraidWord(m, std::move(letters));
}

/// The positive block crossing on 2n strands: the block {1..n} passes wholly over
/// {n+1..2n}.  Its permutation is i -> i+n mod 2n.  Word: prod_{j=0}^{n-1} prod_{i=n-j}^{2n-1-j} s_i.
inline BraidWord omega(int n) {
    if (n < 1) throw IndexError("omega requires n >= 1");
    std::vector<int> letters;
    letters.reserve(n * n);
    for (int j = 0; j <= n - 1; ++j)
        for (int i = n - j; i <= 2 * n - 1 - j; ++i) letters.push_back(i);
    return BraidWord(2 * n, std::move(letters));
}

}  // namespace braid
