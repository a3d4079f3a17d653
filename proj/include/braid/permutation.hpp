#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "braid/errors.hpp"

namespace braid {

/// A bijection of {1..m}.
///
/// Composition is written left to right throughout the library: (p * q)(i) = q(p(i)),
/// matching the convention that the braid word "ab" means "a first, then b".
class Permutation {
public:
    Permutation() : img_{1} {}

    /// Identity on {1..m}.
    explicit Permutation(int m) : img_(check_size(m)) {
        std::iota(img_.begin(), img_.end(), 1);
    }

    /// Builds from one-line notation: images[i-1] is the image of i.  Validates bijectivity.
    static Permutation from_images(std::vector<int> images) {
        Permutation p;
        p.img_ = std::move(images);
        const int m = static_cast<int>(p.img_.size());
        check_size(m);
        std::vector<char> seen(m, 0);
        for (int v : p.img_) {
            if (v < 1 || v > m || seen[v - 1])
                throw IndexError("images are not a bijection on {1..m}");
            seen[v - 1] = 1;
        }
        return p;
    }

    /// The transposition (a b) on {1..m}.
    static Permutation transposition(int m, int a, int b) {
        Permutation p(m);
        if (a < 1 || b < 1 || a > m || b > m || a == b)
            throw IndexError("bad transposition indices");
        std::swap(p.img_[a - 1], p.img_[b - 1]);
        return p;
    }

    /// The order-reversing permutation i -> m+1-i (the permutation of the half twist).
    static Permutation reversal(int m) {
        Permutation p(m);
        for (int i = 1; i <= m; ++i) p.img_[i - 1] = m + 1 - i;
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }

    /// Image of i, 1-based.
    int operator()(int i) const { return img_[i - 1]; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i + 1) return false;
        return true;
    }

    /// Diagrammatic composition: this first, then o.
    Permutation then(const Permutation& o) const {
        if (size() != o.size()) throw StrandMismatch("composing permutations of different sizes");
        Permutation r(size());
        for (int i = 1; i <= size(); ++i) r.img_[i - 1] = o((*this)(i));
        return r;
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }

    Permutation inverse() const {
        Permutation r(size());
        for (int i = 1; i <= size(); ++i) r.img_[(*this)(i)-1] = i;
        return r;
    }

    /// Number of pairs i < j with images out of order; the positive word length of the
    /// permutation braid this permutation determines.
    int inversions() const {
        int c = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (img_[i] > img_[j]) ++c;
        return c;
    }

    bool operator==(const Permutation&) const = default;

private:
    static int check_size(int m) {
        if (m < 1) throw IndexError("permutation size must be >= 1");
        return m;
    }

    std::vector<int> img_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) os << ' ';
        os << p(i);
    }
    return os;
}

}  // namespace braid
