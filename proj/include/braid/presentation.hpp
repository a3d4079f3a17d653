#pragma once

#include <string>
#include <vector>

#include "braid/errors.hpp"
#include "braid/mixed.hpp"
#include "braid/word.hpp"
#include "braid/z2.hpp"

namespace braid {

/// One defining relation of the B_{n,n} presentation, as a pair of words on 2n strands
/// asserted equal in the group.
struct RelationInstance {
    std::string name;
    BraidWord lhs;
    BraidWord rhs;
};

/// A presentation generator of B_{n,n} together with its crossing-invariant value.
struct BnnGenerator {
    std::string name;
    BraidWord word;
    Z2 eps;
};

/// The generators of B_{n,n} (n >= 2): s_k for k in [1,n-1] u [n+1,2n-1], and A_{i,j}
/// for all 1 <= i < j <= 2n.  Cross-block A_{i,j} carry crossing invariant 1, everything
/// else 0.
inline std::vector<BnnGenerator> bnn_generators(int n) {
    if (n < 2) throw IndexError("the block presentation requires n >= 2");
    const int m = 2 * n;
    std::vector<BnnGenerator> gens;
    for (int k = 1; k <= m - 1; ++k) {
        if (k == n) continue;
        gens.push_back({"s" + std::to_string(k), BraidWord(m, {k}), z2_zero});
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const bool cross = i <= n && j >= n + 1;
            gens.push_back({"A" + std::to_string(i) + "," + std::to_string(j), a_gen(i, j, m),
                            cross ? z2_one : z2_zero});
        }
    return gens;
}

namespace detail {

inline std::string aij_name(int i, int j) {
    return "A" + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace detail

/// Every instance of the four defining relation families of B_{n,n}, n >= 2:
///   1. the pure-braid relations A_{r,s}^-1 A_{i,j} A_{r,s} = ...
///   2. the braid and far-commutation relations among the s_k, k != n
///   3. s_k^2 = A_{k,k+1}
///   4. the conjugation action s_k A_{i,j} s_k^-1 = ...
/// The word-problem engine must evaluate both sides of each to equal normal forms.
inline std::vector<RelationInstance> bnn_presentation_relations(int n) {
    if (n < 2) throw IndexError("the block presentation requires n >= 2");
    const int m = 2 * n;
    std::vector<RelationInstance> rels;
    auto A = [m](int i, int j) { return a_gen(i, j, m); };
    auto S = [m](int k) { return BraidWord(m, {k}); };

    // 1. Pure-braid relations.
    for (int r = 1; r <= m; ++r)
        for (int s = r + 1; s <= m; ++s)
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    const BraidWord lhs = inverse(A(r, s)) * A(i, j) * A(r, s);
                    BraidWord rhs(m);
                    const char* tag = nullptr;
                    if ((i < r && s < j) || (s < i)) {
                        rhs = A(i, j);
                        tag = "disjoint-or-nested";
                    } else if (r < i && i == s && s < j) {
                        rhs = A(r, j) * A(i, j) * inverse(A(r, j));
                        tag = "touching";
                    } else if (i == r && r < s && s < j) {
                        rhs = A(r, j) * A(s, j) * A(i, j) * inverse(A(s, j)) * inverse(A(r, j));
                        tag = "shared-endpoint";
                    } else if (r < i && i < s && s < j) {
                        const BraidWord c = A(r, j) * A(s, j) * inverse(A(r, j)) * inverse(A(s, j));
                        rhs = c * A(i, j) * inverse(c);
                        tag = "linked";
                    } else {
                        continue;
                    }
                    rels.push_back({"pure[" + std::string(tag) + "] A" + std::to_string(r) + "," +
                                        std::to_string(s) + " on " + detail::aij_name(i, j),
                                    lhs, rhs});
                }

    // 2. Braid and commutation relations among the generators s_k, k != n.
    auto in_gen_set = [n, m](int k) { return k >= 1 && k <= m - 1 && k != n; };
    for (int i = 1; i <= m - 2; ++i) {
        if (!in_gen_set(i) || !in_gen_set(i + 1)) continue;
        rels.push_back({"braid s" + std::to_string(i), S(i) * S(i + 1) * S(i),
                        S(i + 1) * S(i) * S(i + 1)});
    }
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i + 2; j <= m - 1; ++j) {
            if (!in_gen_set(i) || !in_gen_set(j)) continue;
            rels.push_back({"commute s" + std::to_string(i) + " s" + std::to_string(j),
                            S(i) * S(j), S(j) * S(i)});
        }

    // 3. s_k^2 = A_{k,k+1}.
    for (int k = 1; k <= m - 1; ++k) {
        if (!in_gen_set(k)) continue;
        rels.push_back({"square s" + std::to_string(k), S(k) * S(k), A(k, k + 1)});
    }

    // 4. Conjugation action of s_k on the A_{i,j}.
    for (int k = 1; k <= m - 1; ++k) {
        if (!in_gen_set(k)) continue;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const BraidWord lhs = S(k) * A(i, j) * inverse(S(k));
                BraidWord rhs(m);
                if (k != i - 1 && k != i && k != j - 1 && k != j) {
                    rhs = A(i, j);
                } else if (k == i && j == k + 1) {
                    rhs = A(i, j);
                } else if (k == j) {
                    rhs = A(i, k + 1);
                } else if (j == k + 1 && i < k) {
                    rhs = inverse(A(i, k + 1)) * A(i, k) * A(i, k + 1);
                } else if (i == k && j > i + 1) {
                    rhs = A(i + 1, j);
                } else if (i == k + 1) {
                    rhs = inverse(A(k + 1, j)) * A(k, j) * A(k + 1, j);
                } else {
                    throw InternalError("unreachable conjugation case");
                }
                rels.push_back({"conjugate s" + std::to_string(k) + " on " + detail::aij_name(i, j),
                                lhs, rhs});
            }
    }

    return rels;
}

}  // namespace braid
