#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braid/cabling.hpp"
#include "braid/classifier.hpp"
#include "braid/expr.hpp"
#include "braid/garside.hpp"
#include "braid/mixed.hpp"
#include "braid/presentation.hpp"
#include "braid/surface.hpp"
#include "braid/word.hpp"

namespace braid::checks {

inline constexpr std::uint64_t default_seed = 1729;

/// One named check with its outcome; detail is only filled on failure.
struct Result {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Options {
    int max_n = 3;
    std::uint64_t seed = default_seed;
};

// ---------------------------------------------------------------------------
// Seeded corpora.

inline BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::vector<int> letters;
    const int L = len(rng);
    for (int k = 0; k < L; ++k) {
        const int i = gen(rng);
        letters.push_back((rng() & 1) ? i : -i);
    }
    return BraidWord(strands, std::move(letters));
}

/// Random product of block-presentation generators and their inverses; always block-preserving.
inline BraidWord random_bnn_word(std::mt19937_64& rng, const std::vector<BnnGenerator>& gens,
                                 int strands, int factors) {
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    BraidWord w(strands);
    for (int k = 0; k < factors; ++k) {
        const BraidWord& g = gens[pick(rng)].word;
        w = compose(w, (rng() & 1) ? g : inverse(g));
    }
    return w;
}

/// As above, optionally multiplied by the block crossing; block-preserving or swapping.
inline BraidWord random_b2nn_word(std::mt19937_64& rng, const std::vector<BnnGenerator>& gens,
                                  int n, int factors) {
    BraidWord w = random_bnn_word(rng, gens, 2 * n, factors);
    if (rng() & 1) w = compose(w, omega(n));
    return w;
}

/// Applies one random relation-preserving rewrite: free insertion, free cancellation,
/// far commutation, or a same-sign braid-triple move.
inline BraidWord random_rewrite(std::mt19937_64& rng, const BraidWord& w) {
    const auto& L = w.letters();
    const int len = static_cast<int>(L.size());
    const int m = w.strands();

    struct Move {
        int kind;  // 0 insert, 1 cancel, 2 commute, 3 braid triple
        int pos;
    };
    std::vector<Move> moves;
    for (int p = 0; p + 1 < len; ++p) {
        if (L[p] == -L[p + 1]) moves.push_back({1, p});
        if (std::abs(std::abs(L[p]) - std::abs(L[p + 1])) >= 2)
            moves.push_back({2, p});
    }
    for (int p = 0; p + 2 < len; ++p) {
        const int a = L[p], b = L[p + 1],
                  c = L[p + 2];
        if (a == c && ((a > 0) == (b > 0)) && std::abs(std::abs(a) - std::abs(b)) == 1)
            moves.push_back({3, p});
    }
    // Insertions are always available; keep them in proportion so the word can grow.
    for (int p = 0; p <= len; ++p) moves.push_back({0, p});

    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Move mv = moves[pick(rng)];
    std::vector<int> out;
    out.reserve(L.size() + 2);
    for (int p = 0; p < len; ++p) {
        if (p == mv.pos) {
            if (mv.kind == 1) {
                ++p;  // drop the cancelling pair
                continue;
            }
            if (mv.kind == 2) {
                out.push_back(L[p + 1]);
                out.push_back(L[p]);
                ++p;
                continue;
            }
            if (mv.kind == 3) {
                const int a = L[p], b = L[p + 1];
                out.push_back(b);
                out.push_back(a);
                out.push_back(b);
                p += 2;
                continue;
            }
        }
        out.push_back(L[p]);
    }
    if (mv.kind == 0) {
        std::uniform_int_distribution<int> gen(1, m - 1);
        const int i = gen(rng);
        const int e = (rng() & 1) ? i : -i;
        out.insert(out.begin() + mv.pos, {e, -e});
    }
    return BraidWord(m, std::move(out));
}

/// Every presentation of the three families with genus parameter up to max_m and every
/// surjective theta assignment.
inline std::vector<SurfacePresentation> all_presentations(int max_m) {
    std::vector<SurfacePresentation> out;
    auto add_all = [&out](SurfaceKind kind, int m, int gens) {
        for (unsigned mask = 1; mask < (1u << gens); ++mask) {
            std::vector<Z2> theta;
            for (int g = 0; g < gens; ++g) theta.push_back(Z2((mask >> g) & 1u));
            out.emplace_back(kind, m, std::move(theta));
        }
    };
    for (int m = 1; m <= max_m; ++m) add_all(SurfaceKind::Orientable, m, 2 * m);
    for (int m = 0; m <= max_m; ++m) add_all(SurfaceKind::NonOrientableEven, m, 2 + 2 * m);
    for (int m = 1; m <= max_m; ++m) add_all(SurfaceKind::NonOrientableOdd, m, 1 + 2 * m);
    return out;
}

// ---------------------------------------------------------------------------
// Check helpers.

namespace detail {

class Check {
public:
    explicit Check(std::string name) : r_{std::move(name), true, {}} {}

    void require(bool ok, const std::string& what) {
        if (!ok && r_.pass) {
            r_.pass = false;
            r_.detail = what;
        }
    }

    Result done() const { return r_; }

private:
    Result r_;
};

inline std::string label(const std::string& base, int n) { return base + " (n=" + std::to_string(n) + ")"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Word-level identities.

inline Result check_half_twist_block_swap() {
    detail::Check c("half twist on 2n strands induces the block-reversing pairing (n=1..4)");
    for (int n = 1; n <= 4; ++n) {
        const Permutation p = permutation_of(delta(2 * n));
        c.require(p == Permutation::reversal(2 * n), detail::label("permutation mismatch", n));
        const MixedContext ctx(n);
        c.require(!in_bnn(delta(2 * n), ctx) && in_bnn2(delta(2 * n), ctx),
                  detail::label("half twist should swap the blocks", n));
    }
    return c.done();
}

inline Result check_agen_words() {
    detail::Check c("pure-braid generator words match their displayed forms and are pure");
    c.require(a_gen(1, 2, 2) == BraidWord(2, {1, 1}), "A_{1,2} on 2 strands");
    c.require(a_gen(1, 3, 3) == BraidWord(3, {2, 1, 1, -2}), "A_{1,3} on 3 strands");
    c.require(a_gen(2, 4, 5) == BraidWord(5, {3, 2, 2, -3}), "A_{2,4} on 5 strands");
    for (int m = 2; m <= 6; ++m)
        for (int i = 1; i < m; ++i)
            for (int j = i + 1; j <= m; ++j)
                c.require(is_pure(a_gen(i, j, m)), "A_{i,j} must be pure");
    return c.done();
}

inline Result check_agen_cross() {
    detail::Check c("cross-block pure-braid word equals the standard one (n=2,3)");
    c.require(a_gen_cross(2, 3, 2) == BraidWord(4, {2, 2}), "degenerate case is s_n^2");
    c.require(a_gen_cross(1, 4, 2) == BraidWord(4, {3, -1, 2, 2, 1, -3}), "displayed form, n=2");
    for (int n = 2; n <= 3; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = n + 1; j <= 2 * n; ++j)
                c.require(are_equal(a_gen_cross(i, j, n), a_gen(i, j, 2 * n)),
                          detail::label("normal forms differ", n));
    return c.done();
}

inline Result check_delta_words() {
    detail::Check c("half- and full-twist words match their displayed forms");
    c.require(delta(2) == BraidWord(2, {1}), "delta(2)");
    c.require(delta(4) == BraidWord(4, {1, 2, 3, 1, 2, 1}), "delta(4)");
    for (int m = 1; m <= 7; ++m)
        c.require(static_cast<int>(delta(m).size()) == m * (m - 1) / 2, "delta length");
    c.require(full_twist(2) == BraidWord(2, {1, 1}), "full_twist(2)");
    c.require(are_equal(full_twist(3), power(delta(3), 2)), "full_twist(3) = delta(3)^2");
    return c.done();
}

inline Result check_half_twist_conjugation() {
    detail::Check c("conjugation by the half twist sends s_i to s_{m-i} (m=2..6)");
    for (int m = 2; m <= 6; ++m)
        for (int i = 1; i < m; ++i) {
            const BraidWord lhs = delta(m) * BraidWord(m, {i}) * inverse(delta(m));
            c.require(are_equal(lhs, BraidWord(m, {m - i})), "mismatch at m=" + std::to_string(m));
        }
    return c.done();
}

inline Result check_full_twist_central() {
    detail::Check c("the full twist equals the squared half twist and is central (m=2..6)");
    for (int m = 2; m <= 6; ++m) {
        c.require(are_equal(full_twist(m), power(delta(m), 2)), "square mismatch");
        for (int i = 1; i < m; ++i)
            c.require(are_equal(full_twist(m) * BraidWord(m, {i}), BraidWord(m, {i}) * full_twist(m)),
                      "not central at m=" + std::to_string(m));
    }
    return c.done();
}

inline Result check_omega_words() {
    detail::Check c("block-crossing words and permutations (n=1..4)");
    c.require(omega(1) == BraidWord(2, {1}), "omega(1)");
    c.require(omega(2) == BraidWord(4, {2, 3, 1, 2}), "omega(2)");
    {
        const Permutation p = permutation_of(omega(2));
        c.require(p(1) == 3 && p(2) == 4 && p(3) == 1 && p(4) == 2, "omega(2) permutation");
    }
    for (int n = 1; n <= 4; ++n) {
        c.require(static_cast<int>(omega(n).size()) == n * n, "omega length");
        const Permutation p = permutation_of(omega(n));
        bool shift = true;
        for (int i = 1; i <= 2 * n; ++i)
            if (p(i) != (i + n - 1) % (2 * n) + 1) shift = false;
        c.require(shift, detail::label("omega permutation is not the block shift", n));
        const MixedContext ctx(n);
        c.require(!in_bnn(omega(n), ctx) && in_bnn2(omega(n), ctx) && pi_sign(omega(n), ctx) == z2_one,
                  detail::label("omega must swap the blocks", n));
    }
    return c.done();
}

// ---------------------------------------------------------------------------
// Normal-form engine.

inline Result check_presentation_relations(int n) {
    detail::Check c(detail::label("block presentation relations certify", n));
    for (const RelationInstance& r : bnn_presentation_relations(n))
        c.require(are_equal(r.lhs, r.rhs), r.name);
    return c.done();
}

inline Result check_artin_normal_forms() {
    detail::Check c("the braid relation yields one normal form; half-twist powers are pure-inf");
    c.require(normal_form(BraidWord(3, {1, 2, 1})) == normal_form(BraidWord(3, {2, 1, 2})),
              "braid relation");
    c.require(normal_form(BraidWord(4, {1, -1})).trivial(), "cancellation");
    for (int m = 2; m <= 6; ++m)
        for (int k = 1; k <= 3; ++k) {
            const NormalForm nf = normal_form(power(delta(m), 2 * k));
            c.require(nf.inf == 2 * k && nf.factors.empty(), "even half-twist power");
        }
    {
        const NormalForm nf = normal_form(delta(4));
        c.require(nf.inf == 1 && nf.factors.empty(), "half twist is the Garside element");
    }
    return c.done();
}

inline Result check_engine_random(std::uint64_t seed, int words, int rewrites) {
    detail::Check c("random words: w w^-1 is trivial, reduction preserves the element, rewrites fix the normal form");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < words; ++t) {
        const int m = 2 + static_cast<int>(rng() % 5);
        BraidWord w = random_word(rng, m, 40);
        c.require(is_trivial(compose(w, inverse(w))), "w w^-1 not trivial");
        c.require(are_equal(w, free_reduce(w)), "free reduction changed the element");
        const NormalForm nf = normal_form(w);
        for (int r = 0; r < rewrites; ++r) {
            w = random_rewrite(rng, w);
            if (!(normal_form(w) == nf)) {
                c.require(false, "rewrite changed the normal form");
                break;
            }
        }
    }
    return c.done();
}

inline Result check_eq51_identities() {
    detail::Check c("half-twist conjugate of the four-strand Omega is its inverse; auxiliary identities");
    const BraidWord Om(4, {2, 3, -1, -2});
    const BraidWord conj = delta(4) * Om * inverse(delta(4));
    c.require(are_equal(conj, inverse(Om)), "conjugation identity");
    c.require(are_equal(conj, BraidWord(4, {2, 1, -3, -2})), "displayed middle form");
    c.require(are_equal(BraidWord(4, {2, 1, 1, -3, -3, -2}), power(Om, -2)), "Omega^-2 chain");
    const MixedContext ctx(2);
    const BraidWord s2(4, {2});
    c.require(in_bnn(s2 * inverse(Om) * inverse(s2), ctx), "s2 Omega^-1 s2^-1 preserves blocks");
    c.require(in_bnn(s2 * BraidWord(4, {3, 3}) * inverse(s2), ctx), "s2 s3^2 s2^-1 preserves blocks");
    for (int i = 1; i <= 2; ++i)
        for (int e : {1, -1}) {
            const BraidWord lhs(4, {e * i, i + 1, -e * i});
            const BraidWord rhs(4, {-e * (i + 1), i, e * (i + 1)});
            c.require(are_equal(lhs, rhs), "shuffled conjugation identity");
        }
    return c.done();
}

// ---------------------------------------------------------------------------
// Mixed subgroups and the crossing invariant.

inline Result check_block_membership() {
    detail::Check c("block membership predicates on the basic elements");
    const MixedContext c2(2);
    c.require(in_bnn(BraidWord(4, {1}), c2), "s1 preserves blocks");
    c.require(!in_bnn2(BraidWord(4, {2}), c2), "s2 is in neither subgroup");
    c.require(pi_sign(BraidWord(4), c2) == z2_zero, "empty word sign");
    const BraidWord Om(4, {2, 3, -1, -2});
    c.require(pi_sign(Om, c2) == z2_one, "Omega swaps the blocks");
    c.require(pi_sign(delta(4) * Om, c2) == z2_zero, "D4 Omega preserves the blocks");
    return c.done();
}

inline Result check_epsilon_generator_table(int n) {
    detail::Check c(detail::label("crossing invariant matches the generator table", n));
    const MixedContext ctx(n);
    for (const BnnGenerator& g : bnn_generators(n))
        c.require(epsilon(g.word, ctx) == g.eps, "generator " + g.name);
    return c.done();
}

inline Result check_epsilon_homomorphism(std::uint64_t seed, int words) {
    detail::Check c("crossing invariant is additive and half-twist-conjugation-invariant (seeded)");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < words; ++t) {
        const int n = 2 + t % 3;
        const MixedContext ctx(n);
        const auto gens = bnn_generators(n);
        const BraidWord a = random_bnn_word(rng, gens, 2 * n, 4);
        const BraidWord b = random_bnn_word(rng, gens, 2 * n, 4);
        c.require(epsilon(compose(a, b), ctx) == epsilon(a, ctx) + epsilon(b, ctx), "additivity");
        const BraidWord conj = delta(2 * n) * a * inverse(delta(2 * n));
        c.require(epsilon(a, ctx) + epsilon(conj, ctx) == z2_zero, "conjugation invariance");
    }
    return c.done();
}

inline Result check_epsilon_full_twist() {
    detail::Check c("crossing invariant of the full twist is n^2 mod 2 (n=2..4)");
    for (int n = 2; n <= 4; ++n)
        c.require(epsilon(full_twist(2 * n), MixedContext(n)) == Z2::of(static_cast<long long>(n) * n),
                  "n=" + std::to_string(n));
    return c.done();
}

inline Result check_epsilon_well_defined(int n) {
    detail::Check c(detail::label("crossing invariant agrees on both sides of every conjugation relation", n));
    const MixedContext ctx(n);
    for (const RelationInstance& r : bnn_presentation_relations(n)) {
        if (r.name.rfind("conjugate", 0) != 0) continue;
        c.require(epsilon(r.lhs, ctx) == epsilon(r.rhs, ctx), r.name);
    }
    return c.done();
}

inline Result check_pi_sign_homomorphism(std::uint64_t seed, int words) {
    detail::Check c("block-swap sign is additive on seeded words");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < words; ++t) {
        const int n = 2 + t % 2;
        const MixedContext ctx(n);
        const auto gens = bnn_generators(n);
        const BraidWord a = random_b2nn_word(rng, gens, n, 3);
        const BraidWord b = random_b2nn_word(rng, gens, n, 3);
        c.require(pi_sign(compose(a, b), ctx) == pi_sign(a, ctx) + pi_sign(b, ctx), "additivity");
    }
    return c.done();
}

// ---------------------------------------------------------------------------
// Cabling.

inline Result check_cable_basics(std::uint64_t seed) {
    detail::Check c("cabling basics: identity multiplicity, block crossing, inflated permutations");
    std::mt19937_64 rng(seed);
    c.require(cable(BraidWord(2, {1}), 2) == omega(2), "one crossing cables to the block crossing");
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        const int k = 1 + t % 3;
        const BraidWord w = random_word(rng, 2 * n, 12);
        if (k == 1) c.require(cable(w, 1) == w, "identity cabling");
        c.require(permutation_of(cable(w, k)) == inflate_permutation(permutation_of(w), k),
                  "cabled permutation is not the inflation");
    }
    return c.done();
}

inline Result check_cable_relations(int n, int k) {
    detail::Check c("cabling preserves the defining relations (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ")");
    for (int i = 1; i <= 2 * n - 2; ++i) {
        const BraidWord lhs(2 * n, {i, i + 1, i});
        const BraidWord rhs(2 * n, {i + 1, i, i + 1});
        c.require(are_equal(cable(lhs, k), cable(rhs, k)), "cabled braid relation");
    }
    for (int i = 1; i <= 2 * n - 1; ++i)
        for (int j = i + 2; j <= 2 * n - 1; ++j)
            c.require(are_equal(cable(BraidWord(2 * n, {i, j}), k), cable(BraidWord(2 * n, {j, i}), k)),
                      "cabled commutation");
    for (const RelationInstance& r : bnn_presentation_relations(n))
        c.require(are_equal(cable(r.lhs, k), cable(r.rhs, k)), "cabled " + r.name);
    return c.done();
}

inline Result check_cable_inverse_and_blocks(std::uint64_t seed) {
    detail::Check c("cabling respects inverses and block membership (seeded)");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 30; ++t) {
        const int n = 2;
        const int k = 2 + t % 2;
        const auto gens = bnn_generators(n);
        const BraidWord w = random_b2nn_word(rng, gens, n, 3);
        c.require(are_equal(cable(inverse(w), k), inverse(cable(w, k))), "inverse compatibility");
        const MixedContext ctx(n), big(n * k);
        c.require(in_bnn(w, ctx) == in_bnn(cable(w, k), big), "block preservation");
        c.require(in_bnn2(cable(w, k), big), "cabled word stays in the big subgroup");
    }
    return c.done();
}

inline Result check_cable_diagram(std::uint64_t seed, int words) {
    detail::Check c("cabling preserves the block-swap sign (seeded, k=2)");
    std::mt19937_64 rng(seed);
    const MixedContext ctx(2);
    const auto gens = bnn_generators(2);
    c.require(check_cabling_diagram(omega(2), 2, ctx), "block crossing, k=2");
    c.require(check_cabling_diagram(BraidWord(4), 3, ctx), "empty word");
    for (int t = 0; t < words; ++t)
        c.require(check_cabling_diagram(random_b2nn_word(rng, gens, 2, 4), 2, ctx), "seeded word");
    return c.done();
}

// ---------------------------------------------------------------------------
// Surface homomorphisms.

inline Result check_theta_delta() {
    detail::Check c("distinguished-generator values of the three families");
    const SurfacePresentation kb(SurfaceKind::NonOrientableEven, 0, {z2_one, z2_zero});
    c.require(theta_hat_delta(kb) == std::optional<Z2>(z2_one), "even family reads theta(u)");
    const SurfacePresentation g3(SurfaceKind::NonOrientableOdd, 1, {z2_zero, z2_one, z2_zero});
    c.require(theta_hat_delta(g3) == std::optional<Z2>(z2_zero), "odd family reads theta(c)");
    const SurfacePresentation t2(SurfaceKind::Orientable, 1, {z2_one, z2_zero});
    c.require(!theta_hat_delta(t2).has_value(), "orientable family has no distinguished value");
    return c.done();
}

inline Result check_schreier_examples() {
    detail::Check c("kernel generator enumeration on the known examples");
    const SurfacePresentation kb(SurfaceKind::NonOrientableEven, 0, {z2_one, z2_zero});
    const auto ks = schreier_kernel_generators(kb);  // u=1, v=2, transversal u
    c.require(ks == std::vector<GenWord>{{1, 1}, {2}, {1, 2, -1}}, "Klein-bottle kernel");
    const SurfacePresentation g3(SurfaceKind::NonOrientableOdd, 1, {z2_one, z2_one, z2_zero});
    const auto k3 = schreier_kernel_generators(g3);  // c=1, a1=2, a2=3, transversal c
    c.require(k3 == std::vector<GenWord>{{1, 1}, {2, -1}, {1, 2}, {3}, {1, 3, -1}},
              "genus-3 kernel");
    return c.done();
}

inline Result check_schreier_transversal_independence(int max_m) {
    detail::Check c("kernel purity is independent of the transversal choice");
    for (const SurfacePresentation& p : all_presentations(max_m)) {
        GroupHom h = theta_hat_delta(p).value_or(z2_zero) == z2_one ? hom_theta1_four_strand(p)
                                                                    : hom_sigma1_omega_power(p, 2);
        std::vector<bool> outcomes;
        for (int t = 1; t <= p.generator_count(); ++t) {
            if (!(p.theta(t) == z2_one)) continue;
            bool pure = true;
            for (const GenWord& w : schreier_kernel_generators(p, t))
                if (!is_pure(h.apply(w))) pure = false;
            outcomes.push_back(pure);
        }
        for (bool b : outcomes) c.require(b == outcomes.front(), "outcome depends on the transversal");
    }
    return c.done();
}

/// The full witness sweep: every presentation with genus parameter <= max_m, every n in
/// [n_min, n_max], checked against the exact report each classification row requires.
inline Result check_witness_suite(int n_min, int n_max, int max_m) {
    detail::Check c("witness suite: verification reports match the classification exactly (n=" +
                    std::to_string(n_min) + ".." + std::to_string(n_max) + ", m<=" +
                    std::to_string(max_m) + ")");
    const VerifyReport split_failure{true, true, true};
    const VerifyReport nonsplit_failure{true, true, false};
    for (const SurfacePresentation& p : all_presentations(max_m)) {
        const bool theta1 = theta_hat_delta(p).value_or(z2_zero) == z2_one;
        for (int n = n_min; n <= n_max; ++n) {
            if (!theta1) {
                c.require(verify_hom(hom_omega_power(p, n)) == split_failure,
                          detail::label("block-swap witness", n));
                if (n >= 2)
                    c.require(verify_hom(hom_sigma1_omega_power(p, n)) == nonsplit_failure,
                              detail::label("twisted block-swap witness", n));
            } else if (n % 2 == 0) {
                c.require(verify_hom(hom_theta1_even(p, n)) == nonsplit_failure,
                          detail::label("cabled four-strand witness", n));
            }
            // theta(delta)=1 with odd n: no witness exists; the crossing invariant rules it out.
        }
    }
    return c.done();
}

/// Substituting images b_g * D^{theta(g)} into the Klein-bottle relator and cancelling
/// the half twists leaves a block-preserving word whose crossing invariant is that of
/// the full twist.  Checked for n=3 with seeded block-preserving b_g.
inline Result check_relator_obstruction(std::uint64_t seed) {
    detail::Check c("relator substitution reproduces the full-twist crossing invariant (n=3)");
    const int n = 3;
    const MixedContext ctx(n);
    const BraidWord D = delta(2 * n);
    std::mt19937_64 rng(seed);
    const auto gens = bnn_generators(n);
    for (int t = 0; t < 10; ++t) {
        const BraidWord bu = random_bnn_word(rng, gens, 2 * n, 3);
        const BraidWord bv = random_bnn_word(rng, gens, 2 * n, 3);
        for (int iv : {0, 1}) {
            // Image of u v u v^-1 under u -> bu D, v -> bv D^iv.
            const BraidWord img = bu * D * bv * power(D, iv) * bu * D * inverse(bv * power(D, iv));
            c.require(in_bnn(img, ctx), "relator image must preserve blocks");
            c.require(epsilon(img, ctx) == epsilon(full_twist(2 * n), ctx),
                      "crossing invariant of the relator image");
            c.require(epsilon(img, ctx) == z2_one, "for n=3 the invariant is the odd obstruction");
        }
    }
    return c.done();
}

// ---------------------------------------------------------------------------
// Classification tables.

inline Result check_classifier_sphere_rows() {
    detail::Check c("sphere-domain classification rows");
    const std::vector<std::pair<Target, int>> targets = {
        {Target::Plane, 0},           {Target::Sphere, 0},           {Target::ProjectivePlane, 0},
        {Target::OrientableClosed, 1}, {Target::OrientableClosed, 2}, {Target::NonOrientableClosed, 2},
        {Target::NonOrientableClosed, 3}};
    for (const auto& [tgt, g] : targets) {
        const BupVerdict v1 = classify(TripleDescriptor::sphere_domain(tgt, 1, g));
        if (tgt == Target::Sphere)
            c.require(v1.split == Bup::DoesNotHave, "n=1 self-map row");
        else
            c.require(v1.split == Bup::Has, "n=1 row");
        c.require(v1.nonsplit == Bup::Has, "n=1 non-split is vacuous");
        for (int n : {2, 3, 5}) {
            const BupVerdict v = classify(TripleDescriptor::sphere_domain(tgt, n, g));
            c.require(v.split == Bup::Has && v.nonsplit == Bup::Has, "n>=2 rows");
        }
    }
    return c.done();
}

inline Result check_classifier_plane_rows() {
    detail::Check c("plane-target classification rows across the three families");
    for (const SurfacePresentation& p : all_presentations(2)) {
        const bool theta1 = theta_hat_delta(p).value_or(z2_zero) == z2_one;
        for (int n = 1; n <= 5; ++n) {
            const BupVerdict v = classify(TripleDescriptor::surface_domain(p, Target::Plane, n));
            c.require(v.split != Bup::Unknown && v.nonsplit != Bup::Unknown,
                      "plane verdicts must be decided");
            if (!theta1) {
                c.require(v.split == Bup::DoesNotHave && v.nonsplit == Bup::DoesNotHave,
                          "theta(delta)=0 row");
            } else if (n % 2 == 0) {
                c.require(v.split == Bup::Has && v.nonsplit == Bup::DoesNotHave, "even row");
            } else {
                c.require(v.split == Bup::Has && v.nonsplit == Bup::Has, "odd row");
            }
        }
    }
    return c.done();
}

inline Result check_classifier_closed_rows() {
    detail::Check c("closed-target classification rows");
    const std::vector<std::pair<Target, int>> targets = {{Target::Sphere, 0},
                                                         {Target::ProjectivePlane, 0},
                                                         {Target::OrientableClosed, 1},
                                                         {Target::OrientableClosed, 3},
                                                         {Target::NonOrientableClosed, 2}};
    for (const SurfacePresentation& p : all_presentations(1)) {
        const bool theta1 = theta_hat_delta(p).value_or(z2_zero) == z2_one;
        const bool klein = p.kind() == SurfaceKind::NonOrientableEven && p.genus_parameter() == 0 &&
                           p.theta(1) == z2_one;
        const bool genus3 = p.kind() == SurfaceKind::NonOrientableOdd && p.genus_parameter() == 1 &&
                            p.theta(1) == z2_one &&
                            (p.theta(2) == z2_one || p.theta(3) == z2_one);
        for (const auto& [tgt, g] : targets)
            for (int n = 1; n <= 4; ++n) {
                const BupVerdict v = classify(TripleDescriptor::surface_domain(p, tgt, n, g));
                if (!theta1) {
                    c.require(v.split == Bup::DoesNotHave && v.nonsplit == Bup::DoesNotHave,
                              "embedding row");
                    continue;
                }
                c.require(v.nonsplit == (n % 2 == 0 ? Bup::DoesNotHave : Bup::Unknown),
                          "non-split closed row");
                const bool transfer = (klein || genus3) && tgt == Target::OrientableClosed;
                c.require(v.split == (transfer ? Bup::Has : Bup::Unknown), "split closed row");
            }
    }
    return c.done();
}

inline Result check_classifier_consistency() {
    detail::Check c("classification is deterministic and monotone in the 1-case");
    for (const SurfacePresentation& p : all_presentations(1)) {
        for (int n = 1; n <= 5; ++n) {
            const TripleDescriptor t = TripleDescriptor::surface_domain(p, Target::Plane, n);
            const BupVerdict a = classify(t), b = classify(t);
            c.require(a.split == b.split && a.nonsplit == b.nonsplit, "determinism");
        }
        const BupVerdict base = classify(TripleDescriptor::surface_domain(p, Target::Plane, 1));
        if (base.split == Bup::Has && base.nonsplit == Bup::Has)
            for (int n = 2; n <= 5; ++n)
                c.require(classify(TripleDescriptor::surface_domain(p, Target::Plane, n)).split ==
                              Bup::Has,
                          "1-property must imply the split property for every n");
    }
    return c.done();
}

inline Result check_cross_validation(int max_n, int max_m) {
    detail::Check c("cross-validation of every plane-target instance (n<=" + std::to_string(max_n) +
                    ", m<=" + std::to_string(max_m) + ")");
    for (const SurfacePresentation& p : all_presentations(max_m))
        for (int n = 1; n <= max_n; ++n) {
            try {
                cross_validate(TripleDescriptor::surface_domain(p, Target::Plane, n));
            } catch (const Error& e) {
                c.require(false, std::string("witness failure: ") + e.what());
            }
        }
    return c.done();
}

// ---------------------------------------------------------------------------
// Expression surface syntax.

inline Result check_expression_examples() {
    detail::Check c("expression parsing matches the construction helpers");
    c.require(expr::parse_braid("s2 s3 s1^-1 s2^-1", 4) == BraidWord(4, {2, 3, -1, -2}), "Omega literal");
    c.require(expr::parse_braid("D4", 4) == delta(4), "named half twist");
    c.require(are_equal(expr::parse_braid("(s1 s2)^3", 3), full_twist(3)),
              "(s1 s2)^3 equals the full twist");
    c.require(expr::parse_braid("W2", 4) == omega(2), "named block crossing");
    c.require(expr::parse_braid("A1,3", 4) == a_gen(1, 3, 4), "named pure-braid generator");
    return c.done();
}

// ---------------------------------------------------------------------------
// Registry.

inline std::vector<Result> run_all(const Options& opt = {}) {
    std::vector<Result> rs;
    rs.push_back(check_agen_words());
    rs.push_back(check_delta_words());
    rs.push_back(check_omega_words());
    rs.push_back(check_half_twist_block_swap());
    rs.push_back(check_half_twist_conjugation());
    rs.push_back(check_full_twist_central());
    rs.push_back(check_agen_cross());
    rs.push_back(check_artin_normal_forms());
    for (int n = 2; n <= std::min(3, opt.max_n); ++n) rs.push_back(check_presentation_relations(n));
    rs.push_back(check_engine_random(opt.seed, 100, 5));
    rs.push_back(check_eq51_identities());
    rs.push_back(check_block_membership());
    for (int n = 2; n <= std::min(3, opt.max_n); ++n) rs.push_back(check_epsilon_generator_table(n));
    rs.push_back(check_epsilon_homomorphism(opt.seed, 60));
    rs.push_back(check_epsilon_full_twist());
    for (int n = 2; n <= std::min(3, opt.max_n); ++n) rs.push_back(check_epsilon_well_defined(n));
    rs.push_back(check_pi_sign_homomorphism(opt.seed, 40));
    rs.push_back(check_cable_basics(opt.seed));
    rs.push_back(check_cable_relations(2, 2));
    rs.push_back(check_cable_relations(2, 3));
    rs.push_back(check_cable_inverse_and_blocks(opt.seed));
    rs.push_back(check_cable_diagram(opt.seed, 50));
    rs.push_back(check_theta_delta());
    rs.push_back(check_schreier_examples());
    rs.push_back(check_schreier_transversal_independence(1));
    rs.push_back(check_witness_suite(2, std::max(2, opt.max_n), 2));
    rs.push_back(check_relator_obstruction(opt.seed));
    rs.push_back(check_classifier_sphere_rows());
    rs.push_back(check_classifier_plane_rows());
    rs.push_back(check_classifier_closed_rows());
    rs.push_back(check_classifier_consistency());
    rs.push_back(check_cross_validation(std::min(4, opt.max_n), 1));
    rs.push_back(check_expression_examples());
    return rs;
}

}  // namespace braid::checks
