#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braid/selfcheck.hpp"
#include "braid/surface.hpp"

using namespace braid;

namespace {

SurfacePresentation pres(SurfaceKind k, int m, std::vector<int> th) {
    std::vector<Z2> t;
    for (int v : th) t.push_back(Z2(v));
    return SurfacePresentation(k, m, std::move(t));
}

}  // namespace

TEST_CASE("presentation construction") {
    CHECK_THROWS_AS(pres(SurfaceKind::Orientable, 0, {}), InvalidDescriptor);
    CHECK_THROWS_AS(pres(SurfaceKind::NonOrientableOdd, 0, {1}), InvalidDescriptor);
    CHECK_THROWS_AS(pres(SurfaceKind::Orientable, 1, {0, 0}), ThetaNotSurjective);
    CHECK_THROWS_AS(pres(SurfaceKind::Orientable, 1, {1}), InvalidDescriptor);

    const auto kb = pres(SurfaceKind::NonOrientableEven, 0, {1, 0});
    CHECK(kb.generator_names() == std::vector<std::string>{"u", "v"});
    CHECK(kb.relator() == GenWord{1, 2, 1, -2});

    const auto t2 = pres(SurfaceKind::Orientable, 1, {1, 0});
    CHECK(t2.relator() == GenWord{1, 2, -1, -2});
    CHECK(t2.theta_of({1, 2, -1, -2}) == z2_zero);

    const auto g3 = pres(SurfaceKind::NonOrientableOdd, 1, {1, 0, 1});
    CHECK(g3.generator_names() == std::vector<std::string>{"c", "a1", "a2"});
    CHECK(g3.relator() == GenWord{1, 1, 2, 3, -2, -3});
}

TEST_CASE("distinguished generator values") {
    CHECK(theta_hat_delta(pres(SurfaceKind::NonOrientableEven, 0, {1, 0})) ==
          std::optional<Z2>(z2_one));
    CHECK(theta_hat_delta(pres(SurfaceKind::NonOrientableOdd, 1, {0, 1, 0})) ==
          std::optional<Z2>(z2_zero));
    CHECK_FALSE(theta_hat_delta(pres(SurfaceKind::Orientable, 1, {1, 0})).has_value());
}

TEST_CASE("kernel generators via the index-2 rewrite") {
    const auto kb = pres(SurfaceKind::NonOrientableEven, 0, {1, 0});
    CHECK(schreier_kernel_generators(kb) == std::vector<GenWord>{{1, 1}, {2}, {1, 2, -1}});

    const auto g3 = pres(SurfaceKind::NonOrientableOdd, 1, {1, 1, 0});
    CHECK(schreier_kernel_generators(g3) ==
          std::vector<GenWord>{{1, 1}, {2, -1}, {1, 2}, {3}, {1, 3, -1}});

    // Explicit transversal must have theta = 1.
    CHECK_THROWS_AS(schreier_kernel_generators(kb, 2), ThetaNotSurjective);
    CHECK(schreier_kernel_generators(g3, 2).size() == 5);

    // Every kernel word maps to 0 under theta.
    for (const auto& p : checks::all_presentations(1))
        for (const GenWord& w : schreier_kernel_generators(p)) CHECK(p.theta_of(w) == z2_zero);
}

TEST_CASE("hom construction validates images") {
    const auto t2 = pres(SurfaceKind::Orientable, 1, {1, 0});
    CHECK_THROWS_AS(GroupHom(t2, 2, {BraidWord(4, {2}), BraidWord(4)}), ImageNotInB2nn);
    CHECK_THROWS_AS(GroupHom(t2, 2, {BraidWord(4)}), ImageNotInB2nn);
    CHECK_THROWS_AS(GroupHom(t2, 2, {BraidWord(3), BraidWord(3)}), StrandMismatch);
}

TEST_CASE("verification report on the trivial candidate") {
    const auto t2 = pres(SurfaceKind::Orientable, 1, {1, 0});
    const GroupHom h(t2, 2, {BraidWord(4), BraidWord(4)});
    CHECK(verify_hom(h) == VerifyReport{true, false, true});
}

TEST_CASE("block-swap power witnesses") {
    for (const auto& p : checks::all_presentations(1)) {
        if (theta_hat_delta(p).value_or(z2_zero) == z2_one) continue;
        for (int n = 2; n <= 3; ++n) {
            CHECK(verify_hom(hom_omega_power(p, n)) == VerifyReport{true, true, true});
            CHECK(verify_hom(hom_sigma1_omega_power(p, n)) == VerifyReport{true, true, false});
        }
        CHECK(verify_hom(hom_omega_power(p, 1)) == VerifyReport{true, true, true});
    }
    const auto kb1 = pres(SurfaceKind::NonOrientableEven, 0, {1, 0});
    CHECK_THROWS_AS(hom_omega_power(kb1, 2), HypothesisNotMet);
    CHECK_THROWS_AS(hom_sigma1_omega_power(kb1, 2), HypothesisNotMet);
}

TEST_CASE("four-strand witnesses for theta(delta)=1") {
    // Even family: u -> Omega, v -> D4 Omega^{1-theta(v)}.
    for (int tv : {0, 1}) {
        const auto p = pres(SurfaceKind::NonOrientableEven, 0, {1, tv});
        CHECK(verify_hom(hom_theta1_four_strand(p)) == VerifyReport{true, true, false});
    }
    // Odd family, all four theta patterns on (a1, a2).
    for (int t1 : {0, 1})
        for (int t2 : {0, 1}) {
            const auto p = pres(SurfaceKind::NonOrientableOdd, 1, {1, t1, t2});
            CHECK(verify_hom(hom_theta1_four_strand(p)) == VerifyReport{true, true, false});
        }
    // Spot-check the published images for theta(a1)=1, theta(a2)=0.
    {
        const auto p = pres(SurfaceKind::NonOrientableOdd, 1, {1, 1, 0});
        const GroupHom h = hom_theta1_four_strand(p);
        const BraidWord Om(4, {2, 3, -1, -2});
        CHECK(are_equal(h.image(2), inverse(Om)));
        CHECK(are_equal(h.image(3), delta(4) * Om));
    }
    CHECK_THROWS_AS(hom_theta1_four_strand(pres(SurfaceKind::Orientable, 1, {1, 0})),
                    HypothesisNotMet);
    CHECK_THROWS_AS(hom_theta1_four_strand(pres(SurfaceKind::NonOrientableEven, 0, {0, 1})),
                    HypothesisNotMet);
}

TEST_CASE("even-multiplicity witnesses cable the four-strand one") {
    const auto kb = pres(SurfaceKind::NonOrientableEven, 0, {1, 1});
    CHECK(verify_hom(hom_theta1_even(kb, 2)) == VerifyReport{true, true, false});
    CHECK(verify_hom(hom_theta1_even(kb, 4)) == VerifyReport{true, true, false});
    // n=2 means multiplicity one: identical images.
    const GroupHom base = hom_theta1_four_strand(kb);
    const GroupHom same = hom_theta1_even(kb, 2);
    for (int g = 1; g <= kb.generator_count(); ++g) CHECK(base.image(g) == same.image(g));
    CHECK_THROWS_AS(hom_theta1_even(kb, 3), HypothesisNotMet);

    const auto g3 = pres(SurfaceKind::NonOrientableOdd, 1, {1, 0, 0});
    CHECK(verify_hom(hom_theta1_even(g3, 4)) == VerifyReport{true, true, false});
}

TEST_CASE("sign of images extends theta along random words") {
    std::mt19937_64 rng(53);
    const auto p = pres(SurfaceKind::NonOrientableEven, 1, {1, 0, 1, 0});
    const GroupHom h = hom_theta1_four_strand(p);
    const MixedContext ctx(2);
    for (int t = 0; t < 200; ++t) {
        GenWord w;
        const int len = 1 + static_cast<int>(rng() % 6);
        for (int k = 0; k < len; ++k) {
            const int g = 1 + static_cast<int>(rng() % p.generator_count());
            w.push_back((rng() & 1) ? g : -g);
        }
        CHECK(pi_sign(h.apply(w), ctx) == p.theta_of(w));
    }
}

TEST_CASE("kernel purity is transversal-independent") {
    for (const auto& p : checks::all_presentations(1)) {
        const bool theta1 = theta_hat_delta(p).value_or(z2_zero) == z2_one;
        const GroupHom h = theta1 ? hom_theta1_four_strand(p) : hom_sigma1_omega_power(p, 2);
        std::vector<bool> outcomes;
        for (int t = 1; t <= p.generator_count(); ++t) {
            if (!(p.theta(t) == z2_one)) continue;
            bool pure = true;
            for (const GenWord& w : schreier_kernel_generators(p, t))
                if (!is_pure(h.apply(w))) pure = false;
            outcomes.push_back(pure);
        }
        for (bool b : outcomes) CHECK(b == outcomes.front());
    }
}

TEST_CASE("relator substitution reproduces the full-twist invariant") {
    const auto r = checks::check_relator_obstruction(checks::default_seed);
    INFO(r.detail);
    CHECK(r.pass);
}
