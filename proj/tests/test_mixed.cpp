#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braid/mixed.hpp"
#include "braid/presentation.hpp"
#include "braid/selfcheck.hpp"

using namespace braid;

TEST_CASE("block membership") {
    const MixedContext c2(2);
    CHECK(in_bnn(BraidWord(4, {1}), c2));
    CHECK(in_bnn2(BraidWord(4, {1}), c2));
    CHECK_FALSE(in_bnn(BraidWord(4, {2}), c2));
    CHECK_FALSE(in_bnn2(BraidWord(4, {2}), c2));

    for (int n = 1; n <= 4; ++n) {
        const MixedContext ctx(n);
        CHECK_FALSE(in_bnn(omega(n), ctx));
        CHECK(in_bnn2(omega(n), ctx));
    }
    for (int n = 1; n <= 3; ++n) {
        const MixedContext ctx(n);
        CHECK_FALSE(in_bnn(delta(2 * n), ctx));
        CHECK(in_bnn2(delta(2 * n), ctx));
    }
    CHECK_THROWS_AS(in_bnn(BraidWord(3, {1}), c2), StrandMismatch);
}

TEST_CASE("block-swap sign") {
    const MixedContext c2(2);
    CHECK(pi_sign(BraidWord(4), c2) == z2_zero);
    CHECK(pi_sign(omega(2), c2) == z2_one);
    CHECK(pi_sign(delta(4), c2) == z2_one);
    CHECK_THROWS_AS(pi_sign(BraidWord(4, {2}), c2), NotInB2nn);

    // The four-strand Omega swaps the blocks, so its product with the half twist
    // preserves them.
    const BraidWord Om(4, {2, 3, -1, -2});
    CHECK(pi_sign(Om, c2) == z2_one);
    CHECK(pi_sign(delta(4) * Om, c2) == z2_zero);

    std::mt19937_64 rng(5);
    const auto gens = bnn_generators(2);
    for (int t = 0; t < 60; ++t) {
        const BraidWord a = checks::random_b2nn_word(rng, gens, 2, 3);
        const BraidWord b = checks::random_b2nn_word(rng, gens, 2, 3);
        CHECK(pi_sign(compose(a, b), c2) == pi_sign(a, c2) + pi_sign(b, c2));
    }
}

TEST_CASE("crossing invariant on generators") {
    for (int n = 2; n <= 3; ++n) {
        const MixedContext ctx(n);
        for (const BnnGenerator& g : bnn_generators(n)) {
            INFO(g.name << " (n=" << n << ")");
            CHECK(epsilon(g.word, ctx) == g.eps);
        }
        CHECK(epsilon(a_gen(1, n + 1, 2 * n), ctx) == z2_one);
        CHECK(epsilon(BraidWord(2 * n, {1, 1}), ctx) == z2_zero);
    }
}

TEST_CASE("crossing invariant of the full twist") {
    CHECK(epsilon(full_twist(4), MixedContext(2)) == z2_zero);
    CHECK(epsilon(full_twist(6), MixedContext(3)) == z2_one);
    CHECK(epsilon(full_twist(8), MixedContext(4)) == z2_zero);
}

TEST_CASE("crossing invariant is a homomorphism") {
    std::mt19937_64 rng(13);
    for (int n = 2; n <= 4; ++n) {
        const MixedContext ctx(n);
        const auto gens = bnn_generators(n);
        for (int t = 0; t < 40; ++t) {
            const BraidWord a = checks::random_bnn_word(rng, gens, 2 * n, 4);
            const BraidWord b = checks::random_bnn_word(rng, gens, 2 * n, 4);
            CHECK(epsilon(compose(a, b), ctx) == epsilon(a, ctx) + epsilon(b, ctx));
            CHECK(epsilon(a, ctx) + epsilon(delta(2 * n) * a * inverse(delta(2 * n)), ctx) == z2_zero);
        }
    }
}

TEST_CASE("crossing invariant agrees on conjugation-relation sides") {
    for (int n = 2; n <= 3; ++n) {
        const MixedContext ctx(n);
        for (const RelationInstance& r : bnn_presentation_relations(n)) {
            if (r.name.rfind("conjugate", 0) != 0) continue;
            INFO(r.name);
            CHECK(epsilon(r.lhs, ctx) == epsilon(r.rhs, ctx));
        }
    }
}

TEST_CASE("crossing invariant rejects non-block-preserving words") {
    CHECK_THROWS_AS(epsilon(omega(2), MixedContext(2)), NotInBnn);
    CHECK_THROWS_AS(epsilon(BraidWord(4, {2}), MixedContext(2)), NotInBnn);
    CHECK_THROWS_AS(epsilon(BraidWord(4, {1}), MixedContext(3)), StrandMismatch);
}
