#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braid/cabling.hpp"
#include "braid/garside.hpp"
#include "braid/presentation.hpp"
#include "braid/selfcheck.hpp"

using namespace braid;

TEST_CASE("cable basics") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const BraidWord u = checks::random_word(rng, 4, 15);
        CHECK(cable(u, 1) == u);
    }
    const BraidWord w = checks::random_word(rng, 6, 20);
    CHECK(cable(w, 1) == w);
    CHECK(cable(BraidWord(2, {1}), 2) == omega(2));
    CHECK(cable(BraidWord(2, {-1}), 2) == inverse(omega(2)));
    CHECK_THROWS_AS(cable(BraidWord(2, {1}), 0), IndexError);
}

TEST_CASE("cabled permutations inflate") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        const int k = 1 + (t / 3) % 3;
        const BraidWord w = checks::random_word(rng, 2 * n, 15);
        CHECK(permutation_of(cable(w, k)) == inflate_permutation(permutation_of(w), k));
    }
}

TEST_CASE("cabling is multiplicative on letters") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        const BraidWord a = checks::random_word(rng, 4, 10);
        const BraidWord b = checks::random_word(rng, 4, 10);
        // The law is about plain concatenation; compose() would reduce at the seam.
        std::vector<int> ab = a.letters();
        ab.insert(ab.end(), b.letters().begin(), b.letters().end());
        std::vector<int> cab = cable(a, 2).letters();
        const std::vector<int> cb = cable(b, 2).letters();
        cab.insert(cab.end(), cb.begin(), cb.end());
        CHECK(cable(BraidWord(4, ab), 2).letters() == cab);
        CHECK(are_equal(cable(BraidWord(4, ab), 2), compose(cable(a, 2), cable(b, 2))));
    }
}

TEST_CASE("cabling preserves the braid relations (k=2,3)") {
    for (int k = 2; k <= 3; ++k) {
        for (int i = 1; i <= 2; ++i)
            CHECK(are_equal(cable(BraidWord(4, {i, i + 1, i}), k),
                            cable(BraidWord(4, {i + 1, i, i + 1}), k)));
        CHECK(are_equal(cable(BraidWord(4, {1, 3}), k), cable(BraidWord(4, {3, 1}), k)));
    }
}

TEST_CASE("cabling respects inverses up to the word problem") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 15; ++t) {
        const BraidWord w = checks::random_word(rng, 4, 10);
        CHECK(are_equal(cable(inverse(w), 2), inverse(cable(w, 2))));
    }
}

TEST_CASE("cabling preserves block membership") {
    std::mt19937_64 rng(43);
    const auto gens = bnn_generators(2);
    const MixedContext ctx(2);
    for (int t = 0; t < 25; ++t) {
        const int k = 2 + t % 2;
        const MixedContext big(2 * k);
        const BraidWord w = checks::random_b2nn_word(rng, gens, 2, 4);
        CHECK(in_bnn2(cable(w, k), big));
        CHECK(in_bnn(w, ctx) == in_bnn(cable(w, k), big));
    }
}

TEST_CASE("cabling commutes with the block-swap sign") {
    const MixedContext ctx(2);
    CHECK(check_cabling_diagram(omega(2), 2, ctx));
    CHECK(check_cabling_diagram(BraidWord(4), 5, ctx));
    std::mt19937_64 rng(47);
    const auto gens = bnn_generators(2);
    for (int t = 0; t < 100; ++t)
        CHECK(check_cabling_diagram(checks::random_b2nn_word(rng, gens, 2, 4), 2, ctx));
}
