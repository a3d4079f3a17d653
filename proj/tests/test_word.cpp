#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braid/selfcheck.hpp"
#include "braid/word.hpp"

using namespace braid;

TEST_CASE("free reduction") {
    CHECK(free_reduce(BraidWord(3, {1, -1})) == BraidWord(3));
    CHECK(free_reduce(BraidWord(3, {1, 2, -2, 1})) == BraidWord(3, {1, 1}));
    CHECK(free_reduce(BraidWord(4, {1, 2, 3})) == BraidWord(4, {1, 2, 3}));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const BraidWord w = checks::random_word(rng, 5, 30);
        const BraidWord r = free_reduce(w);
        CHECK(r.size() <= w.size());
        CHECK(free_reduce(r) == r);
        CHECK(free_reduce(compose(w, inverse(w))) == BraidWord(5));
    }
}

TEST_CASE("compose and inverse") {
    CHECK(compose(BraidWord(2, {1}), BraidWord(2, {-1})) == BraidWord(2));
    CHECK(inverse(BraidWord(3, {1, -2})) == BraidWord(3, {2, -1}));
    CHECK(compose(BraidWord(3, {1, 2}), BraidWord(3, {1})) == BraidWord(3, {1, 2, 1}));
    CHECK_THROWS_AS(compose(BraidWord(3, {1}), BraidWord(4, {1})), StrandMismatch);
}

TEST_CASE("word construction validates letters") {
    CHECK_THROWS_AS(BraidWord(3, {3}), IndexError);
    CHECK_THROWS_AS(BraidWord(1, {1}), IndexError);
    CHECK_THROWS_AS(BraidWord(4, {0}), IndexError);
    CHECK(BraidWord(1).empty());
}

TEST_CASE("permutations of words") {
    const Permutation p = permutation_of(BraidWord(2, {1}));
    CHECK(p(1) == 2);
    CHECK(p(2) == 1);

    // Frozen by tracing the strands letter by letter.
    const Permutation w2 = permutation_of(omega(2));
    CHECK(w2 == Permutation::from_images({3, 4, 1, 2}));

    for (int n = 1; n <= 3; ++n)
        CHECK(permutation_of(delta(2 * n)) == Permutation::reversal(2 * n));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const int m = 2 + t % 7;
        const BraidWord a = checks::random_word(rng, m, 20);
        const BraidWord b = checks::random_word(rng, m, 20);
        CHECK(permutation_of(compose(a, b)) == permutation_of(a) * permutation_of(b));
        CHECK(permutation_of(inverse(a)) == permutation_of(a).inverse());
    }
}

TEST_CASE("purity") {
    CHECK(is_pure(BraidWord(2, {1, 1})));
    CHECK_FALSE(is_pure(BraidWord(2, {1})));
    CHECK(is_pure(a_gen(1, 3, 4)));
}

TEST_CASE("pure-braid generator words") {
    CHECK(a_gen(1, 2, 2) == BraidWord(2, {1, 1}));
    CHECK(a_gen(1, 3, 3) == BraidWord(3, {2, 1, 1, -2}));
    CHECK(a_gen(2, 4, 5) == BraidWord(5, {3, 2, 2, -3}));
    CHECK_THROWS_AS(a_gen(2, 2, 4), IndexError);
    CHECK_THROWS_AS(a_gen(0, 1, 4), IndexError);
    CHECK_THROWS_AS(a_gen(1, 5, 4), IndexError);

    for (int m = 2; m <= 6; ++m)
        for (int i = 1; i < m; ++i)
            for (int j = i + 1; j <= m; ++j) CHECK(is_pure(a_gen(i, j, m)));
}

TEST_CASE("cross-block generator words") {
    CHECK(a_gen_cross(2, 3, 2) == BraidWord(4, {2, 2}));
    CHECK(a_gen_cross(1, 4, 2) == BraidWord(4, {3, -1, 2, 2, 1, -3}));
    CHECK_THROWS_AS(a_gen_cross(3, 4, 2), IndexError);
    CHECK_THROWS_AS(a_gen_cross(1, 2, 2), IndexError);
}

TEST_CASE("half twist, full twist, block crossing words") {
    CHECK(delta(1) == BraidWord(1));
    CHECK(delta(2) == BraidWord(2, {1}));
    CHECK(delta(4) == BraidWord(4, {1, 2, 3, 1, 2, 1}));
    CHECK(full_twist(2) == BraidWord(2, {1, 1}));
    CHECK(omega(1) == BraidWord(2, {1}));
    CHECK(omega(2) == BraidWord(4, {2, 3, 1, 2}));
    CHECK(omega(4).size() == 16);

    const Permutation p4 = permutation_of(omega(4));
    for (int i = 1; i <= 8; ++i) CHECK(p4(i) == (i + 3) % 8 + 1);
}

TEST_CASE("powers") {
    CHECK(power(BraidWord(3, {1}), 3) == BraidWord(3, {1, 1, 1}));
    CHECK(power(BraidWord(3, {1, 2}), -2) == BraidWord(3, {-2, -1, -2, -1}));
    CHECK(power(BraidWord(3, {1}), 0) == BraidWord(3));
}
