#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <random>

#include "braid/garside.hpp"
#include "braid/presentation.hpp"
#include "braid/selfcheck.hpp"

using namespace braid;

TEST_CASE("normal form basics") {
    CHECK(normal_form(BraidWord(4, {1, -1})).trivial());
    CHECK(normal_form(BraidWord(3, {1, 2, 1})) == normal_form(BraidWord(3, {2, 1, 2})));

    const NormalForm d4 = normal_form(delta(4));
    CHECK(d4.inf == 1);
    CHECK(d4.factors.empty());

    const NormalForm neg = normal_form(BraidWord(4, {-1}));
    CHECK(neg.inf == -1);
    CHECK(neg.canonical_length() == 1);

    for (int m = 2; m <= 6; ++m)
        for (int k = 1; k <= 3; ++k) {
            const NormalForm nf = normal_form(power(delta(m), 2 * k));
            CHECK(nf.inf == 2 * k);
            CHECK(nf.factors.empty());
        }
}

TEST_CASE("factor sequences are left-weighted permutation braids") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        const int m = 2 + t % 5;
        const NormalForm nf = normal_form(checks::random_word(rng, m, 35));
        for (std::size_t k = 0; k < nf.factors.size(); ++k) {
            const Permutation& f = nf.factors[k];
            CHECK_FALSE(f.is_identity());
            CHECK_FALSE(f == Permutation::reversal(m));
            // Word length of a permutation braid is its inversion count.
            const BraidWord w = permutation_braid_word(f);
            CHECK(static_cast<int>(w.size()) == f.inversions());
            CHECK(permutation_of(w) == f);
            if (k + 1 < nf.factors.size()) {
                const auto fin = finishing_set(f);
                for (int i : starting_set(nf.factors[k + 1]))
                    CHECK(std::find(fin.begin(), fin.end(), i) != fin.end());
            }
        }
    }
}

TEST_CASE("equality decisions") {
    const BraidWord Om(4, {2, 3, -1, -2});
    CHECK(are_equal(delta(4) * Om * inverse(delta(4)), inverse(Om)));
    CHECK_FALSE(is_trivial(BraidWord(2, {1})));
    CHECK(are_equal(BraidWord(4, {2, 1, 1, -3, -3, -2}), power(Om, -2)));
    CHECK_THROWS_AS(are_equal(BraidWord(3, {1}), BraidWord(4, {1})), StrandMismatch);
}

TEST_CASE("block presentation relations hold (n=2)") {
    for (const RelationInstance& r : bnn_presentation_relations(2)) {
        INFO(r.name);
        CHECK(are_equal(r.lhs, r.rhs));
    }
}

TEST_CASE("relation soundness up to eight strands") {
    for (int m = 2; m <= 8; ++m) {
        for (int i = 1; i + 1 < m; ++i)
            CHECK(are_equal(BraidWord(m, {i, i + 1, i}), BraidWord(m, {i + 1, i, i + 1})));
        for (int i = 1; i < m; ++i)
            for (int j = i + 2; j < m; ++j)
                CHECK(are_equal(BraidWord(m, {i, j}), BraidWord(m, {j, i})));
    }
    const auto r = checks::check_presentation_relations(4);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("random words against the engine") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 120; ++t) {
        const int m = 2 + static_cast<int>(rng() % 5);
        const BraidWord w = checks::random_word(rng, m, 40);
        CHECK(is_trivial(compose(w, inverse(w))));
        CHECK(are_equal(w, free_reduce(w)));
    }
}

TEST_CASE("relation rewrites preserve the normal form") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 40; ++t) {
        const int m = 2 + t % 4;
        BraidWord w = checks::random_word(rng, m, 25);
        const NormalForm nf = normal_form(w);
        for (int r = 0; r < 20; ++r) {
            w = checks::random_rewrite(rng, w);
            CHECK(normal_form(w) == nf);
        }
    }
}

TEST_CASE("long words normalize within the time budget") {
    std::mt19937_64 rng(41);
    const BraidWord w = [&rng] {
        std::vector<int> letters;
        for (int k = 0; k < 2000; ++k) {
            const int i = 1 + static_cast<int>(rng() % 11);
            letters.push_back((rng() & 1) ? i : -i);
        }
        return BraidWord(12, std::move(letters));
    }();
    const auto t0 = std::chrono::steady_clock::now();
    const NormalForm nf = normal_form(w);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(nf.canonical_length() > 0);
    CHECK(secs < 1.0);
}
