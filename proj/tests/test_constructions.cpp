#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "addcomb/constructions.hpp"

using namespace addcomb;

TEST_CASE("behrend_set small cases") {
    auto r = behrend_set(2, 2);  // m = 4, digits {0,1}, sphere k=1
    CHECK(r.base == 4);
    CHECK(r.sphere_level == 1);
    CHECK(r.integers == std::vector<std::int64_t>({1, 4}));
    CHECK(r.set.size() == 2);
    CHECK_FALSE(has_nontrivial(Equation::xyz3w(), r.set));

    auto one = behrend_set(2, 1);
    CHECK(one.integers == std::vector<std::int64_t>({1}));
    CHECK(one.set.size() == 1);
}

TEST_CASE("behrend_set verified over a (d, n) sweep") {
    auto eq = Equation::xyz3w();
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= 3; ++n) {
            auto r = behrend_set(d, n);
            CHECK(r.base == 3 * d - 2);
            CHECK(r.set.size() == static_cast<std::int64_t>(r.integers.size()));
            auto oracle = brute_force_count(eq, r.set);
            CHECK(oracle.nontrivial() == 0);
            for (auto v : r.integers) {
                CHECK(v >= 0);
                CHECK(v < r.embedding.n + 1);
            }
        }
    }
}

TEST_CASE("behrend density table is computable over d in 2..5") {
    // The density trend across d is recorded, not asserted: at these tiny
    // parameters |A|/m^n visibly decreases as the base grows.
    for (int n = 1; n <= 2; ++n) {
        for (int d = 2; d <= 5; ++d) {
            auto r = behrend_set(d, n);
            std::int64_t m_pow = 1;
            for (int i = 0; i < n; ++i) m_pow *= 3 * d - 2;
            double dens = static_cast<double>(r.set.size()) / static_cast<double>(m_pow);
            CHECK(dens > 0);
            CHECK(dens <= 1);
            MESSAGE("d=", d, " n=", n, " density=", dens);
        }
    }
}

TEST_CASE("behrend_set rejects bad parameters") {
    CHECK_THROWS(behrend_set(1, 2));
    CHECK_THROWS(behrend_set(2, 0));
}

TEST_CASE("product_construction") {
    GroupSpec f5 = GroupSpec::vector_space(5, 1);
    GroupSet s(f5, {0, 1});
    auto eq = Equation::xyz3w();
    REQUIRE_FALSE(has_nontrivial(eq, s));

    auto same = product_construction(s, 1);
    CHECK(same == s);

    auto sq = product_construction(s, 2);
    CHECK(sq.group().factors == std::vector<std::int64_t>({5, 5}));
    CHECK(sq.size() == 4);
    CHECK_FALSE(has_nontrivial(eq, sq));

    auto cube = product_construction(s, 3);
    CHECK(cube.size() == 8);
    CHECK_FALSE(has_nontrivial(eq, cube));

    GroupSet bad(f5, {1, 2, 3});
    REQUIRE(has_nontrivial(eq, bad));
    CHECK_THROWS(product_construction(bad, 2));
}

TEST_CASE("search_extremal_exact on intervals") {
    auto eq = Equation::xyz3w();
    auto r1 = search_extremal_exact_interval(eq, 1);
    CHECK(r1.status == SearchStatus::EXACT);
    CHECK(r1.size == 1);

    auto r2 = search_extremal_exact_interval(eq, 2);
    CHECK(r2.size == 2);

    auto r4 = search_extremal_exact_interval(eq, 4);
    CHECK(r4.size == 2);
    CHECK_FALSE(has_nontrivial(eq, r4.witness));

    auto r10 = search_extremal_exact_interval(eq, 10);
    CHECK(r10.status == SearchStatus::EXACT);
    CHECK_FALSE(has_nontrivial(eq, r10.witness));
    CHECK(r10.witness.size() == r10.size);
}

TEST_CASE("search_extremal_exact budget exhaustion reports INCOMPLETE") {
    auto eq = Equation::xyz3w();
    auto r = search_extremal_exact_interval(eq, 14, /*node_budget=*/16);
    CHECK(r.status == SearchStatus::INCOMPLETE);
    CHECK_FALSE(has_nontrivial(eq, r.witness));
}

TEST_CASE("search_extremal_greedy is sound and deterministic") {
    auto eq = Equation::xyz3w();
    auto emb = embed_interval(12);
    GroupSet universe = emb.image();
    auto exact = search_extremal_exact(eq, universe);
    REQUIRE(exact.status == SearchStatus::EXACT);

    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        auto g1 = search_extremal_greedy(eq, universe, seed, 8);
        auto g2 = search_extremal_greedy(eq, universe, seed, 8);
        CHECK(g1.witness == g2.witness);
        CHECK(g1.size <= exact.size);
        CHECK(g1.size >= 2);
        auto oracle = brute_force_count(eq, g1.witness);
        CHECK(oracle.nontrivial() == 0);
    }
}
