#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "addcomb/equations.hpp"
#include "addcomb/spectral.hpp"

using namespace addcomb;

TEST_CASE("equation validation") {
    CHECK_THROWS(Equation({1, 1}));         // arity < 3
    CHECK_THROWS(Equation({1, 0, -1}));     // zero coefficient
    CHECK_THROWS(Equation({1, 1, 1, -2}));  // not translation invariant
    CHECK(Equation::xyz3w().arity() == 4);
}

TEST_CASE("count_solutions basics") {
    auto eq = Equation::xyz3w();
    auto emb = embed_interval(3);
    GroupSet a = emb.image();
    CHECK(a.size() == 3);
    CHECK(count_solutions(eq, a) == 9);

    GroupSet single(emb.group, {emb.map(2)});
    CHECK(count_solutions(eq, single) == 1);
    CHECK(count_solutions(eq, GroupSet(emb.group)) == 0);
}

TEST_CASE("count_trivial closed forms") {
    auto eq = Equation::xyz3w();
    auto emb = embed_interval(5);
    GroupSet a = emb.image();
    CHECK(count_trivial(eq, a) == a.size());

    Equation pairs({1, 1, -1, -1});
    GroupSet two(emb.group, {emb.map(1), emb.map(2)});
    CHECK(count_trivial(pairs, two) == 6);  // 2|A|^2 - |A|
    CHECK(count_trivial(pairs, GroupSet(emb.group)) == 0);
}

TEST_CASE("has_nontrivial on small interval images") {
    auto eq = Equation::xyz3w();
    auto emb = embed_interval(3);
    CHECK_FALSE(has_nontrivial(eq, emb.image_of({1, 2})));
    CHECK(has_nontrivial(eq, emb.image_of({1, 2, 3})));
    CHECK_FALSE(has_nontrivial(eq, GroupSet(emb.group)));
}

TEST_CASE("oracle sweep: all subsets of the image of [6]") {
    auto eq = Equation::xyz3w();
    auto emb = embed_interval(6);
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::int64_t> ks;
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i)) ks.push_back(i + 1);
        GroupSet a = emb.image_of(ks);
        auto oracle = brute_force_count(eq, a);
        CHECK(count_solutions(eq, a) == oracle.total);
        CHECK(count_trivial(eq, a) == oracle.trivial);
    }
}

TEST_CASE("oracle on random subsets with collapsing coefficients") {
    std::mt19937_64 rng(47);
    GroupSpec f52 = GroupSpec::vector_space(5, 2);
    Equation eqs[] = {Equation::xyz3w(), Equation({2, -1, -1}), Equation({5, -3, -2})};
    for (const auto& eq : eqs) {
        for (int t = 0; t < 12; ++t) {
            GroupSet a(f52);
            std::uniform_int_distribution<Element> pick(0, f52.order - 1);
            for (int i = 0; i < 5; ++i) a.insert(pick(rng));
            auto oracle = brute_force_count(eq, a);
            CHECK(count_solutions(eq, a) == oracle.total);
            CHECK(count_trivial(eq, a) == oracle.trivial);
        }
    }
    // gcd(c, |G|) != 1: the dilate collapses, counts must stay exact.
    GroupSpec z6 = GroupSpec::cyclic(6);
    Equation deg({3, -2, -1});
    std::uniform_int_distribution<Element> pick(0, 5);
    for (int t = 0; t < 12; ++t) {
        GroupSet a(z6);
        for (int i = 0; i < 4; ++i) a.insert(pick(rng));
        auto oracle = brute_force_count(deg, a);
        CHECK(count_solutions(deg, a) == oracle.total);
        CHECK(count_trivial(deg, a) == oracle.trivial);
    }
}

TEST_CASE("translation and unit-dilation invariance") {
    std::mt19937_64 rng(53);
    auto eq = Equation::xyz3w();
    GroupSpec z61 = GroupSpec::cyclic(61);
    std::uniform_int_distribution<Element> pick(0, 60);
    for (int t = 0; t < 10; ++t) {
        GroupSet a(z61);
        for (int i = 0; i < 6; ++i) a.insert(pick(rng));
        std::int64_t base = count_solutions(eq, a);
        CHECK(count_solutions(eq, translate(a, pick(rng))) == base);
        Element u = 1 + pick(rng) % 60;
        CHECK(count_solutions(eq, dilate(u, a)) == base);
    }
}

TEST_CASE("solution-free identity over subsets of the image of [8]") {
    auto eq = Equation::xyz3w();
    auto emb = embed_interval(8);
    int checked = 0;
    for (int mask = 0; mask < 256; ++mask) {
        std::vector<std::int64_t> ks;
        for (int i = 0; i < 8; ++i)
            if (mask & (1 << i)) ks.push_back(i + 1);
        GroupSet a = emb.image_of(ks);
        if (has_nontrivial(eq, a)) continue;
        ++checked;
        auto m3a = DenseFunction::indicator(dilate(-3, a));
        auto ia = DenseFunction::indicator(a);
        auto iaa = DenseFunction::indicator(sumset(a, a));
        CHECK(convolve_at_zero({m3a, ia, iaa}) == a.size());
    }
    CHECK(checked > 8);  // the sweep actually exercised nonempty sets
}

TEST_CASE("disjointness under solution-free partitions") {
    auto eq = Equation::xyz3w();
    auto emb = embed_interval(12);
    GroupSet a = emb.image_of({1, 2, 10, 11});
    REQUIRE_FALSE(has_nontrivial(eq, a));
    std::mt19937_64 rng(59);
    auto elems = a.elements();
    for (int t = 0; t < 16; ++t) {
        GroupSet a1(emb.group), a2(emb.group);
        for (Element x : elems) (rng() & 1 ? a1 : a2).insert(x);
        if (a2.empty()) continue;
        // 3*A_2 - A_1 - A_1 must avoid A.
        GroupSet bad = dilate(3, a2);
        if (!a1.empty()) bad = sumset(bad, negate(sumset(a1, a1)));
        else continue;
        CHECK(intersect(a, bad).empty());
    }
}

TEST_CASE("brute_force_count guards its budget") {
    auto emb = embed_interval(40);
    GroupSet big = emb.image();
    Equation wide({1, 1, 1, 1, 1, 1, -6});  // 40^7 > 1e9
    CHECK_THROWS(brute_force_count(wide, big));
}
