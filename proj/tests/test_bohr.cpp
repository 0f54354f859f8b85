#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "addcomb/bohr.hpp"

using namespace addcomb;

TEST_CASE("bohr_build basics") {
    GroupSpec z12 = GroupSpec::cyclic(12);
    auto whole = bohr_build(z12, {0}, 0.3);
    CHECK(whole.size() == 12);

    auto kernel = bohr_build(z12, {4}, 0.0);
    // gamma(x) = e(x/3): kernel is 3Z/12.
    CHECK(kernel.size() == 4);
    CHECK(kernel.contains(0));
    CHECK(kernel.contains(3));

    auto b = bohr_build(z12, {3}, 0.1);
    CHECK(b.size() == 3);
    CHECK(b.contains(0));
    CHECK(b.contains(4));
    CHECK(b.contains(8));
}

TEST_CASE("scale shares norms and is monotone") {
    GroupSpec z101 = GroupSpec::cyclic(101);
    auto b = bohr_build(z101, {1, 5}, 0.8);
    CHECK(b.scale(1.0).members() == b.members());
    auto half = b.scale(0.5);
    for (Element x : half.members().elements()) CHECK(b.contains(x));
    auto zero = b.scale(0.0);
    CHECK(zero.size() == 1);
    CHECK(zero.contains(0));
}

TEST_CASE("membership symmetry and identity") {
    GroupSpec g = GroupSpec::cyclic(53);
    auto b = bohr_build(g, {2, 9}, 0.7);
    CHECK(b.contains(0));
    for (Element x = 0; x < g.order; ++x)
        CHECK(b.contains(x) == b.contains(g.neg(x)));
}

TEST_CASE("is_regular on trivial shapes") {
    GroupSpec z12 = GroupSpec::cyclic(12);
    CHECK(is_regular(bohr_build(z12, {0}, 0.5)));

    // F_3^2 with rho below the minimum nonzero norm |e(1/3)-1| ~ 1.73:
    // the member set is constant through the whole regularity window.
    GroupSpec f32 = GroupSpec::vector_space(3, 2);
    CHECK(is_regular(bohr_build(f32, {f32.from_coords({1, 0})}, 0.5)));
}

TEST_CASE("is_regular agrees with a brute-force delta sweep") {
    GroupSpec z13 = GroupSpec::cyclic(13);
    for (double rho : {0.3, 0.5, 0.9, 1.4}) {
        auto b = bohr_build(z13, {1}, rho);
        int d = b.rank();
        bool ok = true;
        // Dense sweep; far finer than the breakpoint spacing at this size.
        for (int i = -4000; i <= 4000; ++i) {
            double delta = i / (4000.0 * 12 * d);
            double ratio = static_cast<double>(b.size_at_radius(rho * (1 + delta))) /
                           static_cast<double>(b.size());
            double slack = 12.0 * d * std::abs(delta);
            if (ratio < 1 - slack - 1e-9 || ratio > 1 + slack + 1e-9) ok = false;
        }
        CHECK(is_regular(b) == ok);
    }
}

TEST_CASE("regular_radius lands in [1/2, 1] and passes the predicate") {
    GroupSpec z101 = GroupSpec::cyclic(101);
    auto b = bohr_build(z101, {1}, 1.0);
    auto delta = regular_radius(b);
    REQUIRE(delta.has_value());
    CHECK(*delta >= 0.5);
    CHECK(*delta <= 1.0);
    CHECK(is_regular(b.scale(*delta)));

    auto whole = bohr_build(z101, {0}, 0.5);
    auto dw = regular_radius(whole);
    REQUIRE(dw.has_value());
    CHECK(*dw == 1.0);
}

TEST_CASE("annihilator_bohr") {
    GroupSpec f32 = GroupSpec::vector_space(3, 2);
    auto sub = annihilator_bohr(f32, {}, {f32.from_coords({1, 0})}, 0.1);
    CHECK(sub.size() == 3);
    for (Element x : sub.members().elements()) CHECK(f32.coords(x)[0] == 0);

    GroupSpec z20 = GroupSpec::cyclic(20);
    auto base = bohr_build(z20, {3}, 0.4);
    auto same = annihilator_bohr(z20, {3}, {}, 0.4);
    CHECK(same.members() == base.members());

    auto whole = annihilator_bohr(z20, {3}, {7}, 2.0);
    CHECK(whole.size() == 20);
}

TEST_CASE("triangle inclusion and sub-Bohr ordering") {
    std::mt19937_64 rng(41);
    GroupSpec g = GroupSpec::cyclic(211);
    std::uniform_int_distribution<Element> pick(1, g.order - 1);
    for (int t = 0; t < 10; ++t) {
        std::vector<Element> freqs = {pick(rng), pick(rng)};
        auto b = bohr_build(g, freqs, 1.2);
        auto bd = b.scale(0.4);
        auto be = b.scale(0.35);
        auto bde = b.scale(0.75);
        for (Element x : bd.members().elements())
            for (Element y : be.members().elements())
                CHECK(bde.contains(g.add(x, y)));

        std::vector<Element> more = freqs;
        more.push_back(pick(rng));
        auto finer = bohr_build(g, more, 0.9);
        auto coarser = bohr_build(g, freqs, 1.2);
        for (Element x : finer.members().elements()) CHECK(coarser.contains(x));
    }
}

TEST_CASE("size and doubling bounds on random Bohr sets") {
    std::mt19937_64 rng(43);
    std::int64_t primes[] = {13, 101, 401, 1009};
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (std::int64_t n : primes) {
        GroupSpec g = GroupSpec::cyclic(n);
        std::uniform_int_distribution<Element> pick(1, n - 1);
        std::uniform_real_distribution<double> radius(0.0, 2.0);
        for (int t = 0; t < 5; ++t) {
            int d = 1 + static_cast<int>(rng() % 3);
            std::vector<Element> freqs;
            for (int i = 0; i < d; ++i) freqs.push_back(pick(rng));
            double rho = radius(rng);
            auto b = bohr_build(g, freqs, rho);
            double lower = std::pow(rho / two_pi, d) * static_cast<double>(n);
            CHECK(static_cast<double>(b.size()) >= lower - 1e-9);
            CHECK(static_cast<double>(b.scale(2.0).size()) <=
                  std::pow(6.0, d) * static_cast<double>(b.size()) + 1e-9);
            for (double delta : {0.15, 0.4, 0.8}) {
                CHECK(static_cast<double>(b.scale(delta).size()) >=
                      std::pow(delta / 2.0, 3 * d) * static_cast<double>(b.size()) - 1e-9);
            }
        }
    }
}

TEST_CASE("ap_in_bohr") {
    GroupSpec z31 = GroupSpec::cyclic(31);
    auto whole = bohr_build(z31, {0}, 1.0);
    auto ap = ap_in_bohr(whole);
    REQUIRE(ap.has_value());
    CHECK(ap->length == 31);

    auto b = bohr_build(z31, {1}, 1.0);
    auto p = ap_in_bohr(b);
    REQUIRE(p.has_value());
    CHECK(p->length >= 5);  // ceil(31 / 2pi)
    for (std::int64_t i = 0; i < p->length; ++i) {
        Element x = z31.add(p->start, z31.scalar_mul(i, p->step));
        CHECK(b.contains(x));
    }

    auto tight = bohr_build(z31, {1}, 0.0);
    auto q = ap_in_bohr(tight);
    REQUIRE(q.has_value());
    CHECK(q->length == 1);
    CHECK(q->start == 0);
}
