#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "addcomb/group.hpp"
#include "addcomb/io.hpp"

using namespace addcomb;

TEST_CASE("element arithmetic in Z/5 and F_5^2") {
    GroupSpec z5 = GroupSpec::cyclic(5);
    CHECK(z5.add(3, 4) == 2);
    CHECK(z5.add(0, 3) == 3);

    GroupSpec f52 = GroupSpec::vector_space(5, 2);
    Element a = f52.from_coords({1, 2});
    Element b = f52.from_coords({4, 4});
    CHECK(f52.add(a, b) == f52.from_coords({0, 1}));
    CHECK_THROWS(z5.check_element(5));
}

TEST_CASE("mixed-radix encoding is little-endian and stable") {
    GroupSpec g({3, 4});
    CHECK(g.from_coords({2, 1}) == 2 + 3 * 1);
    auto c = g.coords(11);
    CHECK(c[0] == 2);
    CHECK(c[1] == 3);
}

TEST_CASE("dilate") {
    GroupSpec z7 = GroupSpec::cyclic(7);
    GroupSet a(z7, {1, 2});
    auto d = dilate(3, a);
    CHECK(d.contains(3));
    CHECK(d.contains(6));
    CHECK(d.size() == 2);

    GroupSpec z5 = GroupSpec::cyclic(5);
    GroupSet b(z5, {1, 2});
    auto n = dilate(-1, b);
    CHECK(n.contains(4));
    CHECK(n.contains(3));

    GroupSet zero(z5, {0});
    CHECK(dilate(2, zero) == zero);
}

TEST_CASE("sumset examples") {
    GroupSpec z5 = GroupSpec::cyclic(5);
    GroupSet a(z5, {1, 2});
    GroupSet zero(z5, {0});
    CHECK(sumset(a, zero) == a);

    GroupSet b(z5, {0, 1});
    auto s = sumset(b, b);
    CHECK(s.size() == 3);
    CHECK(s.contains(0));
    CHECK(s.contains(1));
    CHECK(s.contains(2));

    GroupSpec f22 = GroupSpec::vector_space(2, 2);
    GroupSet u(f22, {f22.from_coords({0, 0}), f22.from_coords({1, 0})});
    GroupSet v(f22, {f22.from_coords({0, 0}), f22.from_coords({0, 1})});
    CHECK(sumset(u, v).size() == 4);

    GroupSpec z3 = GroupSpec::cyclic(3);
    CHECK_THROWS(sumset(a, GroupSet(z3, {0})));
}

TEST_CASE("embed_interval picks the least prime in [6N, 12N]") {
    CHECK(embed_interval(10).modulus == 61);
    CHECK(embed_interval(1).modulus == 7);
    CHECK(embed_interval(2).modulus == 13);
}

TEST_CASE("embed_interval against a sieve up to 10^4") {
    std::int64_t limit = 12 * 10000 + 1;
    std::vector<bool> composite(static_cast<std::size_t>(limit), false);
    for (std::int64_t p = 2; p * p < limit; ++p)
        if (!composite[static_cast<std::size_t>(p)])
            for (std::int64_t q = p * p; q < limit; q += p)
                composite[static_cast<std::size_t>(q)] = true;
    for (std::int64_t n = 1; n <= 10000; n += (n < 100 ? 1 : 37)) {
        auto e = embed_interval(n);
        CHECK(e.modulus >= 6 * n);
        CHECK(e.modulus <= 12 * n);
        CHECK(!composite[static_cast<std::size_t>(e.modulus)]);
        for (std::int64_t p = 6 * n; p < e.modulus; ++p)
            CHECK(composite[static_cast<std::size_t>(p)]);
    }
}

TEST_CASE("character values") {
    GroupSpec z4 = GroupSpec::cyclic(4);
    CHECK(character_value(z4, 0, 3) == std::complex<double>(1, 0));
    CHECK(std::abs(character_value(z4, 1, 2) - std::complex<double>(-1, 0)) < 1e-12);

    GroupSpec f32 = GroupSpec::vector_space(3, 2);
    auto v = character_value(f32, f32.from_coords({1, 0}), f32.from_coords({2, 1}));
    double ang = 2.0 * 3.14159265358979323846 * 2.0 / 3.0;
    CHECK(std::abs(v - std::complex<double>(std::cos(ang), std::sin(ang))) < 1e-12);
}

TEST_CASE("character multiplicativity on random triples") {
    std::mt19937_64 rng(7);
    GroupSpec shapes[] = {GroupSpec::cyclic(97), GroupSpec({4, 9, 5})};
    for (const auto& g : shapes) {
        std::uniform_int_distribution<Element> pick(0, g.order - 1);
        for (int i = 0; i < 1000; ++i) {
            Element gam = pick(rng), x = pick(rng), y = pick(rng);
            auto lhs = character_value(g, gam, x) * character_value(g, gam, y);
            auto rhs = character_value(g, gam, g.add(x, y));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("sumset monotonicity and dilate involution on random sets") {
    std::mt19937_64 rng(11);
    GroupSpec g({6, 7});
    std::uniform_int_distribution<Element> pick(0, g.order - 1);
    for (int trial = 0; trial < 30; ++trial) {
        GroupSet a(g), b(g);
        for (int i = 0; i < 8; ++i) {
            a.insert(pick(rng));
            b.insert(pick(rng));
        }
        auto ab = sumset(a, b);
        for (Element x : b.elements()) {
            GroupSet single(g, {x});
            for (Element y : sumset(a, single).elements()) CHECK(ab.contains(y));
        }
        CHECK(dilate(-1, dilate(-1, a)) == a);
    }
}

TEST_CASE("set file round trip") {
    GroupSpec g({3, 5});
    GroupSet s(g, {0, 7, g.order - 1});
    std::stringstream ss;
    write_set(ss, s);
    GroupSet back = read_set(ss);
    CHECK(back == s);

    std::stringstream messy("  group:  3 , 5 \n\n 1 ,2\n0,0\n");
    GroupSet m = read_set(messy);
    CHECK(m.size() == 2);
    CHECK(m.contains(g.from_coords({1, 2})));
}
