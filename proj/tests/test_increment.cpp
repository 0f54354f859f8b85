#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "addcomb/constructions.hpp"
#include "addcomb/increment.hpp"

using namespace addcomb;

TEST_CASE("classify_case") {
    GroupSpec z5 = GroupSpec::cyclic(5);
    CHECK(classify_case(GroupSet::full(z5)) == SumsetCase::LARGE_SUMSET);
    CHECK(classify_case(GroupSet(z5, {0, 1})) == SumsetCase::LARGE_SUMSET);

    GroupSpec f52 = GroupSpec::vector_space(5, 2);
    GroupSet line(f52);
    for (std::int64_t t = 0; t < 5; ++t) line.insert(f52.from_coords({t, 0}));
    CHECK(classify_case(line) == SumsetCase::SMALL_SUMSET);
    CHECK_THROWS(classify_case(GroupSet(z5)));
}

TEST_CASE("annihilator_subspace") {
    GroupSpec f52 = GroupSpec::vector_space(5, 2);
    auto v = annihilator_subspace(f52, {f52.from_coords({1, 0})});
    CHECK(v.codim == 1);
    CHECK(v.members.size() == 5);
    for (Element x : v.members.elements()) CHECK(f52.coords(x)[0] == 0);

    auto whole = annihilator_subspace(f52, {});
    CHECK(whole.codim == 0);
    CHECK(whole.members.size() == 25);

    GroupSpec f33 = GroupSpec::vector_space(3, 3);
    // Two dependent rows: rank must be 1.
    auto dep = annihilator_subspace(
        f33, {f33.from_coords({1, 2, 0}), f33.from_coords({2, 4 % 3, 0})});
    CHECK(dep.codim == 1);
    CHECK(dep.members.size() == 9);
}

TEST_CASE("increment_step_ff on an affine line") {
    GroupSpec f52 = GroupSpec::vector_space(5, 2);
    GroupSet line(f52);
    for (std::int64_t t = 0; t < 5; ++t) line.insert(f52.from_coords({t, 1}));
    auto step = increment_step_ff(line, Rational(5, 4), 2);
    REQUIRE(step.has_value());
    CHECK(step->new_density >= Rational(5, 4) * line.density());

    // Recount the claimed density from the returned structure.
    const Subspace& v = std::get<Subspace>(step->structure);
    std::int64_t cnt = 0;
    for (Element m : v.members.elements())
        if (line.contains(f52.sub(step->translate, m))) ++cnt;
    CHECK(Rational(cnt, v.members.size()) == step->new_density);
}

TEST_CASE("increment_step_ff fails cleanly at the density cap") {
    GroupSpec f52 = GroupSpec::vector_space(5, 2);
    auto step = increment_step_ff(GroupSet::full(f52), Rational(5, 4), 2);
    CHECK_FALSE(step.has_value());

    GroupSpec f33 = GroupSpec::vector_space(3, 3);
    CHECK_THROWS(increment_step_ff(GroupSet(f33, {0}), Rational(5, 4), 2));
}

TEST_CASE("two_scale_select") {
    GroupSpec z101 = GroupSpec::cyclic(101);
    auto b = bohr_build(z101, {0}, 2.0);
    auto bp = bohr_build(z101, {1}, 0.5);
    auto bpp = bohr_build(z101, {1}, 0.1);

    // A = B: no translate can beat 5/4, but every x sees full density.
    auto all = two_scale_select(GroupSet::full(z101), b, bp, bpp);
    CHECK(all.kind == TwoScaleResult::CASE1);
    CHECK(all.x == 0);

    // A = one coset of B' inside B: density on that translate is 1 >= 5/4 alpha.
    GroupSet coset(z101);
    for (Element m : bp.members().elements()) coset.insert(z101.add(m, 40));
    auto conc = two_scale_select(coset, b, bp, bpp);
    CHECK(conc.kind == TwoScaleResult::CASE2);
    CHECK(conc.density >= Rational(5, 4) * Rational(coset.size(), 101));
}

TEST_CASE("increment_step_bohr finds a verified step for an interval") {
    for (std::int64_t n : {101, 401}) {
        GroupSpec g = GroupSpec::cyclic(n);
        GroupSet a(g);
        for (Element x = 0; x <= n / 2; ++x) a.insert(x);
        auto b = bohr_build(g, {0}, 2.0);
        BohrStepParams params;
        auto step = increment_step_bohr(a, b, params);
        REQUIRE_MESSAGE(step.has_value(), params.diagnostics);
        Rational alpha(a.size(), n);
        CHECK(step->new_density >= Rational(5, 4) * alpha);

        const BohrSet& nb = std::get<BohrSet>(step->structure);
        std::int64_t cnt = 0;
        for (Element m : nb.members().elements())
            if (a.contains(g.sub(step->translate, m))) ++cnt;
        CHECK(Rational(cnt, nb.size()) == step->new_density);
    }
}

TEST_CASE("increment_step_bohr rejects bad groups") {
    GroupSpec z12 = GroupSpec::cyclic(12);
    auto b = bohr_build(z12, {0}, 2.0);
    BohrStepParams params;
    CHECK_THROWS(increment_step_bohr(GroupSet(z12, {0}), b, params));
}

TEST_CASE("iterate reports DENSITY_CAP immediately on dense input") {
    GroupSpec f52 = GroupSpec::vector_space(5, 2);
    GroupSet a(f52, {0});  // density 1/25 -> not capped; use full set for cap
    IterateParams params;
    auto trace = iterate(GroupSet::full(f52), IncrementEngine::FF, params);
    CHECK(trace.steps.empty());
    CHECK(trace.termination == Termination::DENSITY_CAP);
    CHECK(std::string(termination_name(trace.termination)) == "DENSITY_CAP");
}

TEST_CASE("iterate ff: monotone verified trace on a product construction") {
    GroupSpec f5 = GroupSpec::vector_space(5, 1);
    auto cube = product_construction(GroupSet(f5, {0, 1}), 3);
    IterateParams params;
    auto trace = iterate(cube, IncrementEngine::FF, params);

    double alpha = cube.density().to_double();
    auto bound = static_cast<std::size_t>(
        std::ceil(std::log(1.0 / alpha) / std::log(params.target.to_double())));
    CHECK(trace.steps.size() <= bound);
    Rational prev = cube.density();
    for (const auto& step : trace.steps) {
        CHECK(step.old_density == prev);
        CHECK(step.new_density >= params.target * step.old_density);
        prev = step.new_density;
    }
}

TEST_CASE("iterate bohr: trace invariants on a solution-free set in Z/101") {
    GroupSpec g = GroupSpec::cyclic(101);
    Equation eq = Equation::xyz3w();
    auto greedy = search_extremal_greedy(eq, GroupSet::full(g), 5, 6);
    REQUIRE_FALSE(has_nontrivial(eq, greedy.witness));

    IterateParams params;
    auto trace = iterate(greedy.witness, IncrementEngine::BOHR, params);
    Rational prev = greedy.witness.density();
    std::int64_t prev_size = g.order;
    for (const auto& step : trace.steps) {
        CHECK(step.old_density == prev);
        CHECK(step.new_density >= params.target * step.old_density);
        const BohrSet& nb = std::get<BohrSet>(step.structure);
        CHECK(nb.size() < prev_size);
        prev = step.new_density;
        prev_size = nb.size();
    }
}
