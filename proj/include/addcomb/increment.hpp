#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "addcomb/bohr.hpp"
#include "addcomb/equations.hpp"
#include "addcomb/group.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

enum class SumsetCase { LARGE_SUMSET, SMALL_SUMSET };

// LARGE iff mu(A+A) >= 1/2, exact.
SumsetCase classify_case(const GroupSet& a);

// A subspace of F_q^n as annihilator of a character set, with its members
// enumerated for exact density recounts.
struct Subspace {
    std::vector<Element> annihilated;  // the characters Lambda
    std::vector<Element> basis;        // basis of V as group elements
    int codim = 0;
    GroupSet members;
};

// Joint annihilator {x : gamma . x = 0 for all gamma in lambda}.
Subspace annihilator_subspace(const GroupSpec& g, const std::vector<Element>& lambda);

struct IncrementStep {
    std::variant<Subspace, BohrSet> structure;
    Element translate = 0;
    Rational old_density;
    Rational new_density;
    int rank_or_codim = 0;
    double radius = 0;  // Bohr structures only
};

enum class Termination {
    DENSITY_CAP,
    STRUCTURE_EXHAUSTED,
    STEP_FAILED,
    BUDGET_EXHAUSTED,
};

struct IncrementTrace {
    std::vector<IncrementStep> steps;
    Termination termination = Termination::STEP_FAILED;
    std::string diagnostics;
};

const char* termination_name(Termination t);

// Deterministic enumeration over spectrum-derived annihilator subspaces plus
// exhaustive translate scans; the returned density is recomputed exactly.
std::optional<IncrementStep> increment_step_ff(const GroupSet& a, const Rational& target,
                                               int max_codim);

// Bourgain-style two-scale selection at desk scale, exhaustive over x in B.
struct TwoScaleResult {
    enum Kind { CASE1, CASE2, NEITHER } kind = NEITHER;
    Element x = 0;                      // CASE1 witness, or CASE2 translate
    int which = 0;                      // CASE2: 0 -> B', 1 -> B''
    Rational density;                   // CASE2: the achieved density
};
TwoScaleResult two_scale_select(const GroupSet& a, const BohrSet& b, const BohrSet& bp,
                                const BohrSet& bpp);

struct BohrStepParams {
    double regularity_c = 100.0;
    Rational target{5, 4};
    std::string diagnostics;  // filled on failure
};

std::optional<IncrementStep> increment_step_bohr(const GroupSet& a, const BohrSet& b,
                                                 BohrStepParams& params);

enum class IncrementEngine { FF, BOHR };

struct IterateParams {
    Rational target{3, 2};
    int max_codim = 4;
    double regularity_c = 100.0;
    int budget = 20;
};

// Repeated density increment on (A_j - x_j) restricted to the step's
// structure; every A_j is asserted solution-free and every step's density
// recounted from scratch.
IncrementTrace iterate(const GroupSet& a, IncrementEngine engine, const IterateParams& params);

}  // namespace addcomb
