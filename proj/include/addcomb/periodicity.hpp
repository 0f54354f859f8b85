#pragma once

#include <cstdint>
#include <vector>

#include "addcomb/group.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

// T = {t in S : ||1_A*1_L(.+t) - 1_A*1_L||_p <= eps |A| |L|^(1/p)},
// computed by exact scan over S from one precomputed convolution.
// p may be infinity.
GroupSet lp_almost_periods(const GroupSet& a, const GroupSet& l, double p,
                           double eps, const GroupSet& s);

// T = {t in S : ||1_A*1_M*1_L(.+t) - 1_A*1_M*1_L||_inf <= eps |A| |M|},
// with the three-fold convolution precomputed once (exact integers).
GroupSet linfty_three_fold_periods(const GroupSet& a, const GroupSet& m,
                                   const GroupSet& l, double eps, const GroupSet& s);

struct PeriodicityReport {
    Rational doubling_k;          // |A+S| / |A|
    std::int64_t t_size = 0;
    std::int64_t s_size = 0;
    Rational density;             // |T| / |S|
    double max_norm_over_kt = 0;  // max shifted-difference L^p norm over sampled kT-kT
    double k_eps_threshold = 0;   // k * eps * |A| |L|^(1/p)
    std::int64_t sampled = 0;
    bool subset_ok = false;       // T subseteq S
};

// Structural, constant-free checks around the L^p almost-periodicity
// statement: K is computed exactly, T by exact scan, and the kT-kT norms
// are reported (the density lower bound has an unspecified constant, so it
// is recorded, never asserted).
PeriodicityReport verify_theorem_2_1(const GroupSet& a, const GroupSet& l,
                                     const GroupSet& s, double p, double eps, int k,
                                     std::int64_t sample_budget = 4096);

// Shifted-difference norm ||c(.+t) - c||_p for a precomputed integer
// convolution; shared by the scans and by tests asserting Hoelder steps.
double shifted_difference_norm(const std::vector<std::int64_t>& conv,
                               const GroupSpec& g, Element t, double p);

}  // namespace addcomb
