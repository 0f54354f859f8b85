#pragma once

#include <cstdint>
#include <vector>

#include "addcomb/bohr.hpp"
#include "addcomb/group.hpp"

namespace addcomb {

GroupSet three_fold_sumset(const GroupSet& a, const GroupSet& b, const GroupSet& c);

// Exact maximum-length AP in S over Z/N (N prime): for each step in
// {1..(N-1)/2}, longest run along the step orbit; ties to smallest step
// then smallest start.
ArithmeticProgression longest_ap(const GroupSet& s);

struct AffineSubspace {
    Element shift = 0;
    std::vector<Element> basis;  // lexicographically minimal directions
    int dimension = 0;
};

struct AffineSearchResult {
    bool exact = true;
    AffineSubspace witness;
};

// Exact maximum-dimension affine subspace inside S over F_q^n, by depth
//-first extension over canonical direction vectors.
AffineSearchResult largest_affine_subspace(const GroupSet& s,
                                           std::int64_t node_budget = std::int64_t{1} << 28);

struct XVWitness {
    Element shift_t = 0;             // the translate maximizing |A cap (t - C)|
    GroupSet x;                      // {x in B+t : |(x+V) cap (A+B+C)| >= (1-eta)|V|}
    bool large_x = false;            // |X| >= 0.99 |B|
    bool certified = false;          // X + V subseteq A+B+C, re-verified exhaustively
    std::int64_t b_size = 0;
};

XVWitness xv_witness(const GroupSet& a, const GroupSet& b, const GroupSet& c,
                     const GroupSet& v, double eta);

}  // namespace addcomb
