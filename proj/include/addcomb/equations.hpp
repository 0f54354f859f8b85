#pragma once

#include <cstdint>
#include <vector>

#include "addcomb/group.hpp"

namespace addcomb {

// Translation-invariant linear equation c_1 x_1 + ... + c_k x_k = 0 with
// sum c_i = 0; the canonical instance is (1,1,1,-3) for x+y+z=3w.
struct Equation {
    std::vector<std::int64_t> coefficients;

    explicit Equation(std::vector<std::int64_t> cs);
    static Equation xyz3w() { return Equation({1, 1, 1, -3}); }
    int arity() const { return static_cast<int>(coefficients.size()); }
};

struct SolutionCount {
    std::int64_t total = 0;
    std::int64_t trivial = 0;
    std::int64_t nontrivial() const { return total - trivial; }
};

// Ordered k-tuples (x_1,...,x_k) in A^k with sum c_i x_i = 0, computed as an
// exact k-fold convolution of dilate pushforwards evaluated at 0.
std::int64_t count_solutions(const Equation& eq, const GroupSet& a);

// Tuples that are constant on the parts of some partition of the index set
// whose per-part coefficient sums vanish. Equivalently: every value class of
// the tuple has zero coefficient sum, so the count is a sum of falling
// factorials of |A| over the zero-sum set partitions.
std::int64_t count_trivial(const Equation& eq, const GroupSet& a);

bool has_nontrivial(const Equation& eq, const GroupSet& a);

// Plain k-nested-loop enumeration; the independent oracle.
SolutionCount brute_force_count(const Equation& eq, const GroupSet& a);

}  // namespace addcomb
