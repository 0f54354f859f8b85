#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "addcomb/group.hpp"

namespace addcomb {

// Exact integer-valued function on a group; the workhorse for indicator
// convolutions and solution counting.
struct DenseFunction {
    GroupSpec group;
    std::vector<std::int64_t> values;  // length == group.order

    DenseFunction() = default;
    explicit DenseFunction(GroupSpec g)
        : group(std::move(g)), values(static_cast<std::size_t>(group.order), 0) {}

    static DenseFunction indicator(const GroupSet& a);
    static DenseFunction delta(const GroupSpec& g, Element x);
    // Pushforward of 1_A under multiplication by c: f(y) = #{a in A : c*a = y}.
    // Agrees with indicator(dilate(c, A)) when gcd(c, |G|) = 1, and keeps
    // ordered-tuple counts exact when the dilate collapses.
    static DenseFunction dilate_pushforward(std::int64_t c, const GroupSet& a);

    std::int64_t at(Element x) const { return values[static_cast<std::size_t>(x)]; }
    std::int64_t sum() const;
};

struct ComplexFunction {
    GroupSpec group;
    std::vector<std::complex<double>> values;

    ComplexFunction() = default;
    explicit ComplexFunction(GroupSpec g)
        : group(std::move(g)), values(static_cast<std::size_t>(group.order), 0.0) {}
    static ComplexFunction from(const DenseFunction& f);
};

// f_hat(gamma) = sum_x f(x) conj(gamma(x)), stored densely over the
// (self-dual) character group.
struct Spectrum {
    GroupSpec group;
    std::vector<std::complex<double>> coeffs;
};

// Exact convolution f*g(x) = sum_y f(y) g(x-y). The fast path runs a
// number-theoretic transform modulo a 62-bit prime; when the certified
// value bound does not fit, it falls back to a naive loop with 128-bit
// accumulation. Output is always the exact integer convolution.
DenseFunction convolve(const DenseFunction& f, const DenseFunction& g);

// Force the O(|G|^2) loop; exposed so callers can cross-check the fast path.
DenseFunction convolve_naive(const DenseFunction& f, const DenseFunction& g);

// (f1 * ... * fk)(0), i.e. sum over tuples with x_1 + ... + x_k = 0.
std::int64_t convolve_at_zero(const std::vector<DenseFunction>& fs);

Spectrum dft(const DenseFunction& f);
Spectrum dft(const ComplexFunction& f);
ComplexFunction idft(const Spectrum& s);

// Unnormalised counting-measure norm; p = infinity() gives max |f|.
double lp_norm(const DenseFunction& f, double p);
double lp_norm(const ComplexFunction& f, double p);

// {gamma : |mu_X_hat(gamma)| >= delta}, ties included (tolerance 1e-12 on
// the squared modulus). Always contains the trivial character.
std::vector<Element> spec_delta(const GroupSet& x, double delta);

}  // namespace addcomb
