#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "addcomb/group.hpp"

namespace addcomb {

// Bohr(Gamma, rho) = {x : |gamma(x) - 1| <= rho for all gamma in Gamma},
// with the per-element norms r(x) = max_gamma |gamma(x) - 1| cached so that
// rescaling and regularity testing are exact step-function computations.
class BohrSet {
public:
    BohrSet() = default;
    BohrSet(GroupSpec g, std::vector<Element> frequencies, double rho);

    const GroupSpec& group() const { return group_; }
    const std::vector<Element>& frequencies() const { return freqs_; }
    double radius() const { return rho_; }
    int rank() const { return static_cast<int>(freqs_.size()); }
    const std::vector<double>& norms() const { return *norms_; }
    const std::vector<double>& sorted_norms() const { return *sorted_norms_; }
    const GroupSet& members() const { return members_; }
    std::int64_t size() const { return members_.size(); }

    bool contains(Element x) const { return members_.contains(x); }

    // Same frequencies, radius delta * rho; the norms vector is shared.
    BohrSet scale(double delta) const;
    // Same norms, explicit radius.
    BohrSet with_radius(double rho) const;

    // |B_t| as a function of the absolute radius t, from the sorted norms.
    std::int64_t size_at_radius(double t) const;

private:
    GroupSpec group_;
    std::vector<Element> freqs_;
    double rho_ = 0;
    std::shared_ptr<const std::vector<double>> norms_;
    std::shared_ptr<const std::vector<double>> sorted_norms_;
    GroupSet members_;

    void rebuild_members();
};

// Membership comparisons r(x) <= rho use this symmetric tolerance.
inline constexpr double kBohrTolerance = 1e-12;

BohrSet bohr_build(const GroupSpec& g, const std::vector<Element>& frequencies, double rho);

// The definition with constant 12: |B_(1+delta)| / |B| within 1 +- 12 d |delta|
// for all |delta| <= 1/12d, decided exactly via the norm breakpoints.
bool is_regular(const BohrSet& b);

// Largest delta in [1/2, 1] over the breakpoint grid with scale(B, delta)
// regular; nullopt if no candidate passes.
std::optional<double> regular_radius(const BohrSet& b);

// Bohr(Gamma union Lambda, rho').
BohrSet annihilator_bohr(const GroupSpec& g, const std::vector<Element>& base,
                         const std::vector<Element>& spectrum, double rho);

struct ArithmeticProgression {
    Element start = 0;
    Element step = 0;
    std::int64_t length = 0;
};

// A progression inside B (single-factor Z/N, N prime) of length at least
// ceil((rho/2pi) N^(1/d)), built from a minimal-norm step in B_(1/k).
std::optional<ArithmeticProgression> ap_in_bohr(const BohrSet& b);

}  // namespace addcomb
