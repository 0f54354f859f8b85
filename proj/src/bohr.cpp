#include "addcomb/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace addcomb {

namespace {

double bohr_norm(const GroupSpec& g, const std::vector<Element>& freqs, Element x) {
    double r = 0.0;
    for (Element gamma : freqs) {
        double phase = character_phase(g, gamma, x);
        // |e(phase) - 1| = 2 |sin(pi * phase)|
        r = std::max(r, 2.0 * std::abs(std::sin(std::numbers::pi * phase)));
    }
    return r;
}

}  // namespace

BohrSet::BohrSet(GroupSpec g, std::vector<Element> frequencies, double rho)
    : group_(std::move(g)), freqs_(std::move(frequencies)), rho_(rho) {
    if (rho_ < 0) throw std::invalid_argument("BohrSet: negative radius");
    std::sort(freqs_.begin(), freqs_.end());
    freqs_.erase(std::unique(freqs_.begin(), freqs_.end()), freqs_.end());
    for (Element f : freqs_) group_.check_element(f);
    auto norms = std::make_shared<std::vector<double>>(static_cast<std::size_t>(group_.order));
    for (Element x = 0; x < group_.order; ++x)
        (*norms)[static_cast<std::size_t>(x)] = bohr_norm(group_, freqs_, x);
    norms_ = norms;
    auto sorted = std::make_shared<std::vector<double>>(*norms);
    std::sort(sorted->begin(), sorted->end());
    sorted_norms_ = sorted;
    rebuild_members();
}

void BohrSet::rebuild_members() {
    members_ = GroupSet(group_);
    for (Element x = 0; x < group_.order; ++x)
        if ((*norms_)[static_cast<std::size_t>(x)] <= rho_ + kBohrTolerance)
            members_.insert(x);
}

BohrSet BohrSet::scale(double delta) const {
    if (delta < 0) throw std::invalid_argument("scale: negative delta");
    return with_radius(delta * rho_);
}

BohrSet BohrSet::with_radius(double rho) const {
    BohrSet out;
    out.group_ = group_;
    out.freqs_ = freqs_;
    out.rho_ = rho;
    out.norms_ = norms_;
    out.sorted_norms_ = sorted_norms_;
    out.rebuild_members();
    return out;
}

std::int64_t BohrSet::size_at_radius(double t) const {
    const auto& s = *sorted_norms_;
    return std::upper_bound(s.begin(), s.end(), t + kBohrTolerance) - s.begin();
}

BohrSet bohr_build(const GroupSpec& g, const std::vector<Element>& frequencies, double rho) {
    return BohrSet(g, frequencies, rho);
}

bool is_regular(const BohrSet& b) {
    int d = b.rank();
    if (d < 1) throw std::invalid_argument("is_regular: rank >= 1 required");
    double rho = b.radius();
    if (rho == 0.0) return true;  // B_(1+delta) = B for all delta
    double window = 1.0 / (12.0 * d);
    double lo = (1.0 - window) * rho;
    double hi = (1.0 + window) * rho;
    double base = static_cast<double>(b.size_at_radius(rho));

    // |B_t| is a step function; only the breakpoints in [lo, hi] matter,
    // checked from both sides.
    std::vector<double> candidates = {lo, hi};
    const auto& sorted = b.sorted_norms();
    for (double v : sorted)
        if (v > lo && v < hi) candidates.push_back(v);

    for (double u : candidates) {
        double delta = std::abs(u / rho - 1.0);
        double bound_lo = (1.0 - 12.0 * d * delta) * base;
        double bound_hi = (1.0 + 12.0 * d * delta) * base;
        double right = static_cast<double>(b.size_at_radius(u));
        const double eps = 10 * kBohrTolerance;
        double left = static_cast<double>(
            std::lower_bound(sorted.begin(), sorted.end(), u - eps) - sorted.begin());
        const double slack = 1e-9;
        if (right < bound_lo - slack || right > bound_hi + slack) return false;
        if (left < bound_lo - slack || left > bound_hi + slack) return false;
    }
    return true;
}

std::optional<double> regular_radius(const BohrSet& b) {
    if (b.rank() < 1) throw std::invalid_argument("regular_radius: rank >= 1 required");
    double rho = b.radius();
    if (rho == 0.0) return 1.0;
    // Candidate deltas: the breakpoints of t -> |B_t| in [rho/2, rho], the
    // midpoints between adjacent breakpoints (regularity is not piecewise
    // constant in the radius, so a passing value can sit strictly between
    // breakpoints), and a uniform fallback grid. Every candidate is tested
    // with the exact predicate; only the grid is discretized.
    std::vector<double> candidates = {1.0, 0.5};
    const auto& sorted = b.sorted_norms();
    double prev = -1;
    for (double v : sorted) {
        double delta = v / rho;
        if (delta >= 0.5 - kBohrTolerance && delta <= 1.0 + kBohrTolerance) {
            candidates.push_back(std::clamp(delta, 0.5, 1.0));
            if (prev >= 0.5) candidates.push_back(std::clamp((prev + delta) / 2, 0.5, 1.0));
            prev = delta;
        }
    }
    for (int j = 0; j <= 256; ++j) candidates.push_back(0.5 + 0.5 * j / 256.0);
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (double delta : candidates)
        if (is_regular(b.scale(delta))) return delta;
    return std::nullopt;
}

BohrSet annihilator_bohr(const GroupSpec& g, const std::vector<Element>& base,
                         const std::vector<Element>& spectrum, double rho) {
    std::vector<Element> freqs = base;
    freqs.insert(freqs.end(), spectrum.begin(), spectrum.end());
    return BohrSet(g, freqs, rho);
}

std::optional<ArithmeticProgression> ap_in_bohr(const BohrSet& b) {
    const GroupSpec& g = b.group();
    if (g.factors.size() != 1 || !is_prime(g.factors[0]))
        throw std::invalid_argument("ap_in_bohr: requires Z/N with N prime");
    if (b.rank() < 1) throw std::invalid_argument("ap_in_bohr: rank >= 1 required");
    std::int64_t n = g.order;
    int d = b.rank();
    double rho = std::min(b.radius(), 2.0);

    if (b.size() == n) return ArithmeticProgression{0, 1, n};

    std::int64_t required = static_cast<std::int64_t>(
        std::ceil(rho / (2.0 * std::numbers::pi) * std::pow(static_cast<double>(n), 1.0 / d)));

    // Minimal-norm nonzero element; ties to smallest index. Pigeonholing the
    // phase vectors into boxes of side N^(-1/d) puts its norm at or below
    // ~2 pi N^(-1/d), so the run {0, s, 2s, ...} reaches the required length
    // via the triangle inequality; every element is verified anyway.
    Element best = -1;
    double best_norm = 0;
    for (Element x = 1; x < n; ++x) {
        double r = b.norms()[static_cast<std::size_t>(x)];
        if (best < 0 || r < best_norm) {
            best = x;
            best_norm = r;
        }
    }
    if (best_norm > rho + kBohrTolerance) {
        // No nonzero member at all: B = {0}.
        if (required <= 1) return ArithmeticProgression{0, 0, 1};
        return std::nullopt;
    }
    // {0, s, ..., (k-1)s} lies in B by the triangle inequality; verify each
    // element, then extend while membership holds.
    std::int64_t length = 0;
    Element cur = 0;
    while (length < n && b.contains(cur)) {
        ++length;
        cur = g.add(cur, best);
    }
    if (length < std::max<std::int64_t>(required, 1)) return std::nullopt;
    return ArithmeticProgression{0, best, length};
}

}  // namespace addcomb
