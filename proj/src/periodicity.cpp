#include "addcomb/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "addcomb/spectral.hpp"

namespace addcomb {

double shifted_difference_norm(const std::vector<std::int64_t>& conv,
                               const GroupSpec& g, Element t, double p) {
    if (std::isinf(p)) {
        std::int64_t m = 0;
        for (Element x = 0; x < g.order; ++x) {
            std::int64_t d = conv[static_cast<std::size_t>(g.add(x, t))] -
                             conv[static_cast<std::size_t>(x)];
            m = std::max(m, d < 0 ? -d : d);
        }
        return static_cast<double>(m);
    }
    double sum = 0;
    for (Element x = 0; x < g.order; ++x) {
        std::int64_t d = conv[static_cast<std::size_t>(g.add(x, t))] -
                         conv[static_cast<std::size_t>(x)];
        sum += std::pow(std::abs(static_cast<double>(d)), p);
    }
    return std::pow(sum, 1.0 / p);
}

GroupSet lp_almost_periods(const GroupSet& a, const GroupSet& l, double p,
                           double eps, const GroupSet& s) {
    if (a.empty() || l.empty())
        throw std::invalid_argument("lp_almost_periods: empty input set");
    if (!std::isinf(p) && p < 2)
        throw std::invalid_argument("lp_almost_periods: p >= 2 required");
    if (a.group() != l.group() || a.group() != s.group())
        throw std::invalid_argument("lp_almost_periods: group mismatch");

    DenseFunction conv = convolve(DenseFunction::indicator(a), DenseFunction::indicator(l));
    const GroupSpec& g = a.group();
    double thresh = std::isinf(p)
                        ? eps * static_cast<double>(a.size())
                        : eps * static_cast<double>(a.size()) *
                              std::pow(static_cast<double>(l.size()), 1.0 / p);
    GroupSet t(g);
    for (Element x : s.elements())
        if (shifted_difference_norm(conv.values, g, x, p) <= thresh + 1e-9) t.insert(x);
    return t;
}

GroupSet linfty_three_fold_periods(const GroupSet& a, const GroupSet& m,
                                   const GroupSet& l, double eps, const GroupSet& s) {
    if (a.empty() || m.empty() || l.empty())
        throw std::invalid_argument("linfty_three_fold_periods: empty input set");
    const GroupSpec& g = a.group();
    if (m.group() != g || l.group() != g || s.group() != g)
        throw std::invalid_argument("linfty_three_fold_periods: group mismatch");

    DenseFunction conv = convolve(
        convolve(DenseFunction::indicator(a), DenseFunction::indicator(m)),
        DenseFunction::indicator(l));
    double thresh = eps * static_cast<double>(a.size()) * static_cast<double>(m.size());
    GroupSet t(g);
    for (Element x : s.elements())
        if (shifted_difference_norm(conv.values, g, x,
                                    std::numeric_limits<double>::infinity()) <=
            thresh + 1e-9)
            t.insert(x);
    return t;
}

PeriodicityReport verify_theorem_2_1(const GroupSet& a, const GroupSet& l,
                                     const GroupSet& s, double p, double eps, int k,
                                     std::int64_t sample_budget) {
    PeriodicityReport rep;
    GroupSet asum = sumset(a, s);
    rep.doubling_k = Rational(asum.size(), a.size());

    GroupSet t = lp_almost_periods(a, l, p, eps, s);
    rep.t_size = t.size();
    rep.s_size = s.size();
    rep.density = Rational(t.size(), std::max<std::int64_t>(s.size(), 1));

    rep.subset_ok = true;
    for (Element x : t.elements())
        if (!s.contains(x)) rep.subset_ok = false;

    // Sample kT - kT and record the exact maximal shifted-difference norm;
    // the triangle inequality bounds it by k * eps * |A| |L|^(1/p).
    const GroupSpec& g = a.group();
    DenseFunction conv = convolve(DenseFunction::indicator(a), DenseFunction::indicator(l));
    rep.k_eps_threshold = k * eps * static_cast<double>(a.size()) *
                          std::pow(static_cast<double>(l.size()), 1.0 / p);
    auto te = t.elements();
    if (!te.empty()) {
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        auto next = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (std::int64_t it = 0; it < sample_budget; ++it) {
            Element shift = 0;
            for (int j = 0; j < k; ++j) {
                shift = g.add(shift, te[next() % te.size()]);
                shift = g.sub(shift, te[next() % te.size()]);
            }
            rep.max_norm_over_kt =
                std::max(rep.max_norm_over_kt,
                         shifted_difference_norm(conv.values, g, shift, p));
            ++rep.sampled;
        }
    }
    return rep;
}

}  // namespace addcomb
