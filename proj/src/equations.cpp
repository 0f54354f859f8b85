#include "addcomb/equations.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "addcomb/spectral.hpp"

namespace addcomb {

Equation::Equation(std::vector<std::int64_t> cs) : coefficients(std::move(cs)) {
    if (coefficients.size() < 3)
        throw std::invalid_argument("Equation: need k >= 3 coefficients");
    std::int64_t sum = 0;
    for (auto c : coefficients) {
        if (c == 0) throw std::invalid_argument("Equation: zero coefficient");
        sum += c;
    }
    if (sum != 0)
        throw std::invalid_argument("Equation: coefficients must sum to 0");
}

std::int64_t count_solutions(const Equation& eq, const GroupSet& a) {
    if (a.empty()) return 0;
    std::vector<DenseFunction> factors;
    factors.reserve(eq.coefficients.size());
    for (auto c : eq.coefficients)
        factors.push_back(DenseFunction::dilate_pushforward(c, a));
    return convolve_at_zero(factors);
}

namespace {

// Enumerate set partitions of [k] via restricted growth strings; for each
// partition with all per-part coefficient sums zero, tuples constant on the
// parts with distinct part values contribute a falling factorial of |A|.
std::int64_t trivial_polynomial(const Equation& eq, std::int64_t n) {
    int k = eq.arity();
    std::vector<int> part(static_cast<std::size_t>(k), 0);
    std::int64_t total = 0;
    std::function<void(int, int)> rec = [&](int i, int max_label) {
        if (i == k) {
            std::vector<std::int64_t> sums(static_cast<std::size_t>(max_label), 0);
            for (int j = 0; j < k; ++j)
                sums[static_cast<std::size_t>(part[static_cast<std::size_t>(j)])] +=
                    eq.coefficients[static_cast<std::size_t>(j)];
            for (auto s : sums)
                if (s != 0) return;
            std::int64_t ways = 1;
            for (int m = 0; m < max_label; ++m) ways *= (n - m);
            total += ways;
            return;
        }
        for (int label = 0; label <= max_label; ++label) {
            part[static_cast<std::size_t>(i)] = label;
            rec(i + 1, std::max(max_label, label + 1));
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace

std::int64_t count_trivial(const Equation& eq, const GroupSet& a) {
    if (eq.arity() > 8)
        throw std::invalid_argument("count_trivial: k > 8 unsupported");
    return trivial_polynomial(eq, a.size());
}

bool has_nontrivial(const Equation& eq, const GroupSet& a) {
    if (a.empty()) return false;
    return count_solutions(eq, a) - count_trivial(eq, a) > 0;
}

SolutionCount brute_force_count(const Equation& eq, const GroupSet& a) {
    SolutionCount out;
    if (a.empty()) return out;
    int k = eq.arity();
    double budget = std::pow(static_cast<double>(a.size()), k);
    if (budget > 1e9)
        throw std::invalid_argument("brute_force_count: |A|^k exceeds 1e9");
    const GroupSpec& g = a.group();
    auto elems = a.elements();
    std::vector<Element> tuple(static_cast<std::size_t>(k));
    std::function<void(int, Element)> rec = [&](int depth, Element partial) {
        if (depth == k) {
            if (partial != 0) return;
            ++out.total;
            // Trivial iff each value class has zero coefficient sum.
            bool trivial = true;
            for (int i = 0; i < k && trivial; ++i) {
                bool seen_before = false;
                for (int j = 0; j < i; ++j)
                    if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(i)])
                        seen_before = true;
                if (seen_before) continue;
                std::int64_t class_sum = 0;
                for (int j = 0; j < k; ++j)
                    if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(i)])
                        class_sum += eq.coefficients[static_cast<std::size_t>(j)];
                if (class_sum != 0) trivial = false;
            }
            if (trivial) ++out.trivial;
            return;
        }
        for (Element x : elems) {
            tuple[static_cast<std::size_t>(depth)] = x;
            rec(depth + 1,
                g.add(partial, g.scalar_mul(eq.coefficients[static_cast<std::size_t>(depth)], x)));
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace addcomb
