#include "addcomb/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "addcomb/spectral.hpp"

namespace addcomb {

GroupSet three_fold_sumset(const GroupSet& a, const GroupSet& b, const GroupSet& c) {
    return sumset(sumset(a, b), c);
}

ArithmeticProgression longest_ap(const GroupSet& s) {
    const GroupSpec& g = s.group();
    if (g.factors.size() != 1 || !is_prime(g.order))
        throw std::invalid_argument("longest_ap: requires Z/N with N prime");
    std::int64_t n = g.order;
    if (s.empty()) return {0, 0, 0};
    if (s.size() == n) return {0, 1, n};

    ArithmeticProgression best{0, 0, 0};
    std::int64_t max_step = std::max<std::int64_t>((n - 1) / 2, 1);
    for (std::int64_t step = 1; step <= max_step; ++step) {
        // Walk the step orbit circularly, starting from a gap.
        std::int64_t gap_t = -1;
        Element pos = 0;
        for (std::int64_t t = 0; t < n; ++t) {
            if (!s.contains(pos)) {
                gap_t = t;
                break;
            }
            pos = g.add(pos, static_cast<Element>(step));
        }
        // s.size() < n so a gap exists
        Element start_of_run = 0;
        std::int64_t run = 0;
        Element cur = static_cast<Element>(gap_t * step % n);
        for (std::int64_t t = 0; t <= n; ++t) {
            if (t < n && s.contains(cur)) {
                if (run == 0) start_of_run = cur;
                ++run;
            } else {
                if (run > best.length ||
                    (run == best.length && run > 0 && step == best.step &&
                     start_of_run < best.start)) {
                    best = {start_of_run, static_cast<Element>(step), run};
                }
                run = 0;
            }
            cur = g.add(cur, static_cast<Element>(step));
        }
    }
    return best;
}

AffineSearchResult largest_affine_subspace(const GroupSet& s, std::int64_t node_budget) {
    const GroupSpec& g = s.group();
    std::int64_t q = g.factors[0];
    for (auto f : g.factors)
        if (f != q || !is_prime(q))
            throw std::invalid_argument("largest_affine_subspace: requires F_q^n");

    AffineSearchResult res;
    if (s.empty()) {
        res.witness.dimension = -1;
        return res;
    }

    // Canonical directions (first nonzero coordinate 1) drawn from
    // differences of elements of S.
    std::vector<Element> dirs;
    {
        GroupSet seen(g);
        auto elems = s.elements();
        for (Element x : elems)
            for (Element y : elems) {
                if (x == y) continue;
                Element d = g.sub(x, y);
                auto c = g.coords(d);
                std::int64_t lead = 0;
                for (auto v : c)
                    if (v != 0) {
                        lead = v;
                        break;
                    }
                std::int64_t inv = 0;
                for (std::int64_t t = 1; t < q; ++t)
                    if (lead * t % q == 1) inv = t;
                Element canon = g.scalar_mul(inv, d);
                if (!seen.contains(canon)) {
                    seen.insert(canon);
                    dirs.push_back(canon);
                }
            }
        std::sort(dirs.begin(), dirs.end());
    }

    std::int64_t nodes = 0;
    bool truncated = false;
    std::vector<Element> points;      // current affine subspace
    std::vector<Element> basis;
    int best_dim = -1;
    AffineSubspace best;

    std::function<void(Element, std::size_t)> dfs = [&](Element shift, std::size_t from) {
        if (truncated) return;
        if (++nodes > node_budget) {
            truncated = true;
            return;
        }
        if (static_cast<int>(basis.size()) > best_dim) {
            best_dim = static_cast<int>(basis.size());
            best.shift = shift;
            best.basis = basis;
            best.dimension = best_dim;
        }
        for (std::size_t i = from; i < dirs.size(); ++i) {
            if (static_cast<int>(basis.size() + (dirs.size() - i)) <= best_dim) break;
            Element v = dirs[i];
            // Skip directions already in the span.
            bool in_span = std::find(points.begin(), points.end(),
                                     g.add(points[0], v)) != points.end();
            if (in_span) continue;
            bool ok = true;
            for (Element p : points) {
                Element cur = p;
                for (std::int64_t t = 1; t < q && ok; ++t) {
                    cur = g.add(cur, v);
                    if (!s.contains(cur)) ok = false;
                }
                if (!ok) break;
            }
            if (!ok) continue;
            std::size_t old_size = points.size();
            for (std::size_t j = 0; j < old_size; ++j) {
                Element cur = points[j];
                for (std::int64_t t = 1; t < q; ++t) {
                    cur = g.add(cur, v);
                    points.push_back(cur);
                }
            }
            basis.push_back(v);
            dfs(shift, i + 1);
            basis.pop_back();
            points.resize(old_size);
        }
    };

    for (Element p : s.elements()) {
        if (truncated) break;
        points = {p};
        basis.clear();
        dfs(p, 0);
    }

    res.exact = !truncated;
    res.witness = best;
    return res;
}

XVWitness xv_witness(const GroupSet& a, const GroupSet& b, const GroupSet& c,
                     const GroupSet& v, double eta) {
    const GroupSpec& g = a.group();
    if (b.group() != g || c.group() != g || v.group() != g)
        throw std::invalid_argument("xv_witness: group mismatch");
    if (a.empty() || b.empty() || c.empty() || v.empty())
        throw std::invalid_argument("xv_witness: empty input");

    // Shift t maximizing |A cap (t - C)| = 1_A*1_C(t); smallest t on ties.
    DenseFunction conv_ac = convolve(DenseFunction::indicator(a), DenseFunction::indicator(c));
    Element t = 0;
    for (Element x = 1; x < g.order; ++x)
        if (conv_ac.at(x) > conv_ac.at(t)) t = x;

    DenseFunction conv3 = convolve(
        convolve(DenseFunction::indicator(a), DenseFunction::indicator(b)),
        DenseFunction::indicator(c));

    XVWitness out;
    out.shift_t = t;
    out.b_size = b.size();
    out.x = GroupSet(g);
    auto vmem = v.elements();
    double needed = (1.0 - eta) * static_cast<double>(v.size());
    for (Element be : b.elements()) {
        Element x = g.add(be, t);
        std::int64_t cnt = 0;
        for (Element ve : vmem)
            if (conv3.at(g.add(x, ve)) > 0) ++cnt;
        if (static_cast<double>(cnt) >= needed - 1e-9) out.x.insert(x);
    }
    out.large_x = 100 * out.x.size() >= 99 * b.size();

    // Pigeonhole regime: (1-eta)|V| > |V| - 1 forces full containment;
    // verify exhaustively either way.
    if (eta < 1.0 / static_cast<double>(v.size())) {
        bool contained = !out.x.empty();
        for (Element xe : out.x.elements()) {
            for (Element ve : vmem)
                if (conv3.at(g.add(xe, ve)) == 0) {
                    contained = false;
                    break;
                }
            if (!contained) break;
        }
        out.certified = contained;
    }
    return out;
}

}  // namespace addcomb
