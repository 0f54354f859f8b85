#include "addcomb/increment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "addcomb/spectral.hpp"

namespace addcomb {

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::DENSITY_CAP: return "DENSITY_CAP";
        case Termination::STRUCTURE_EXHAUSTED: return "STRUCTURE_EXHAUSTED";
        case Termination::STEP_FAILED: return "STEP_FAILED";
        case Termination::BUDGET_EXHAUSTED: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

SumsetCase classify_case(const GroupSet& a) {
    if (a.empty()) throw std::invalid_argument("classify_case: empty set");
    GroupSet aa = sumset(a, a);
    return 2 * aa.size() >= a.group().order ? SumsetCase::LARGE_SUMSET
                                            : SumsetCase::SMALL_SUMSET;
}

namespace {

std::int64_t field_char(const GroupSpec& g) {
    std::int64_t q = g.factors[0];
    for (auto f : g.factors)
        if (f != q) throw std::invalid_argument("expected a vector space F_q^n");
    if (!is_prime(q)) throw std::invalid_argument("expected prime q");
    return q;
}

// Count |A  cap (x - V)| for symmetric member lists (subspaces, Bohr sets).
std::int64_t density_count(const GroupSet& a, Element x,
                           const std::vector<Element>& members) {
    std::int64_t cnt = 0;
    const GroupSpec& g = a.group();
    for (Element v : members)
        if (a.contains(g.sub(x, v))) ++cnt;
    return cnt;
}

}  // namespace

Subspace annihilator_subspace(const GroupSpec& g, const std::vector<Element>& lambda) {
    std::int64_t q = field_char(g);
    int n = static_cast<int>(g.factors.size());

    // Row-reduce the character matrix over F_q.
    std::vector<std::vector<std::int64_t>> rows;
    for (Element gam : lambda) rows.push_back(g.coords(gam));
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % q != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(sel)]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        std::int64_t inv = 0;
        for (std::int64_t t = 1; t < q; ++t)
            if (prow[static_cast<std::size_t>(col)] * t % q == 1) inv = t;
        for (auto& v : prow) v = v * inv % q;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            std::int64_t f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % q;
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) {
                auto& v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                v = ((v - f * prow[static_cast<std::size_t>(c)]) % q + q) % q;
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }

    // Kernel basis from the free columns.
    Subspace out;
    out.annihilated = lambda;
    out.codim = rank;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<std::int64_t> vec(static_cast<std::size_t>(n), 0);
        vec[static_cast<std::size_t>(free_col)] = 1;
        for (int r = 0; r < rank; ++r) {
            std::int64_t coeff =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)] % q;
            vec[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
                ((-coeff) % q + q) % q;
        }
        out.basis.push_back(g.from_coords(vec));
    }

    out.members = GroupSet(g);
    int dim = static_cast<int>(out.basis.size());
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(dim), 0);
    for (;;) {
        Element e = 0;
        for (int i = 0; i < dim; ++i)
            e = g.add(e, g.scalar_mul(coeff[static_cast<std::size_t>(i)],
                                      out.basis[static_cast<std::size_t>(i)]));
        out.members.insert(e);
        int i = 0;
        while (i < dim && ++coeff[static_cast<std::size_t>(i)] == q) {
            coeff[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == dim) break;
    }
    return out;
}

std::optional<IncrementStep> increment_step_ff(const GroupSet& a, const Rational& target,
                                               int max_codim) {
    const GroupSpec& g = a.group();
    std::int64_t q = field_char(g);
    if (q == 3) throw std::invalid_argument("increment_step_ff: q = 3 degenerates the equation");
    if (a.empty()) throw std::invalid_argument("increment_step_ff: empty set");

    Rational alpha = a.density();
    Rational goal = target * alpha;

    // Candidate spectra: A, A+A and the relevant dilates, at decreasing
    // thresholds; characters capped by index for tractability.
    std::vector<GroupSet> sources;
    sources.push_back(a);
    sources.push_back(sumset(a, a));
    sources.push_back(dilate(-3, a));
    sources.push_back(dilate(3, a));

    for (double delta : {0.5, 0.25, 0.125}) {
        for (const auto& w : sources) {
            if (w.empty()) continue;
            std::vector<Element> spec = spec_delta(w, delta);
            spec.erase(std::remove(spec.begin(), spec.end(), Element{0}), spec.end());
            if (spec.size() > 12) spec.resize(12);
            if (spec.empty()) continue;

            // Subsets smallest-first, lexicographic within a size.
            int m = static_cast<int>(spec.size());
            for (int size = 1; size <= std::min(max_codim, m); ++size) {
                std::vector<int> idx(static_cast<std::size_t>(size));
                for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
                for (;;) {
                    std::vector<Element> lambda;
                    for (int i : idx) lambda.push_back(spec[static_cast<std::size_t>(i)]);
                    Subspace v = annihilator_subspace(g, lambda);
                    if (v.codim >= 1 && v.codim <= max_codim &&
                        v.members.size() < g.order) {
                        auto mem = v.members.elements();
                        for (Element x = 0; x < g.order; ++x) {
                            std::int64_t cnt = density_count(a, x, mem);
                            Rational nd(cnt, v.members.size());
                            if (nd >= goal) {
                                IncrementStep step;
                                step.structure = v;
                                step.translate = x;
                                step.old_density = alpha;
                                step.new_density = nd;
                                step.rank_or_codim = v.codim;
                                return step;
                            }
                        }
                    }
                    // next combination
                    int i = size - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < size; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
        }
    }
    return std::nullopt;
}

TwoScaleResult two_scale_select(const GroupSet& a, const BohrSet& b, const BohrSet& bp,
                                const BohrSet& bpp) {
    const GroupSpec& g = a.group();
    Rational alpha(intersect(a, b.members()).size(), b.size());
    Rational case2_goal = Rational(5, 4) * alpha;
    Rational case1_goal = Rational(7, 10) * alpha;

    TwoScaleResult res;
    auto mp = bp.members().elements();
    auto mpp = bpp.members().elements();

    // CASE2: best translate of B' or B'' with density >= 5/4 alpha.
    for (int which = 0; which < 2; ++which) {
        const auto& mem = which == 0 ? mp : mpp;
        for (Element x = 0; x < g.order; ++x) {
            Rational nd(density_count(a, x, mem),
                        static_cast<std::int64_t>(mem.size()));
            if (nd >= case2_goal && (res.kind != TwoScaleResult::CASE2 || nd > res.density)) {
                res.kind = TwoScaleResult::CASE2;
                res.x = x;
                res.which = which;
                res.density = nd;
            }
        }
    }
    if (res.kind == TwoScaleResult::CASE2) return res;

    // CASE1: x in B with both relative densities >= 7/10 alpha.
    for (Element x : b.members().elements()) {
        Rational d1(density_count(a, x, mp), static_cast<std::int64_t>(mp.size()));
        if (d1 < case1_goal) continue;
        Rational d2(density_count(a, x, mpp), static_cast<std::int64_t>(mpp.size()));
        if (d2 < case1_goal) continue;
        res.kind = TwoScaleResult::CASE1;
        res.x = x;
        return res;
    }
    res.kind = TwoScaleResult::NEITHER;
    return res;
}

namespace {

BohrSet regularize(const BohrSet& b) {
    auto delta = regular_radius(b);
    return delta ? b.scale(*delta) : b;
}

std::optional<IncrementStep> bohr_candidate_scan(const GroupSet& a, const BohrSet& base,
                                                 const std::vector<GroupSet>& sources,
                                                 const Rational& alpha, const Rational& goal,
                                                 double rho_ref) {
    const GroupSpec& g = a.group();
    for (double delta : {0.5, 0.25}) {
        for (const auto& w : sources) {
            if (w.empty()) continue;
            std::vector<Element> spec = spec_delta(w, delta);
            spec.erase(std::remove(spec.begin(), spec.end(), Element{0}), spec.end());
            if (spec.size() > 8) spec.resize(8);
            if (spec.empty()) continue;
            for (double frac : {0.25, 0.125, 0.0625}) {
                BohrSet t = annihilator_bohr(g, base.frequencies(), spec, rho_ref * frac);
                if (t.size() < 2 || t.size() >= g.order) continue;
                auto mem = t.members().elements();
                for (Element x = 0; x < g.order; ++x) {
                    std::int64_t cnt = density_count(a, x, mem);
                    Rational nd(cnt, t.size());
                    if (nd >= goal) {
                        IncrementStep step;
                        step.structure = t;
                        step.translate = x;
                        step.old_density = alpha;
                        step.new_density = nd;
                        step.rank_or_codim = t.rank();
                        step.radius = t.radius();
                        return step;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<IncrementStep> increment_step_bohr(const GroupSet& a, const BohrSet& b,
                                                 BohrStepParams& params) {
    const GroupSpec& g = a.group();
    if (g.factors.size() != 1 || !is_prime(g.order))
        throw std::invalid_argument("increment_step_bohr: requires Z/N, N prime");
    if (g.order % 3 == 0)
        throw std::invalid_argument("increment_step_bohr: N divisible by 3");
    if (a.empty()) throw std::invalid_argument("increment_step_bohr: empty set");

    int d = std::max(b.rank(), 1);
    Rational alpha(intersect(a, b.members()).size(), b.size());
    if (alpha.num == 0) {
        params.diagnostics = "A has no mass in B";
        return std::nullopt;
    }
    Rational goal = params.target * alpha;

    double delta = alpha.to_double() / (params.regularity_c * d);
    BohrSet bp = regularize(b.scale(delta));
    double deltap = 1.0 / (params.regularity_c * d);
    BohrSet bpp = regularize(bp.scale(deltap));

    TwoScaleResult ts = two_scale_select(a, b, bp, bpp);
    if (ts.kind == TwoScaleResult::CASE2) {
        const BohrSet& hit = ts.which == 0 ? bp : bpp;
        IncrementStep step;
        step.structure = hit;
        step.translate = ts.x;
        step.old_density = alpha;
        step.new_density = ts.density;
        step.rank_or_codim = hit.rank();
        step.radius = hit.radius();
        return step;
    }
    if (ts.kind == TwoScaleResult::NEITHER) {
        params.diagnostics = "two-scale selection found neither case";
        return std::nullopt;
    }

    // CASE1: A is simultaneously dense at both scales around ts.x.
    GroupSet shifted = translate(a, g.neg(ts.x));
    GroupSet ap = intersect(shifted, bp.members());
    GroupSet app = intersect(shifted, bpp.members());
    if (ap.empty() || app.empty()) {
        params.diagnostics = "empty rescaled intersection";
        return std::nullopt;
    }
    Rational alphap(ap.size(), bp.size());
    GroupSet apapp = sumset(ap, app);

    // Branch on |A'+A''| vs |A'| / 2 alpha', i.e. |A'+A''| vs |B'|/2.
    bool small_sumset = 2 * apapp.size() <= bp.size();
    std::vector<GroupSet> sources;
    if (small_sumset) {
        // Lemma roles: M := A', L := -A' - A''.
        sources.push_back(ap);
        sources.push_back(app);
        sources.push_back(negate(apapp));
    } else {
        // Lemma roles: M := A', L := B'_(1+3 delta') minus (A'+A'').
        BohrSet widened = bp.with_radius(bp.radius() * (1.0 + 3.0 * deltap));
        sources.push_back(ap);
        sources.push_back(set_difference(widened.members(), apapp));
        sources.push_back(dilate(-3, app));
    }
    // Candidate radii are fractions of the ambient radius: every candidate
    // stays a sub-Bohr set of B (more frequencies, smaller radius) while
    // remaining large enough to hold a translate of A at the target density.
    auto step = bohr_candidate_scan(a, b, sources, alpha, goal, b.radius());
    if (!step) {
        params.diagnostics = std::string(small_sumset ? "small" : "large") +
                             "-sumset branch: no candidate reached target";
    }
    return step;
}

namespace {

GroupSet restrict_to_subspace(const GroupSet& a, Element x, const Subspace& v,
                              GroupSpec& out_group) {
    const GroupSpec& g = a.group();
    std::int64_t q = g.factors[0];
    int dim = static_cast<int>(v.basis.size());
    if (dim == 0) {
        out_group = GroupSpec();
        return GroupSet();
    }
    out_group = GroupSpec::vector_space(q, dim);
    GroupSet out(out_group);
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(dim), 0);
    for (;;) {
        Element e = 0;
        for (int i = 0; i < dim; ++i)
            e = g.add(e, g.scalar_mul(coeff[static_cast<std::size_t>(i)],
                                      v.basis[static_cast<std::size_t>(i)]));
        if (a.contains(g.add(e, x))) out.insert(out_group.from_coords(coeff));
        int i = 0;
        while (i < dim && ++coeff[static_cast<std::size_t>(i)] == q) {
            coeff[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == dim) break;
    }
    return out;
}

}  // namespace

IncrementTrace iterate(const GroupSet& a, IncrementEngine engine, const IterateParams& params) {
    IncrementTrace trace;
    Equation eq = Equation::xyz3w();

    if (engine == IncrementEngine::FF) {
        GroupSet current = a;
        for (int j = 0; j < params.budget; ++j) {
            Rational alpha = current.density();
            if (alpha * params.target > Rational(1)) {
                trace.termination = Termination::DENSITY_CAP;
                return trace;
            }
            if (has_nontrivial(eq, current))
                throw std::logic_error("iterate: set stopped being solution-free");
            auto step = increment_step_ff(current, params.target, params.max_codim);
            if (!step) {
                trace.termination = Termination::STEP_FAILED;
                return trace;
            }
            const Subspace& v = std::get<Subspace>(step->structure);
            GroupSpec sub_group;
            // A_(j+1) = (A_j - x) cap V, re-indexed into F_q^(n - codim).
            GroupSet next = restrict_to_subspace(current, step->translate, v, sub_group);
            trace.steps.push_back(*step);
            if (v.basis.empty()) {
                trace.termination = Termination::STRUCTURE_EXHAUSTED;
                return trace;
            }
            if (Rational(next.size(), sub_group.order) != step->new_density)
                throw std::logic_error("iterate: density recount mismatch");
            current = next;
        }
        trace.termination = Termination::BUDGET_EXHAUSTED;
        return trace;
    }

    // Bohr engine over Z/N.
    GroupSet current = a;
    BohrSet b = bohr_build(a.group(), {0}, 2.0);  // whole group
    for (int j = 0; j < params.budget; ++j) {
        Rational alpha(intersect(current, b.members()).size(), b.size());
        if (alpha * params.target > Rational(1)) {
            trace.termination = Termination::DENSITY_CAP;
            return trace;
        }
        if (has_nontrivial(eq, current))
            throw std::logic_error("iterate: set stopped being solution-free");
        BohrStepParams bp;
        bp.regularity_c = params.regularity_c;
        bp.target = params.target;
        auto step = increment_step_bohr(current, b, bp);
        if (!step) {
            trace.termination = Termination::STEP_FAILED;
            trace.diagnostics = bp.diagnostics;
            return trace;
        }
        const BohrSet& nb = std::get<BohrSet>(step->structure);
        GroupSet next = intersect(translate(current, a.group().neg(step->translate)),
                                  nb.members());
        trace.steps.push_back(*step);
        if (nb.size() <= 1) {
            trace.termination = Termination::STRUCTURE_EXHAUSTED;
            return trace;
        }
        if (Rational(next.size(), nb.size()) != step->new_density)
            throw std::logic_error("iterate: density recount mismatch");
        current = next;
        b = nb;
    }
    trace.termination = Termination::BUDGET_EXHAUSTED;
    return trace;
}

}  // namespace addcomb
