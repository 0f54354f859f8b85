// addcomb: one binary, one subcommand per module. All output goes through
// Report so json/csv bytes are deterministic for a fixed invocation.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "addcomb/bohr.hpp"
#include "addcomb/constructions.hpp"
#include "addcomb/equations.hpp"
#include "addcomb/increment.hpp"
#include "addcomb/io.hpp"
#include "addcomb/periodicity.hpp"
#include "addcomb/report.hpp"
#include "addcomb/spectral.hpp"
#include "addcomb/structure.hpp"

using namespace addcomb;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    int threads = 0;  // 0 -> ADDCOMB_THREADS or 1
    std::string format = "json";
    std::string out;
};

int effective_threads(const GlobalOpts& g) {
    if (g.threads > 0) return g.threads;
    if (const char* env = std::getenv("ADDCOMB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit(const GlobalOpts& g, const Report& r) {
    std::string payload = g.format == "csv" ? r.to_csv() : r.to_json() + "\n";
    if (g.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + g.out);
    f << payload;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list: " + s);
        out.push_back(std::stoll(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

// Elements as semicolon-separated coordinate tuples, e.g. "1,0;0,2".
std::vector<Element> parse_elements(const GroupSpec& g, const std::string& s) {
    std::vector<Element> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(g.from_coords(parse_int_list(tok)));
    return out;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s), 1);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(std::stoll(digits), den);
}

Report set_report(const GroupSet& s) {
    Report r = Report::object();
    r.set("group", Report::str(s.group().str()));
    r.set("size", Report::integer(s.size()));
    r.set("density", Report::rational(s.density()));
    return r;
}

void maybe_write_set(const std::string& path, const GroupSet& s) {
    if (!path.empty()) write_set_file(path, s);
}

GroupSet to_set(const ComplexFunction& f, const std::string& what) {
    GroupSet s(f.group);
    for (Element x = 0; x < f.group.order; ++x) {
        auto v = f.values[static_cast<std::size_t>(x)];
        if (v == std::complex<double>(0, 0)) continue;
        if (v != std::complex<double>(1, 0))
            throw std::invalid_argument(what + ": expected a 0/1 indicator function");
        s.insert(x);
    }
    return s;
}

GroupSet read_indicator(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file: " + path);
    // Accept either the set format or a 0/1 function file.
    std::string probe;
    bool function_style = false;
    while (std::getline(in, probe)) {
        if (probe.find(':') != std::string::npos && probe.rfind("group:", 0) != 0) {
            function_style = true;
            break;
        }
    }
    in.clear();
    in.seekg(0);
    if (function_style) return to_set(read_function(in), path);
    return read_set(in);
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"additive combinatorics toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand
    GlobalOpts g;
    app.add_option("--seed", g.seed, "random seed for seeded searches");
    app.add_option("--threads", g.threads, "worker threads (ADDCOMB_THREADS fallback)");
    app.add_option("--format", g.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "write the report here instead of stdout");

    // count
    auto* count_cmd = app.add_subcommand("count", "count equation solutions in a set");
    std::string count_eq = "1,1,1,-3", count_set;
    count_cmd->add_option("--eq", count_eq, "equation coefficients");
    count_cmd->add_option("--set", count_set, "set file")->required();

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "solution-free constructions");
    construct_cmd->require_subcommand(1);
    auto* behrend_cmd = construct_cmd->add_subcommand("behrend", "Behrend-style set in [N]");
    int beh_d = 2, beh_n = 1;
    std::string beh_set_out;
    behrend_cmd->add_option("--d", beh_d, "digits per coordinate")->required();
    behrend_cmd->add_option("--n", beh_n, "dimension")->required();
    behrend_cmd->add_option("--set-out", beh_set_out, "write the witness set here");
    auto* product_cmd = construct_cmd->add_subcommand("product", "Cartesian power in F_q^(mk)");
    std::string prod_set, prod_set_out;
    int prod_k = 2;
    product_cmd->add_option("--set", prod_set, "base set file")->required();
    product_cmd->add_option("--k", prod_k, "power");
    product_cmd->add_option("--set-out", prod_set_out, "write the witness set here");

    // search
    auto* search_cmd = app.add_subcommand("search", "extremal solution-free search");
    std::string search_eq = "1,1,1,-3", search_mode = "exact", search_set, search_set_out;
    std::int64_t search_n = 0, search_budget = std::int64_t{1} << 30;
    int search_restarts = 8;
    search_cmd->add_option("--eq", search_eq, "equation coefficients");
    search_cmd->add_option("--N", search_n, "interval bound (via the prime embedding)");
    search_cmd->add_option("--set", search_set, "universe set file (alternative to --N)");
    search_cmd->add_option("--mode", search_mode, "exact|greedy")
        ->check(CLI::IsMember({"exact", "greedy"}));
    search_cmd->add_option("--budget", search_budget, "node budget for exact mode");
    search_cmd->add_option("--restarts", search_restarts, "greedy restarts");
    search_cmd->add_option("--set-out", search_set_out, "write the witness set here");

    // bohr
    auto* bohr_cmd = app.add_subcommand("bohr", "build a Bohr set");
    std::string bohr_group, bohr_freqs, bohr_set_out;
    double bohr_rho = 1.0;
    bool bohr_want_ap = false;
    bohr_cmd->add_option("--group", bohr_group, "cyclic factors, e.g. 101 or 5,5")->required();
    bohr_cmd->add_option("--freqs", bohr_freqs, "frequencies, e.g. 1;5 or 1,0;0,1")->required();
    bohr_cmd->add_option("--rho", bohr_rho, "radius");
    bohr_cmd->add_flag("--ap", bohr_want_ap, "also report a verified progression inside B");
    bohr_cmd->add_option("--set-out", bohr_set_out, "write the member set here");

    // periods
    auto* periods_cmd = app.add_subcommand("periods", "almost-period scans");
    std::string per_mode = "lp", per_a, per_l, per_m, per_s = "all";
    double per_p = 2.0, per_eps = 0.25;
    periods_cmd->add_option("--mode", per_mode, "lp|linf3")
        ->check(CLI::IsMember({"lp", "linf3"}));
    periods_cmd->add_option("--A", per_a, "set file")->required();
    periods_cmd->add_option("--L", per_l, "set file")->required();
    periods_cmd->add_option("--M", per_m, "set file (linf3 mode)");
    periods_cmd->add_option("--S", per_s, "candidate shifts: 'all' or a set file");
    periods_cmd->add_option("--p", per_p, "exponent (lp mode; inf allowed)");
    periods_cmd->add_option("--eps", per_eps, "tolerance");

    // increment
    auto* increment_cmd = app.add_subcommand("increment", "one density-increment step");
    std::string inc_engine = "ff", inc_set, inc_target = "5/4";
    int inc_max_codim = 4;
    double inc_c = 100.0;
    increment_cmd->add_option("--engine", inc_engine, "ff|bohr")
        ->check(CLI::IsMember({"ff", "bohr"}));
    increment_cmd->add_option("--set", inc_set, "set file")->required();
    increment_cmd->add_option("--target", inc_target, "density growth factor (rational)");
    increment_cmd->add_option("--max-codim", inc_max_codim, "codimension cap (ff)");
    increment_cmd->add_option("--C", inc_c, "regularity constant (bohr)");

    // iterate
    auto* iterate_cmd = app.add_subcommand("iterate", "run the increment iteration");
    std::string it_engine = "ff", it_set, it_target = "3/2";
    int it_budget = 20, it_max_codim = 4;
    double it_c = 100.0;
    iterate_cmd->add_option("--engine", it_engine, "ff|bohr")
        ->check(CLI::IsMember({"ff", "bohr"}));
    iterate_cmd->add_option("--set", it_set, "set file")->required();
    iterate_cmd->add_option("--target", it_target, "density growth factor (rational)");
    iterate_cmd->add_option("--budget", it_budget, "maximum steps");
    iterate_cmd->add_option("--max-codim", it_max_codim, "codimension cap (ff)");
    iterate_cmd->add_option("--C", it_c, "regularity constant (bohr)");

    // structure
    auto* structure_cmd = app.add_subcommand("structure", "structures in A+B+C");
    structure_cmd->require_subcommand(1);
    std::string st_a, st_b, st_c, st_v;
    double st_eta = 0.1;
    auto* ap_cmd = structure_cmd->add_subcommand("ap", "longest AP in A+B+C over Z/N");
    ap_cmd->add_option("--A", st_a)->required();
    ap_cmd->add_option("--B", st_b)->required();
    ap_cmd->add_option("--C", st_c)->required();
    auto* subspace_cmd =
        structure_cmd->add_subcommand("subspace", "largest affine subspace in A+B+C");
    subspace_cmd->add_option("--A", st_a)->required();
    subspace_cmd->add_option("--B", st_b)->required();
    subspace_cmd->add_option("--C", st_c)->required();
    auto* xv_cmd = structure_cmd->add_subcommand("xv", "the X+V witness of A+B+C structure");
    xv_cmd->add_option("--A", st_a)->required();
    xv_cmd->add_option("--B", st_b)->required();
    xv_cmd->add_option("--C", st_c)->required();
    xv_cmd->add_option("--V", st_v)->required();
    xv_cmd->add_option("--eta", st_eta, "density defect threshold");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "delta-large spectrum of a set");
    std::string spec_set;
    double spec_deltav = 0.5;
    spectrum_cmd->add_option("--set", spec_set, "set file")->required();
    spectrum_cmd->add_option("--delta", spec_deltav, "threshold in (0,1]");

    // convolve
    auto* convolve_cmd = app.add_subcommand("convolve", "exact convolution of two functions");
    std::string conv_f, conv_g, conv_out;
    convolve_cmd->add_option("--f", conv_f, "function or set file")->required();
    convolve_cmd->add_option("--g", conv_g, "function or set file")->required();
    convolve_cmd->add_option("--values-out", conv_out, "write the resulting function here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints usage, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors are exit code 2
    }
    (void)effective_threads(g);  // accepted and validated; algorithms are sequential

    if (*count_cmd) {
        Equation eq(parse_int_list(count_eq));
        GroupSet a = read_set_file(count_set);
        Report r = Report::object();
        r.set("total", Report::integer(count_solutions(eq, a)));
        r.set("trivial", Report::integer(count_trivial(eq, a)));
        r.set("nontrivial", Report::integer(count_solutions(eq, a) - count_trivial(eq, a)));
        emit(g, r);
        return 0;
    }

    if (*behrend_cmd) {
        auto res = behrend_set(beh_d, beh_n);
        Report r = set_report(res.set);
        r.set("base", Report::integer(res.base));
        r.set("sphere_level", Report::integer(res.sphere_level));
        r.set("modulus", Report::integer(res.embedding.modulus));
        r.set("verified", Report::boolean(true));
        maybe_write_set(beh_set_out, res.set);
        emit(g, r);
        return 0;
    }

    if (*product_cmd) {
        GroupSet s = read_set_file(prod_set);
        GroupSet out = product_construction(s, prod_k, g.seed);
        Report r = set_report(out);
        r.set("k", Report::integer(prod_k));
        r.set("verified", Report::boolean(true));
        maybe_write_set(prod_set_out, out);
        emit(g, r);
        return 0;
    }

    if (*search_cmd) {
        Equation eq(parse_int_list(search_eq));
        SearchResult res;
        if (!search_set.empty()) {
            GroupSet universe = read_set_file(search_set);
            res = search_mode == "exact"
                      ? search_extremal_exact(eq, universe, search_budget)
                      : search_extremal_greedy(eq, universe, g.seed, search_restarts);
        } else {
            if (search_n < 1) throw std::invalid_argument("search: provide --N or --set");
            if (search_mode == "exact") {
                res = search_extremal_exact_interval(eq, search_n, search_budget);
            } else {
                auto emb = embed_interval(search_n);
                res = search_extremal_greedy(eq, emb.image(), g.seed, search_restarts);
            }
        }
        Report r = Report::object();
        r.set("size", Report::integer(res.size));
        r.set("density", Report::rational(res.witness.density()));
        r.set("status", Report::str(res.status == SearchStatus::EXACT ? "EXACT" : "INCOMPLETE"));
        r.set("nodes", Report::integer(res.nodes));
        r.set("verified", Report::boolean(true));
        maybe_write_set(search_set_out, res.witness);
        emit(g, r);
        return res.status == SearchStatus::EXACT ? 0 : 4;
    }

    if (*bohr_cmd) {
        GroupSpec grp(parse_int_list(bohr_group));
        auto freqs = parse_elements(grp, bohr_freqs);
        BohrSet b = bohr_build(grp, freqs, bohr_rho);
        Report r = Report::object();
        Report fr = Report::array();
        for (Element f : freqs) {
            auto c = grp.coords(f);
            std::string txt;
            for (std::size_t i = 0; i < c.size(); ++i)
                txt += (i ? "," : "") + std::to_string(c[i]);
            fr.push(Report::str(txt));
        }
        r.set("frequencies", std::move(fr));
        r.set("radius", Report::real(b.radius()));
        r.set("rank", Report::integer(b.rank()));
        r.set("size", Report::integer(b.size()));
        r.set("regular", Report::boolean(is_regular(b)));
        if (bohr_want_ap) {
            auto ap = ap_in_bohr(b);
            if (!ap) throw std::logic_error("ap_in_bohr verification failed");
            Report pr = Report::object();
            pr.set("start", Report::integer(ap->start));
            pr.set("step", Report::integer(ap->step));
            pr.set("length", Report::integer(ap->length));
            r.set("ap", std::move(pr));
        }
        maybe_write_set(bohr_set_out, b.members());
        emit(g, r);
        return 0;
    }

    if (*periods_cmd) {
        GroupSet a = read_indicator(per_a);
        GroupSet l = read_indicator(per_l);
        GroupSet s = per_s == "all" ? GroupSet::full(a.group()) : read_indicator(per_s);
        GroupSet t(a.group());
        DenseFunction conv =
            convolve(DenseFunction::indicator(a), DenseFunction::indicator(l));
        if (per_mode == "lp") {
            t = lp_almost_periods(a, l, per_p, per_eps, s);
        } else {
            if (per_m.empty()) throw std::invalid_argument("linf3 mode needs --M");
            GroupSet m = read_indicator(per_m);
            t = linfty_three_fold_periods(a, m, l, per_eps, s);
            conv = convolve(conv, DenseFunction::indicator(m));
        }
        double max_norm = 0;
        double p_used = per_mode == "lp" ? per_p : std::numeric_limits<double>::infinity();
        for (Element x : t.elements())
            max_norm = std::max(max_norm,
                                shifted_difference_norm(conv.values, a.group(), x, p_used));
        Report r = Report::object();
        r.set("K", Report::rational(Rational(sumset(a, s).size(), a.size())));
        r.set("T_size", Report::integer(t.size()));
        r.set("S_size", Report::integer(s.size()));
        r.set("density", Report::rational(Rational(t.size(), s.size())));
        r.set("max_norm_over_T", Report::real(max_norm));
        emit(g, r);
        return 0;
    }

    auto step_report = [](const IncrementStep& step) {
        Report sr = Report::object();
        if (std::holds_alternative<Subspace>(step.structure)) {
            sr.set("structure", Report::str("subspace"));
            sr.set("codim", Report::integer(step.rank_or_codim));
        } else {
            sr.set("structure", Report::str("bohr"));
            sr.set("rank", Report::integer(step.rank_or_codim));
            sr.set("radius", Report::real(step.radius));
        }
        sr.set("translate", Report::integer(step.translate));
        sr.set("old_density", Report::rational(step.old_density));
        sr.set("new_density", Report::rational(step.new_density));
        return sr;
    };

    if (*increment_cmd) {
        GroupSet a = read_set_file(inc_set);
        std::optional<IncrementStep> step;
        if (inc_engine == "ff") {
            step = increment_step_ff(a, parse_rational(inc_target), inc_max_codim);
        } else {
            BohrStepParams params;
            params.regularity_c = inc_c;
            params.target = parse_rational(inc_target);
            BohrSet b = bohr_build(a.group(), {0}, 2.0);
            step = increment_step_bohr(a, b, params);
            if (!step) {
                Report r = Report::object();
                r.set("found", Report::boolean(false));
                r.set("diagnostics", Report::str(params.diagnostics));
                emit(g, r);
                return 4;
            }
        }
        Report r = Report::object();
        r.set("found", Report::boolean(step.has_value()));
        if (step) r.set("step", step_report(*step));
        emit(g, r);
        return step ? 0 : 4;
    }

    if (*iterate_cmd) {
        GroupSet a = read_set_file(it_set);
        IterateParams params;
        params.target = parse_rational(it_target);
        params.budget = it_budget;
        params.max_codim = it_max_codim;
        params.regularity_c = it_c;
        auto trace =
            iterate(a, it_engine == "ff" ? IncrementEngine::FF : IncrementEngine::BOHR, params);
        Report steps = Report::array();
        for (const auto& step : trace.steps) steps.push(step_report(step));
        Report r = Report::object();
        r.set("steps", std::move(steps));
        r.set("termination", Report::str(termination_name(trace.termination)));
        if (!trace.diagnostics.empty()) r.set("diagnostics", Report::str(trace.diagnostics));
        emit(g, r);
        return 0;
    }

    if (*ap_cmd || *subspace_cmd || *xv_cmd) {
        GroupSet a = read_set_file(st_a);
        GroupSet b = read_set_file(st_b);
        GroupSet c = read_set_file(st_c);
        if (*ap_cmd) {
            GroupSet s = three_fold_sumset(a, b, c);
            auto ap = longest_ap(s);
            Report r = Report::object();
            r.set("sumset_size", Report::integer(s.size()));
            r.set("start", Report::integer(ap.start));
            r.set("step", Report::integer(ap.step));
            r.set("length", Report::integer(ap.length));
            emit(g, r);
            return 0;
        }
        if (*subspace_cmd) {
            GroupSet s = three_fold_sumset(a, b, c);
            auto res = largest_affine_subspace(s);
            Report r = Report::object();
            r.set("sumset_size", Report::integer(s.size()));
            r.set("dimension", Report::integer(res.witness.dimension));
            Report basis = Report::array();
            for (Element v : res.witness.basis) {
                auto cs = s.group().coords(v);
                std::string txt;
                for (std::size_t i = 0; i < cs.size(); ++i)
                    txt += (i ? "," : "") + std::to_string(cs[i]);
                basis.push(Report::str(txt));
            }
            r.set("basis", std::move(basis));
            r.set("exact", Report::boolean(res.exact));
            emit(g, r);
            return res.exact ? 0 : 4;
        }
        GroupSet v = read_set_file(st_v);
        auto w = xv_witness(a, b, c, v, st_eta);
        Report r = Report::object();
        r.set("shift", Report::integer(w.shift_t));
        r.set("X_size", Report::integer(w.x.size()));
        r.set("B_size", Report::integer(w.b_size));
        r.set("large_X", Report::boolean(w.large_x));
        r.set("certified", Report::boolean(w.certified));
        emit(g, r);
        return 0;
    }

    if (*spectrum_cmd) {
        GroupSet x = read_set_file(spec_set);
        auto chars = spec_delta(x, spec_deltav);
        Report arr = Report::array();
        for (Element gam : chars) {
            auto cs = x.group().coords(gam);
            std::string txt;
            for (std::size_t i = 0; i < cs.size(); ++i)
                txt += (i ? "," : "") + std::to_string(cs[i]);
            arr.push(Report::str(txt));
        }
        Report r = Report::object();
        r.set("delta", Report::real(spec_deltav));
        r.set("count", Report::integer(static_cast<std::int64_t>(chars.size())));
        r.set("characters", std::move(arr));
        emit(g, r);
        return 0;
    }

    if (*convolve_cmd) {
        GroupSet f = read_indicator(conv_f);
        GroupSet h = read_indicator(conv_g);
        DenseFunction out = convolve(DenseFunction::indicator(f), DenseFunction::indicator(h));
        if (!conv_out.empty()) {
            std::ofstream file(conv_out);
            if (!file) throw std::invalid_argument("cannot open: " + conv_out);
            write_function(file, out);
        }
        Report r = Report::object();
        r.set("group", Report::str(out.group.str()));
        r.set("sum", Report::integer(out.sum()));
        r.set("max", Report::integer(
                         *std::max_element(out.values.begin(), out.values.end())));
        r.set("support", Report::integer(static_cast<std::int64_t>(
                             std::count_if(out.values.begin(), out.values.end(),
                                           [](std::int64_t v) { return v != 0; }))));
        emit(g, r);
        return 0;
    }

    return 2;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
