#include "addcomb/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace addcomb {

namespace {

// Does adding x to the solution-free set S create a nontrivial solution?
// Only tuples using x need checking; positions holding x are forced first.
bool creates_nontrivial(const Equation& eq, const GroupSpec& g,
                        const std::vector<Element>& s, Element x) {
    int k = eq.arity();
    std::vector<Element> tuple(static_cast<std::size_t>(k));
    std::function<bool(int, Element, bool)> rec = [&](int depth, Element partial,
                                                      bool used_x) -> bool {
        if (depth == k) {
            if (!used_x || partial != 0) return false;
            for (int i = 0; i < k; ++i) {
                bool dup = false;
                for (int j = 0; j < i; ++j)
                    if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(i)])
                        dup = true;
                if (dup) continue;
                std::int64_t class_sum = 0;
                for (int j = 0; j < k; ++j)
                    if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(i)])
                        class_sum += eq.coefficients[static_cast<std::size_t>(j)];
                if (class_sum != 0) return true;  // nontrivial solution found
            }
            return false;
        }
        std::int64_t c = eq.coefficients[static_cast<std::size_t>(depth)];
        tuple[static_cast<std::size_t>(depth)] = x;
        if (rec(depth + 1, g.add(partial, g.scalar_mul(c, x)), true)) return true;
        for (Element y : s) {
            tuple[static_cast<std::size_t>(depth)] = y;
            if (rec(depth + 1, g.add(partial, g.scalar_mul(c, y)), used_x)) return true;
        }
        return false;
    };
    return rec(0, 0, false);
}

}  // namespace

BehrendResult behrend_set(int d, int n) {
    if (d < 2 || n < 1) throw std::invalid_argument("behrend_set: need d >= 2, n >= 1");
    std::int64_t m = 3 * static_cast<std::int64_t>(d) - 2;
    std::int64_t mn = 1;
    for (int i = 0; i < n; ++i) {
        mn *= m;
        if (mn > 10'000'000) throw std::invalid_argument("behrend_set: m^n too large");
    }

    // Count digit vectors on each sphere sum x_i^2 = level.
    std::int64_t max_level = static_cast<std::int64_t>(n) * (d - 1) * (d - 1);
    std::vector<std::vector<std::int64_t>> by_level(static_cast<std::size_t>(max_level + 1));
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
    std::function<void(int, std::int64_t, std::int64_t)> rec =
        [&](int i, std::int64_t norm, std::int64_t value) {
            if (i == n) {
                if (norm >= 1) by_level[static_cast<std::size_t>(norm)].push_back(value);
                return;
            }
            std::int64_t place = 1;
            for (int j = 0; j < i; ++j) place *= m;
            for (std::int64_t dig = 0; dig < d; ++dig)
                rec(i + 1, norm + dig * dig, value + dig * place);
        };
    rec(0, 0, 0);

    std::size_t best_level = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(max_level); ++k)
        if (by_level[k].size() > by_level[best_level].size()) best_level = k;

    BehrendResult out;
    out.base = m;
    out.sphere_level = static_cast<std::int64_t>(best_level);
    out.integers = by_level[best_level];
    std::sort(out.integers.begin(), out.integers.end());
    out.embedding = embed_interval(mn);
    out.set = out.embedding.image_of(out.integers);

    if (has_nontrivial(Equation::xyz3w(), out.set))
        throw std::logic_error("behrend_set: construction failed freeness check");
    return out;
}

GroupSet product_construction(const GroupSet& s, int k, std::uint64_t sample_seed,
                              std::int64_t sample_count) {
    if (k < 1) throw std::invalid_argument("product_construction: k >= 1 required");
    const GroupSpec& g = s.group();
    std::int64_t q = g.factors[0];
    for (auto f : g.factors)
        if (f != q) throw std::invalid_argument("product_construction: not a vector space");
    if (q == 3) throw std::invalid_argument("product_construction: q = 3 degenerates x+y+z=3w");
    Equation eq = Equation::xyz3w();
    if (has_nontrivial(eq, s))
        throw std::invalid_argument("product_construction: input not solution-free");

    int mk = static_cast<int>(g.factors.size()) * k;
    GroupSpec big = GroupSpec::vector_space(q, mk);
    GroupSet out(big);
    auto elems = s.elements();
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    // Product index: blocks of the base group stacked little-endian.
    for (;;) {
        Element idx = 0;
        Element mult = 1;
        for (int j = 0; j < k; ++j) {
            idx += elems[pick[static_cast<std::size_t>(j)]] * mult;
            mult *= g.order;
        }
        out.insert(idx);
        int j = 0;
        while (j < k && ++pick[static_cast<std::size_t>(j)] == elems.size()) {
            pick[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        if (j == k) break;
    }

    // Freeness transfers coordinatewise; re-verify regardless.
    double quads = std::pow(static_cast<double>(out.size()), 4);
    if (quads <= 5e8 && big.order <= 2'000'000) {
        if (has_nontrivial(eq, out))
            throw std::logic_error("product_construction: output failed freeness check");
    } else {
        std::mt19937_64 rng(sample_seed);
        auto big_elems = out.elements();
        std::uniform_int_distribution<std::size_t> pickd(0, big_elems.size() - 1);
        std::int64_t inv3 = 0;
        for (std::int64_t t = 1; t < q; ++t)
            if (3 * t % q == 1) inv3 = t;
        for (std::int64_t it = 0; it < sample_count; ++it) {
            Element x = big_elems[pickd(rng)];
            Element y = big_elems[pickd(rng)];
            Element z = big_elems[pickd(rng)];
            Element w = big.scalar_mul(inv3, big.add(big.add(x, y), z));
            if (out.contains(w) && !(x == y && y == z && z == w))
                throw std::logic_error("product_construction: sampled nontrivial solution");
        }
    }
    return out;
}

SearchResult search_extremal_exact(const Equation& eq, const GroupSet& universe,
                                   std::int64_t node_budget) {
    const GroupSpec& g = universe.group();
    auto elems = universe.elements();
    SearchResult res;
    res.witness = GroupSet(g);
    std::vector<Element> current, best;
    std::int64_t nodes = 0;
    bool truncated = false;

    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
        if (truncated) return;
        if (++nodes > node_budget) {
            truncated = true;
            return;
        }
        if (current.size() > best.size()) best = current;
        if (i == elems.size()) return;
        // Remaining elements cannot beat the incumbent.
        if (current.size() + (elems.size() - i) <= best.size()) return;
        if (!creates_nontrivial(eq, g, current, elems[i])) {
            current.push_back(elems[i]);
            dfs(i + 1);
            current.pop_back();
        }
        dfs(i + 1);
    };
    dfs(0);

    res.status = truncated ? SearchStatus::INCOMPLETE : SearchStatus::EXACT;
    res.size = static_cast<std::int64_t>(best.size());
    res.witness = GroupSet(g, best);
    res.nodes = nodes;
    return res;
}

SearchResult search_extremal_exact_interval(const Equation& eq, std::int64_t n,
                                            std::int64_t node_budget) {
    auto emb = embed_interval(n);
    return search_extremal_exact(eq, emb.image(), node_budget);
}

SearchResult search_extremal_greedy(const Equation& eq, const GroupSet& universe,
                                    std::uint64_t seed, int restarts) {
    const GroupSpec& g = universe.group();
    std::mt19937_64 rng(seed);
    auto base = universe.elements();
    std::vector<Element> best;
    for (int r = 0; r < std::max(restarts, 1); ++r) {
        auto order = base;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<Element> current;
        // Tabu seeding: keep a random portion of the incumbent.
        if (!best.empty()) {
            for (Element x : best)
                if (rng() % 4 != 0) current.push_back(x);
        }
        for (Element x : order) {
            if (std::find(current.begin(), current.end(), x) != current.end()) continue;
            if (!creates_nontrivial(eq, g, current, x)) current.push_back(x);
        }
        if (current.size() > best.size()) best = current;
    }
    SearchResult res;
    res.status = SearchStatus::EXACT;
    res.size = static_cast<std::int64_t>(best.size());
    res.witness = GroupSet(g, best);
    if (has_nontrivial(eq, res.witness))
        throw std::logic_error("search_extremal_greedy: output failed freeness check");
    return res;
}

}  // namespace addcomb
