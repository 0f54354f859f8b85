#pragma once

#include <cstdint>
#include <vector>

#include "addcomb/equations.hpp"
#include "addcomb/group.hpp"

namespace addcomb {

// Digit vectors in {0..d-1}^n on the best sphere sum x_i^2 = k, encoded in
// base m = 3d-2 so that x+y+z never carries, then embedded into Z/N' via
// embed_interval(m^n). The result is verified solution-free for x+y+z=3w.
struct BehrendResult {
    GroupSet set;
    IntervalEmbedding embedding;
    std::int64_t base = 0;          // m = 3d - 2
    std::int64_t sphere_level = 0;  // chosen k
    std::vector<std::int64_t> integers;
};
BehrendResult behrend_set(int d, int n);

// Cartesian power S^k inside F_q^(mk); requires S solution-free for
// x+y+z=3w. The output is re-verified (exhaustively when feasible, else by
// seeded random quadruple sampling).
GroupSet product_construction(const GroupSet& s, int k,
                              std::uint64_t sample_seed = 1,
                              std::int64_t sample_count = 1'000'000);

enum class SearchStatus { EXACT, INCOMPLETE };

struct SearchResult {
    SearchStatus status = SearchStatus::EXACT;
    std::int64_t size = 0;
    GroupSet witness;
    std::int64_t nodes = 0;
};

// Branch and bound over elements in increasing order; exact maximum size of
// a solution-free subset of the given universe, with node budget.
SearchResult search_extremal_exact(const Equation& eq, const GroupSet& universe,
                                   std::int64_t node_budget = std::int64_t{1} << 30);

// Convenience overload for [N] through embed_interval.
SearchResult search_extremal_exact_interval(const Equation& eq, std::int64_t n,
                                            std::int64_t node_budget = std::int64_t{1} << 30);

// Randomized greedy insertion with restarts; deterministic given seed, and
// the output is always verified solution-free.
SearchResult search_extremal_greedy(const Equation& eq, const GroupSet& universe,
                                    std::uint64_t seed, int restarts);

}  // namespace addcomb
