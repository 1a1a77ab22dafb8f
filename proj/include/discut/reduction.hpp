#pragma once

#include "discut/classic.hpp"
#include "discut/graph.hpp"

#include <cstdint>
#include <vector>

namespace discut {

/// Distinct edge costs in increasing order.
std::vector<Cost> candidate_thresholds(const WeightedMultigraph& g);

/// c_w = max(c, w) pointwise.
std::vector<Cost> floored_costs(const WeightedMultigraph& g, Cost w);
/// c^w = min(c, w) pointwise.
std::vector<Cost> capped_costs(const WeightedMultigraph& g, Cost w);

struct ReductionResult {
    Cost value = 0;
    Cut witness;                 // discounted under the requested spec
    Cost threshold = 0;          // w at which the witness was produced
    std::size_t solver_calls = 0;
};

/// Min cut with k free cheapest edges: max{0, min_w Opt_min(c_w) - k*w} over
/// the distinct costs w, using an exact Min solver for the scope.
ReductionResult solve_min_free_cheap(const ClassicSolver& solver, const WeightedMultigraph& g,
                                     const DiscountSpec& spec);

/// Max cut with k free most expensive edges: max{0, max_w Opt_max(c^w) - k*w}.
/// Refuses Max solvers that do not declare themselves exact.
ReductionResult solve_max_free_exp(const ClassicSolver& solver, const WeightedMultigraph& g,
                                   const DiscountSpec& spec);

}  // namespace discut
