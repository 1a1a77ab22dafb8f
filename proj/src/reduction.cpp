#include "discut/reduction.hpp"

#include <algorithm>

namespace discut {
namespace {

__extension__ using Signed = __int128;

void check_solver(const ClassicSolver& solver, const DiscountSpec& spec, Objective objective, Mode mode) {
    if (spec.objective != objective || spec.mode != mode)
        throw InvalidInput("the threshold reduction handles min-*-cheap and max-*-exp only");
    if (solver.objective() != objective) throw CapabilityError("inner solver optimizes the wrong objective");
    if (!solver.supports(spec.is_st()))
        throw CapabilityError(std::string(solver.name()) + " does not support this scope");
    if (solver.exactness() != Exactness::Exact)
        throw CapabilityError(std::string(solver.name()) + " is not exact; the reduction needs an exact solver");
}

// k beyond the edge count behaves like k = m
Cost discount_of(std::uint64_t k, Cost w, std::size_t m) {
    return checked_mul(std::min<std::uint64_t>(k, m), w);
}

}  // namespace

std::vector<Cost> candidate_thresholds(const WeightedMultigraph& g) {
    auto costs = g.costs();
    std::sort(costs.begin(), costs.end());
    costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
    return costs;
}

std::vector<Cost> floored_costs(const WeightedMultigraph& g, Cost w) {
    auto c = g.costs();
    for (auto& x : c) x = std::max(x, w);
    return c;
}

std::vector<Cost> capped_costs(const WeightedMultigraph& g, Cost w) {
    auto c = g.costs();
    for (auto& x : c) x = std::min(x, w);
    return c;
}

ReductionResult solve_min_free_cheap(const ClassicSolver& solver, const WeightedMultigraph& g,
                                     const DiscountSpec& spec) {
    check_solver(solver, spec, Objective::Min, Mode::Cheap);
    spec.validate(g);
    ReductionResult out;
    auto thresholds = candidate_thresholds(g);
    if (thresholds.empty()) thresholds.push_back(0);

    bool have = false;
    Signed best = 0;
    SideMask best_side;
    for (auto w : thresholds) {
        const auto cut = solver.solve(g.with_costs(floored_costs(g, w)), spec.terminals);
        ++out.solver_calls;
        const Signed value = static_cast<Signed>(cut.raw_cost) -
                             static_cast<Signed>(discount_of(spec.k, w, g.edge_count()));
        if (!have || value < best) {
            have = true;
            best = value;
            best_side = cut.mask(g.vertex_count());
            out.threshold = w;
        }
    }
    out.value = best > 0 ? static_cast<Cost>(best) : 0;
    out.witness = cut_from_side(g, best_side, spec);
    if (out.witness.discounted_cost != out.value)
        throw std::logic_error("threshold witness does not attain the reduction value");
    return out;
}

ReductionResult solve_max_free_exp(const ClassicSolver& solver, const WeightedMultigraph& g,
                                   const DiscountSpec& spec) {
    check_solver(solver, spec, Objective::Max, Mode::Expensive);
    spec.validate(g);
    ReductionResult out;
    auto thresholds = candidate_thresholds(g);
    if (thresholds.empty()) thresholds.push_back(0);

    bool have = false;
    Signed best = 0;
    SideMask best_side;
    for (auto w : thresholds) {
        const auto cut = solver.solve(g.with_costs(capped_costs(g, w)), spec.terminals);
        ++out.solver_calls;
        const Signed value = static_cast<Signed>(cut.raw_cost) -
                                  static_cast<Signed>(discount_of(spec.k, w, g.edge_count()));
        if (!have || value > best) {
            have = true;
            best = value;
            best_side = cut.mask(g.vertex_count());
            out.threshold = w;
        }
    }
    out.value = best > 0 ? static_cast<Cost>(best) : 0;
    out.witness = cut_from_side(g, best_side, spec);
    if (out.witness.discounted_cost != out.value)
        throw std::logic_error("threshold witness does not attain the reduction value");
    return out;
}

}  // namespace discut
