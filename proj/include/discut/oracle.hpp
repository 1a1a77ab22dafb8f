#pragma once

#include "discut/graph.hpp"

#include <cstdint>
#include <vector>

namespace discut {

/// Hard limit for every exhaustive enumeration in the library.
inline constexpr std::size_t kOracleMaxVertices = 26;

/// Set of achievable cut costs. Members reported by an exact computation are
/// always real cut costs; a single-prime run may miss members (`one_sided`).
struct SupportSet {
    std::vector<Cost> costs;              // sorted, distinct
    std::vector<std::uint64_t> primes;    // primes used, empty for enumeration
    bool one_sided = false;

    bool contains(Cost c) const;
    Cost max() const { return costs.empty() ? 0 : costs.back(); }
    bool operator==(const SupportSet& other) const { return costs == other.costs; }
};

struct OracleResult {
    Cost optimum = 0;
    Cut witness;
    std::uint64_t enumerated = 0;  // bipartitions inspected
};

/// Exhaustive optimum of the selected variant over all anchored bipartitions,
/// enumerated in Gray-code order. Ties go to the numerically smallest side-A
/// bitmask.
OracleResult oracle_opt(const WeightedMultigraph& g, const DiscountSpec& spec);

/// {c(E(A,B))} over all bipartitions, the trivial one included (so 0 is
/// always a member).
SupportSet oracle_support(const WeightedMultigraph& g);

}  // namespace discut
