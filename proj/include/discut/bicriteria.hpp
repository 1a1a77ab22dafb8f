#pragma once

#include "discut/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace discut {

/// Largest vertex count the exact bicriteria path accepts.
inline constexpr std::size_t kBicriteriaExactLimit = 20;

enum class BicriteriaPath { Auto, Exact, Randomized };

struct BicriteriaOptions {
    BicriteriaPath path = BicriteriaPath::Auto;
    std::uint64_t seed = 0;
    /// Contraction runs per lambda; ceil(n^2 ln n) when unset.
    std::optional<std::uint64_t> repetitions;
};

/// Cut feasibility under two weight functions: w1(E(A,B)) <= b1 and
/// w2(E(A,B)) <= b2.
struct BicriteriaInstance {
    WeightedMultigraph graph;
    std::vector<Cost> w1;
    std::vector<Cost> w2;
    Cost b1 = 0;
    Cost b2 = 0;
};

struct BicriteriaCandidate {
    SideMask side;
    Cost w1 = 0;
    Cost w2 = 0;
};

/// Pareto-minimal (w1, w2) cuts found by one path, ordered by increasing w1.
struct CandidatePool {
    std::vector<BicriteriaCandidate> frontier;
    BicriteriaPath path = BicriteriaPath::Exact;
    std::uint64_t cuts_seen = 0;  // distinct cuts inspected
};

std::uint64_t default_repetitions(std::size_t n);

/// {0} u {2^j : j = 0..ceil(log2(total_w1 + 1))} u {total_w1 + 1}, increasing.
std::vector<Cost> lambda_grid(Cost total_w1);

CandidatePool bicriteria_candidates(const WeightedMultigraph& g, std::span<const Cost> w1,
                                    std::span<const Cost> w2, const BicriteriaOptions& options);

struct BicriteriaResult {
    std::optional<SideMask> side;  // verified feasible when present
    BicriteriaPath path = BicriteriaPath::Exact;
};

BicriteriaResult solve_bicriteria(const BicriteriaInstance& inst, const BicriteriaOptions& options);

/// Global min cut with the k most expensive edges free, through m+1
/// bicriteria instances over the cost-sorted edge order. Candidate pools are
/// built once, so decisions for many (k, W) pairs cost no further sampling.
class GlobalKExpSweep {
public:
    GlobalKExpSweep(const WeightedMultigraph& g, const BicriteriaOptions& options);

    struct Answer {
        bool yes = false;
        std::optional<Cut> witness;  // discounted cost re-verified <= W
        std::size_t t = 0;           // sweep position of the witness
    };

    Answer decide(std::uint64_t k, Cost W) const;

    /// Least W the sweep answers yes for.
    Cost value(std::uint64_t k) const;

    BicriteriaPath path() const { return path_; }
    std::size_t thresholds() const { return pools_.size(); }
    const CandidatePool& pool(std::size_t t) const { return pools_.at(t); }

    /// (w1^t, w2^t) of one sweep position.
    std::pair<std::vector<Cost>, std::vector<Cost>> weights(std::size_t t) const;

private:
    const WeightedMultigraph* g_;
    std::vector<EdgeId> order_;
    std::vector<CandidatePool> pools_;
    BicriteriaPath path_ = BicriteriaPath::Exact;
};

struct GlobalKExpResult {
    bool yes = false;
    std::optional<Cut> witness;
    BicriteriaPath path = BicriteriaPath::Exact;
};

GlobalKExpResult global_min_cut_k_exp(const WeightedMultigraph& g, std::uint64_t k, Cost W,
                                      const BicriteriaOptions& options = {});

}  // namespace discut
