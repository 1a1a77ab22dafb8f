#pragma once

#include "discut/embedding.hpp"
#include "discut/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace discut {

/// Exact minimum s-t cut by max-flow. Parallel edges are merged before the
/// flow computation; side A is the residual reachability set of s.
Cut min_st_cut(const WeightedMultigraph& g, VertexId s, VertexId t);

/// Max-flow value from s to t (shortest augmenting paths with capacity scaling).
Cost max_flow_value(const WeightedMultigraph& g, VertexId s, VertexId t);

/// Exact global minimum cut by Stoer-Wagner. Disconnected graphs yield value 0
/// with the component of vertex 0 as witness.
Cut global_min_cut(const WeightedMultigraph& g);

/// Cuts seen by one recursive contraction run (Karger-Stein shape). Edge
/// `weight`s drive the contraction probabilities. The visitor receives each
/// cut at the recursion leaves as a side mask over the original vertices
/// together with its total weight; returning false stops the run.
using ContractionVisitor = std::function<bool(const SideMask& side, Cost weight)>;
void contraction_run(const WeightedMultigraph& g, std::span<const Cost> weight, std::uint64_t seed,
                     const ContractionVisitor& visit);

/// Lightest cut (under `weight`) found by one recursive contraction run.
Cut contraction_sample(const WeightedMultigraph& g, std::span<const Cost> weight, std::uint64_t seed);

enum class Exactness { Exact, Unavailable };

enum class MaxCutPath { Enumeration, CutPolynomial };

struct MaxCutResult {
    Cost value = 0;
    Cut witness;
    MaxCutPath path = MaxCutPath::Enumeration;
    Exactness exactness = Exactness::Exact;
};

struct MaxCutOptions {
    /// Use the planar cut-polynomial route even where enumeration would work.
    bool force_polynomial = false;
};

/// Exact maximum cut: enumeration up to kOracleMaxVertices vertices, otherwise
/// the cut-polynomial support of a planar embedding. The polynomial path
/// recovers a witness with one extra support computation per edge.
MaxCutResult max_cut(const WeightedMultigraph& g, const PlaneEmbedding* emb = nullptr,
                     MaxCutOptions options = {});

/// Classic (k = 0) cut solver consumed by the reductions.
class ClassicSolver {
public:
    virtual ~ClassicSolver() = default;
    virtual std::string_view name() const = 0;
    virtual Objective objective() const = 0;
    virtual bool supports(bool st_scope) const = 0;
    virtual Exactness exactness() const { return Exactness::Exact; }
    /// Optimum classic cut of `g` (terminals given iff s-t scope). The
    /// returned Cut carries raw costs of `g`.
    virtual Cut solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const = 0;
};

class MaxFlowSolver final : public ClassicSolver {
public:
    std::string_view name() const override { return "max-flow"; }
    Objective objective() const override { return Objective::Min; }
    bool supports(bool st_scope) const override { return st_scope; }
    Cut solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const override;
};

class StoerWagnerSolver final : public ClassicSolver {
public:
    std::string_view name() const override { return "stoer-wagner"; }
    Objective objective() const override { return Objective::Min; }
    bool supports(bool st_scope) const override { return !st_scope; }
    Cut solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const override;
};

/// Exhaustive enumeration for either objective and scope (n <= 26).
class EnumerationSolver final : public ClassicSolver {
public:
    explicit EnumerationSolver(Objective objective) : objective_(objective) {}
    std::string_view name() const override { return "enumeration"; }
    Objective objective() const override { return objective_; }
    bool supports(bool) const override { return true; }
    Cut solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const override;

private:
    Objective objective_;
};

/// Global maximum cut through `max_cut`; the embedding, when given, must stay
/// valid for every cost function the reduction feeds in (costs only change).
class MaxCutSolver final : public ClassicSolver {
public:
    explicit MaxCutSolver(const PlaneEmbedding* emb = nullptr, MaxCutOptions options = {})
        : emb_(emb), options_(options) {}
    std::string_view name() const override { return "max-cut"; }
    Objective objective() const override { return Objective::Max; }
    bool supports(bool st_scope) const override { return !st_scope; }
    Cut solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const override;

private:
    const PlaneEmbedding* emb_;
    MaxCutOptions options_;
};

}  // namespace discut
