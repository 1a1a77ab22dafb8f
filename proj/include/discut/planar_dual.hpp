#pragma once

#include "discut/embedding.hpp"
#include "discut/graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace discut {

inline constexpr Cost kUnreachable = std::numeric_limits<Cost>::max();

/// Edge ids of a simple s-t path (BFS; neighbour order shuffled when a seed
/// is given). Empty when t is unreachable.
std::vector<EdgeId> find_st_path(const WeightedMultigraph& g, VertexId s, VertexId t,
                                 std::optional<std::uint64_t> seed = std::nullopt);

/// Dual graph with every dual edge off the path P split into a costed half
/// and a zero-cost half. Vertices 0..F-1 are faces; F+j is the j-th split.
struct GStar {
    WeightedMultigraph graph;          // self-loops allowed
    std::vector<EdgeId> primal;        // primal edge behind every edge
    std::vector<std::uint8_t> intact;  // 1 for duals of path edges
    std::size_t face_count = 0;
};

GStar build_gstar(const WeightedMultigraph& g, const DualGraph& dual, std::span<const EdgeId> path, VertexId s,
                  VertexId t);

struct WalkStep {
    EdgeId edge;
    VertexId from;
    VertexId to;
    bool free;
};

/// Table dist(k', p, v): cheapest walk from the source to v using exactly k'
/// free traversals and parity p of traversed edges.
class OddWalkTable {
public:
    OddWalkTable(const WeightedMultigraph& g, VertexId source, std::uint64_t k);

    std::uint64_t k() const { return k_; }
    VertexId source() const { return source_; }
    Cost dist(std::uint64_t kp, unsigned parity, VertexId v) const { return dist_[index(kp, parity, v)]; }

    /// Least dist(k', 1, v) over k' <= k, with the k' attaining it.
    std::pair<Cost, std::uint64_t> best_odd(VertexId v) const;

    /// The walk ending in state (k', p, v), source first.
    std::vector<WalkStep> walk_to(std::uint64_t kp, unsigned parity, VertexId v) const;

private:
    std::size_t index(std::uint64_t kp, unsigned parity, VertexId v) const {
        return (static_cast<std::size_t>(kp) * 2 + parity) * n_ + v;
    }

    const WeightedMultigraph* g_;
    std::size_t n_;
    std::uint64_t k_;
    VertexId source_;
    std::vector<Cost> dist_;
    std::vector<std::size_t> pred_state_;
    std::vector<EdgeId> pred_edge_;
    std::vector<std::uint8_t> pred_free_;
};

struct OddWalk {
    Cost cost = kUnreachable;
    std::vector<WalkStep> steps;
};

/// Cheapest odd walk with k free traversals from source to target (closed
/// when no target is given).
OddWalk odd_walk_min_cost(const WeightedMultigraph& g, VertexId source, std::uint64_t k,
                          std::optional<VertexId> target = std::nullopt);

/// An odd cycle (edge ids in cycle order) inside the support of a closed odd walk.
std::vector<EdgeId> extract_odd_cycle(const WeightedMultigraph& g, std::span<const WalkStep> walk);

struct PlanarCutOptions {
    std::optional<std::vector<EdgeId>> path;  // primal s-t path; BFS path when absent
    bool restrict_sources = true;             // sources = endpoints of intact dual edges
};

struct PlanarCutResult {
    Cost value = 0;
    Cut witness;
    std::vector<EdgeId> path;
    std::size_t sources_scanned = 0;
};

/// Min s-t cut with the k most expensive edges free, on a connected plane graph.
PlanarCutResult planar_min_st_cut_k_exp(const WeightedMultigraph& g, const PlaneEmbedding& emb, VertexId s,
                                        VertexId t, std::uint64_t k, const PlanarCutOptions& options = {});

}  // namespace discut
