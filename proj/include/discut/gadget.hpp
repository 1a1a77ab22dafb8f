#pragma once

#include "discut/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace discut {

enum class GadgetVariant { NP, W1 };

/// Clique-to-cut gadget over a d-regular source graph. Source vertices keep
/// their ids, s = n and t = n + 1. With `simple` the graph is the
/// once-subdivided form (subdivision vertices follow t).
struct GadgetInstance {
    WeightedMultigraph graph;
    WeightedMultigraph multigraph;  // before subdivision
    Terminals terminals{0, 0};
    GadgetVariant variant = GadgetVariant::NP;
    bool simple = false;
    std::size_t source_vertices = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t k_prime = 0;
    Cost beta = 0;
};

/// Common degree when every vertex has the same degree.
std::optional<std::size_t> regular_degree(const WeightedMultigraph& g);

bool is_clique(const WeightedMultigraph& g, std::span<const VertexId> vertices);

/// Brute-force k-clique search (one clique or nothing).
std::optional<std::vector<VertexId>> find_clique(const WeightedMultigraph& g, std::size_t k);

GadgetInstance build_gadget(const WeightedMultigraph& source, std::uint64_t k, GadgetVariant variant,
                            bool simple = false);

/// The cut A = {s} u (V(source) \ K) of a k-clique K.
Cut planted_cut(const GadgetInstance& inst, const WeightedMultigraph& source, std::span<const VertexId> clique);

/// Least discounted cost over the canonical cuts A = {s} u (V(source) \ X).
Cost canonical_family_scan(const GadgetInstance& inst);

/// Side mask of A = {s} u (V(source) \ X) on the gadget graph.
SideMask canonical_side(const GadgetInstance& inst, std::span<const std::uint8_t> in_x);

}  // namespace discut
