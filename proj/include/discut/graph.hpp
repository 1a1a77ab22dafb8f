#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace discut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Cost = std::uint64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Exponential-work guards (enumeration limits, interpolation degree limits).
class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

/// The requested engine or backend cannot handle the instance.
class CapabilityError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;
    Cost cost;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Undirected multigraph with non-negative integer edge costs. Edge ids are
/// dense and assigned in insertion order. Self-loops are only accepted when
/// the graph was created with `allow_loops` (dual graphs).
class WeightedMultigraph {
public:
    WeightedMultigraph() = default;
    explicit WeightedMultigraph(std::size_t vertex_count, bool allow_loops = false);

    EdgeId add_edge(VertexId u, VertexId v, Cost cost);

    std::size_t vertex_count() const { return incidence_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool allows_loops() const { return allow_loops_; }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const { return edges_; }

    /// Incident edge ids of `v`; a self-loop is listed once.
    std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }

    /// Sum of all edge costs; throws OverflowError if it does not fit in 64 bits.
    Cost total_cost() const;

    std::vector<Cost> costs() const;

    /// Same topology with replaced costs (one per edge id).
    WeightedMultigraph with_costs(std::span<const Cost> costs) const;

    bool has_loops() const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    bool allow_loops_ = false;
};

enum class Objective { Min, Max };
enum class Mode { Expensive, Cheap };

struct Terminals {
    VertexId s;
    VertexId t;
};

/// One of the eight discounted cut problems plus its parameters. The scope is
/// s-t when `terminals` is set and global otherwise.
struct DiscountSpec {
    Objective objective = Objective::Min;
    std::optional<Terminals> terminals;
    Mode mode = Mode::Expensive;
    std::uint64_t k = 0;
    std::optional<Cost> budget;

    bool is_st() const { return terminals.has_value(); }
    VertexId anchor() const { return terminals ? terminals->s : 0; }

    /// Throws InvalidInput on s == t or terminals out of range.
    void validate(const WeightedMultigraph& g) const;
};

/// Parses names of the form `min-st-exp`, `max-global-cheap`. Terminals are
/// not part of the name; the returned spec carries placeholder terminals
/// {0, 0} for s-t variants that the caller must fill in.
DiscountSpec parse_variant(std::string_view name);
std::string variant_name(const DiscountSpec& spec);

/// Membership vector: side[v] != 0 iff v is on side A.
using SideMask = std::vector<std::uint8_t>;

struct Cut {
    std::vector<VertexId> side_a;       // sorted, contains the anchor
    std::vector<EdgeId> cut_edges;      // sorted by id
    Cost raw_cost = 0;
    std::vector<EdgeId> discount_set;   // the k discounted edges (all when |cut| <= k)
    Cost discounted_cost = 0;

    SideMask mask(std::size_t vertex_count) const;
};

/// Cost of a multiset after dropping its k largest (Expensive) or k smallest
/// (Cheap) elements; 0 when the multiset has at most k elements.
Cost discounted_cost(std::span<const Cost> costs, std::uint64_t k, Mode mode);

/// The k discounted edges of a cut: most expensive (Expensive) or cheapest
/// (Cheap), ties broken by lowest edge id.
std::vector<EdgeId> discount_set(const WeightedMultigraph& g, std::span<const EdgeId> cut_edges,
                                 std::uint64_t k, Mode mode);

/// Builds the cut (A, V \ A). For global scope a side not containing vertex 0
/// is replaced by its complement so that representations are canonical.
Cut cut_from_side(const WeightedMultigraph& g, const SideMask& side, const DiscountSpec& spec);
Cut cut_from_side(const WeightedMultigraph& g, std::span<const VertexId> side_a,
                  const DiscountSpec& spec);

/// Replaces every edge uv by a path u-w-v whose two edges both carry c(uv).
/// Vertex n+i subdivides edge i; edge i becomes edges 2i (u-w) and 2i+1 (w-v).
WeightedMultigraph subdivide_to_simple(const WeightedMultigraph& g);

/// Maps a side of `g` to the subdivided graph: every subdivision vertex joins
/// the side of its edge's first endpoint, so each original cut edge is crossed
/// exactly once.
SideMask lift_side_to_subdivision(const WeightedMultigraph& g, const SideMask& side);

/// Connected component index per vertex (components numbered from 0 in order
/// of their smallest vertex).
std::vector<std::uint32_t> connected_components(const WeightedMultigraph& g);
std::size_t component_count(const WeightedMultigraph& g);
bool is_connected(const WeightedMultigraph& g);

/// Side mask of the component containing `v` after removing `removed` edges.
SideMask component_of(const WeightedMultigraph& g, VertexId v, std::span<const EdgeId> removed = {});

Cost checked_add(Cost a, Cost b);
Cost checked_mul(Cost a, Cost b);

}  // namespace discut
