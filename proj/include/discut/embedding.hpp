#pragma once

#include "discut/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace discut {

/// Half-edge index. Dart 2e runs u -> v along edge e, dart 2e+1 runs v -> u.
/// In instance files these are written +(e+1) and -(e+1).
using Dart = std::uint32_t;

inline Dart forward_dart(EdgeId e) { return 2 * e; }
inline Dart reverse_dart(Dart d) { return d ^ 1u; }
inline EdgeId dart_edge(Dart d) { return d >> 1; }

/// Combinatorial embedding given by a rotation system: the cyclic order of
/// darts around every vertex. Faces are the orbits of
/// next(d) = successor of reverse(d) in the rotation at head(d).
class PlaneEmbedding {
public:
    PlaneEmbedding() = default;

    /// `rotation[v]` lists the darts leaving v in cyclic order. Every dart of
    /// `g` must appear exactly once, at its tail. Throws InvalidInput otherwise.
    PlaneEmbedding(const WeightedMultigraph& g, std::vector<std::vector<Dart>> rotation);

    std::size_t vertex_count() const { return rotation_.size(); }
    std::size_t dart_count() const { return successor_.size(); }

    std::span<const Dart> rotation(VertexId v) const { return rotation_.at(v); }
    const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }

    VertexId tail(Dart d) const { return tail_.at(d); }
    VertexId head(Dart d) const { return tail_.at(reverse_dart(d)); }

    /// Next dart after d in the rotation at tail(d).
    Dart rotation_successor(Dart d) const { return successor_.at(d); }
    /// Next dart along the boundary of the face containing d.
    Dart face_successor(Dart d) const { return successor_.at(reverse_dart(d)); }

    std::size_t face_count() const { return faces_.size(); }
    std::uint32_t face_of(Dart d) const { return face_of_.at(d); }
    /// Darts of every face in boundary order.
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }

    /// Orientable genus from V - E + F = 2C - 2g, counting every isolated
    /// vertex as a component with one face.
    int genus() const { return genus_; }
    bool is_planar() const { return genus_ == 0; }

private:
    std::vector<std::vector<Dart>> rotation_;
    std::vector<VertexId> tail_;
    std::vector<Dart> successor_;
    std::vector<std::uint32_t> face_of_;
    std::vector<std::vector<Dart>> faces_;
    int genus_ = 0;
};

/// Rotation system of a straight-line drawing: darts around each vertex in
/// clockwise order of their direction.
PlaneEmbedding embedding_from_coordinates(const WeightedMultigraph& g,
                                          std::span<const std::pair<double, double>> coords);

/// Drops the listed edges from the rotation system of `g`; the remaining edges
/// are renumbered densely in their original order, matching `remove_edges`.
PlaneEmbedding remove_edges(const WeightedMultigraph& g, const PlaneEmbedding& emb,
                            std::span<const EdgeId> removed, WeightedMultigraph& out_graph);

/// Embedding of `g` plus one new edge between `a` and `b` drawn inside a face
/// that has corners at both; the new edge gets id m. Returns false when `a`
/// and `b` share no face.
bool add_edge_in_common_face(const WeightedMultigraph& g, const PlaneEmbedding& emb, VertexId a,
                             VertexId b, Cost cost, WeightedMultigraph& out_graph,
                             PlaneEmbedding& out_embedding);

/// Planar dual: one vertex per face, dual edge i pairs with primal edge i and
/// copies its cost; bridges become self-loops.
struct DualGraph {
    WeightedMultigraph graph;
    std::vector<std::uint32_t> face_of_dart;
};

DualGraph build_dual(const WeightedMultigraph& g, const PlaneEmbedding& emb);

}  // namespace discut
