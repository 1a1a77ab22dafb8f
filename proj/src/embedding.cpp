#include "discut/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace discut {

PlaneEmbedding::PlaneEmbedding(const WeightedMultigraph& g, std::vector<std::vector<Dart>> rotation)
    : rotation_(std::move(rotation)) {
    const auto n = g.vertex_count();
    const auto darts = 2 * g.edge_count();
    if (rotation_.size() != n) throw InvalidInput("rotation system must list every vertex");

    tail_.resize(darts);
    for (const auto& e : g.edges()) {
        tail_[forward_dart(e.id)] = e.u;
        tail_[reverse_dart(forward_dart(e.id))] = e.v;
    }

    constexpr Dart unset = static_cast<Dart>(-1);
    successor_.assign(darts, unset);
    for (VertexId v = 0; v < n; ++v) {
        const auto& rot = rotation_[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const Dart d = rot[i];
            if (d >= darts) throw InvalidInput("rotation references an unknown dart");
            if (tail_[d] != v) throw InvalidInput("dart listed at a vertex it does not leave");
            if (successor_[d] != unset) throw InvalidInput("dart listed twice in rotation system");
            successor_[d] = rot[(i + 1) % rot.size()];
        }
    }
    for (Dart d = 0; d < darts; ++d)
        if (successor_[d] == unset) throw InvalidInput("dart missing from rotation system");

    face_of_.assign(darts, static_cast<std::uint32_t>(-1));
    for (Dart start = 0; start < darts; ++start) {
        if (face_of_[start] != static_cast<std::uint32_t>(-1)) continue;
        const auto f = static_cast<std::uint32_t>(faces_.size());
        faces_.emplace_back();
        Dart d = start;
        do {
            face_of_[d] = f;
            faces_.back().push_back(d);
            d = face_successor(d);
        } while (d != start);
    }

    std::size_t isolated = 0;
    for (VertexId v = 0; v < n; ++v)
        if (rotation_[v].empty()) ++isolated;
    const auto components = static_cast<long long>(component_count(g));
    const long long euler = static_cast<long long>(n) - static_cast<long long>(g.edge_count()) +
                            static_cast<long long>(faces_.size() + isolated);
    genus_ = static_cast<int>((2 * components - euler) / 2);
}

PlaneEmbedding embedding_from_coordinates(const WeightedMultigraph& g,
                                          std::span<const std::pair<double, double>> coords) {
    if (coords.size() != g.vertex_count()) throw InvalidInput("one coordinate per vertex required");
    std::vector<std::vector<Dart>> rotation(g.vertex_count());
    for (const auto& e : g.edges()) {
        rotation[e.u].push_back(forward_dart(e.id));
        rotation[e.v].push_back(reverse_dart(forward_dart(e.id)));
    }
    auto angle = [&](Dart d) {
        const auto& e = g.edge(dart_edge(d));
        const VertexId from = (d & 1u) ? e.v : e.u;
        const VertexId to = (d & 1u) ? e.u : e.v;
        return std::atan2(coords[to].second - coords[from].second, coords[to].first - coords[from].first);
    };
    for (auto& rot : rotation) {
        // clockwise = decreasing angle; ties keep dart order
        std::stable_sort(rot.begin(), rot.end(), [&](Dart a, Dart b) { return angle(a) > angle(b); });
    }
    return PlaneEmbedding(g, std::move(rotation));
}

PlaneEmbedding remove_edges(const WeightedMultigraph& g, const PlaneEmbedding& emb,
                            std::span<const EdgeId> removed, WeightedMultigraph& out_graph) {
    std::vector<std::uint8_t> gone(g.edge_count(), 0);
    for (auto e : removed) gone.at(e) = 1;
    std::vector<EdgeId> renumber(g.edge_count(), 0);
    out_graph = WeightedMultigraph(g.vertex_count(), g.allows_loops());
    for (const auto& e : g.edges()) {
        if (gone[e.id]) continue;
        renumber[e.id] = out_graph.add_edge(e.u, e.v, e.cost);
    }
    std::vector<std::vector<Dart>> rotation(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (auto d : emb.rotation(v)) {
            if (gone[dart_edge(d)]) continue;
            rotation[v].push_back(forward_dart(renumber[dart_edge(d)]) | (d & 1u));
        }
    }
    return PlaneEmbedding(out_graph, std::move(rotation));
}

bool add_edge_in_common_face(const WeightedMultigraph& g, const PlaneEmbedding& emb, VertexId a,
                             VertexId b, Cost cost, WeightedMultigraph& out_graph,
                             PlaneEmbedding& out_embedding) {
    // A corner of face f at vertex x sits between reverse(d) and
    // face_successor(d) for an incoming dart d of f with head x.
    for (const auto& face : emb.faces()) {
        std::optional<Dart> at_a, at_b;
        for (auto d : face) {
            if (!at_a && emb.head(d) == a) at_a = d;
            if (!at_b && emb.head(d) == b) at_b = d;
        }
        if (!at_a || !at_b) continue;

        out_graph = g;
        const EdgeId id = out_graph.add_edge(a, b, cost);
        auto rotation = emb.rotations();
        auto insert_after = [&](VertexId x, Dart after, Dart fresh) {
            auto& rot = rotation[x];
            auto it = std::find(rot.begin(), rot.end(), after);
            rot.insert(it + 1, fresh);
        };
        insert_after(a, reverse_dart(*at_a), forward_dart(id));
        insert_after(b, reverse_dart(*at_b), reverse_dart(forward_dart(id)));
        out_embedding = PlaneEmbedding(out_graph, std::move(rotation));
        return true;
    }
    return false;
}

DualGraph build_dual(const WeightedMultigraph& g, const PlaneEmbedding& emb) {
    if (emb.vertex_count() != g.vertex_count() || emb.dart_count() != 2 * g.edge_count())
        throw InvalidInput("embedding does not belong to this graph");
    if (!is_connected(g)) throw InvalidInput("dual graph requires a connected graph");
    if (!emb.is_planar()) throw CapabilityError("embedding is not planar (genus " + std::to_string(emb.genus()) + ")");
    DualGraph dual;
    dual.graph = WeightedMultigraph(emb.face_count(), true);
    dual.face_of_dart.resize(emb.dart_count());
    for (Dart d = 0; d < emb.dart_count(); ++d) dual.face_of_dart[d] = emb.face_of(d);
    for (const auto& e : g.edges()) {
        const Dart d = forward_dart(e.id);
        dual.graph.add_edge(emb.face_of(d), emb.face_of(reverse_dart(d)), e.cost);
    }
    return dual;
}

}  // namespace discut
