#include "discut/cut_polynomial.hpp"

#include "discut/modular.hpp"
#include "discut/random.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace discut {
namespace {

// (cost, number of ordered bipartitions with that cost), sorted by cost.
std::vector<std::pair<Cost, std::uint64_t>> cut_cost_histogram(const WeightedMultigraph& g) {
    const auto n = g.vertex_count();
    if (n > kOracleMaxVertices)
        throw InstanceTooLarge("brute evaluation limited to " + std::to_string(kOracleMaxVertices) + " vertices");
    if (n == 0) return {{0, 1}};
    const Cost total = g.total_cost();
    const bool dense = total <= (Cost{1} << 24);
    std::vector<std::uint64_t> counts(dense ? total + 1 : 0, 0);
    std::unordered_map<Cost, std::uint64_t> sparse;

    std::uint32_t mask = 1u;
    Cost cost = 0;
    for (const auto& e : g.edges())
        if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) cost += e.cost;
    auto record = [&]() {
        if (dense)
            ++counts[cost];
        else
            ++sparse[cost];
    };
    record();
    const std::uint64_t states = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < states; ++i) {
        const auto v = static_cast<VertexId>(1 + std::countr_zero(i));
        mask ^= 1u << v;
        for (auto eid : g.incident(v)) {
            const auto& e = g.edge(eid);
            if (e.is_loop()) continue;
            const bool crossing = ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
            cost = crossing ? cost + e.cost : cost - e.cost;
        }
        record();
    }
    // every anchored bipartition stands for itself and its mirror image
    std::vector<std::pair<Cost, std::uint64_t>> out;
    if (dense) {
        for (Cost c = 0; c <= total; ++c)
            if (counts[c]) out.emplace_back(c, 2 * counts[c]);
    } else {
        for (const auto& [c, k] : sparse) out.emplace_back(c, 2 * k);
        std::sort(out.begin(), out.end());
    }
    return out;
}

std::uint64_t eval_histogram(const std::vector<std::pair<Cost, std::uint64_t>>& hist, std::uint64_t i,
                             std::uint64_t p) {
    std::uint64_t sum = 0, power = 1 % p;
    Cost at = 0;
    for (const auto& [c, count] : hist) {
        power = mulmod(power, powmod(i, c - at, p), p);
        at = c;
        sum = addmod(sum, mulmod(count % p, power, p), p);
    }
    return sum;
}

// Values of C(G, x) at 0..D through one backend.
class PointSource {
public:
    PointSource(const WeightedMultigraph& g, const PlaneEmbedding* emb, PolyBackend backend) {
        if (backend == PolyBackend::Brute) {
            hist_ = cut_cost_histogram(g);
        } else {
            if (!emb) throw CapabilityError("the Pfaffian backend needs a rotation system");
            pfaffian_.emplace(g, *emb);
        }
    }

    std::vector<std::uint64_t> values(Cost D, std::uint64_t p) const {
        std::vector<std::uint64_t> out(D + 1);
        for (Cost i = 0; i <= D; ++i) out[i] = pfaffian_ ? (*pfaffian_)(i, p) : eval_histogram(hist_, i, p);
        return out;
    }

private:
    std::vector<std::pair<Cost, std::uint64_t>> hist_;
    std::optional<PfaffianEvaluator> pfaffian_;
};

SupportSet support_from_source(const PointSource& source, Cost D, std::uint64_t p, bool exclude_trivial) {
    if (p <= D) throw InvalidInput("prime must exceed the polynomial degree");
    const auto evals = source.values(D, p);
    auto coeff = interpolate_coefficients(evals, p);
    if (exclude_trivial) coeff[0] = submod(coeff[0], 2 % p, p);
    SupportSet out;
    out.primes = {p};
    out.one_sided = true;
    for (Cost w = 0; w <= D; ++w)
        if (coeff[w]) out.costs.push_back(w);
    return out;
}

void merge_into(SupportSet& acc, const SupportSet& part) {
    std::vector<Cost> merged;
    std::set_union(acc.costs.begin(), acc.costs.end(), part.costs.begin(), part.costs.end(),
                   std::back_inserter(merged));
    acc.costs = std::move(merged);
    acc.primes.insert(acc.primes.end(), part.primes.begin(), part.primes.end());
}

void check_degree(Cost D, const PolyOptions& options) {
    if (D > options.max_degree)
        throw InstanceTooLarge("polynomial degree " + std::to_string(D) + " exceeds the limit " +
                               std::to_string(options.max_degree));
}

std::uint32_t dart_at(const WeightedMultigraph& h, EdgeId e, std::uint32_t node) {
    return h.edge(e).u == node ? forward_dart(e) : reverse_dart(forward_dart(e));
}

}  // namespace

std::uint64_t eval_brute(const WeightedMultigraph& g, std::uint64_t i, std::uint64_t p) {
    return eval_histogram(cut_cost_histogram(g), i % p, p);
}

PfaffianEvaluator::PfaffianEvaluator(const WeightedMultigraph& g, const PlaneEmbedding& emb) {
    if (!is_connected(g)) throw CapabilityError("the Pfaffian backend needs a connected graph");
    const auto dual = build_dual(g, emb);
    const auto m = g.edge_count();

    // Virtual edges: dual edge e (non-loop) keeps id e; connectors follow.
    // A slot is one end of a virtual edge: 2*id + side.
    std::vector<Cost> vcost(m, 0);
    std::vector<std::uint8_t> is_loop(m, 0);
    for (const auto& e : dual.graph.edges()) {
        vcost[e.id] = e.cost;
        if (e.is_loop()) {
            is_loop[e.id] = 1;
            loops_.push_back(e.cost);
        }
    }
    std::vector<std::vector<std::uint32_t>> vertices;  // slot lists, clockwise
    for (const auto& face : emb.faces()) {
        std::vector<std::uint32_t> slots;
        for (auto d : face)
            if (!is_loop[dart_edge(d)]) slots.push_back(d);  // dart d = slot 2e + side
        const auto D = slots.size();
        if (D <= 3) {
            vertices.push_back(std::move(slots));
            continue;
        }
        // chain of D-2 cubic vertices: (P0,P1,C1+), (C1-,P2,C2+), ..., (C-,P_{D-2},P_{D-1})
        auto connector = [&]() {
            vcost.push_back(0);
            is_loop.push_back(0);
            return static_cast<std::uint32_t>(vcost.size() - 1);
        };
        std::uint32_t c = connector();
        vertices.push_back({slots[0], slots[1], 2 * c});
        for (std::size_t j = 2; j + 2 < D; ++j) {
            const auto next = connector();
            vertices.push_back({2 * c + 1, slots[j], 2 * next});
            c = next;
        }
        vertices.push_back({2 * c + 1, slots[D - 2], slots[D - 1]});
    }

    // gadget nodes: ports first per vertex, then an extra node for degree 1 and 3
    std::vector<std::uint32_t> port(2 * vcost.size(), static_cast<std::uint32_t>(-1));
    std::vector<std::uint32_t> first(vertices.size());
    std::uint32_t nodes = 0;
    for (std::size_t x = 0; x < vertices.size(); ++x) {
        first[x] = nodes;
        const auto D = vertices[x].size();
        for (std::size_t j = 0; j < D; ++j) port[vertices[x][j]] = nodes + static_cast<std::uint32_t>(j);
        nodes += static_cast<std::uint32_t>(D + ((D == 1 || D == 3) ? 1 : 0));
    }
    nodes_ = nodes;

    WeightedMultigraph h(nodes);
    std::vector<Cost> exponent;
    std::vector<EdgeId> ext(vcost.size(), 0);
    for (std::size_t e = 0; e < vcost.size(); ++e) {
        if (is_loop[e]) continue;
        ext[e] = h.add_edge(port[2 * e], port[2 * e + 1], 0);
        exponent.push_back(vcost[e]);
    }
    std::vector<std::vector<Dart>> rotation(nodes);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> reference;  // matching of the empty even subgraph
    auto internal = [&](std::uint32_t a, std::uint32_t b) {
        const auto id = h.add_edge(a, b, 0);
        exponent.push_back(0);
        return id;
    };
    auto ext_dart = [&](std::uint32_t slot) { return dart_at(h, ext[slot >> 1], port[slot]); };
    for (std::size_t x = 0; x < vertices.size(); ++x) {
        const auto& s = vertices[x];
        const auto base = first[x];
        if (s.size() == 3) {
            const std::uint32_t a = base, b = base + 1, c = base + 2, z = base + 3;
            const auto za = internal(z, a), zb = internal(z, b), zc = internal(z, c), bc = internal(b, c);
            rotation[z] = {dart_at(h, za, z), dart_at(h, zb, z), dart_at(h, zc, z)};
            rotation[a] = {ext_dart(s[0]), dart_at(h, za, a)};
            rotation[b] = {ext_dart(s[1]), dart_at(h, bc, b), dart_at(h, zb, b)};
            rotation[c] = {ext_dart(s[2]), dart_at(h, zc, c), dart_at(h, bc, c)};
            reference.push_back({z, a});
            reference.push_back({b, c});
        } else if (s.size() == 2) {
            const std::uint32_t a = base, b = base + 1;
            const auto ab = internal(a, b);
            rotation[a] = {ext_dart(s[0]), dart_at(h, ab, a)};
            rotation[b] = {ext_dart(s[1]), dart_at(h, ab, b)};
            reference.push_back({a, b});
        } else if (s.size() == 1) {
            const std::uint32_t a = base, z = base + 1;
            const auto az = internal(a, z);
            rotation[a] = {ext_dart(s[0]), dart_at(h, az, a)};
            rotation[z] = {dart_at(h, az, z)};
            reference.push_back({a, z});
        }
    }
    if (nodes == 0) return;

    const PlaneEmbedding hemb(h, std::move(rotation));
    if (!hemb.is_planar() || !is_connected(h)) throw std::logic_error("matching graph lost planarity");

    // Kasteleyn orientation: tree edges parent -> child, then each face other
    // than face 0 fixes its edge towards the root of the face tree.
    const auto hm = h.edge_count();
    std::vector<std::int8_t> forward(hm, -1);  // 1: u -> v, 0: v -> u
    {
        std::vector<std::uint8_t> seen(nodes, 0);
        std::queue<std::uint32_t> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (auto eid : h.incident(v)) {
                const auto w = h.edge(eid).other(v);
                if (seen[w]) continue;
                seen[w] = 1;
                forward[eid] = h.edge(eid).u == v ? 1 : 0;
                q.push(w);
            }
        }
    }
    const auto faces = hemb.face_count();
    std::vector<std::int64_t> parent_edge(faces, -1);
    std::vector<std::uint32_t> order;
    {
        std::vector<std::uint8_t> seen(faces, 0);
        std::queue<std::uint32_t> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            const auto f = q.front();
            q.pop();
            order.push_back(f);
            for (auto d : hemb.faces()[f]) {
                const auto e = dart_edge(d);
                if (forward[e] >= 0) continue;
                const auto g2 = hemb.face_of(reverse_dart(d));
                if (seen[g2]) continue;
                seen[g2] = 1;
                parent_edge[g2] = e;
                q.push(g2);
            }
        }
        if (order.size() != faces) throw std::logic_error("face tree does not span the matching graph");
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto f = *it;
        if (f == 0) continue;
        const auto pe = static_cast<EdgeId>(parent_edge[f]);
        std::size_t along = 0;
        std::optional<Dart> pd;
        for (auto d : hemb.faces()[f]) {
            const auto e = dart_edge(d);
            if (e == pe) {
                pd = d;
                continue;
            }
            if (forward[e] < 0) throw std::logic_error("face processed before its children");
            if ((forward[e] == 1) == ((d & 1u) == 0)) ++along;
        }
        const bool dart_forward = (*pd & 1u) == 0;
        const bool want_along = along % 2 == 0;
        forward[pe] = (want_along == dart_forward) ? 1 : 0;
    }

    for (const auto& e : h.edges()) {
        if (forward[e.id] == 1)
            arcs_.push_back({e.u, e.v, exponent[e.id]});
        else
            arcs_.push_back({e.v, e.u, exponent[e.id]});
    }

    // Sign of the reference matching's term: sgn(pi) * prod of orientation signs
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> oriented;
    for (const auto& a : arcs_) oriented[{a.from, a.to}] = 1;
    std::vector<std::uint32_t> perm;
    bool negative = false;
    for (auto [x, y] : reference) {
        if (x > y) std::swap(x, y);
        if (!oriented.count({x, y})) negative = !negative;
        perm.push_back(x);
        perm.push_back(y);
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2) negative = !negative;
    negate_ = negative;
}

std::uint64_t PfaffianEvaluator::operator()(std::uint64_t i, std::uint64_t p) const {
    if (p == 2) return 0;  // C(G,x) = 2 * EvenGen
    i %= p;
    std::uint64_t result = 2 % p;
    for (auto c : loops_) result = mulmod(result, addmod(1 % p, powmod(i, c, p), p), p);
    if (nodes_ == 0) return result;

    const std::size_t N = nodes_;
    if (N % 2) return 0;
    std::vector<std::uint64_t> a(N * N, 0);
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * N + c]; };
    for (const auto& arc : arcs_) {
        const auto w = powmod(i, arc.exponent, p);
        at(arc.from, arc.to) = addmod(at(arc.from, arc.to), w, p);
        at(arc.to, arc.from) = submod(at(arc.to, arc.from), w, p);
    }

    std::uint64_t pf = 1;
    for (std::size_t k = 0; k < N; k += 2) {
        std::size_t j = k + 1;
        while (j < N && at(k, j) == 0) ++j;
        if (j == N) return 0;
        if (j != k + 1) {
            for (std::size_t c = 0; c < N; ++c) std::swap(at(k + 1, c), at(j, c));
            for (std::size_t r = 0; r < N; ++r) std::swap(at(r, k + 1), at(r, j));
            pf = submod(0, pf, p);
        }
        const auto pivot = at(k, k + 1);
        pf = mulmod(pf, pivot, p);
        const auto inv = invmod(pivot, p);
        for (std::size_t r = k + 2; r < N; ++r) {
            if (at(k, r) == 0) continue;
            const auto f = mulmod(at(k, r), inv, p);
            for (std::size_t c = k; c < N; ++c) at(r, c) = submod(at(r, c), mulmod(f, at(k + 1, c), p), p);
            for (std::size_t c = k; c < N; ++c) at(c, r) = submod(at(c, r), mulmod(f, at(c, k + 1), p), p);
        }
    }
    if (negate_) pf = submod(0, pf, p);
    return mulmod(result, pf, p);
}

std::uint64_t eval_planar_pfaffian(const WeightedMultigraph& g, const PlaneEmbedding& emb, std::uint64_t i,
                                   std::uint64_t p) {
    return PfaffianEvaluator(g, emb)(i, p);
}

SupportSet interpolate_support(std::span<const std::uint64_t> evals, std::uint64_t p, Cost M) {
    if (evals.size() != M + 1) throw InvalidInput("need exactly M+1 evaluations");
    if (p <= M) throw InvalidInput("prime must exceed M");
    const auto coeff = interpolate_coefficients(evals, p);
    SupportSet out;
    out.primes = {p};
    out.one_sided = true;
    for (Cost w = 0; w <= M; ++w)
        if (coeff[w]) out.costs.push_back(w);
    return out;
}

SupportSet support_for_prime(const WeightedMultigraph& g, const PlaneEmbedding* emb, PolyBackend backend,
                             std::uint64_t p, bool exclude_trivial) {
    const PointSource source(g, emb, backend);
    return support_from_source(source, g.total_cost(), p, exclude_trivial);
}

SupportSet derandomized_union(const WeightedMultigraph& g, const PlaneEmbedding* emb, PolyBackend backend,
                              std::span<const std::uint64_t> primes, bool exclude_trivial) {
    if (primes.size() < g.vertex_count() + 1)
        throw InvalidInput("the derandomized union needs n+1 primes");
    const PointSource source(g, emb, backend);
    const Cost D = g.total_cost();
    SupportSet out;
    for (auto p : primes) merge_into(out, support_from_source(source, D, p, exclude_trivial));
    out.one_sided = false;
    return out;
}

SupportSet recover_support(const WeightedMultigraph& g, const PlaneEmbedding* emb, const PolyOptions& options,
                           bool exclude_trivial) {
    const Cost D = g.total_cost();
    check_degree(D, options);
    const std::size_t n = std::max<std::size_t>(1, g.vertex_count());
    if (options.primes == PrimePolicy::All) {
        const auto primes = gen_primes(D, n + 1);
        return derandomized_union(g, emb, options.backend, primes, exclude_trivial);
    }
    const auto primes = gen_primes(D, 2 * n);
    Rng rng(options.seed);
    const auto p = primes[rng.below(primes.size())];
    const PointSource source(g, emb, options.backend);
    return support_from_source(source, D, p, exclude_trivial);
}

namespace {

// Shared setup of the threshold sweep: sorted edge order, inflation constant,
// and the optional super-edge with its embedding.
class Alg1Context {
public:
    Alg1Context(const WeightedMultigraph& g, const PlaneEmbedding* emb, std::optional<Terminals> terminals,
                Mode mode, const PolyOptions& options)
        : g_(g), terminals_(terminals), mode_(mode), options_(options) {
        const auto m = g.edge_count();
        order_.resize(m);
        for (EdgeId e = 0; e < m; ++e) order_[e] = e;
        std::sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            return g.edge(a).cost != g.edge(b).cost ? g.edge(a).cost < g.edge(b).cost : a < b;
        });
        M_ = checked_add(g.total_cost(), 1);
        T_ = terminals ? checked_add(checked_mul(m, M_), 1) : 0;
        (void)checked_add(T_, checked_mul(m, M_));  // degree bound of G' must fit

        topology_ = g;
        if (options.backend == PolyBackend::Pfaffian) {
            if (!emb) throw CapabilityError("the Pfaffian backend needs a rotation system");
            if (terminals) {
                WeightedMultigraph withe;
                PlaneEmbedding withemb;
                if (add_edge_in_common_face(g, *emb, terminals->s, terminals->t, T_, withe, withemb)) {
                    topology_ = std::move(withe);
                    embedding_ = std::move(withemb);
                } else {
                    backend_ = PolyBackend::Brute;
                    warnings_.push_back(
                        "s and t share no face; the super-edge would need a handle, using the brute backend");
                }
            } else {
                embedding_ = *emb;
            }
        }
        if (terminals && !embedding_) topology_.add_edge(terminals->s, terminals->t, T_);
        if (backend_ == PolyBackend::Brute) embedding_.reset();
    }

    Cost M() const { return M_; }
    Cost T() const { return T_; }
    bool fell_back() const { return backend_ != options_.backend; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    std::size_t thresholds() const { return g_.edge_count() + 1; }

    std::vector<DecodedPair> pairs_for(std::size_t t) const {
        const auto m = g_.edge_count();
        std::vector<Cost> costs(topology_.edge_count());
        for (std::size_t pos = 0; pos < m; ++pos) {
            const auto e = order_[pos];
            const bool inflate = mode_ == Mode::Cheap ? pos < t : pos >= t;
            costs[e] = inflate ? M_ : g_.edge(e).cost;
        }
        if (terminals_) costs[m] = T_;
        const auto gp = topology_.with_costs(costs);
        PolyOptions opts = options_;
        opts.backend = backend_;
        opts.seed = mix_seed(options_.seed, t);
        const auto support = recover_support(gp, embedding_ ? &*embedding_ : nullptr, opts, !terminals_);
        std::vector<DecodedPair> out;
        for (auto w : support.costs) {
            if (w < T_) continue;
            const auto rest = w - T_;
            out.push_back({rest / M_, rest % M_, t});
        }
        return out;
    }

private:
    const WeightedMultigraph& g_;
    std::optional<Terminals> terminals_;
    Mode mode_;
    PolyOptions options_;
    PolyBackend backend_ = options_.backend;
    std::vector<EdgeId> order_;
    Cost M_ = 0, T_ = 0;
    WeightedMultigraph topology_;
    std::optional<PlaneEmbedding> embedding_;
    std::vector<std::string> warnings_;
};

bool accepts(const DecodedPair& pair, Objective objective, std::uint64_t k, Cost beta) {
    if (objective == Objective::Min) return pair.beta_prime <= beta && pair.k_prime <= k;
    return pair.beta_prime >= beta && pair.k_prime >= k;
}

}  // namespace

Alg1Sweep alg1_sweep(const WeightedMultigraph& g, const PlaneEmbedding* emb, std::optional<Terminals> terminals,
                     Mode mode, const PolyOptions& options) {
    DiscountSpec probe;
    probe.terminals = terminals;
    probe.validate(g);
    const Alg1Context ctx(g, emb, terminals, mode, options);
    Alg1Sweep sweep;
    sweep.M = ctx.M();
    sweep.T = ctx.T();
    sweep.fallback_to_brute = ctx.fell_back();
    sweep.warnings = ctx.warnings();
    std::set<std::pair<std::uint64_t, Cost>> seen;
    for (std::size_t t = 0; t < ctx.thresholds(); ++t) {
        for (const auto& pair : ctx.pairs_for(t))
            if (seen.insert({pair.k_prime, pair.beta_prime}).second) sweep.pairs.push_back(pair);
        ++sweep.support_calls;
    }
    std::sort(sweep.pairs.begin(), sweep.pairs.end(), [](const DecodedPair& a, const DecodedPair& b) {
        return a.k_prime != b.k_prime ? a.k_prime < b.k_prime : a.beta_prime < b.beta_prime;
    });
    return sweep;
}

Alg1Decision alg1_decide(const Alg1Sweep& sweep, Objective objective, std::uint64_t k, Cost beta) {
    Alg1Decision out;
    out.warnings = sweep.warnings;
    for (const auto& pair : sweep.pairs) {
        if (accepts(pair, objective, k, beta)) {
            out.accepted = true;
            out.certificate = pair;
            return out;
        }
    }
    if (objective == Objective::Max && beta == 0) out.accepted = true;
    return out;
}

Cost alg1_optimum(const Alg1Sweep& sweep, Objective objective, std::uint64_t k) {
    std::optional<Cost> best;
    for (const auto& pair : sweep.pairs) {
        if (objective == Objective::Min && pair.k_prime <= k) {
            if (!best || pair.beta_prime < *best) best = pair.beta_prime;
        } else if (objective == Objective::Max && pair.k_prime >= k) {
            if (!best || pair.beta_prime > *best) best = pair.beta_prime;
        }
    }
    if (objective == Objective::Max) return best.value_or(0);
    if (!best) throw std::logic_error("threshold sweep found no feasible cut");
    return *best;
}

Alg1Decision solve_variant_alg1(const WeightedMultigraph& g, const PlaneEmbedding* emb, const DiscountSpec& spec,
                                const PolyOptions& options) {
    spec.validate(g);
    if (!spec.budget) throw InvalidInput("the threshold sweep decides a budget; none given");
    const Alg1Context ctx(g, emb, spec.terminals, spec.mode, options);
    Alg1Decision out;
    out.warnings = ctx.warnings();
    for (std::size_t t = 0; t < ctx.thresholds(); ++t) {
        for (const auto& pair : ctx.pairs_for(t)) {
            if (accepts(pair, spec.objective, spec.k, *spec.budget)) {
                out.accepted = true;
                out.certificate = pair;
                return out;
            }
        }
    }
    if (spec.objective == Objective::Max && *spec.budget == 0) out.accepted = true;
    return out;
}

}  // namespace discut
