#pragma once

#include "discut/embedding.hpp"
#include "discut/graph.hpp"
#include "discut/oracle.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace discut {

enum class PolyBackend { Brute, Pfaffian };
enum class PrimePolicy { One, All };

struct PolyOptions {
    PolyBackend backend = PolyBackend::Brute;
    PrimePolicy primes = PrimePolicy::One;
    std::uint64_t seed = 0;
    /// Largest polynomial degree (total edge cost) accepted before
    /// InstanceTooLarge; interpolation is quadratic in it.
    std::uint64_t max_degree = std::uint64_t{1} << 20;
};

/// C(G, i) mod p summed over all 2^n ordered bipartitions (n <= 26).
std::uint64_t eval_brute(const WeightedMultigraph& g, std::uint64_t i, std::uint64_t p);

/// C(G, i) mod p for a connected graph with a genus-0 embedding, via
/// EvenGen of the dual and a Pfaffian of a Kasteleyn-oriented matching graph.
std::uint64_t eval_planar_pfaffian(const WeightedMultigraph& g, const PlaneEmbedding& emb, std::uint64_t i,
                                   std::uint64_t p);

/// Precomputed matching graph for repeated evaluations of one instance.
class PfaffianEvaluator {
public:
    PfaffianEvaluator(const WeightedMultigraph& g, const PlaneEmbedding& emb);

    std::uint64_t operator()(std::uint64_t i, std::uint64_t p) const;

    /// Node count of the matching graph (the Pfaffian's dimension).
    std::size_t matrix_size() const { return nodes_; }

private:
    struct Arc {
        std::uint32_t from, to;  // oriented from -> to
        Cost exponent;
    };
    std::size_t nodes_ = 0;
    std::vector<Arc> arcs_;
    std::vector<Cost> loops_;  // dual self-loops, each a factor (1 + x^c)
    bool negate_ = false;      // sign of the reference matching's Pfaffian term
};

/// Support of the polynomial whose values at 0..M are `evals` (mod p > M).
SupportSet interpolate_support(std::span<const std::uint64_t> evals, std::uint64_t p, Cost M);

/// Support of C(G,x) mod one prime p > total cost. With `exclude_trivial`
/// the two trivial bipartitions are removed from the constant coefficient.
SupportSet support_for_prime(const WeightedMultigraph& g, const PlaneEmbedding* emb, PolyBackend backend,
                             std::uint64_t p, bool exclude_trivial = false);

/// Union of single-prime supports over the given primes (n+1 of them make
/// the result exact).
SupportSet derandomized_union(const WeightedMultigraph& g, const PlaneEmbedding* emb, PolyBackend backend,
                              std::span<const std::uint64_t> primes, bool exclude_trivial = false);

/// Support recovery under a prime policy: one random prime among the first
/// 2n primes above the degree, or the union over the first n+1 of them.
SupportSet recover_support(const WeightedMultigraph& g, const PlaneEmbedding* emb, const PolyOptions& options,
                           bool exclude_trivial = false);

/// Decoded (k', beta') witness of one threshold-sweep support member.
struct DecodedPair {
    std::uint64_t k_prime = 0;
    Cost beta_prime = 0;
    std::size_t t = 0;  // sweep position, 0-based: edges sorted before t are the cheap block

    bool operator==(const DecodedPair& o) const { return k_prime == o.k_prime && beta_prime == o.beta_prime; }
};

/// All decoded pairs of the threshold sweep for one scope and mode. The pairs
/// do not depend on k, beta or the objective, so one sweep serves every
/// decision on the instance.
struct Alg1Sweep {
    Cost M = 0;  // 1 + total cost
    Cost T = 0;  // super-edge cost (s-t scope), else 0
    std::vector<DecodedPair> pairs;  // distinct (k', beta'), first t kept
    std::size_t support_calls = 0;
    bool fallback_to_brute = false;
    std::vector<std::string> warnings;
};

Alg1Sweep alg1_sweep(const WeightedMultigraph& g, const PlaneEmbedding* emb, std::optional<Terminals> terminals,
                     Mode mode, const PolyOptions& options);

struct Alg1Decision {
    bool accepted = false;
    std::optional<DecodedPair> certificate;  // absent for the beta = 0 Max rule
    std::vector<std::string> warnings;
};

/// Acceptance rules applied to a finished sweep.
Alg1Decision alg1_decide(const Alg1Sweep& sweep, Objective objective, std::uint64_t k, Cost beta);

/// Optimum implied by a sweep: Min = least beta' with k' <= k; Max = largest
/// beta' with k' >= k, or 0.
Cost alg1_optimum(const Alg1Sweep& sweep, Objective objective, std::uint64_t k);

/// Decision for spec.budget, stopping at the first accepting threshold.
Alg1Decision solve_variant_alg1(const WeightedMultigraph& g, const PlaneEmbedding* emb, const DiscountSpec& spec,
                                const PolyOptions& options);

}  // namespace discut
