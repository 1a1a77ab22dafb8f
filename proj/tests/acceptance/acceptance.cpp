// Acceptance suite: one PASS/FAIL line per criterion. Every corpus is seeded,
// every comparison is exact and every time limit is fixed below.

#include "discut/bicriteria.hpp"
#include "discut/cut_polynomial.hpp"
#include "discut/gadget.hpp"
#include "discut/generators.hpp"
#include "discut/modular.hpp"
#include "discut/oracle.hpp"
#include "discut/planar_dual.hpp"
#include "discut/reduction.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace discut;
using namespace discut::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string failure;  // first mismatch, kept for the report

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) failure = what;
        pass = false;
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
};

std::string str(std::uint64_t x) { return std::to_string(x); }

DiscountSpec make_spec(const std::string& name, std::uint64_t k, std::optional<Terminals> st = std::nullopt) {
    auto spec = parse_variant(name);
    spec.terminals = spec.is_st() ? st : std::nullopt;
    spec.k = k;
    return spec;
}

bool decide(Objective obj, Cost value, Cost beta) { return obj == Objective::Min ? value <= beta : value >= beta; }

Terminals random_terminals(std::size_t n, Rng& rng) {
    const auto s = static_cast<VertexId>(rng.below(n));
    auto t = static_cast<VertexId>(rng.below(n - 1));
    if (t >= s) ++t;
    return {s, t};
}

// ---------------------------------------------------------------------------

Outcome example_network() {
    Outcome o;
    const auto inst = figure_one();
    const auto& g = inst.graph;
    const Terminals st{S, T};
    const std::vector<EdgeId> cut0{SA, SC}, cut1{AB, CD, AD};

    const auto o0 = oracle_opt(g, make_spec("min-st-exp", 0, st));
    const auto o1 = oracle_opt(g, make_spec("min-st-exp", 1, st));
    o.expect(o0.optimum == 6 && o0.witness.cut_edges == cut0, "oracle k=0");
    o.expect(o1.optimum == 2 && o1.witness.cut_edges == cut1, "oracle k=1");

    const auto d0 = planar_min_st_cut_k_exp(g, *inst.embedding, S, T, 0);
    const auto d1 = planar_min_st_cut_k_exp(g, *inst.embedding, S, T, 1);
    o.expect(d0.value == 6 && d0.witness.cut_edges == cut0, "dual k=0");
    o.expect(d1.value == 2 && d1.witness.cut_edges == cut1, "dual k=1");

    PolyOptions options;
    options.backend = PolyBackend::Brute;
    options.primes = PrimePolicy::All;
    const auto sweep = alg1_sweep(g, nullptr, st, Mode::Expensive, options);
    o.expect(alg1_optimum(sweep, Objective::Min, 0) == 6, "threshold sweep k=0");
    o.expect(alg1_optimum(sweep, Objective::Min, 1) == 2, "threshold sweep k=1");
    o.expect(alg1_decide(sweep, Objective::Min, 1, 2).accepted && !alg1_decide(sweep, Objective::Min, 1, 1).accepted,
             "threshold sweep decisions at k=1");
    o.detail = "k=0 value 6 cut {sa,sc}; k=1 value 2 cut {ab,ad,cd}; oracle, dual engine and threshold sweep agree";
    return o;
}

Outcome dual_equivalence() {
    Outcome o;
    Rng rng(20260101);
    std::size_t instances = 0, checks = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::size_t n = 2 + rng.below(11);
        RandomPlanarOptions gen;
        gen.diagonals = rng.coin();
        gen.parallel_edges = rng.below(3);
        gen.removal_percent = static_cast<std::uint32_t>(rng.below(50));
        const auto inst = generate_random_planar(n, 20, rng.next(), gen);
        const auto st = random_terminals(n, rng);
        ++instances;
        for (std::uint64_t k = 0; k <= 3; ++k) {
            const Cost truth = oracle_opt(inst.graph, make_spec("min-st-exp", k, st)).optimum;
            const auto r = planar_min_st_cut_k_exp(inst.graph, *inst.embedding, st.s, st.t, k);
            o.expect(r.value == truth, "instance " + str(i) + " k=" + str(k) + ": dual " + str(r.value) +
                                           " oracle " + str(truth));
            ++checks;
        }
    }
    o.detail = str(instances) + " random plane instances, n<=12, costs<=20, k=0..3, " + str(checks) + " comparisons";
    return o;
}

Outcome walk_table() {
    Outcome o;
    Rng rng(777);
    std::size_t graphs = 0, with_loops = 0, states = 0;
    for (std::uint64_t i = 0; i < 120; ++i) {
        const std::size_t n = 1 + rng.below(50);
        const bool loops = i % 2 == 0;
        const auto g = random_multigraph(n, rng.below(3 * n + 1), 20, rng.next(), loops);
        const std::uint64_t k = rng.below(5);
        const auto source = static_cast<VertexId>(rng.below(n));
        const OddWalkTable table(g, source, k);
        const auto ref = bellman_ford_states(g, source, k);
        ++graphs;
        if (g.has_loops()) ++with_loops;
        for (std::uint64_t kp = 0; kp <= k; ++kp)
            for (unsigned p = 0; p < 2; ++p)
                for (VertexId v = 0; v < n; ++v) {
                    const auto a = table.dist(kp, p, v), b = ref[(kp * 2 + p) * n + v];
                    o.expect(a == b, "graph " + str(i) + " state (" + str(kp) + "," + str(p) + "," + str(v) + ")");
                    ++states;
                }
    }
    o.expect(with_loops > 0, "corpus without self-loops");
    o.detail = str(graphs) + " graphs (n<=50, k<=4, " + str(with_loops) + " with self-loops), " + str(states) +
               " states equal to the Bellman-Ford fixpoint";
    return o;
}

Outcome reduction_equivalence() {
    Outcome o;
    Rng rng(4242);
    std::size_t checks = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::size_t n = 2 + rng.below(11);
        const auto g = i % 4 == 3 ? random_multigraph(n, rng.below(3 * n), 8, rng.next(), false)
                                  : random_connected(n, rng.below(2 * n), 15, rng.next());
        const auto st = random_terminals(n, rng);
        const std::uint64_t k = rng.below(5);
        auto check = [&](const ReductionResult& r, const DiscountSpec& spec) {
            const Cost truth = oracle_opt(g, spec).optimum;
            o.expect(r.value == truth && cut_from_side(g, r.witness.side_a, spec).discounted_cost == r.value,
                     "instance " + str(i) + " " + variant_name(spec) + ": reduction " + str(r.value) + " oracle " +
                         str(truth));
            ++checks;
        };
        const auto a = make_spec("min-st-cheap", k, st);
        check(solve_min_free_cheap(MaxFlowSolver{}, g, a), a);
        const auto b = make_spec("min-global-cheap", k);
        check(solve_min_free_cheap(StoerWagnerSolver{}, g, b), b);
        const auto c = make_spec("max-global-exp", k);
        check(solve_max_free_exp(MaxCutSolver{}, g, c), c);
        const auto d = make_spec("max-st-exp", k, st);
        check(solve_max_free_exp(EnumerationSolver(Objective::Max), g, d), d);
    }
    o.detail = "200 instances n<=12 k<=4; min-st-cheap, min-global-cheap, max-global-exp, max-st-exp; " + str(checks) +
               " optima equal";
    return o;
}

Outcome threshold_sweep_all_variants() {
    Outcome o;
    Rng rng(5150);
    std::size_t decisions = 0;
    PolyOptions options;
    options.backend = PolyBackend::Brute;
    options.primes = PrimePolicy::All;
    const std::size_t kInstances = 50;
    for (std::uint64_t i = 0; i < kInstances; ++i) {
        const std::size_t n = 3 + rng.below(8);
        const auto g = random_connected(n, rng.below(12 - n), 3, rng.next());
        const auto st = random_terminals(n, rng);
        for (bool st_scope : {true, false}) {
            for (Mode mode : {Mode::Expensive, Mode::Cheap}) {
                const auto scope = st_scope ? std::optional<Terminals>(st) : std::nullopt;
                const auto sweep = alg1_sweep(g, nullptr, scope, mode, options);
                for (Objective obj : {Objective::Min, Objective::Max}) {
                    for (std::uint64_t k = 0; k <= 3; ++k) {
                        DiscountSpec spec;
                        spec.objective = obj;
                        spec.terminals = scope;
                        spec.mode = mode;
                        spec.k = k;
                        const Cost opt = oracle_opt(g, spec).optimum;
                        for (Cost beta = 0; beta <= opt + 2; ++beta) {
                            const bool got = alg1_decide(sweep, obj, k, beta).accepted;
                            o.expect(got == decide(obj, opt, beta), "instance " + str(i) + " " + variant_name(spec) +
                                                                        " k=" + str(k) + " beta=" + str(beta));
                            ++decisions;
                        }
                    }
                }
            }
        }
    }
    o.detail = str(kInstances) + " instances n<=10 m<=11 k<=3, all 8 variants, beta in 0..opt+2, " + str(decisions) +
               " decisions equal to the oracle (brute backend, union over n+1 primes)";
    return o;
}

Outcome pfaffian_backend() {
    Outcome o;
    Rng rng(6006);
    std::size_t evals = 0;
    const std::uint64_t kBigPrime = (std::uint64_t{1} << 61) - 1;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t n = 2 + rng.below(11);
        RandomPlanarOptions gen;
        gen.diagonals = rng.coin();
        gen.parallel_edges = rng.below(3);
        const auto inst = generate_random_planar(n, 4, rng.next(), gen);
        const auto& g = inst.graph;
        const PfaffianEvaluator pf(g, *inst.embedding);
        const Cost M = g.total_cost();
        for (std::uint64_t p : {gen_primes(M, 1)[0], kBigPrime}) {
            for (std::uint64_t x = 0; x <= M; ++x) {
                o.expect(pf(x, p) == eval_brute(g, x, p), "instance " + str(i) + " x=" + str(x) + " p=" + str(p));
                ++evals;
            }
            o.expect(pf(1, p) == powmod(2, n, p), "instance " + str(i) + ": C(G,1) != 2^n");
            o.expect(pf(0, p) == 2 % p, "instance " + str(i) + ": C(G,0) != 2");
        }
    }
    o.detail = "50 random plane instances n<=12, two primes, " + str(evals) +
               " evaluations equal to brute force; C(G,1)=2^n and C(G,0)=2 on all";
    return o;
}

Outcome capture_rate() {
    Outcome o;
    Rng rng(7007);
    double worst = 1.0;
    std::size_t instances = 0;
    for (std::uint64_t i = 0; i < 12; ++i) {
        const std::size_t n = 3 + rng.below(8);
        const auto g = random_connected(n, rng.below(2 * n), 12, rng.next());
        const auto truth = oracle_support(g);
        std::map<Cost, int> hits;
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            PolyOptions options;
            options.primes = PrimePolicy::One;
            options.seed = mix_seed(i, trial);
            const auto s = recover_support(g, nullptr, options);
            for (auto c : s.costs) {
                o.expect(truth.contains(c), "instance " + str(i) + ": spurious cost " + str(c));
                ++hits[c];
            }
        }
        for (auto c : truth.costs) {
            const double rate = hits[c] / 100.0;
            worst = std::min(worst, rate);
            o.expect(rate >= 0.4, "instance " + str(i) + " cost " + str(c) + " captured at " + std::to_string(rate));
        }
        PolyOptions all;
        all.primes = PrimePolicy::All;
        o.expect(recover_support(g, nullptr, all) == truth, "instance " + str(i) + ": derandomized union differs");
        ++instances;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu instances x 100 seeded single-prime runs, lowest capture rate %.2f", instances,
                  worst);
    o.detail = std::string(buf) + "; derandomized union equals the enumerated support";
    return o;
}

Outcome bicriteria_engine() {
    Outcome o;
    Rng rng(8008);
    std::size_t exact_decisions = 0, yes_truth = 0, false_no = 0, witnesses = 0;
    const std::size_t kInstances = 200;
    for (std::uint64_t i = 0; i < kInstances; ++i) {
        // sizes skew small so the sampled path stays inside the time budget
        const std::size_t n = i % 10 == 0 ? 11 + rng.below(4) : 3 + rng.below(8);
        const auto g = random_connected(n, rng.below(n + 2), 9, rng.next());
        const GlobalKExpSweep exact(g, {BicriteriaPath::Exact, 0, {}});
        const GlobalKExpSweep sampled(g, {BicriteriaPath::Randomized, rng.next(), {}});
        for (std::uint64_t k = 0; k <= 4; ++k) {
            const auto spec = make_spec("min-global-exp", k);
            const Cost opt = oracle_opt(g, spec).optimum;
            for (Cost W = 0; W <= opt + 2; ++W) {
                const bool truth = opt <= W;
                for (const auto* sweep : {&exact, &sampled}) {
                    const auto a = sweep->decide(k, W);
                    if (a.yes) {
                        const bool ok = a.witness && cut_from_side(g, a.witness->side_a, spec).discounted_cost <= W;
                        o.expect(ok, "instance " + str(i) + ": unverifiable yes");
                        ++witnesses;
                    }
                    if (sweep == &exact) {
                        o.expect(a.yes == truth, "instance " + str(i) + " k=" + str(k) + " W=" + str(W) + " exact");
                        ++exact_decisions;
                    } else {
                        o.expect(!a.yes || truth, "instance " + str(i) + ": sampled false yes");
                        if (truth) {
                            ++yes_truth;
                            if (!a.yes) ++false_no;
                        }
                    }
                }
            }
        }
    }
    const double rate = yes_truth ? static_cast<double>(false_no) / static_cast<double>(yes_truth) : 0.0;
    o.expect(rate <= 0.01, "sampled false-no rate " + std::to_string(rate));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", rate);
    o.detail = str(kInstances) + " instances n<=14 k<=4; exact path " + str(exact_decisions) +
               " decisions equal to the oracle; sampled false-no " + str(false_no) + "/" + str(yes_truth) + " = " + buf +
               "; " + str(witnesses) + " yes witnesses re-verified";
    return o;
}

WeightedMultigraph complete(std::size_t n) {
    WeightedMultigraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
    return g;
}

WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b) {
    WeightedMultigraph g(a.vertex_count() + b.vertex_count());
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v, e.cost);
    const auto off = static_cast<VertexId>(a.vertex_count());
    for (const auto& e : b.edges()) g.add_edge(e.u + off, e.v + off, e.cost);
    return g;
}

Outcome gadget_soundness() {
    Outcome o;
    struct Source {
        std::string name;
        WeightedMultigraph graph;
    };
    std::vector<Source> sources{{"K4", complete(4)}, {"K5", complete(5)}, {"K6", complete(6)}};
    for (std::size_t n : {6, 8, 10, 12})
        for (std::size_t d : {3, 4, 5})
            for (std::uint64_t seed = 0; seed < 3; ++seed)
                if (n * d % 2 == 0 && d < n)
                    sources.push_back({"random " + str(d) + "-regular n=" + str(n) + " #" + str(seed),
                                       generate_regular(n, d, mix_seed(n, d, seed))});
    // regular graphs with a planted clique: K_{d+1} beside a random d-regular part
    sources.push_back({"K4 + 3-regular(8)", disjoint_union(complete(4), generate_regular(8, 3, 1))});
    sources.push_back({"K5 + 4-regular(7)", disjoint_union(complete(5), generate_regular(7, 4, 2))});
    sources.push_back({"K4 + K4", disjoint_union(complete(4), complete(4))});

    std::map<std::string, std::size_t> planted, scans, scan_failures;
    std::string first_w1_failure;
    for (const auto& src : sources) {
        const auto d = *regular_degree(src.graph);
        for (std::uint64_t k = 2; k <= d && k <= 5; ++k) {
            const bool truth = has_clique_brute(src.graph, k);
            const auto clique = find_clique(src.graph, k);
            o.expect(clique.has_value() == truth, src.name + ": clique search disagrees with brute force");
            for (auto variant : {GadgetVariant::NP, GadgetVariant::W1}) {
                const std::string tag = variant == GadgetVariant::NP ? "np" : "w1";
                const auto inst = build_gadget(src.graph, k, variant);
                if (clique) {
                    o.expect(planted_cut(inst, src.graph, *clique).discounted_cost == inst.beta,
                             src.name + " " + tag + " k=" + str(k) + ": planted cut != beta");
                    const auto simple = build_gadget(src.graph, k, variant, true);
                    o.expect(planted_cut(simple, src.graph, *clique).discounted_cost == inst.beta,
                             src.name + " " + tag + " k=" + str(k) + ": subdivided planted cut != beta");
                    ++planted[tag];
                }
                const Cost scan = canonical_family_scan(inst);
                ++scans[tag];
                if ((scan <= inst.beta) != truth) {
                    ++scan_failures[tag];
                    const std::string what = src.name + " " + tag + " k=" + str(k) + ": scan " + str(scan) +
                                             " vs beta " + str(inst.beta) + (truth ? " with" : " without") + " a clique";
                    if (tag == "w1" && first_w1_failure.empty()) first_w1_failure = what;
                    o.expect(false, what);
                }
            }
        }
    }
    o.detail = str(sources.size()) + " regular sources n<=12; planted cut = beta in " + str(planted["np"]) + " np and " +
               str(planted["w1"]) + " w1 cases (also subdivided); scan <=beta iff clique: np " +
               str(scans["np"] - scan_failures["np"]) + "/" + str(scans["np"]) + ", w1 " +
               str(scans["w1"] - scan_failures["w1"]) + "/" + str(scans["w1"]);
    if (!first_w1_failure.empty())
        o.detail += "; w1 gadget with one cost-q edge sv admits the cut A={s} of cost (n-k)q < beta, e.g. " +
                    first_w1_failure;
    return o;
}

Outcome complexity_scope() {
    Outcome o;
    o.detail = "asymptotic running-time claims are not benchmarked; criteria 1-9 are the property-based substitute";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "example network reproduction", 1, example_network},
        {2, "dual engine equals oracle", 120, dual_equivalence},
        {3, "odd-walk table equals Bellman-Ford", 60, walk_table},
        {4, "threshold reductions equal oracle", 120, reduction_equivalence},
        {5, "threshold sweep decisions, all variants", 300, threshold_sweep_all_variants},
        {6, "Pfaffian backend equals brute force", 180, pfaffian_backend},
        {7, "single-prime capture rate", 0, capture_rate},
        {8, "bicriteria engine", 300, bicriteria_engine},
        {9, "clique gadget soundness", 120, gadget_soundness},
        {10, "complexity claims out of scope", 0, complexity_scope},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = o.pass && in_time;
        failed += !pass;
        char timing[64];
        if (c.limit_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.limit_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::printf("criterion %2d %s  %s [%s]: %s", c.id, pass ? "PASS" : "FAIL", c.title, timing, o.detail.c_str());
        if (!o.pass) std::printf(" | first mismatch: %s", o.failure.c_str());
        if (!in_time) std::printf(" | over the time limit");
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
