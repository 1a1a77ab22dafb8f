#include "discut/report.hpp"

#include "discut/bicriteria.hpp"
#include "discut/classic.hpp"
#include "discut/oracle.hpp"
#include "discut/planar_dual.hpp"
#include "discut/reduction.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

namespace discut {
namespace {

using Json = nlohmann::json;

constexpr std::pair<Algorithm, std::string_view> kAlgorithmNames[] = {
    {Algorithm::Auto, "auto"},         {Algorithm::Oracle, "oracle"}, {Algorithm::Reduction, "reduction"},
    {Algorithm::Dual, "dual"},         {Algorithm::Poly, "poly"},     {Algorithm::Bicriteria, "bicriteria"},
};

bool planar_connected(const Instance& inst) {
    return inst.embedding && inst.embedding->is_planar() && is_connected(inst.graph);
}

DiscountSpec spec_for(const Instance& inst, const std::string& variant, std::uint64_t k, std::optional<Cost> budget) {
    DiscountSpec spec = parse_variant(variant);
    if (spec.is_st()) {
        if (!inst.terminals) throw InvalidInput("variant " + variant + " needs a 't s t' line in the instance");
        spec.terminals = inst.terminals;
    }
    spec.k = k;
    spec.budget = budget;
    spec.validate(inst.graph);
    return spec;
}

ReportWitness to_witness(const Cut& cut) {
    ReportWitness w;
    for (auto v : cut.side_a) w.side_a.push_back(std::uint64_t{v} + 1);
    for (auto e : cut.cut_edges) w.cut_edges.push_back(std::uint64_t{e} + 1);
    for (auto e : cut.discount_set) w.discount_set.push_back(std::uint64_t{e} + 1);
    std::sort(w.discount_set.begin(), w.discount_set.end());
    return w;
}

// recomputes a Cut from its side and checks it against the engine's value
void recheck(const WeightedMultigraph& g, const DiscountSpec& spec, const Cut& cut, Cost value) {
    const Cut fresh = cut_from_side(g, cut.side_a, spec);
    if (fresh.discounted_cost != cut.discounted_cost || fresh.discounted_cost != value)
        throw std::logic_error("engine witness does not reproduce its value");
    if (spec.is_st()) {
        const auto mask = fresh.mask(g.vertex_count());
        if (!mask[spec.terminals->s] || mask[spec.terminals->t])
            throw std::logic_error("engine witness does not separate the terminals");
    }
}

bool decide_by_value(const DiscountSpec& spec, Cost value) {
    return spec.objective == Objective::Min ? value <= *spec.budget : value >= *spec.budget;
}

void solve_with_cut(SolveReport& report, const WeightedMultigraph& g, const DiscountSpec& spec, Cost value,
                    const Cut& witness) {
    recheck(g, spec, witness, value);
    report.value = value;
    report.witness = to_witness(witness);
    if (spec.budget) report.decision = decide_by_value(spec, value);
}

void run_oracle(SolveReport& report, const Instance& inst, const DiscountSpec& spec) {
    const auto r = oracle_opt(inst.graph, spec);
    solve_with_cut(report, inst.graph, spec, r.optimum, r.witness);
}

void run_reduction(SolveReport& report, const Instance& inst, const DiscountSpec& spec) {
    const auto* emb = inst.embedding ? &*inst.embedding : nullptr;
    ReductionResult r;
    if (spec.objective == Objective::Min && spec.mode == Mode::Cheap) {
        if (spec.is_st())
            r = solve_min_free_cheap(MaxFlowSolver{}, inst.graph, spec);
        else
            r = solve_min_free_cheap(StoerWagnerSolver{}, inst.graph, spec);
    } else if (spec.objective == Objective::Max && spec.mode == Mode::Expensive) {
        if (spec.is_st())
            r = solve_max_free_exp(EnumerationSolver(Objective::Max), inst.graph, spec);
        else
            r = solve_max_free_exp(MaxCutSolver(emb), inst.graph, spec);
    } else {
        throw CapabilityError("the threshold reduction handles min-*-cheap and max-*-exp only");
    }
    report.notes.push_back("classic solver calls " + std::to_string(r.solver_calls));
    solve_with_cut(report, inst.graph, spec, r.value, r.witness);
}

void run_dual(SolveReport& report, const Instance& inst, const DiscountSpec& spec) {
    if (spec.objective != Objective::Min || !spec.is_st() || spec.mode != Mode::Expensive)
        throw CapabilityError("the dual engine solves min-st-exp only");
    if (!inst.embedding) throw CapabilityError("the dual engine needs 'r' rotation lines");
    if (!inst.embedding->is_planar()) throw CapabilityError("the rotation system is not planar");
    const auto r = planar_min_st_cut_k_exp(inst.graph, *inst.embedding, spec.terminals->s, spec.terminals->t, spec.k);
    report.notes.push_back("dual sources scanned " + std::to_string(r.sources_scanned));
    solve_with_cut(report, inst.graph, spec, r.value, r.witness);
}

void run_poly(SolveReport& report, const Instance& inst, const DiscountSpec& spec, const SolveRequest& request,
              PolyBackend backend) {
    if (backend == PolyBackend::Pfaffian && !inst.embedding)
        throw CapabilityError("the fkt backend needs 'r' rotation lines");
    PolyOptions options;
    options.backend = backend;
    options.primes = request.primes;
    options.seed = request.seed;
    const auto* emb = inst.embedding ? &*inst.embedding : nullptr;
    const auto sweep = alg1_sweep(inst.graph, emb, spec.terminals, spec.mode, options);
    const bool any_feasible = std::any_of(sweep.pairs.begin(), sweep.pairs.end(),
                                          [&](const DecodedPair& p) { return p.k_prime <= spec.k; });
    if (spec.objective == Objective::Min && !any_feasible)
        throw CapabilityError("the single-prime sweep captured no feasible cut; rerun with --primes all");
    report.value = alg1_optimum(sweep, spec.objective, spec.k);
    if (spec.budget) report.decision = alg1_decide(sweep, spec.objective, spec.k, *spec.budget).accepted;
    report.notes = sweep.warnings;
    report.notes.push_back("support calls " + std::to_string(sweep.support_calls));
    if (request.primes == PrimePolicy::One) report.notes.push_back("single prime: support may be one-sided");
}

void run_bicriteria(SolveReport& report, const Instance& inst, const DiscountSpec& spec, const SolveRequest& request) {
    if (spec.objective != Objective::Min || spec.is_st() || spec.mode != Mode::Expensive)
        throw CapabilityError("the bicriteria engine solves min-global-exp only");
    BicriteriaOptions options;
    options.path = request.exact ? BicriteriaPath::Exact : BicriteriaPath::Auto;
    options.seed = request.seed;
    const GlobalKExpSweep sweep(inst.graph, options);
    const Cost value = sweep.value(spec.k);
    const auto answer = sweep.decide(spec.k, value);
    if (!answer.witness) throw std::logic_error("bicriteria sweep lost the witness of its own value");
    recheck(inst.graph, spec, *answer.witness, value);
    report.value = value;
    report.witness = to_witness(*answer.witness);
    if (spec.budget) report.decision = sweep.decide(spec.k, *spec.budget).yes;
    report.notes.push_back(sweep.path() == BicriteriaPath::Exact ? "bicriteria path exact"
                                                                 : "bicriteria path randomized: value is an upper bound");
}

std::string join(const std::vector<std::uint64_t>& xs) {
    std::string s;
    for (auto x : xs) {
        s += ' ';
        s += std::to_string(x);
    }
    return s;
}

std::vector<std::uint64_t> parse_list(std::istringstream& in) {
    std::vector<std::uint64_t> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("report: bad list entry '" + tok + "'");
        }
    }
    return out;
}

std::uint64_t parse_uint(const std::string& key, std::istringstream& in) {
    auto xs = parse_list(in);
    if (xs.size() != 1) throw InvalidInput("report: '" + key + "' needs one integer");
    return xs[0];
}

bool parse_decision(const std::string& word) {
    if (word == "yes") return true;
    if (word == "no") return false;
    throw InvalidInput("report: decision must be yes or no");
}

SolveReport parse_text(const std::string& text) {
    SolveReport r;
    std::istringstream lines(text);
    std::string line;
    std::map<std::string, bool> seen;
    ReportWitness w;
    bool has_witness = false;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream in(line);
        std::string key;
        in >> key;
        if (key == "note") {
            std::string rest;
            std::getline(in, rest);
            r.notes.push_back(rest.empty() ? rest : rest.substr(1));
            continue;
        }
        if (seen[key]) throw InvalidInput("report: duplicate key '" + key + "'");
        seen[key] = true;
        if (key == "variant") {
            in >> r.variant;
        } else if (key == "algorithm") {
            in >> r.algorithm;
        } else if (key == "k") {
            r.k = parse_uint(key, in);
        } else if (key == "value") {
            r.value = parse_uint(key, in);
        } else if (key == "budget") {
            r.budget = parse_uint(key, in);
        } else if (key == "seed") {
            r.seed = parse_uint(key, in);
        } else if (key == "decision") {
            std::string word;
            in >> word;
            r.decision = parse_decision(word);
        } else if (key == "time_ms") {
            if (!(in >> r.time_ms)) throw InvalidInput("report: bad time_ms");
        } else if (key == "side_a") {
            w.side_a = parse_list(in);
            has_witness = true;
        } else if (key == "cut_edges") {
            w.cut_edges = parse_list(in);
            has_witness = true;
        } else if (key == "discount_set") {
            w.discount_set = parse_list(in);
            has_witness = true;
        } else {
            throw InvalidInput("report: unknown key '" + key + "'");
        }
    }
    for (const char* key : {"variant", "k", "value"})
        if (!seen[key]) throw InvalidInput(std::string("report: missing '") + key + "'");
    if (has_witness) {
        if (!seen["side_a"] || !seen["cut_edges"] || !seen["discount_set"])
            throw InvalidInput("report: witness needs side_a, cut_edges and discount_set");
        r.witness = std::move(w);
    }
    return r;
}

SolveReport parse_json(const std::string& text) {
    try {
        const Json j = Json::parse(text);
        SolveReport r;
        r.variant = j.at("variant").get<std::string>();
        r.k = j.at("k").get<std::uint64_t>();
        r.value = j.at("value").get<Cost>();
        r.algorithm = j.value("algorithm", std::string{});
        if (j.contains("budget") && !j["budget"].is_null()) r.budget = j["budget"].get<Cost>();
        if (j.contains("decision") && !j["decision"].is_null()) r.decision = parse_decision(j["decision"].get<std::string>());
        if (j.contains("witness") && !j["witness"].is_null()) {
            const auto& jw = j["witness"];
            r.witness = ReportWitness{jw.at("side_a").get<std::vector<std::uint64_t>>(),
                                      jw.at("cut_edges").get<std::vector<std::uint64_t>>(),
                                      jw.at("discount_set").get<std::vector<std::uint64_t>>()};
        }
        r.time_ms = j.value("time_ms", 0.0);
        r.seed = j.value("seed", std::uint64_t{0});
        r.notes = j.value("notes", std::vector<std::string>{});
        return r;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("report: ") + e.what());
    }
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
    for (const auto& [algo, text] : kAlgorithmNames)
        if (text == name) return algo;
    throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm algo) {
    for (const auto& [a, text] : kAlgorithmNames)
        if (a == algo) return text;
    return "?";
}

Algorithm route(const Instance& inst, const DiscountSpec& spec) {
    const bool small = inst.graph.vertex_count() <= kOracleMaxVertices;
    if (spec.objective == Objective::Min) {
        if (spec.mode == Mode::Cheap) return Algorithm::Reduction;
        if (!spec.is_st()) return Algorithm::Bicriteria;
        return planar_connected(inst) || !small ? Algorithm::Dual : Algorithm::Oracle;
    }
    if (spec.mode == Mode::Expensive && !spec.is_st()) return Algorithm::Reduction;
    return small ? Algorithm::Oracle : Algorithm::Poly;
}

SolveReport solve_instance(const Instance& inst, const SolveRequest& request) {
    const auto start = std::chrono::steady_clock::now();
    const DiscountSpec spec = spec_for(inst, request.variant, request.k, request.budget);
    SolveReport report;
    report.variant = variant_name(spec);
    report.k = spec.k;
    report.budget = spec.budget;
    report.seed = request.seed;

    Algorithm algo = request.algorithm;
    PolyBackend backend = request.backend;
    if (algo == Algorithm::Auto) {
        algo = route(inst, spec);
        if (algo == Algorithm::Poly && planar_connected(inst)) backend = PolyBackend::Pfaffian;
    }
    report.algorithm = std::string(algorithm_name(algo));
    switch (algo) {
        case Algorithm::Oracle: run_oracle(report, inst, spec); break;
        case Algorithm::Reduction: run_reduction(report, inst, spec); break;
        case Algorithm::Dual: run_dual(report, inst, spec); break;
        case Algorithm::Poly: run_poly(report, inst, spec, request, backend); break;
        case Algorithm::Bicriteria: run_bicriteria(report, inst, spec, request); break;
        case Algorithm::Auto: break;
    }
    report.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_text(const SolveReport& r) {
    std::ostringstream out;
    out << "variant " << r.variant << '\n' << "k " << r.k << '\n' << "algorithm " << r.algorithm << '\n';
    out << "value " << r.value << '\n';
    if (r.budget) out << "budget " << *r.budget << '\n';
    if (r.decision) out << "decision " << (*r.decision ? "yes" : "no") << '\n';
    if (r.witness) {
        out << "side_a" << join(r.witness->side_a) << '\n';
        out << "cut_edges" << join(r.witness->cut_edges) << '\n';
        out << "discount_set" << join(r.witness->discount_set) << '\n';
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
    out << "time_ms " << buf << '\n' << "seed " << r.seed << '\n';
    for (const auto& n : r.notes) out << "note " << n << '\n';
    return out.str();
}

std::string report_to_json(const SolveReport& r) {
    Json j;
    j["variant"] = r.variant;
    j["k"] = r.k;
    j["algorithm"] = r.algorithm;
    j["value"] = r.value;
    j["budget"] = r.budget ? Json(*r.budget) : Json(nullptr);
    j["decision"] = r.decision ? Json(*r.decision ? "yes" : "no") : Json(nullptr);
    if (r.witness)
        j["witness"] = {{"side_a", r.witness->side_a},
                        {"cut_edges", r.witness->cut_edges},
                        {"discount_set", r.witness->discount_set}};
    else
        j["witness"] = nullptr;
    j["time_ms"] = r.time_ms;
    j["seed"] = r.seed;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

SolveReport parse_report(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InvalidInput("report: empty");
    return text[first] == '{' ? parse_json(text) : parse_text(text);
}

VerifyOutcome verify_report(const Instance& inst, const SolveReport& report) {
    VerifyOutcome out;
    auto fail = [&](std::string msg) { out.problems.push_back(std::move(msg)); };
    const auto& g = inst.graph;
    const std::size_t n = g.vertex_count();

    DiscountSpec spec;
    try {
        spec = spec_for(inst, report.variant, report.k, report.budget);
    } catch (const InvalidInput& e) {
        fail(e.what());
        return out;
    }
    if (report.decision && !report.budget) fail("decision given without a budget");
    if (report.budget && report.decision && decide_by_value(spec, report.value) != *report.decision)
        fail("decision disagrees with value " + std::to_string(report.value) + " against budget " +
             std::to_string(*report.budget));
    if (!report.witness) {
        fail("report carries no witness to verify");
        return out;
    }
    const auto& w = *report.witness;

    SideMask side(n, 0);
    for (auto v : w.side_a) {
        if (v < 1 || v > n) {
            fail("side_a vertex " + std::to_string(v) + " out of range");
            return out;
        }
        if (side[v - 1]) fail("side_a lists vertex " + std::to_string(v) + " twice");
        side[v - 1] = 1;
    }
    const auto on_a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 1));
    if (on_a == 0 || on_a == n) fail("side_a is not a proper nonempty subset");
    if (spec.is_st() && (!side[spec.terminals->s] || side[spec.terminals->t]))
        fail("witness does not separate s from t");

    std::vector<std::uint64_t> cut;
    std::vector<Cost> cut_costs;
    for (const auto& e : g.edges()) {
        if (side[e.u] != side[e.v]) {
            cut.push_back(std::uint64_t{e.id} + 1);
            cut_costs.push_back(e.cost);
        }
    }
    auto listed = w.cut_edges;
    std::sort(listed.begin(), listed.end());
    if (listed != cut) fail("cut_edges do not match the cut of side_a");

    const Cost expected = discounted_cost(cut_costs, spec.k, spec.mode);
    const auto want_size = std::min<std::uint64_t>(spec.k, cut.size());
    auto discount = w.discount_set;
    std::sort(discount.begin(), discount.end());
    if (std::adjacent_find(discount.begin(), discount.end()) != discount.end()) fail("discount_set repeats an edge");
    if (discount.size() != want_size) fail("discount_set should hold " + std::to_string(want_size) + " edges");
    Cost raw = 0, freed = 0;
    for (auto c : cut_costs) raw = checked_add(raw, c);
    for (auto e : discount) {
        if (!std::binary_search(cut.begin(), cut.end(), e)) {
            fail("discount_set edge " + std::to_string(e) + " is not a cut edge");
            continue;
        }
        freed = checked_add(freed, g.edge(static_cast<EdgeId>(e - 1)).cost);
    }
    if (out.problems.empty() && raw - freed != expected)
        fail("discount_set is not the " + std::string(spec.mode == Mode::Expensive ? "most expensive" : "cheapest") +
             " choice");
    if (report.value != expected)
        fail("reported value " + std::to_string(report.value) + " but the witness costs " + std::to_string(expected));
    out.pass = out.problems.empty();
    return out;
}

}  // namespace discut
