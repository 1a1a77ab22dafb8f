#pragma once

#include "discut/cut_polynomial.hpp"
#include "discut/instance_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace discut {

enum class Algorithm { Auto, Oracle, Reduction, Dual, Poly, Bicriteria };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

struct SolveRequest {
    std::string variant = "min-st-exp";
    std::uint64_t k = 0;
    std::optional<Cost> budget;
    Algorithm algorithm = Algorithm::Auto;
    PolyBackend backend = PolyBackend::Brute;
    PrimePolicy primes = PrimePolicy::One;
    std::uint64_t seed = 0;
    bool exact = false;  // bicriteria: force enumeration
};

/// Witness in file numbering: 1-indexed vertices and edge ids.
struct ReportWitness {
    std::vector<std::uint64_t> side_a;
    std::vector<std::uint64_t> cut_edges;
    std::vector<std::uint64_t> discount_set;
};

struct SolveReport {
    std::string variant;
    std::uint64_t k = 0;
    std::string algorithm;
    Cost value = 0;
    std::optional<Cost> budget;
    std::optional<bool> decision;
    std::optional<ReportWitness> witness;  // absent for the polynomial engine
    double time_ms = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
};

/// The engine `Algorithm::Auto` resolves to for this instance and variant.
Algorithm route(const Instance& inst, const DiscountSpec& spec);

/// Runs the selected engine. Witnesses are re-verified against the graph
/// before they are placed in the report.
SolveReport solve_instance(const Instance& inst, const SolveRequest& request);

std::string report_to_text(const SolveReport& report);
std::string report_to_json(const SolveReport& report);

/// Reads either format (JSON when the first non-blank character is '{').
/// Throws InvalidInput on malformed reports.
SolveReport parse_report(const std::string& text);

struct VerifyOutcome {
    bool pass = false;
    std::vector<std::string> problems;
};

/// Recomputes the witness's cut, discount set and discounted cost, checks
/// terminal separation and that value and decision agree with it.
VerifyOutcome verify_report(const Instance& inst, const SolveReport& report);

}  // namespace discut
