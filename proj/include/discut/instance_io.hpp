#pragma once

#include "discut/embedding.hpp"
#include "discut/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace discut {

class ParseError : public InvalidInput {
public:
    ParseError(std::size_t line, const std::string& message)
        : InvalidInput("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A parsed instance file.
///
///     c <free text>
///     p discut <n> <m>
///     e <i> <u> <v> <cost>      (i = 1..m, 1-indexed vertices)
///     t <s> <t>
///     r <v> <d1> <d2> ...       (+i / -i darts in clockwise order)
struct Instance {
    WeightedMultigraph graph;
    std::optional<Terminals> terminals;
    std::optional<PlaneEmbedding> embedding;
    std::vector<std::string> comments;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& inst);
std::string instance_to_string(const Instance& inst);

/// Signed file notation of a dart: +(e+1) for 2e, -(e+1) for 2e+1.
long long dart_to_signed(Dart d);

}  // namespace discut
