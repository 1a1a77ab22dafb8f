#include "discut/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace discut {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
    T value{};
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line, std::string("malformed ") + what + " '" + std::string(field) + "'");
    return value;
}

}  // namespace

long long dart_to_signed(Dart d) {
    const auto e = static_cast<long long>(dart_edge(d)) + 1;
    return (d & 1u) ? -e : e;
}

Instance parse_instance(std::istream& in) {
    Instance inst;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    struct PendingEdge {
        bool seen = false;
        VertexId u = 0, v = 0;
        Cost cost = 0;
    };
    std::vector<PendingEdge> edges;
    std::vector<std::optional<std::vector<long long>>> rotation_lines;
    std::vector<std::size_t> rotation_line_no;
    bool any_rotation = false;

    auto vertex = [&](std::string_view f, std::size_t ln) {
        const auto v = parse_number<long long>(f, ln, "vertex");
        if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError(ln, "vertex out of range");
        return static_cast<VertexId>(v - 1);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        const auto fields = split_fields(raw);
        if (fields.empty()) continue;
        const auto tag = fields[0];
        if (tag == "c") {
            const auto pos = raw.find('c');
            auto text = raw.substr(pos + 1);
            if (!text.empty() && text.front() == ' ') text.erase(0, 1);
            while (!text.empty() && (text.back() == '\r')) text.pop_back();
            inst.comments.push_back(text);
            continue;
        }
        if (!have_header) {
            if (tag != "p") throw ParseError(line_no, "expected 'p discut <n> <m>' header");
            if (fields.size() != 4 || fields[1] != "discut") throw ParseError(line_no, "malformed header");
            n = parse_number<std::size_t>(fields[2], line_no, "vertex count");
            m = parse_number<std::size_t>(fields[3], line_no, "edge count");
            edges.resize(m);
            rotation_lines.resize(n);
            rotation_line_no.resize(n, 0);
            have_header = true;
            continue;
        }
        if (tag == "p") throw ParseError(line_no, "duplicate header");
        if (tag == "e") {
            if (fields.size() != 5) throw ParseError(line_no, "edge record needs 'e <i> <u> <v> <cost>'");
            const auto id = parse_number<long long>(fields[1], line_no, "edge id");
            if (id < 1 || static_cast<std::size_t>(id) > m) throw ParseError(line_no, "edge id out of range");
            auto& pe = edges[static_cast<std::size_t>(id - 1)];
            if (pe.seen) throw ParseError(line_no, "duplicate edge id " + std::to_string(id));
            pe.seen = true;
            pe.u = vertex(fields[2], line_no);
            pe.v = vertex(fields[3], line_no);
            if (pe.u == pe.v) throw ParseError(line_no, "self-loops are not allowed");
            pe.cost = parse_number<Cost>(fields[4], line_no, "cost");
        } else if (tag == "t") {
            if (fields.size() != 3) throw ParseError(line_no, "terminal record needs 't <s> <t>'");
            if (inst.terminals) throw ParseError(line_no, "duplicate terminal record");
            const auto s = vertex(fields[1], line_no);
            const auto t = vertex(fields[2], line_no);
            if (s == t) throw ParseError(line_no, "terminals must be distinct");
            inst.terminals = Terminals{s, t};
        } else if (tag == "r") {
            if (fields.size() < 2) throw ParseError(line_no, "rotation record needs a vertex");
            const auto v = vertex(fields[1], line_no);
            if (rotation_lines[v]) throw ParseError(line_no, "duplicate rotation for vertex");
            std::vector<long long> darts;
            for (std::size_t i = 2; i < fields.size(); ++i) {
                const auto d = parse_number<long long>(fields[i], line_no, "dart");
                if (d == 0 || static_cast<std::size_t>(d < 0 ? -d : d) > m)
                    throw ParseError(line_no, "dangling dart " + std::string(fields[i]));
                darts.push_back(d);
            }
            rotation_lines[v] = std::move(darts);
            rotation_line_no[v] = line_no;
            any_rotation = true;
        } else {
            throw ParseError(line_no, "unknown record tag '" + std::string(tag) + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    for (std::size_t i = 0; i < m; ++i)
        if (!edges[i].seen) throw ParseError(line_no, "missing edge record " + std::to_string(i + 1));

    inst.graph = WeightedMultigraph(n);
    for (const auto& pe : edges) inst.graph.add_edge(pe.u, pe.v, pe.cost);

    if (any_rotation) {
        std::vector<std::vector<Dart>> rotation(n);
        std::vector<std::uint8_t> used(2 * m, 0);
        for (VertexId v = 0; v < n; ++v) {
            if (!rotation_lines[v])
                throw ParseError(line_no, "vertex " + std::to_string(v + 1) + " has no rotation record");
            const auto ln = rotation_line_no[v];
            for (auto sd : *rotation_lines[v]) {
                const auto e = static_cast<EdgeId>((sd < 0 ? -sd : sd) - 1);
                const Dart d = sd > 0 ? forward_dart(e) : reverse_dart(forward_dart(e));
                const auto& edge = inst.graph.edge(e);
                if ((sd > 0 ? edge.u : edge.v) != v)
                    throw ParseError(ln, "dangling dart " + std::to_string(sd) + " does not leave vertex " +
                                             std::to_string(v + 1));
                if (used[d]) throw ParseError(ln, "dart " + std::to_string(sd) + " listed twice");
                used[d] = 1;
                rotation[v].push_back(d);
            }
        }
        for (Dart d = 0; d < 2 * m; ++d)
            if (!used[d]) throw ParseError(line_no, "dart " + std::to_string(dart_to_signed(d)) + " missing from rotations");
        inst.embedding = PlaneEmbedding(inst.graph, std::move(rotation));
    }
    return inst;
}

Instance parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open instance file '" + path + "'");
    return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    const auto& g = inst.graph;
    for (const auto& c : inst.comments) out << "c " << c << '\n';
    out << "p discut " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.id + 1 << ' ' << e.u + 1 << ' ' << e.v + 1 << ' ' << e.cost << '\n';
    if (inst.terminals) out << "t " << inst.terminals->s + 1 << ' ' << inst.terminals->t + 1 << '\n';
    if (inst.embedding) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            out << "r " << v + 1;
            for (auto d : inst.embedding->rotation(v)) out << ' ' << (d & 1u ? "" : "+") << dart_to_signed(d);
            out << '\n';
        }
    }
}

std::string instance_to_string(const Instance& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

}  // namespace discut
