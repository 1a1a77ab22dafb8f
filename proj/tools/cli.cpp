#include "discut/cli.hpp"

#include "discut/cut_polynomial.hpp"
#include "discut/gadget.hpp"
#include "discut/generators.hpp"
#include "discut/instance_io.hpp"
#include "discut/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace discut {
namespace {

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kCapability = 3 };

template <typename E>
CLI::CheckedTransformer choice(const std::map<std::string, E>& names) {
    return CLI::CheckedTransformer(names, CLI::ignore_case);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InvalidInput("cannot write " + path);
    file << text;
}

// error class -> exit code; anything unexpected is a bug and propagates
int classify(const std::exception_ptr& error, std::string& message) {
    try {
        std::rethrow_exception(error);
    } catch (const CapabilityError& e) {
        message = e.what();
        return kCapability;
    } catch (const InstanceTooLarge& e) {
        message = e.what();
        return kCapability;
    } catch (const OverflowError& e) {
        message = e.what();
        return kCapability;
    } catch (const InvalidInput& e) {
        message = e.what();
        return kUsage;
    }
}

struct SolveArgs {
    std::vector<std::string> files;
    SolveRequest request;
    std::size_t jobs = 1;
    bool json = false;
};

struct FileOutcome {
    std::optional<SolveReport> report;
    int code = kYes;
    std::string error;
};

FileOutcome solve_file(const std::string& path, const SolveRequest& request) {
    FileOutcome r;
    try {
        const Instance inst = read_instance_file(path);
        r.report = solve_instance(inst, request);
        r.code = r.report->decision.value_or(true) ? kYes : kNo;
    } catch (const Error&) {
        r.code = classify(std::current_exception(), r.error);
    }
    return r;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<FileOutcome> results(args.files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < args.files.size();) results[i] = solve_file(args.files[i], args.request);
    };
    const std::size_t threads = std::clamp<std::size_t>(args.jobs, 1, args.files.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    const bool many = args.files.size() > 1;
    int code = kYes;
    nlohmann::json array = nlohmann::json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        code = std::max(code, r.code);
        if (!r.report) {
            err << (many ? args.files[i] + ": " : std::string{}) << "error: " << r.error << '\n';
            continue;
        }
        if (args.json) {
            auto j = nlohmann::json::parse(report_to_json(*r.report));
            if (many) {
                j["file"] = args.files[i];
                array.push_back(std::move(j));
            } else {
                out << j.dump(2) << '\n';
            }
        } else {
            if (many) out << "file " << args.files[i] << '\n';
            out << report_to_text(*r.report);
            if (many && i + 1 < results.size()) out << '\n';
        }
    }
    if (args.json && many) out << array.dump(2) << '\n';
    return code;
}

struct PolyArgs {
    std::string file;
    PolyOptions options;
    bool json = false;
};

int cmd_poly(const PolyArgs& args, std::ostream& out) {
    const Instance inst = read_instance_file(args.file);
    if (args.options.backend == PolyBackend::Pfaffian && !inst.embedding)
        throw CapabilityError("the fkt backend needs 'r' rotation lines");
    const auto* emb = inst.embedding ? &*inst.embedding : nullptr;
    const auto support = recover_support(inst.graph, emb, args.options);
    if (args.json) {
        nlohmann::json j{{"support", support.costs}, {"primes", support.primes}, {"one_sided", support.one_sided}};
        out << j.dump(2) << '\n';
    } else {
        for (auto c : support.costs) out << c << '\n';
    }
    return kYes;
}

struct GadgetArgs {
    std::string file;
    std::uint64_t k = 0;
    GadgetVariant variant = GadgetVariant::NP;
    bool simple = false;
    std::string output;
};

int cmd_gadget(const GadgetArgs& args, std::ostream& out) {
    const Instance source = read_instance_file(args.file);
    const auto g = build_gadget(source.graph, args.k, args.variant, args.simple);
    Instance inst;
    inst.graph = g.graph;
    inst.terminals = g.terminals;
    std::ostringstream line;
    line << "gadget variant " << (g.variant == GadgetVariant::NP ? "np" : "w1") << (g.simple ? " simple" : "")
         << " source_n " << g.source_vertices << " d " << g.d << " k " << g.k;
    inst.comments.push_back(line.str());
    inst.comments.push_back("p " + std::to_string(g.p) + " q " + std::to_string(g.q) + " k_prime " +
                            std::to_string(g.k_prime) + " beta " + std::to_string(g.beta));
    inst.comments.push_back("clique of size " + std::to_string(g.k) + " iff min-st-exp with k " +
                            std::to_string(g.k_prime) + " has value <= " + std::to_string(g.beta));
    emit(instance_to_string(inst), args.output, out);
    return kYes;
}

enum class GenKind { Grid, RandomPlanar, Random };

struct GenArgs {
    GenKind kind = GenKind::Grid;
    std::size_t n = 0;
    Cost max_cost = 10;
    std::uint64_t seed = 0;
    bool diagonals = false;
    std::size_t parallel = 0;
    std::uint32_t density = 30;
    std::string output;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
    Instance inst;
    switch (args.kind) {
        case GenKind::Grid: inst = generate_grid(args.n, args.max_cost, args.seed); break;
        case GenKind::RandomPlanar:
            inst = generate_random_planar(args.n, args.max_cost, args.seed,
                                          RandomPlanarOptions{args.diagonals, args.parallel});
            break;
        case GenKind::Random: inst = generate_random(args.n, args.max_cost, args.seed, args.density); break;
    }
    emit(instance_to_string(inst), args.output, out);
    return kYes;
}

struct VerifyArgs {
    std::string instance;
    std::string report;
    bool json = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const Instance inst = read_instance_file(args.instance);
    const SolveReport report = parse_report(read_text(args.report));
    const auto outcome = verify_report(inst, report);
    if (args.json) {
        out << nlohmann::json{{"pass", outcome.pass}, {"problems", outcome.problems}}.dump(2) << '\n';
    } else {
        out << "verify " << (outcome.pass ? "pass" : "fail") << '\n';
        for (const auto& p : outcome.problems) out << "problem " << p << '\n';
    }
    return outcome.pass ? kYes : kNo;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discounted cut solvers, oracles and instance generators", "discut"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve one of the eight discounted cut variants");
    s->add_option("files", solve.files, "Instance files")->required()->check(CLI::ExistingFile);
    s->add_option("--variant", solve.request.variant, "min|max - st|global - exp|cheap")->capture_default_str();
    s->add_option("-k", solve.request.k, "Number of free edges")->capture_default_str();
    s->add_option("--budget", solve.request.budget, "Decision threshold beta");
    std::string algo = "auto";
    s->add_option("--algo", algo, "auto|oracle|reduction|dual|poly|bicriteria")
        ->check(CLI::IsMember({"auto", "oracle", "reduction", "dual", "poly", "bicriteria"}))
        ->capture_default_str();
    s->add_option("--backend", solve.request.backend, "Cut polynomial backend: brute|fkt")
        ->transform(choice<PolyBackend>({{"brute", PolyBackend::Brute}, {"fkt", PolyBackend::Pfaffian}}));
    s->add_option("--primes", solve.request.primes, "Prime policy: one|all")
        ->transform(choice<PrimePolicy>({{"one", PrimePolicy::One}, {"all", PrimePolicy::All}}));
    s->add_option("--seed", solve.request.seed, "Random seed")->capture_default_str();
    s->add_flag("--exact", solve.request.exact, "Bicriteria: enumerate instead of sampling");
    s->add_option("--jobs", solve.jobs, "Files solved in parallel")->check(CLI::PositiveNumber);
    s->add_flag("--json", solve.json, "Structured output");

    PolyArgs poly;
    auto* p = app.add_subcommand("poly", "Print the support of the cut generating polynomial");
    p->add_option("file", poly.file, "Instance file")->required()->check(CLI::ExistingFile);
    p->add_option("--backend", poly.options.backend, "brute|fkt")
        ->transform(choice<PolyBackend>({{"brute", PolyBackend::Brute}, {"fkt", PolyBackend::Pfaffian}}));
    p->add_option("--primes", poly.options.primes, "one|all")
        ->transform(choice<PrimePolicy>({{"one", PrimePolicy::One}, {"all", PrimePolicy::All}}));
    p->add_option("--seed", poly.options.seed, "Random seed");
    p->add_flag("--json", poly.json, "Structured output");

    GadgetArgs gadget;
    auto* gd = app.add_subcommand("gadget", "Build the clique gadget over a regular source graph");
    gd->add_option("file", gadget.file, "Source graph instance")->required()->check(CLI::ExistingFile);
    gd->add_option("-k", gadget.k, "Clique size")->required();
    gd->add_option("--variant", gadget.variant, "np|w1")
        ->transform(choice<GadgetVariant>({{"np", GadgetVariant::NP}, {"w1", GadgetVariant::W1}}));
    gd->add_flag("--simple", gadget.simple, "Subdivide every edge once");
    gd->add_option("-o,--output", gadget.output, "Output file (stdout by default)");

    GenArgs gen;
    auto* gn = app.add_subcommand("gen", "Generate an instance");
    gn->add_option("kind", gen.kind, "grid|random-planar|random")
        ->required()
        ->transform(choice<GenKind>(
            {{"grid", GenKind::Grid}, {"random-planar", GenKind::RandomPlanar}, {"random", GenKind::Random}}));
    gn->add_option("-n", gen.n, "Vertex count")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
    gn->add_option("--max-cost", gen.max_cost, "Costs are uniform in [1, max-cost]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gn->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    gn->add_flag("--diagonals", gen.diagonals, "random-planar: add one diagonal per grid cell");
    gn->add_option("--parallel", gen.parallel, "random-planar: parallel edges to add");
    gn->add_option("--density", gen.density, "random: extra edge probability in percent")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    gn->add_option("-o,--output", gen.output, "Output file (stdout by default)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Re-check a solve report against its instance");
    v->add_option("instance", verify.instance, "Instance file")->required()->check(CLI::ExistingFile);
    v->add_option("report", verify.report, "Report file (text or JSON)")->required()->check(CLI::ExistingFile);
    v->add_flag("--json", verify.json, "Structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kYes : kUsage;
    }

    try {
        if (*s) {
            solve.request.algorithm = parse_algorithm(algo);
            return cmd_solve(solve, out, err);
        }
        if (*p) return cmd_poly(poly, out);
        if (*gd) return cmd_gadget(gadget, out);
        if (*gn) return cmd_gen(gen, out);
        if (*v) return cmd_verify(verify, out);
    } catch (const Error&) {
        std::string message;
        const int code = classify(std::current_exception(), message);
        err << "error: " << message << '\n';
        return code;
    }
    return kUsage;
}

}  // namespace discut
