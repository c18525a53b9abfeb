#include "wtss/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wtss/checks.hpp"
#include "wtss/generators.hpp"
#include "wtss/report.hpp"
#include "wtss/wtg.hpp"

namespace wtss {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

VertexSet parse_seed_set(const std::string& text, const Instance& instance) {
    VertexSet seed;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InvalidInput("seed set: '" + item + "' is not a vertex id");
        }
        if (!instance.has_vertex(v)) throw InvalidInput("seed set: unknown vertex " + std::to_string(v));
        seed.insert(v);
    }
    return seed;
}

struct Options {
    std::string input;
    std::string seed_set;
    std::string incentives_path;
    std::string method = "auto";
    std::string kind;
    std::optional<int> limit_n;
    std::string receipt_path;
    bool deterministic = false;

    GenSpec gen;
    std::string family = "random";
    std::string weights = "integers";
    std::string thresholds = "uniform";
    std::string fixed_threshold = "1";

    std::string check_name;
    int count = 0;
    std::uint64_t check_seed = checks::SweepOptions{}.seed;
};

Json validate_command(const Options& o) {
    const auto doc = parse_wtg(read_text(o.input));
    return Json{{"kind", "validate"},
                {"valid", true},
                {"mode", to_string(doc.instance.mode())},
                {"n", doc.instance.n()},
                {"m", doc.instance.edges().size()},
                {"has_incentives", doc.incentives.has_value()}};
}

Json simulate_command(const Options& o) {
    const auto doc = parse_wtg(read_text(o.input));
    const Instance& g = doc.instance;
    if (!o.seed_set.empty() && !o.incentives_path.empty()) {
        throw UsageError("--seed-set and --incentives are mutually exclusive");
    }
    if (!o.incentives_path.empty() || (o.seed_set.empty() && doc.incentives)) {
        const IncentiveVector p =
            o.incentives_path.empty() ? *doc.incentives : parse_incentives(read_text(o.incentives_path), g.n());
        Json report = trace_report(g, run_with_incentives(g, p));
        report["incentives"] = incentives_json(p);
        report["cost"] = incentive_cost(p).to_string();
        return report;
    }
    const VertexSet seed = parse_seed_set(o.seed_set, g);
    Json report = trace_report(g, run_activation(g, seed));
    report["seed_set"] = vertex_set_json(seed);
    return report;
}

Json degeneracy_command(const Options& o) {
    const auto doc = parse_wtg(read_text(o.input));
    return peel_report(peel_ordering(doc.instance));
}

Json solve_command(const Options& o) {
    const auto doc = parse_wtg(read_text(o.input));
    const Instance& g = doc.instance;
    if (o.method == "auto") {
        auto report = classify_and_solve(g);
        if (!report) throw PreconditionError("solve: no polynomial-time method applies to this instance");
        return solve_report(*report);
    }
    if (o.method == "slack-set") return slack_target_set_report(slack_target_set(g));
    if (o.method == "degenerate") return solve_report(degenerate_target_vector(g));
    if (o.method == "two-level") return solve_report(two_level_target_vector(g));
    if (o.method == "min-or-full") return solve_report(min_or_full_target_vector(g));
    return vertex_cover_report(vertex_cover_target_set(g));
}

Json oracle_command(const Options& o) {
    const auto doc = parse_wtg(read_text(o.input));
    const Instance& g = doc.instance;
    const OracleLimits defaults;
    if (o.kind == "target-set") {
        return set_oracle_report(o.kind, exact_min_target_set(g, o.limit_n.value_or(defaults.target_set)));
    }
    if (o.kind == "vertex-cover") {
        return set_oracle_report(o.kind, exact_min_vertex_cover(g, o.limit_n.value_or(defaults.vertex_cover)));
    }
    return vector_oracle_report(exact_target_vector(g, o.limit_n.value_or(defaults.target_vector)));
}

/// Writes the image instance to `out`; the receipt goes to --receipt when given.
void reduce_command(const Options& o, std::ostream& out) {
    const auto doc = parse_wtg(read_text(o.input));
    const ReductionReceipt receipt = o.kind == "complete" ? tss_to_complete(doc.instance)
                                     : o.kind == "hub"      ? degenerate_to_complete(doc.instance)
                                                            : to_bidirected(doc.instance);
    if (!o.receipt_path.empty()) {
        std::ofstream file(o.receipt_path, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + o.receipt_path + "'");
        file << emit_report(receipt_report(receipt), std::nullopt);
    }
    out << serialize_wtg(receipt.image);
}

void gen_command(Options o, std::ostream& out) {
    try {
        o.gen.family = parse_family(o.family);
        o.gen.weights = parse_weight_scheme(o.weights);
        o.gen.thresholds = parse_threshold_policy(o.thresholds);
        o.gen.fixed_threshold = Rational::parse(o.fixed_threshold);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    out << serialize_wtg(generate(o.gen));
}

Json check_command(const Options& o) {
    checks::SweepOptions options;
    options.count = o.count;
    options.seed = o.check_seed;
    checks::SweepResult result;
    try {
        result = checks::run_sweep(o.check_name, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Json tallies = Json::object();
    for (const auto& [key, value] : result.tallies) tallies[key] = value;
    Json report{{"kind", "check"},
                {"check", result.name},
                {"seed", o.check_seed},
                {"instances", result.instances},
                {"passed", result.passed},
                {"failure", result.passed ? Json(nullptr) : Json(result.failure)},
                {"tallies", tallies}};
    return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Target set selection and incentive solvers for edge-weighted threshold graphs", "wtss"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--deterministic", o.deterministic, "Omit wall time so reports are byte-reproducible");

    auto add_input = [&o](CLI::App* sub) { sub->add_option("file", o.input, "WTG instance file, '-' for stdin")->required(); };

    auto* validate = app.add_subcommand("validate", "Parse and validate an instance");
    add_input(validate);

    auto* simulate = app.add_subcommand("simulate", "Run the activation process");
    add_input(simulate);
    simulate->add_option("--seed-set", o.seed_set, "Comma-separated seed vertices, e.g. 1,3");
    simulate->add_option("--incentives", o.incentives_path, "File of 'p <id> <value>' lines");

    auto* degeneracy = app.add_subcommand("degeneracy", "Peel the instance; report an ordering or a stuck set");
    add_input(degeneracy);

    auto* solve = app.add_subcommand("solve", "Run a polynomial-time solver");
    add_input(solve);
    solve->add_option("--method", o.method, "Solver")
        ->transform(CLI::Transformer({{"algorithm-one", "slack-set"}}).description(""))
        ->check(CLI::IsMember({"auto", "slack-set", "degenerate", "two-level", "min-or-full", "vc-bound"}));

    auto* oracle = app.add_subcommand("oracle", "Run an exhaustive oracle");
    oracle->add_option("kind", o.kind, "target-set | target-vector | vertex-cover")
        ->required()
        ->check(CLI::IsMember({"target-set", "target-vector", "vertex-cover"}));
    add_input(oracle);
    oracle->add_option("--limit-n", o.limit_n, "Largest n the oracle will enumerate");

    auto* reduce = app.add_subcommand("reduce", "Apply an instance reduction; prints the image instance");
    reduce->add_option("kind", o.kind, "complete | hub | bidirect")
        ->required()
        ->transform(CLI::Transformer({{"prop1", "complete"}, {"prop3", "hub"}}).description(""))
        ->check(CLI::IsMember({"complete", "hub", "bidirect"}));
    add_input(reduce);
    reduce->add_option("--receipt", o.receipt_path, "Write the reduction receipt (JSON) to this file");

    auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->add_option("--family", o.family, "random | degenerate | cubic | tournament | two-level | min-or-full");
    gen->add_option("--n", o.gen.n, "Vertex count");
    gen->add_option("--p", o.gen.edge_probability, "Edge probability");
    gen->add_option("--weights", o.weights, "integers | halves | unit");
    gen->add_option("--weight-max", o.gen.weight_max, "Largest weight");
    gen->add_option("--thresholds", o.thresholds, "uniform | fixed | degree-range");
    gen->add_option("--fixed-threshold", o.fixed_threshold, "Threshold for --thresholds fixed");
    gen->add_option("--slack-max", o.gen.slack_max, "Largest slack (degenerate family)");
    gen->add_option("--full-probability", o.gen.full_probability, "Probability of a full threshold");
    gen->add_flag("--connected", o.gen.connected, "Force a connected graph");
    gen->add_option("--seed", o.gen.seed, "Random seed");

    auto* check = app.add_subcommand("check", "Run a named property sweep");
    check->add_option("name", o.check_name, "Sweep name")->required();
    check->add_option("--count", o.count, "Number of instances (0 = default)");
    check->add_option("--seed", o.check_seed, "Random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&]() -> std::optional<double> {
        if (o.deterministic) return std::nullopt;
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    try {
        if (reduce->parsed()) {
            reduce_command(o, out);
            return exit_ok;
        }
        if (gen->parsed()) {
            gen_command(o, out);
            return exit_ok;
        }
        Json report;
        if (validate->parsed()) report = validate_command(o);
        if (simulate->parsed()) report = simulate_command(o);
        if (degeneracy->parsed()) report = degeneracy_command(o);
        if (solve->parsed()) report = solve_command(o);
        if (oracle->parsed()) report = oracle_command(o);
        if (check->parsed()) report = check_command(o);
        out << emit_report(report, elapsed());
        if (check->parsed() && !report["passed"].get<bool>()) {
            err << "check failed: " << report["failure"].get<std::string>() << "\n";
            return exit_check_failed;
        }
        return exit_ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_invalid_input;
    } catch (const PreconditionError& e) {
        err << "precondition not met: " << e.what() << "\n";
        return exit_precondition;
    } catch (const OracleLimitError& e) {
        err << "oracle limit exceeded: " << e.what() << "\n";
        return exit_oracle_limit;
    }
}

}  // namespace wtss
