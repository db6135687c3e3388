#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trimcon/analysis.hpp"
#include "trimcon/condition.hpp"
#include "trimcon/engine.hpp"
#include "trimcon/generators.hpp"
#include "trimcon/json_io.hpp"
#include "trimcon/rng.hpp"

namespace {

using namespace trimcon;

NodeSet set_from_list(const std::vector<int>& ids, const char* what) {
    NodeSet s;
    for (int id : ids) {
        if (id < 0) throw DomainError(std::string(what) + " holds a negative node id");
        s.insert(id);
    }
    return s;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct GenerateArgs {
    std::string type;
    int n = -1;
    int f = -1;
    int d = -1;
    std::string output;
};

int cmd_generate(const GenerateArgs& a) {
    auto need = [&](bool ok, const char* flag) {
        if (!ok)
            throw DomainError(std::string(flag) + " is required for --type " + a.type);
    };
    std::optional<Digraph> g;
    if (a.type == "complete") {
        need(a.n >= 0, "--n");
        g = complete(a.n);
    } else if (a.type == "chord") {
        need(a.n >= 0, "--n");
        need(a.f >= 0, "--f");
        g = chord(a.n, a.f);
    } else if (a.type == "hypercube") {
        need(a.d >= 0, "--d");
        g = hypercube(a.d);
    } else {
        need(a.n >= 0, "--n");
        need(a.f >= 0, "--f");
        g = core_network(a.n, a.f);
    }
    save_digraph(*g, a.output);
    std::cout << "nodes=" << g->node_count() << " edges=" << g->edge_count() << "\n";
    return 0;
}

struct CheckArgs {
    std::string graph;
    int f = -1;
    bool force = false;
};

int cmd_check(const CheckArgs& a) {
    Digraph g = load_digraph(a.graph);
    CheckVerdict verdict = check_condition(g, a.f, a.force);
    if (verdict.satisfies()) {
        std::cout << "SATISFIES\n";
        return 0;
    }
    std::cout << "VIOLATED\n" << witness_to_json(*verdict.witness) << "\n";
    return 1;
}

struct SimulateArgs {
    std::string graph;
    int f = -1;
    std::vector<int> faulty;
    std::string inputs_file;
    std::vector<double> inputs_uniform;
    std::string adversary;
    std::vector<int> split_left, split_center, split_right;
    double split_low = std::numeric_limits<double>::quiet_NaN();
    double split_high = std::numeric_limits<double>::quiet_NaN();
    bool split_from_witness_flag = false;
    std::vector<std::string> fixed_values;
    int rounds = 100;
    double epsilon = 1e-6;
    std::uint64_t seed = 0;
    std::string trace_file;
    std::string csv_file;
    std::string config_file;
    bool force = false;
};

AdversarySpec assemble_adversary(const SimulateArgs& a, const Digraph& g, const NodeSet& faulty,
                                 const std::vector<double>& inputs,
                                 std::vector<std::string>& warnings) {
    std::string kind = a.adversary;
    if (kind.empty()) {
        if (!faulty.empty())
            throw DomainError("faulty nodes given; choose --adversary split|fixed|random|mismatch");
        return FixedAdversary{};
    }
    if (kind == "random") return BroadcastRandomAdversary{};
    if (kind == "mismatch") return MismatchRandomAdversary{};
    if (kind == "fixed") {
        FixedAdversary fixed;
        for (const auto& entry : a.fixed_values) {
            auto eq = entry.find('=');
            std::size_t pos = 0;
            int node = -1;
            double value = 0;
            bool ok = eq != std::string::npos;
            if (ok) {
                try {
                    node = std::stoi(entry.substr(0, eq), &pos);
                    ok = pos == eq;
                    value = std::stod(entry.substr(eq + 1), &pos);
                    ok = ok && pos == entry.size() - eq - 1;
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (!ok || node < 0)
                throw DomainError("--fixed-value needs the form node=value, got \"" + entry + "\"");
            fixed.value_per_faulty[node] = value;
        }
        return fixed;
    }
    if (kind == "split") {
        if (a.split_from_witness_flag) {
            auto w = find_violation_with_faulty(g, a.f, faulty, a.force);
            if (!w)
                throw DomainError(
                    "graph satisfies the resilience condition for this faulty set; no split "
                    "partition exists to derive");
            SplitFromWitness derived = split_from_witness(*w, inputs);
            warnings = std::move(derived.warnings);
            return derived.spec;
        }
        if (a.split_left.empty() || a.split_right.empty())
            throw DomainError(
                "split adversary needs --split-left and --split-right (or --split-from-witness)");
        SplitAdversary split;
        split.left = set_from_list(a.split_left, "--split-left");
        split.center = set_from_list(a.split_center, "--split-center");
        split.right = set_from_list(a.split_right, "--split-right");
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < g.node_count(); ++i) {
            if (faulty.contains(i)) continue;
            lo = std::min(lo, inputs[static_cast<std::size_t>(i)]);
            hi = std::max(hi, inputs[static_cast<std::size_t>(i)]);
        }
        split.low_value = std::isnan(a.split_low) ? lo - 1.0 : a.split_low;
        split.high_value = std::isnan(a.split_high) ? hi + 1.0 : a.split_high;
        return split;
    }
    throw DomainError("unknown adversary \"" + kind + "\"");
}

int cmd_simulate(const SimulateArgs& a) {
    std::optional<SimConfig> cfg;
    std::vector<std::string> warnings;

    if (!a.config_file.empty()) {
        ParsedConfig parsed =
            config_from_json(read_text(a.config_file),
                             a.config_file == "-" ? "<stdin>" : a.config_file, a.force);
        cfg = std::move(parsed.config);
        warnings = std::move(parsed.warnings);
    } else {
        if (a.graph.empty()) throw DomainError("--graph is required (or use --config)");
        if (a.f < 0) throw DomainError("--f is required (or use --config)");
        Digraph g = load_digraph(a.graph);
        NodeSet faulty = set_from_list(a.faulty, "--faulty");

        std::vector<double> inputs;
        if (!a.inputs_file.empty() && !a.inputs_uniform.empty())
            throw DomainError("choose one of --inputs and --inputs-uniform");
        if (!a.inputs_file.empty()) {
            inputs = inputs_from_json(read_text(a.inputs_file),
                                      a.inputs_file == "-" ? "<stdin>" : a.inputs_file);
        } else if (!a.inputs_uniform.empty()) {
            if (a.inputs_uniform.size() != 2 || a.inputs_uniform[0] >= a.inputs_uniform[1])
                throw DomainError("--inputs-uniform needs lo,hi with lo < hi");
            for (int i = 0; i < g.node_count(); ++i)
                inputs.push_back(keyed_uniform(a.inputs_uniform[0], a.inputs_uniform[1],
                                               {kStreamInputs, a.seed,
                                                static_cast<std::uint64_t>(i)}));
        } else {
            throw DomainError("inputs are required: --inputs file.json or --inputs-uniform lo,hi");
        }

        AdversarySpec adversary = assemble_adversary(a, g, faulty, inputs, warnings);
        cfg = SimConfig{std::move(g), a.f,       std::move(faulty), std::move(inputs),
                        std::move(adversary),    a.rounds,          a.epsilon,
                        a.seed};
    }

    print_warnings(warnings);
    auto diagnostics = validate_config(*cfg);
    bool bad = false;
    for (const auto& d : diagnostics) {
        if (d.level == Diagnostic::Level::error) {
            std::cerr << "error: " << d.message << "\n";
            bad = true;
        } else {
            std::cerr << "warning: " << d.message << "\n";
        }
    }
    if (bad) return 2;

    Trace trace = run(*cfg);
    if (!a.trace_file.empty()) save_trace(trace, a.trace_file);
    if (!a.csv_file.empty()) write_text(a.csv_file, trace_states_csv(trace));

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& [node, value] : trace.rounds.back().states) {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    double gap = hi - lo;
    int t = static_cast<int>(trace.rounds.size());
    if (gap <= cfg->epsilon) {
        std::cout << "CONVERGED round=" << t << " gap=" << gap << "\n";
        return 0;
    }
    std::cout << "NON-CONVERGED rounds=" << t << " gap=" << gap << "\n";
    return 1;
}

struct AnalyzeArgs {
    std::string trace_file;
    std::string report_file = "-";
    std::string csv_file;
};

int cmd_analyze(const AnalyzeArgs& a) {
    Trace trace = load_trace(a.trace_file);
    AnalysisReport rep = report(trace);
    write_text(a.report_file, report_to_json(rep));
    if (!a.csv_file.empty()) write_text(a.csv_file, analysis_csv(trace, rep));
    bool failed = !rep.validity_ok || !rep.envelope_lower_ok || !rep.envelope_upper_ok ||
                  (rep.geometric_bound_ok.has_value() && !*rep.geometric_bound_ok);
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "resilience checking and trimmed-mean consensus simulation on directed graphs"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "write a standard topology as graph JSON");
    generate->add_option("--type", gen.type, "complete | chord | hypercube | core")
        ->required()
        ->check(CLI::IsMember({"complete", "chord", "hypercube", "core"}));
    generate->add_option("--n", gen.n, "node count");
    generate->add_option("--f", gen.f, "fault bound the topology is built for");
    generate->add_option("--d", gen.d, "hypercube dimension");
    generate->add_option("-o,--output", gen.output, "graph JSON path (- for stdout)")->required();

    CheckArgs chk;
    CLI::App* check = app.add_subcommand(
        "check", "decide whether a graph tolerates f Byzantine nodes; exit 1 when it cannot");
    check->add_option("-g,--graph", chk.graph, "graph JSON path (- for stdin)")->required();
    check->add_option("--f", chk.f, "fault bound")->required()->check(CLI::NonNegativeNumber);
    check->add_flag("--force", chk.force, "run the exponential search past the node-count guard");

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "run the trimmed-mean iteration and record a trace; exit 1 on non-convergence");
    simulate->add_option("-g,--graph", sim.graph, "graph JSON path (- for stdin)");
    simulate->add_option("--f", sim.f, "fault bound")->check(CLI::NonNegativeNumber);
    simulate->add_option("--faulty", sim.faulty, "faulty node ids, e.g. 5,6")->delimiter(',');
    simulate->add_option("--inputs", sim.inputs_file, "JSON array with one input per node");
    simulate
        ->add_option("--inputs-uniform", sim.inputs_uniform,
                     "draw inputs uniformly from lo,hi (seeded)")
        ->delimiter(',');
    simulate
        ->add_option("--adversary", sim.adversary, "split | fixed | random | mismatch")
        ->check(CLI::IsMember({"split", "fixed", "random", "mismatch"}));
    simulate->add_option("--split-left", sim.split_left, "recipients of the low value")
        ->delimiter(',');
    simulate->add_option("--split-center", sim.split_center, "recipients of the midpoint")
        ->delimiter(',');
    simulate->add_option("--split-right", sim.split_right, "recipients of the high value")
        ->delimiter(',');
    simulate->add_option("--split-low", sim.split_low,
                         "low value (default: min fault-free input - 1)");
    simulate->add_option("--split-high", sim.split_high,
                         "high value (default: max fault-free input + 1)");
    simulate->add_flag("--split-from-witness", sim.split_from_witness_flag,
                       "derive the split partition from a condition-check witness");
    simulate
        ->add_option("--fixed-value", sim.fixed_values, "node=value for the fixed adversary")
        ->take_all();
    simulate->add_option("--rounds", sim.rounds, "round limit (default 100)");
    simulate->add_option("--epsilon", sim.epsilon, "stop once the spread is this small (1e-6)");
    simulate->add_option("--seed", sim.seed, "seed for every random draw (default 0)");
    simulate->add_option("--trace", sim.trace_file, "write the full trace JSON here");
    simulate->add_option("--csv", sim.csv_file, "write round,node,value states CSV here");
    simulate->add_option("--config", sim.config_file,
                         "read a full simulation config JSON instead of flags");
    simulate->add_flag("--force", sim.force,
                       "lift the node-count guard on witness derivation");

    AnalyzeArgs ana;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "verify trace guarantees and emit a report; exit 1 when a check fails");
    analyze->add_option("--trace", ana.trace_file, "trace JSON path (- for stdin)")->required();
    analyze->add_option("--report", ana.report_file, "report JSON path (default stdout)");
    analyze->add_option("--csv", ana.csv_file, "write t,max,min,gap,bound series CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (check->parsed()) return cmd_check(chk);
        if (simulate->parsed()) return cmd_simulate(sim);
        if (analyze->parsed()) return cmd_analyze(ana);
    } catch (const ConfigError& e) {
        for (const auto& d : e.diagnostics())
            std::cerr << (d.level == Diagnostic::Level::error ? "error: " : "warning: ")
                      << d.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
