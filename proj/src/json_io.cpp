#include "trimcon/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "trimcon/adversary.hpp"

namespace trimcon {

using nlohmann::json;

namespace {

[[noreturn]] void rethrow_parse(const std::string& source, const std::string& text,
                                const json::parse_error& e) {
    int line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw DomainError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                      e.what());
}

json parse_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        rethrow_parse(source, text, e);
    }
}

[[noreturn]] void fail(const std::string& source, const std::string& message) {
    throw DomainError(source + ": " + message);
}

int require_int(const json& j, const std::string& source, const std::string& what) {
    if (!j.is_number_integer()) fail(source, what + " must be an integer");
    return j.get<int>();
}

double require_number(const json& j, const std::string& source, const std::string& what) {
    if (!j.is_number()) fail(source, what + " must be a number");
    return j.get<double>();
}

json node_array(const NodeSet& s) {
    json out = json::array();
    s.for_each([&](int id) { out.push_back(id); });
    return out;
}

NodeSet node_set(const json& j, const std::string& source, const std::string& what) {
    if (!j.is_array()) fail(source, what + " must be an array of node ids");
    NodeSet s;
    for (const auto& el : j) {
        int id = require_int(el, source, what + " entry");
        if (id < 0) fail(source, what + " holds a negative node id");
        s.insert(id);
    }
    return s;
}

Digraph digraph_from_dom(const json& j, const std::string& source) {
    if (!j.is_object()) fail(source, "graph must be an object with \"n\" and \"edges\"");
    if (!j.contains("n")) fail(source, "graph is missing \"n\"");
    if (!j.contains("edges")) fail(source, "graph is missing \"edges\"");
    int n = require_int(j.at("n"), source, "\"n\"");
    const json& je = j.at("edges");
    if (!je.is_array()) fail(source, "\"edges\" must be an array of [from, to] pairs");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(je.size());
    for (std::size_t k = 0; k < je.size(); ++k) {
        const json& e = je[k];
        if (!e.is_array() || e.size() != 2)
            fail(source, "edge " + std::to_string(k) + " must be a [from, to] pair");
        edges.emplace_back(require_int(e[0], source, "edge " + std::to_string(k) + " endpoint"),
                           require_int(e[1], source, "edge " + std::to_string(k) + " endpoint"));
    }
    try {
        return Digraph(n, std::move(edges));
    } catch (const DomainError& e) {
        fail(source, e.what());
    }
}

json digraph_to_dom(const Digraph& g) {
    json edges = json::array();
    for (const auto& [from, to] : g.edges()) edges.push_back(json::array({from, to}));
    return json{{"n", g.node_count()}, {"edges", std::move(edges)}};
}

json adversary_to_dom(const AdversarySpec& spec) {
    struct Visitor {
        json operator()(const SplitAdversary& s) const {
            return json{{"kind", "split"},         {"left", node_array(s.left)},
                        {"center", node_array(s.center)}, {"right", node_array(s.right)},
                        {"low_value", s.low_value}, {"high_value", s.high_value}};
        }
        json operator()(const FixedAdversary& s) const {
            json values = json::object();
            for (const auto& [node, value] : s.value_per_faulty)
                values[std::to_string(node)] = value;
            return json{{"kind", "fixed"}, {"values", std::move(values)}};
        }
        json operator()(const BroadcastRandomAdversary&) const { return json{{"kind", "random"}}; }
        json operator()(const MismatchRandomAdversary&) const {
            return json{{"kind", "mismatch"}};
        }
    };
    return std::visit(Visitor{}, spec);
}

int parse_node_key(const std::string& key, const std::string& source, const std::string& what) {
    std::size_t pos = 0;
    int id = -1;
    try {
        id = std::stoi(key, &pos);
    } catch (const std::exception&) {
        fail(source, what + " key \"" + key + "\" is not a node id");
    }
    if (pos != key.size() || id < 0)
        fail(source, what + " key \"" + key + "\" is not a node id");
    return id;
}

// Split specs may defer their partition to a condition-check witness; this is
// resolved in config_from_json where graph/faulty/inputs are all known.
struct PendingAdversary {
    AdversarySpec spec = FixedAdversary{};
    bool from_witness = false;
};

PendingAdversary adversary_from_dom(const json& j, const std::string& source) {
    if (!j.is_object() || !j.contains("kind"))
        fail(source, "adversary must be an object with a \"kind\"");
    std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "fixed") {
        FixedAdversary fixed;
        if (j.contains("values")) {
            if (!j.at("values").is_object())
                fail(source, "fixed adversary \"values\" must map node ids to numbers");
            for (const auto& [key, value] : j.at("values").items())
                fixed.value_per_faulty[parse_node_key(key, source, "fixed adversary value")] =
                    require_number(value, source, "fixed adversary value");
        }
        return {AdversarySpec{std::move(fixed)}, false};
    }
    if (kind == "random") return {AdversarySpec{BroadcastRandomAdversary{}}, false};
    if (kind == "mismatch") return {AdversarySpec{MismatchRandomAdversary{}}, false};
    if (kind == "split") {
        if (j.value("from_witness", false)) return {AdversarySpec{SplitAdversary{}}, true};
        SplitAdversary split;
        for (const char* key : {"left", "center", "right"})
            if (!j.contains(key))
                fail(source, std::string("split adversary is missing \"") + key +
                                 "\" (or use \"from_witness\": true)");
        split.left = node_set(j.at("left"), source, "split \"left\"");
        split.center = node_set(j.at("center"), source, "split \"center\"");
        split.right = node_set(j.at("right"), source, "split \"right\"");
        if (!j.contains("low_value") || !j.contains("high_value"))
            fail(source, "split adversary needs \"low_value\" and \"high_value\"");
        split.low_value = require_number(j.at("low_value"), source, "split \"low_value\"");
        split.high_value = require_number(j.at("high_value"), source, "split \"high_value\"");
        return {AdversarySpec{std::move(split)}, false};
    }
    fail(source, "unknown adversary kind \"" + kind +
                     "\" (expected split, fixed, random, or mismatch)");
}

std::vector<double> inputs_from_dom(const json& j, const std::string& source) {
    if (!j.is_array()) fail(source, "\"inputs\" must be an array with one value per node");
    std::vector<double> inputs;
    inputs.reserve(j.size());
    for (const auto& el : j) inputs.push_back(require_number(el, source, "input"));
    return inputs;
}

json config_to_dom(const SimConfig& c) {
    return json{{"graph", digraph_to_dom(c.graph)},
                {"f", c.fault_bound},
                {"faulty", node_array(c.faulty)},
                {"inputs", c.inputs},
                {"adversary", adversary_to_dom(c.adversary)},
                {"max_rounds", c.max_rounds},
                {"epsilon", c.epsilon},
                {"seed", c.seed}};
}

ParsedConfig config_from_dom(const json& j, const std::string& source, bool force_large) {
    if (!j.is_object()) fail(source, "config must be an object");
    if (!j.contains("graph")) fail(source, "config is missing \"graph\"");
    if (!j.contains("f")) fail(source, "config is missing \"f\"");
    if (!j.contains("inputs")) fail(source, "config is missing \"inputs\"");

    SimConfig cfg{digraph_from_dom(j.at("graph"), source)};
    cfg.fault_bound = require_int(j.at("f"), source, "\"f\"");
    if (j.contains("faulty")) cfg.faulty = node_set(j.at("faulty"), source, "\"faulty\"");
    cfg.inputs = inputs_from_dom(j.at("inputs"), source);
    if (j.contains("max_rounds"))
        cfg.max_rounds = require_int(j.at("max_rounds"), source, "\"max_rounds\"");
    if (j.contains("epsilon"))
        cfg.epsilon = require_number(j.at("epsilon"), source, "\"epsilon\"");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer()) fail(source, "\"seed\" must be an integer");
        cfg.seed = j.at("seed").get<std::uint64_t>();
    }

    ParsedConfig out{std::move(cfg), {}};
    if (j.contains("adversary")) {
        PendingAdversary pending = adversary_from_dom(j.at("adversary"), source);
        if (pending.from_witness) {
            if (static_cast<int>(out.config.inputs.size()) != out.config.graph.node_count())
                fail(source, "from_witness needs one input per node");
            auto w = find_violation_with_faulty(out.config.graph, out.config.fault_bound,
                                                out.config.faulty, force_large);
            if (!w)
                fail(source,
                     "graph satisfies the resilience condition for this faulty set; no split "
                     "partition exists to derive");
            SplitFromWitness derived = split_from_witness(*w, out.config.inputs);
            out.config.adversary = std::move(derived.spec);
            out.warnings = std::move(derived.warnings);
        } else {
            out.config.adversary = std::move(pending.spec);
        }
    }
    return out;
}

json round_to_dom(const RoundRecord& rec) {
    json received = json::object();
    for (const auto& [node, msgs] : rec.received) {
        json list = json::array();
        for (const auto& [sender, value] : msgs) list.push_back(json::array({sender, value}));
        received[std::to_string(node)] = std::move(list);
    }
    json kept = json::object();
    for (const auto& [node, set] : rec.kept) kept[std::to_string(node)] = node_array(set);
    json states = json::object();
    for (const auto& [node, value] : rec.states) states[std::to_string(node)] = value;
    json adversary = json::object();
    for (const auto& [node, msgs] : rec.adversary_msgs) {
        json list = json::array();
        for (const auto& [to, value] : msgs) list.push_back(json::array({to, value}));
        adversary[std::to_string(node)] = std::move(list);
    }
    return json{{"t", rec.t},
                {"received", std::move(received)},
                {"kept", std::move(kept)},
                {"states", std::move(states)},
                {"adversary_msgs", std::move(adversary)}};
}

RoundRecord round_from_dom(const json& j, const std::string& source) {
    if (!j.is_object() || !j.contains("t")) fail(source, "round record must be an object with \"t\"");
    RoundRecord rec;
    rec.t = require_int(j.at("t"), source, "round \"t\"");
    if (j.contains("received")) {
        for (const auto& [key, list] : j.at("received").items()) {
            int node = parse_node_key(key, source, "received");
            auto& msgs = rec.received[node];
            if (!list.is_array()) fail(source, "received values must be [sender, value] pairs");
            for (const auto& el : list) {
                if (!el.is_array() || el.size() != 2)
                    fail(source, "received values must be [sender, value] pairs");
                msgs.emplace_back(require_int(el[0], source, "received sender"),
                                  require_number(el[1], source, "received value"));
            }
        }
    }
    if (j.contains("kept"))
        for (const auto& [key, set] : j.at("kept").items())
            rec.kept[parse_node_key(key, source, "kept")] = node_set(set, source, "kept set");
    if (j.contains("states"))
        for (const auto& [key, value] : j.at("states").items())
            rec.states[parse_node_key(key, source, "states")] =
                require_number(value, source, "state");
    if (j.contains("adversary_msgs")) {
        for (const auto& [key, list] : j.at("adversary_msgs").items()) {
            int node = parse_node_key(key, source, "adversary_msgs");
            auto& msgs = rec.adversary_msgs[node];
            if (!list.is_array()) fail(source, "adversary messages must be [to, value] pairs");
            for (const auto& el : list) {
                if (!el.is_array() || el.size() != 2)
                    fail(source, "adversary messages must be [to, value] pairs");
                msgs.emplace_back(require_int(el[0], source, "adversary message recipient"),
                                  require_number(el[1], source, "adversary message value"));
            }
        }
    }
    return rec;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Digraph digraph_from_json(const std::string& text, const std::string& source) {
    return digraph_from_dom(parse_text(text, source), source);
}

std::string digraph_to_json(const Digraph& g) { return digraph_to_dom(g).dump(2) + "\n"; }

Digraph load_digraph(const std::string& path) {
    return digraph_from_json(read_text(path), path == "-" ? "<stdin>" : path);
}

void save_digraph(const Digraph& g, const std::string& path) {
    write_text(path, digraph_to_json(g));
}

ParsedConfig config_from_json(const std::string& text, const std::string& source,
                              bool force_large) {
    return config_from_dom(parse_text(text, source), source, force_large);
}

std::string config_to_json(const SimConfig& config) { return config_to_dom(config).dump(2) + "\n"; }

std::vector<double> inputs_from_json(const std::string& text, const std::string& source) {
    return inputs_from_dom(parse_text(text, source), source);
}

Trace trace_from_json(const std::string& text, const std::string& source) {
    json j = parse_text(text, source);
    if (!j.is_object() || !j.contains("config") || !j.contains("initial") ||
        !j.contains("rounds"))
        fail(source, "trace must be an object with \"config\", \"initial\", and \"rounds\"");
    ParsedConfig parsed = config_from_dom(j.at("config"), source, false);
    std::vector<double> initial = inputs_from_dom(j.at("initial"), source);
    if (static_cast<int>(initial.size()) != parsed.config.graph.node_count())
        fail(source, "\"initial\" must hold one value per node");
    Trace trace{std::move(parsed.config), std::move(initial), {}};
    if (!j.at("rounds").is_array()) fail(source, "\"rounds\" must be an array");
    for (const auto& r : j.at("rounds")) trace.rounds.push_back(round_from_dom(r, source));
    return trace;
}

std::string trace_to_json(const Trace& trace) {
    json rounds = json::array();
    for (const auto& rec : trace.rounds) rounds.push_back(round_to_dom(rec));
    json j{{"config", config_to_dom(trace.config)},
           {"initial", trace.initial},
           {"rounds", std::move(rounds)}};
    return j.dump(2) + "\n";
}

Trace load_trace(const std::string& path) {
    return trace_from_json(read_text(path), path == "-" ? "<stdin>" : path);
}

void save_trace(const Trace& trace, const std::string& path) {
    write_text(path, trace_to_json(trace));
}

std::string witness_to_json(const PartitionWitness& w) {
    json j{{"faulty", node_array(w.faulty)},
           {"left", node_array(w.left)},
           {"center", node_array(w.center)},
           {"right", node_array(w.right)}};
    return j.dump();
}

std::string report_to_json(const AnalysisReport& rep) {
    json j{{"max_series", rep.max_series},
           {"min_series", rep.min_series},
           {"gap_series", rep.gap_series},
           {"validity_ok", rep.validity_ok},
           {"envelope_lower_ok", rep.envelope_lower_ok},
           {"envelope_upper_ok", rep.envelope_upper_ok},
           {"min_weight", rep.min_weight ? json(*rep.min_weight) : json(nullptr)},
           {"contraction_factor",
            rep.contraction_factor ? json(*rep.contraction_factor) : json(nullptr)},
           {"condition_satisfied",
            rep.condition_satisfied ? json(*rep.condition_satisfied) : json(nullptr)},
           {"geometric_bound_ok",
            rep.geometric_bound_ok ? json(*rep.geometric_bound_ok) : json(nullptr)},
           {"converged_round", rep.converged_round ? json(*rep.converged_round) : json(nullptr)}};
    return j.dump(2) + "\n";
}

std::string trace_states_csv(const Trace& trace) {
    std::string out = "round,node,value\n";
    const int n = trace.config.graph.node_count();
    for (int i = 0; i < n; ++i)
        if (!trace.config.faulty.contains(i))
            out += "0," + std::to_string(i) + "," +
                   format_double(trace.initial[static_cast<std::size_t>(i)]) + "\n";
    for (const auto& rec : trace.rounds)
        for (const auto& [node, value] : rec.states)
            out += std::to_string(rec.t) + "," + std::to_string(node) + "," +
                   format_double(value) + "\n";
    return out;
}

std::string analysis_csv(const Trace& trace, const AnalysisReport& rep) {
    std::string out = "t,max,min,gap,bound\n";
    const int block = trace.config.graph.node_count() - trace.config.fault_bound - 1;
    const bool with_bound = rep.geometric_bound_ok.has_value() && !rep.gap_series.empty();
    for (std::size_t t = 0; t < rep.gap_series.size(); ++t) {
        out += std::to_string(t) + "," + format_double(rep.max_series[t]) + "," +
               format_double(rep.min_series[t]) + "," + format_double(rep.gap_series[t]);
        if (with_bound && block > 0) {
            double bound = rep.gap_series[0];
            for (int k = 0; k < static_cast<int>(t) / block; ++k)
                bound *= *rep.contraction_factor;
            out += "," + format_double(bound);
        } else {
            out += ",";
        }
        out += "\n";
    }
    return out;
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw DomainError("failed reading " + path);
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw DomainError("failed writing " + path);
}

}  // namespace trimcon
