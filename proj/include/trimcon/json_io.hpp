#pragma once

#include <string>
#include <vector>

#include "trimcon/analysis.hpp"
#include "trimcon/condition.hpp"
#include "trimcon/engine.hpp"

namespace trimcon {

// Text <-> value converters plus file helpers. The *_from_json functions take
// raw text and a `source` name used in error messages; parse errors carry
// line:column positions, structural errors name the offending element.
// load_* / save_* read and write files, with "-" meaning stdin / stdout.

// {"n": <int>, "edges": [[from, to], ...]}
Digraph digraph_from_json(const std::string& text, const std::string& source = "<json>");
std::string digraph_to_json(const Digraph& g);
Digraph load_digraph(const std::string& path);
void save_digraph(const Digraph& g, const std::string& path);

struct ParsedConfig {
    SimConfig config;
    std::vector<std::string> warnings;  // from split-from-witness derivation
};

// Simulation config. A split adversary may give {"kind":"split",
// "from_witness":true} instead of explicit sets; the loader then searches a
// violating partition whose faulty set matches the config (force_large lifts
// the node-count guard on that search, like --force).
ParsedConfig config_from_json(const std::string& text, const std::string& source = "<json>",
                              bool force_large = false);
std::string config_to_json(const SimConfig& config);

// Bare JSON array of finite numbers, one input value per node.
std::vector<double> inputs_from_json(const std::string& text,
                                     const std::string& source = "<json>");

Trace trace_from_json(const std::string& text, const std::string& source = "<json>");
std::string trace_to_json(const Trace& trace);
Trace load_trace(const std::string& path);
void save_trace(const Trace& trace, const std::string& path);

std::string witness_to_json(const PartitionWitness& w);
std::string report_to_json(const AnalysisReport& rep);

// "round,node,value" rows for every fault-free node, starting at round 0.
std::string trace_states_csv(const Trace& trace);

// "t,max,min,gap,bound" rows per round; the bound column is filled only when
// the report carries a geometric-bound verdict.
std::string analysis_csv(const Trace& trace, const AnalysisReport& rep);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace trimcon
