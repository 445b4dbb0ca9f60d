#pragma once

#include "mbg/engine.hpp"
#include "mbg/family.hpp"
#include "mbg/graph.hpp"

#include "json.hpp"

#include <string>

namespace mbg {

// Graph JSON: {"n": int, "edges": [[u,v], ...]} with canonical sorted edges.
nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

// Family JSON: {"groups": [{"name": str, "sets": [[id, ...], ...]}, ...]}.
nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j, int element_count);

// Trace JSON: {"version", "config", "variant", "bias", "stages", "tau_observed",
// "truncated"} plus "forfeit" when present. `config` is caller-supplied and
// carried verbatim.
nlohmann::json trace_to_json(const MatchTrace& trace, const nlohmann::json& config);
MatchTrace trace_from_json(const nlohmann::json& j);

std::string summary_csv_header();
std::string summary_csv_row(const std::string& game, int n, int b, const std::string& maker,
                            const std::string& breaker, const std::string& variant,
                            std::uint64_t seed, const MatchTrace& trace);

} // namespace mbg
