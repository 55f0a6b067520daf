#pragma once

#include <string_view>

#include <json.hpp>

#include "pcrit/characterizations.hpp"
#include "pcrit/criticality.hpp"
#include "pcrit/graph.hpp"
#include "pcrit/solver.hpp"

namespace pcrit {

enum class CriticalityMode { edge, vertex, both };

/// Throws Error(unknown_name).
CriticalityMode criticality_mode_from_string(std::string_view name);
CriticalityOptions criticality_options(CriticalityMode mode, bool witnesses,
                                       const SolveOptions& solve);

nlohmann::json coloring_json(const PackingColoring& c);

/// {"graph6", "order", "size", "chi_rho", "nodes"[, "witness"]}
nlohmann::json chi_rho_json(const Graph& g, const ChiRhoResult& r, bool witness);

/// Values per deleted edge/vertex, verdicts, and for edge mode the drop
/// profile with the bound check.
nlohmann::json criticality_json(const Graph& g, const CriticalityReport& r);

nlohmann::json verdict_json(const TheoremVerdict& v);
nlohmann::json summary_json(const VerifySummary& s);

}  // namespace pcrit
