#pragma once

#include "knotlattice/alternating.hpp"

#include <string>

#include <nlohmann/json.hpp>

namespace knotlattice {

/// Full analysis report for a connected diagram (surfaces, invariants,
/// alternating verdict, reducedness, special-genus block).
nlohmann::ordered_json analyze_diagram(const LinkDiagram& d, const EnumerationOptions& opts = {});

/// Human-readable rendering of the analysis report; derived from the JSON,
/// never computed separately.
std::string render_report(const nlohmann::ordered_json& report);

nlohmann::ordered_json tait_report_json(const TaitReport& rep);

} // namespace knotlattice
