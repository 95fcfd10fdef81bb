#pragma once

#include <string>

#include <json.hpp>

#include "evg/group.hpp"

namespace evg {

struct AnalysisCaps {
  int closure_cap = kDefaultClosureCap;
  int subgroup_cap = kDefaultSubgroupCap;
};

// Full per-group report: evolving (with witness), prime-intense, Sylow
// family, supersolvable, graph/decomposition when evolving, Tate records.
// Deterministic: canonical key order, sorted arrays.
nlohmann::ordered_json analyze_group(const std::string& name, const FiniteGroup& G,
                                     const AnalysisCaps& caps = {});

std::string render_text_report(const nlohmann::ordered_json& report);

}  // namespace evg
