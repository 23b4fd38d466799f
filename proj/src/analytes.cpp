#include "ferrex/analytes.hpp"

#include <unordered_map>

namespace ferrex {

const std::array<AnalyteInfo, kAnalyteCount>& analyte_catalog() {
  static const std::array<AnalyteInfo, kAnalyteCount> table = {{
#define FERREX_INFO_ENTRY(name, id, unit, group) \
  {AnalyteCode::name, id, unit, AnalyteGroup::group},
      FERREX_ANALYTE_LIST(FERREX_INFO_ENTRY)
#undef FERREX_INFO_ENTRY
  }};
  return table;
}

const AnalyteInfo& analyte_info(AnalyteCode code) {
  return analyte_catalog()[analyte_index(code)];
}

std::optional<AnalyteCode> analyte_from_string(std::string_view id) {
  static const std::unordered_map<std::string_view, AnalyteCode> lookup = [] {
    std::unordered_map<std::string_view, AnalyteCode> m;
    for (const auto& info : analyte_catalog()) m.emplace(info.id, info.code);
    return m;
  }();
  auto it = lookup.find(id);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

std::span<const AnalyteCode> cbc_analytes() {
  static const std::array<AnalyteCode, 9> cbc = {
      AnalyteCode::Hgb,  AnalyteCode::Hct,  AnalyteCode::Plt,
      AnalyteCode::Mcv,  AnalyteCode::Mch,  AnalyteCode::Mchc,
      AnalyteCode::Rdw,  AnalyteCode::Rbc,  AnalyteCode::Wbc,
  };
  return cbc;
}

std::string_view group_name(AnalyteGroup g) {
  switch (g) {
    case AnalyteGroup::Ferritin: return "ferritin";
    case AnalyteGroup::Cbc: return "cbc";
    case AnalyteGroup::RoutineChemistry: return "routine_chemistry";
    case AnalyteGroup::Coagulation: return "coagulation";
    case AnalyteGroup::Hematology: return "hematology";
    case AnalyteGroup::IronStudies: return "iron_studies";
    case AnalyteGroup::Lipids: return "lipids";
    case AnalyteGroup::Other: return "other";
  }
  return "unknown";
}

}  // namespace ferrex
