#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace ferrex {

enum class AnalyteGroup : std::uint8_t {
  Ferritin,
  Cbc,
  RoutineChemistry,
  Coagulation,
  Hematology,  // non-routine CBC hematology
  IronStudies,
  Lipids,
  Other,
};

// X(code, csv_id, unit, group)
#define FERREX_ANALYTE_LIST(X)                                   \
  X(Ferritin, "FERRITIN", "lab units", Ferritin)                 \
  X(Hgb, "HGB", "g/dL", Cbc)                                     \
  X(Hct, "HCT", "%", Cbc)                                        \
  X(Plt, "PLT", "10^3/uL", Cbc)                                  \
  X(Mcv, "MCV", "fL", Cbc)                                       \
  X(Mch, "MCH", "pg", Cbc)                                       \
  X(Mchc, "MCHC", "g/dL", Cbc)                                   \
  X(Rdw, "RDW", "%", Cbc)                                        \
  X(Rbc, "RBC", "10^6/uL", Cbc)                                  \
  X(Wbc, "WBC", "10^3/uL", Cbc)                                  \
  X(Alt, "ALT", "U/L", RoutineChemistry)                         \
  X(Albumin, "ALB", "g/dL", RoutineChemistry)                    \
  X(AlkPhos, "ALP", "U/L", RoutineChemistry)                     \
  X(AnionGap, "AGAP", "mmol/L", RoutineChemistry)                \
  X(Ast, "AST", "U/L", RoutineChemistry)                         \
  X(Bicarbonate, "HCO3", "mmol/L", RoutineChemistry)             \
  X(Bun, "BUN", "mg/dL", RoutineChemistry)                       \
  X(Calcium, "CA", "mg/dL", RoutineChemistry)                    \
  X(Chloride, "CL", "mmol/L", RoutineChemistry)                  \
  X(Creatinine, "CREAT", "mg/dL", RoutineChemistry)              \
  X(Globulin, "GLOB", "g/dL", RoutineChemistry)                  \
  X(Glucose, "GLU", "mg/dL", RoutineChemistry)                   \
  X(Magnesium, "MG", "mg/dL", RoutineChemistry)                  \
  X(Phosphorus, "PHOS", "mg/dL", RoutineChemistry)               \
  X(Potassium, "K", "mmol/L", RoutineChemistry)                  \
  X(Sodium, "NA", "mmol/L", RoutineChemistry)                    \
  X(TotalBilirubin, "TBILI", "mg/dL", RoutineChemistry)          \
  X(TotalProtein, "TPROT", "g/dL", RoutineChemistry)             \
  X(Aptt, "APTT", "s", Coagulation)                              \
  X(DDimer, "DDIMER", "ng/mL", Coagulation)                      \
  X(Inr, "INR", "ratio", Coagulation)                            \
  X(Pt, "PT", "s", Coagulation)                                  \
  X(AbsBasophils, "ABS_BASO", "10^3/uL", Hematology)             \
  X(AbsEosinophils, "ABS_EOS", "10^3/uL", Hematology)            \
  X(AbsLymphocytes, "ABS_LYMPH", "10^3/uL", Hematology)          \
  X(AbsMonocytes, "ABS_MONO", "10^3/uL", Hematology)             \
  X(AbsNeutrophils, "ABS_NEUT", "10^3/uL", Hematology)           \
  X(Bands, "BANDS", "%", Hematology)                             \
  X(Metas, "METAS", "%", Hematology)                             \
  X(Myelos, "MYELOS", "%", Hematology)                           \
  X(PctBasophils, "PCT_BASO", "%", Hematology)                   \
  X(PctEosinophils, "PCT_EOS", "%", Hematology)                  \
  X(PctLymphocytes, "PCT_LYMPH", "%", Hematology)                \
  X(PctMonocytes, "PCT_MONO", "%", Hematology)                   \
  X(PctNeutrophils, "PCT_NEUT", "%", Hematology)                 \
  X(PctNucleatedRbc, "PCT_NRBC", "%", Hematology)                \
  X(ReactiveLymphs, "REACT_LYMPH", "%", Hematology)              \
  X(Retic, "RETIC", "%", Hematology)                             \
  X(Schistocytes, "SCHISTO", "/hpf", Hematology)                 \
  X(Iron, "IRON", "ug/dL", IronStudies)                          \
  X(Tibc, "TIBC", "ug/dL", IronStudies)                          \
  X(Cholesterol, "CHOL", "mg/dL", Lipids)                        \
  X(Hdl, "HDL", "mg/dL", Lipids)                                 \
  X(Ldl, "LDL", "mg/dL", Lipids)                                 \
  X(Triglycerides, "TRIG", "mg/dL", Lipids)                      \
  X(Amylase, "AMYLASE", "U/L", Other)                            \
  X(B12, "B12", "pg/mL", Other)                                  \
  X(Crp, "CRP", "mg/L", Other)                                   \
  X(Cea, "CEA", "ng/mL", Other)                                  \
  X(CreatineKinase, "CK", "U/L", Other)                          \
  X(DirectBilirubin, "DBILI", "mg/dL", Other)                    \
  X(Esr, "ESR", "mm/h", Other)                                   \
  X(FolicAcid, "FOLATE", "ng/mL", Other)                         \
  X(FreeT4, "FT4", "ng/dL", Other)                               \
  X(Ldh, "LDH", "U/L", Other)                                    \
  X(Lipase, "LIPASE", "U/L", Other)                              \
  X(NtProBnp, "NTPROBNP", "pg/mL", Other)                        \
  X(Osmolality, "OSMO", "mOsm/kg", Other)                        \
  X(Pth, "PTH", "pg/mL", Other)                                  \
  X(LacticAcid, "LACTATE", "mmol/L", Other)                      \
  X(Psa, "PSA", "ng/mL", Other)                                  \
  X(Testosterone, "TESTOSTERONE", "ng/dL", Other)                \
  X(TroponinT, "TROPT", "ng/mL", Other)                          \
  X(Tsh, "TSH", "mIU/L", Other)                                  \
  X(UricAcid, "URIC", "mg/dL", Other)                            \
  X(UrineTotalProtein, "UPROT", "mg/dL", Other)                  \
  X(VitaminD, "VITD", "ng/mL", Other)

enum class AnalyteCode : std::uint8_t {
#define FERREX_ENUM_ENTRY(name, id, unit, group) name,
  FERREX_ANALYTE_LIST(FERREX_ENUM_ENTRY)
#undef FERREX_ENUM_ENTRY
};

inline constexpr std::size_t kAnalyteCount = []() {
  std::size_t n = 0;
#define FERREX_COUNT_ENTRY(name, id, unit, group) ++n;
  FERREX_ANALYTE_LIST(FERREX_COUNT_ENTRY)
#undef FERREX_COUNT_ENTRY
  return n;
}();

struct AnalyteInfo {
  AnalyteCode code;
  std::string_view id;    // code used in CSV files
  std::string_view unit;  // canonical unit, label only
  AnalyteGroup group;
};

const std::array<AnalyteInfo, kAnalyteCount>& analyte_catalog();

const AnalyteInfo& analyte_info(AnalyteCode code);

std::optional<AnalyteCode> analyte_from_string(std::string_view id);

// The nine CBC parameters, in catalog order.
std::span<const AnalyteCode> cbc_analytes();

inline std::size_t analyte_index(AnalyteCode c) {
  return static_cast<std::size_t>(c);
}

std::string_view group_name(AnalyteGroup g);

}  // namespace ferrex
