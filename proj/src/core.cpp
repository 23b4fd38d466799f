#include "ferrex/core.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "ferrex/csv.hpp"

namespace ferrex {

std::optional<Gender> gender_from_string(std::string_view s) {
  if (s == "M" || s == "m" || s == "male") return Gender::Male;
  if (s == "F" || s == "f" || s == "female") return Gender::Female;
  return std::nullopt;
}

namespace {
constexpr std::size_t slot(std::optional<Gender> g) {
  if (!g) return 2;
  return *g == Gender::Male ? 0 : 1;
}
}  // namespace

RangeTable RangeTable::defaults() {
  RangeTable t;
  // Table 2 limits: HCT male 41% / female 36%; MCV 80 fL; RDW 14.5%.
  t.set(AnalyteCode::Hct, Gender::Male, 41.0, 51.0);
  t.set(AnalyteCode::Hct, Gender::Female, 36.0, 46.0);
  t.set(AnalyteCode::Mcv, std::nullopt, 80.0, 100.0);
  t.set(AnalyteCode::Rdw, std::nullopt, 11.5, 14.5);
  // Abnormally-low ferritin cutoffs: 30 for males, 10 for females.
  t.set(AnalyteCode::Ferritin, Gender::Male, 30.0, std::nullopt);
  t.set(AnalyteCode::Ferritin, Gender::Female, 10.0, std::nullopt);
  return t;
}

void RangeTable::set(AnalyteCode analyte, std::optional<Gender> gender,
                     std::optional<double> low, std::optional<double> high) {
  if (low && high && !(*low < *high))
    throw Error(ErrorKind::ConfigError,
                "reference range low must be below high for " +
                    std::string(analyte_info(analyte).id));
  Entry& e = entries_[analyte_index(analyte)][slot(gender)];
  e.present = true;
  e.low = low;
  e.high = high;
}

void RangeTable::load_overrides(std::istream& in) {
  CsvReader reader(in);
  std::vector<std::string> row;
  if (!reader.next(row) || row.size() != 4 || row[0] != "analyte")
    throw Error(ErrorKind::ConfigError,
                "ranges file must start with header analyte,gender,low,high");
  while (reader.next(row)) {
    if (row.empty() || (row.size() == 1 && row[0].empty())) continue;
    if (row.size() != 4)
      throw Error(ErrorKind::ConfigError, "ranges row needs 4 fields");
    auto analyte = analyte_from_string(row[0]);
    if (!analyte)
      throw Error(ErrorKind::ConfigError, "unknown analyte in ranges file: " + row[0]);
    std::optional<Gender> gender;
    if (row[1] != "ANY" && row[1] != "any") {
      gender = gender_from_string(row[1]);
      if (!gender)
        throw Error(ErrorKind::ConfigError, "bad gender in ranges file: " + row[1]);
    }
    auto bound = [](const std::string& s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      double v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size())
        throw Error(ErrorKind::ConfigError, "bad bound in ranges file: " + s);
      return v;
    };
    set(*analyte, gender, bound(row[2]), bound(row[3]));
  }
}

ReferenceRange RangeTable::reference_limit(AnalyteCode analyte, Gender gender) const {
  const auto& slots = entries_[analyte_index(analyte)];
  const Entry& gendered = slots[slot(gender)];
  const Entry& any = slots[2];
  const Entry& e = gendered.present ? gendered : any;
  if (!e.present)
    throw Error(ErrorKind::NoRangeConfigured,
                "no reference range configured for " +
                    std::string(analyte_info(analyte).id));
  return ReferenceRange{analyte, e.low, e.high};
}

bool RangeTable::has_range(AnalyteCode analyte) const {
  const auto& slots = entries_[analyte_index(analyte)];
  return slots[0].present || slots[1].present || slots[2].present;
}

double age_at(const Patient& patient, UtcTime at) {
  if (at < patient.birth_date)
    throw Error(ErrorKind::InvalidChronology,
                "timestamp precedes birth date for patient " + patient.patient_id);
  const double days =
      static_cast<double>((at - patient.birth_date).sec) / kSecondsPerDay;
  return days / 365.25;
}

}  // namespace ferrex
