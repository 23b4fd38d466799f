#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ferrex/analytes.hpp"
#include "ferrex/errors.hpp"
#include "ferrex/time.hpp"

namespace ferrex {

enum class Gender : std::uint8_t { Male, Female };

inline char gender_letter(Gender g) { return g == Gender::Male ? 'M' : 'F'; }
std::optional<Gender> gender_from_string(std::string_view s);

struct Patient {
  std::string patient_id;
  Gender gender = Gender::Female;
  UtcTime birth_date;  // midnight UTC of the calendar date
};

struct LabResult {
  std::string patient_id;
  AnalyteCode analyte = AnalyteCode::Ferritin;
  double value = 0.0;
  UtcTime collected_at;
};

// Gender-resolved reference interval; low/high in the analyte's catalog unit.
struct ReferenceRange {
  AnalyteCode analyte = AnalyteCode::Ferritin;
  std::optional<double> low;
  std::optional<double> high;
};

// Compiled-in adult reference limits, overridable from a CSV of
// analyte,gender,low,high rows (gender one of M/F/ANY, empty field = open
// bound). Limits are applied regardless of age.
class RangeTable {
 public:
  static RangeTable defaults();

  // Replaces/adds entries from an override stream; throws ConfigError on
  // malformed rows.
  void load_overrides(std::istream& in);

  void set(AnalyteCode analyte, std::optional<Gender> gender,
           std::optional<double> low, std::optional<double> high);

  // Gender-resolved lookup. Gender-independent analytes return the same
  // range for both genders. Throws NoRangeConfigured for analytes without
  // a configured range.
  ReferenceRange reference_limit(AnalyteCode analyte, Gender gender) const;

  bool has_range(AnalyteCode analyte) const;

 private:
  struct Entry {
    bool present = false;
    std::optional<double> low;
    std::optional<double> high;
  };
  // Per analyte: [male, female, any]
  std::array<std::array<Entry, 3>, kAnalyteCount> entries_{};
};

// Age in whole-plus-fractional years at `at`, as days/365.25.
// Throws InvalidChronology when `at` precedes the birth date.
double age_at(const Patient& patient, UtcTime at);

}  // namespace ferrex
