#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ferrex {

// Minimal CSV: comma separated, optional double-quoted fields, tolerant of
// trailing \r. Quotes inside quoted fields are doubled.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads one record into `row`; returns false at end of stream.
  bool next(std::vector<std::string>& row);

  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::string buf_;
  std::size_t line_ = 0;
};

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

std::string csv_escape(std::string_view field);

// Shortest round-trip decimal form.
std::string format_double(double v);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

}  // namespace ferrex
