#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ferrex {

// All times are UTC, second resolution, stored as seconds since the Unix
// epoch. Lab timestamps are minute-or-finer; seconds are plenty.
struct UtcTime {
  std::int64_t sec = 0;

  auto operator<=>(const UtcTime&) const = default;
};

// Signed span in seconds.
struct Duration {
  std::int64_t sec = 0;

  auto operator<=>(const Duration&) const = default;
};

inline constexpr std::int64_t kSecondsPerDay = 86400;

constexpr Duration seconds(std::int64_t n) { return {n}; }
constexpr Duration minutes(std::int64_t n) { return {n * 60}; }
constexpr Duration hours(std::int64_t n) { return {n * 3600}; }
constexpr Duration days(std::int64_t n) { return {n * kSecondsPerDay}; }

// One year = 365.25 days, the same convention age_at uses. Used for the
// "two years prior" style windows; the half-day remainder is irrelevant at
// the 30-day granularity of the pipeline.
constexpr Duration years(std::int64_t n) { return {n * 31557600}; }

constexpr UtcTime operator+(UtcTime t, Duration d) { return {t.sec + d.sec}; }
constexpr UtcTime operator-(UtcTime t, Duration d) { return {t.sec - d.sec}; }
constexpr Duration operator-(UtcTime a, UtcTime b) { return {a.sec - b.sec}; }
constexpr Duration operator+(Duration a, Duration b) { return {a.sec + b.sec}; }
constexpr Duration operator-(Duration a, Duration b) { return {a.sec - b.sec}; }

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// civil-days algorithm).
std::int64_t days_from_civil(int year, unsigned month, unsigned day);
void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day);

bool is_valid_civil(int year, unsigned month, unsigned day);

// "YYYY-MM-DD" -> midnight UTC.
std::optional<UtcTime> parse_date(std::string_view s);

// RFC 3339: "YYYY-MM-DDThh:mm:ss[.frac](Z|+hh:mm|-hh:mm)". Fractional
// seconds are accepted and truncated.
std::optional<UtcTime> parse_timestamp(std::string_view s);

std::string format_date(UtcTime t);
std::string format_timestamp(UtcTime t);

}  // namespace ferrex
