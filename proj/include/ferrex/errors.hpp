#pragma once

#include <stdexcept>
#include <string>

namespace ferrex {

enum class ErrorKind {
  NoRangeConfigured,
  InvalidChronology,
  DuplicatePatient,
  DatasetMismatch,
  EmptyCohort,
  InsufficientData,
  InsufficientPatients,
  SchemaVersionError,
  MissingParameter,
  UndefinedRate,
  UndefinedMetric,
  DivergenceError,
  DegenerateLabels,
  CalibrationFailure,
  ConfigError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ferrex
