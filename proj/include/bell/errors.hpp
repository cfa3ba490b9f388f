#pragma once

#include <stdexcept>
#include <string>

namespace bell {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// State construction parameter gives a product state (no entanglement to work with).
struct DegenerateState : Error {
  explicit DegenerateState(const std::string& m) : Error(m) {}
};

/// Detector parameters outside their admissible ranges.
struct ModelRange : Error {
  explicit ModelRange(const std::string& m) : Error(m) {}
};

/// A setting pair carries zero double-click mass; conditional statistics undefined.
struct NoCoincidences : Error {
  explicit NoCoincidences(const std::string& m) : Error(m) {}
};

/// Closed-form expression only valid for zero background noise.
struct NoiseUnsupported : Error {
  explicit NoiseUnsupported(const std::string& m) : Error(m) {}
};

/// No detection efficiency in (0,1] admits a violation for this configuration.
struct NoThreshold : Error {
  explicit NoThreshold(const std::string& m) : Error(m) {}
};

struct BadWeights : Error {
  explicit BadWeights(const std::string& m) : Error(m) {}
};

/// A numerical routine failed to reach its required accuracy.
struct Numerical : Error {
  explicit Numerical(const std::string& m) : Error(m) {}
};

struct NoViolationInRange : Error {
  explicit NoViolationInRange(const std::string& m) : Error(m) {}
};

/// A setting pair has no recorded trials.
struct EmptySetting : Error {
  explicit EmptySetting(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m) {}
};

}  // namespace bell
