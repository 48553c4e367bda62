#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "pollinfo/errors.hpp"

namespace pollinfo {

/// What to do when I = 1/S or a Fisher term divides by zero.
enum class SingularityPolicy { Saturate, Error };

inline std::string_view to_string(SingularityPolicy p) {
  return p == SingularityPolicy::Saturate ? "saturate" : "error";
}

inline SingularityPolicy parse_singularity_policy(std::string_view s) {
  if (s == "saturate") return SingularityPolicy::Saturate;
  if (s == "error") return SingularityPolicy::Error;
  throw ConfigError("unknown singularity policy '" + std::string(s) + "' (expected saturate|error)");
}

/// Accepts "2", "e", "10" and any other numeric value > 1.
inline double parse_log_base(std::string_view s) {
  if (s == "e") return std::numbers::e;
  std::size_t used = 0;
  double b = 0.0;
  try {
    b = std::stod(std::string(s), &used);
  } catch (const std::exception&) {
    throw ConfigError("log base '" + std::string(s) + "' is not a number");
  }
  if (used != s.size()) throw ConfigError("log base '" + std::string(s) + "' is not a number");
  return b;
}

/// Human label for a base: bits, nats, Hartleys, or the number itself.
inline std::string base_unit(double base) {
  if (base == 2.0) return "bits";
  if (base == std::numbers::e) return "nats";
  if (base == 10.0) return "Hartleys";
  return "log-base-" + std::to_string(base) + " units";
}

struct AnalysisConfig {
  double log_base = 10.0;
  /// Strength of disorder in the SDL complexity.
  double alpha = 1.0;
  /// Strength of order in the SDL complexity.
  double beta = 1.0;
  /// Max |sum(raw row) - 100| accepted before renormalizing, in percentage points.
  double normalization_tolerance = 5.0;
  SingularityPolicy singularity_policy = SingularityPolicy::Saturate;

  void validate() const {
    if (!(log_base > 1.0) || !std::isfinite(log_base))
      throw ConfigError("log base must be a finite number > 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be >= 0");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be >= 0");
    if (!(normalization_tolerance >= 0.0) || !std::isfinite(normalization_tolerance))
      throw ConfigError("normalization tolerance must be >= 0");
  }

  bool operator==(const AnalysisConfig&) const = default;
};

}  // namespace pollinfo
