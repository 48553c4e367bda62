#pragma once

// SPDX-License-Identifier: Apache-2.0

/**
 * @file measures.hpp
 * @brief Entropy, order/disorder and complexity measures of one categorical distribution.
 *
 * Every function here is pure. Saturated results (I at S = 0, Fisher terms x/0)
 * are represented as +infinity and rendered as "inf" by the report writer.
 */

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>

#include "pollinfo/config.hpp"
#include "pollinfo/distribution.hpp"
#include "pollinfo/errors.hpp"

namespace pollinfo {

inline constexpr double kSaturated = std::numeric_limits<double>::infinity();

inline bool is_saturated(double v) noexcept { return std::isinf(v) && v > 0; }

/// All measures for one distribution at one time point.
struct MeasureVector {
  double s = 0.0;               ///< Shannon entropy, in units of the log base
  double s_max = 0.0;           ///< log_base(n)
  double information = 0.0;     ///< 1/S, or kSaturated
  double disorder = 0.0;        ///< S / S_max
  double order = 0.0;           ///< 1 - disorder
  double gamma = 0.0;           ///< SDL complexity disorder^alpha * order^beta
  double disequilibrium = 0.0;  ///< squared distance from uniform
  double lmc = 0.0;             ///< S * D
  double fisher = 0.0;          ///< discrete Fisher information, or kSaturated

  bool operator==(const MeasureVector&) const = default;
};

namespace detail {

inline void require_base(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) throw ConfigError("log base must be a finite number > 1");
}

// Slack for comparisons against S_max; rounding in the summation can overshoot log n slightly.
inline constexpr double kBoundSlack = 1e-12;

}  // namespace detail

/// -sum p_i log_base p_i with 0 log 0 = 0.
inline double shannon_entropy(const Distribution& dist, double base) {
  detail::require_base(base);
  double nats = 0.0;
  for (double p : dist.probs())
    if (p > 0.0) nats -= p * std::log(p);
  // Clamp rounding residue so 0 <= S <= log n holds exactly.
  const double max_nats = std::log(double(dist.size()));
  if (nats < 0.0) nats = 0.0;
  if (nats > max_nats) nats = max_nats;
  return nats / std::log(base);
}

inline double max_entropy(std::size_t n, double base) {
  detail::require_base(base);
  if (n < 2) throw DomainError("maximum entropy needs n >= 2 outcomes");
  return std::log(double(n)) / std::log(base);
}

/// I = 1/S. At S = 0 returns kSaturated or throws, depending on policy.
inline double information(double s, SingularityPolicy policy, std::optional<long> t = std::nullopt) {
  if (!(s >= 0.0)) throw DomainError("entropy must be >= 0");
  if (s > 0.0) return 1.0 / s;
  if (policy == SingularityPolicy::Saturate) return kSaturated;
  throw SingularityError(
      t ? "information 1/S is undefined at t=" + std::to_string(*t) + " (S = 0)" : "information 1/S is undefined (S = 0)",
      t);
}

/// Landsberg disorder S / S_max.
inline double disorder(double s, double s_max) {
  if (!(s_max > 0.0)) throw DomainError("S_max must be > 0");
  if (!(s >= 0.0)) throw DomainError("entropy must be >= 0");
  if (s > s_max + detail::kBoundSlack) throw InvariantError("entropy exceeds its maximum log n");
  return s >= s_max ? 1.0 : s / s_max;
}

inline double order(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("disorder must lie in [0,1]");
  return 1.0 - delta;
}

/// Shiner-Davison-Landsberg complexity delta^alpha * omega^beta (0^0 = 1).
inline double sdl_complexity(double delta, double omega, double alpha = 1.0, double beta = 1.0) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw ConfigError("SDL exponents must be >= 0");
  if (!(delta >= 0.0 && delta <= 1.0) || !(omega >= 0.0 && omega <= 1.0))
    throw DomainError("disorder and order must lie in [0,1]");
  if (std::abs(delta + omega - 1.0) > kProbabilityTolerance) throw DomainError("disorder + order must equal 1");
  return std::pow(delta, alpha) * std::pow(omega, beta);
}

/// sum (p_i - 1/n)^2
inline double disequilibrium(const Distribution& dist) {
  const double u = 1.0 / double(dist.size());
  double d = 0.0;
  for (double p : dist.probs()) d += (p - u) * (p - u);
  return d;
}

/// Lopez-Ruiz-Mancini-Calbet complexity S * D.
inline double lmc_complexity(double s, double d) {
  if (!(s >= 0.0) || !(d >= 0.0)) throw DomainError("LMC complexity needs S >= 0 and D >= 0");
  return s * d;
}

/**
 * Discrete Fisher information sum_{i=1}^{n-1} (p_{i+1} - p_i)^2 / p_i.
 *
 * A term with p_i = 0 and p_{i+1} = 0 contributes 0. A term with p_i = 0 and
 * p_{i+1} > 0 saturates the result or throws a SingularityError carrying i.
 */
inline double fisher_discrete(const Distribution& dist, SingularityPolicy policy,
                              std::optional<long> t = std::nullopt) {
  const auto p = dist.probs();
  double f = 0.0;
  bool saturated = false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double diff = p[i + 1] - p[i];
    if (p[i] > 0.0) {
      f += diff * diff / p[i];
    } else if (p[i + 1] != 0.0) {
      if (policy == SingularityPolicy::Error) {
        std::string msg = "Fisher term " + std::to_string(i + 1) + " divides by p_" + std::to_string(i + 1) + " = 0";
        if (t) msg += " at t=" + std::to_string(*t);
        throw SingularityError(msg, t, i);
      }
      saturated = true;
    }
  }
  return saturated ? kSaturated : f;
}

/// Throws InvariantError if v breaks the bounds every MeasureVector must satisfy.
inline void check_invariants(const MeasureVector& v, std::size_t n) {
  constexpr double tol = 1e-12;
  if (std::abs(v.disorder + v.order - 1.0) > tol) throw InvariantError("disorder + order != 1");
  if (v.s < -tol || v.s > v.s_max + tol) throw InvariantError("entropy outside [0, S_max]");
  if (v.disequilibrium < -tol || v.disequilibrium > double(n - 1) / double(n) + tol)
    throw InvariantError("disequilibrium outside [0, (n-1)/n]");
  if (v.lmc < 0.0) throw InvariantError("LMC complexity is negative");
  if (v.gamma < 0.0) throw InvariantError("SDL complexity is negative");
}

/// Evaluates the full battery. Gamma is derived from the returned disorder and order.
inline MeasureVector measure_vector(const Distribution& dist, const AnalysisConfig& config,
                                    std::optional<long> t = std::nullopt) {
  config.validate();
  MeasureVector v;
  v.s = shannon_entropy(dist, config.log_base);
  v.s_max = max_entropy(dist.size(), config.log_base);
  v.information = information(v.s, config.singularity_policy, t);
  v.disorder = disorder(v.s, v.s_max);
  v.order = order(v.disorder);
  v.gamma = sdl_complexity(v.disorder, v.order, config.alpha, config.beta);
  v.disequilibrium = disequilibrium(dist);
  v.lmc = lmc_complexity(v.s, v.disequilibrium);
  v.fisher = fisher_discrete(dist, config.singularity_policy, t);
  check_invariants(v, dist.size());
  return v;
}

}  // namespace pollinfo
