#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pollinfo/errors.hpp"

namespace pollinfo {

/// Absolute tolerance on sum(p) = 1 and on the other invariant checks.
inline constexpr double kProbabilityTolerance = 1e-9;

/// A validated categorical distribution with ordered, labeled outcomes.
/// Entry order is significant: Fisher information depends on it.
class Distribution {
 public:
  /// Labels default to "p1".."pn".
  explicit Distribution(std::vector<double> probs)
      : Distribution(probs, default_labels(probs.size())) {}

  Distribution(std::vector<double> probs, std::vector<std::string> labels)
      : probs_(std::move(probs)), labels_(std::move(labels)) {
    if (probs_.size() < 2) throw DomainError("a distribution needs at least 2 outcomes");
    if (labels_.size() != probs_.size())
      throw DomainError("distribution has " + std::to_string(probs_.size()) + " probabilities but " +
                        std::to_string(labels_.size()) + " labels");
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const double p = probs_[i];
      if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("probability " + std::to_string(i + 1) + " is outside [0,1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance)
      throw DomainError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }

  std::span<const double> probs() const noexcept { return probs_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Applies the same reordering to probabilities and labels: result[k] = this[order[k]].
  Distribution permuted(std::span<const std::size_t> order) const {
    if (order.size() != size()) throw DomainError("permutation has the wrong length");
    std::vector<double> p;
    std::vector<std::string> l;
    std::vector<bool> seen(size(), false);
    for (std::size_t k : order) {
      if (k >= size() || seen[k]) throw DomainError("not a permutation");
      seen[k] = true;
      p.push_back(probs_[k]);
      l.push_back(labels_[k]);
    }
    return Distribution(std::move(p), std::move(l));
  }

  static Distribution uniform(std::size_t n) { return Distribution(std::vector<double>(n, 1.0 / double(n))); }

  /// All mass on outcome `hot`.
  static Distribution degenerate(std::size_t n, std::size_t hot) {
    std::vector<double> p(n, 0.0);
    p.at(hot) = 1.0;
    return Distribution(std::move(p));
  }

  bool operator==(const Distribution&) const = default;

 private:
  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
    return out;
  }

  std::vector<double> probs_;
  std::vector<std::string> labels_;
};

}  // namespace pollinfo
