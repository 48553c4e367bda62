// SPDX-License-Identifier: Apache-2.0
//
// Property tests over random and exhaustive-grid distributions.

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "pollinfo/measures.hpp"
#include "random_distributions.hpp"

using namespace pollinfo;

namespace {

constexpr double kTol = 1e-12;

}  // namespace

TEST_CASE("entropy bounds and their extremal cases", "[properties]") {
  std::mt19937_64 rng(20070901);
  for (int k = 0; k < 1000; ++k) {
    const Distribution d = testing::random_distribution(rng);
    const std::size_t n = d.size();
    for (double base : {2.0, std::numbers::e, 10.0}) {
      const double s = shannon_entropy(d, base);
      const double s_max = max_entropy(n, base);
      REQUIRE(s >= 0.0);
      REQUIRE(s <= s_max + kTol);
    }
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK_THAT(shannon_entropy(Distribution::uniform(n), 10), Catch::Matchers::WithinAbs(max_entropy(n, 10), 1e-12));
    for (std::size_t hot = 0; hot < n; ++hot) CHECK(shannon_entropy(Distribution::degenerate(n, hot), 10) == 0.0);
  }
  // strictly below the maximum as soon as one component moves off 1/n
  CHECK(shannon_entropy(Distribution({0.34, 0.33, 0.33}), 10) < max_entropy(3, 10) - 1e-6);
}

TEST_CASE("measure vector invariants hold for random distributions", "[properties]") {
  std::mt19937_64 rng(42);
  AnalysisConfig cfg;
  for (int k = 0; k < 1000; ++k) {
    const Distribution d = testing::random_distribution(rng);
    const std::size_t n = d.size();
    const MeasureVector v = measure_vector(d, cfg);
    REQUIRE(std::abs(v.disorder + v.order - 1.0) <= kTol);
    REQUIRE(v.gamma >= 0.0);
    REQUIRE(v.gamma <= 0.25 + kTol);
    REQUIRE(v.disequilibrium >= -kTol);
    REQUIRE(v.disequilibrium <= double(n - 1) / double(n) + kTol);
    REQUIRE(v.lmc >= 0.0);
  }
}

TEST_CASE("SDL complexity peaks at half disorder", "[properties]") {
  for (int i = 0; i <= 1000; ++i) {
    const double delta = i / 1000.0;
    const double g = sdl_complexity(delta, 1.0 - delta);
    REQUIRE(g <= 0.25);
    if (i == 0 || i == 1000) REQUIRE(g == 0.0);
    else REQUIRE(g > 0.0);
  }
  CHECK(sdl_complexity(0.5, 0.5) == 0.25);
}

TEST_CASE("disequilibrium and LMC vanish exactly where expected", "[properties]") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(disequilibrium(Distribution::uniform(n)) < 1e-15);
    for (std::size_t hot = 0; hot < n; ++hot) {
      const Distribution d = Distribution::degenerate(n, hot);
      CHECK_THAT(disequilibrium(d), Catch::Matchers::WithinAbs(double(n - 1) / double(n), 1e-15));
      CHECK(measure_vector(d, {}).lmc == 0.0);
    }
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Distribution d = testing::random_distribution(rng);
    bool uniform = true;
    for (double p : d.probs()) uniform = uniform && std::abs(p - 1.0 / d.size()) < 1e-9;
    if (!uniform) REQUIRE(disequilibrium(d) > 0.0);
  }
}

TEST_CASE("permutations leave global measures alone but can change Fisher", "[properties]") {
  std::mt19937_64 rng(7);
  AnalysisConfig cfg;
  for (int k = 0; k < 1000; ++k) {
    const Distribution d = testing::random_distribution(rng);
    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Distribution q = d.permuted(order);
    const MeasureVector a = measure_vector(d, cfg);
    const MeasureVector b = measure_vector(q, cfg);
    REQUIRE(std::abs(a.s - b.s) <= kTol);
    REQUIRE(std::abs(a.disequilibrium - b.disequilibrium) <= kTol);
    REQUIRE(std::abs(a.lmc - b.lmc) <= kTol);
    REQUIRE(std::abs(a.gamma - b.gamma) <= kTol);
    REQUIRE(std::abs(a.disorder - b.disorder) <= kTol);
    REQUIRE(std::abs(a.order - b.order) <= kTol);
  }

  const Distribution desc({0.45, 0.40, 0.15});
  const std::vector<std::size_t> reverse{2, 1, 0};
  const Distribution asc = desc.permuted(reverse);
  const double f_desc = fisher_discrete(desc, SingularityPolicy::Saturate);
  const double f_asc = fisher_discrete(asc, SingularityPolicy::Saturate);
  CHECK(std::abs(f_desc - f_asc) > 0.1);
}

TEST_CASE("changing the log base rescales entropy by a constant", "[properties]") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Distribution d = testing::random_distribution(rng);
    const double s2 = shannon_entropy(d, 2.0);
    const double s10 = shannon_entropy(d, 10.0);
    if (s10 < 1e-6) continue;
    REQUIRE(std::abs(s2 / s10 - std::log(10.0) / std::log(2.0)) <= 1e-9);

    AnalysisConfig c2, c10;
    c2.log_base = 2.0;
    const MeasureVector a = measure_vector(d, c2);
    const MeasureVector b = measure_vector(d, c10);
    REQUIRE(std::abs(a.disorder - b.disorder) <= kTol);
    REQUIRE(std::abs(a.order - b.order) <= kTol);
    REQUIRE(std::abs(a.gamma - b.gamma) <= kTol);
  }
}

TEST_CASE("mixing towards uniform never lowers entropy", "[properties]") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const Distribution d = testing::random_distribution(rng);
    const double lambda = unit(rng);
    const Distribution mixed = testing::mix_with_uniform(d, lambda);
    REQUIRE(shannon_entropy(mixed, 10) >= shannon_entropy(d, 10) - kTol);
  }
}

TEST_CASE("every measure on the 0.01 simplex grid matches direct summation", "[properties][oracle]") {
  AnalysisConfig cfg;
  std::size_t points = 0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; i + j <= 100; ++j) {
      const int k = 100 - i - j;
      const std::vector<double> p{i / 100.0, j / 100.0, k / 100.0};
      const Distribution d(p);
      const MeasureVector v = measure_vector(d, cfg);
      const auto o = oracle::all(p, cfg.log_base);
      ++points;
      REQUIRE(std::abs(v.s - double(o.s)) <= 1e-10);
      REQUIRE(std::abs(v.s_max - double(o.s_max)) <= 1e-10);
      REQUIRE(std::abs(v.disorder - double(o.delta)) <= 1e-10);
      REQUIRE(std::abs(v.order - double(o.omega)) <= 1e-10);
      REQUIRE(std::abs(v.gamma - double(o.gamma)) <= 1e-10);
      REQUIRE(std::abs(v.disequilibrium - double(o.d)) <= 1e-10);
      REQUIRE(std::abs(v.lmc - double(o.c)) <= 1e-10);
      if (std::isinf(o.info)) REQUIRE(is_saturated(v.information));
      else REQUIRE(std::abs(v.information - double(o.info)) <= 1e-10 * std::max(1.0L, o.info));
      if (std::isinf(o.f)) REQUIRE(is_saturated(v.fisher));
      else REQUIRE(std::abs(v.fisher - double(o.f)) <= 1e-10 * std::max(1.0L, o.f));
    }
  }
  CHECK(points == 5151);
}
