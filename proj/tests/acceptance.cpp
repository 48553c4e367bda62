// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracle.hpp"
#include "pollinfo/pollinfo.hpp"
#include "random_distributions.hpp"

using namespace pollinfo;
namespace fs = std::filesystem;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream msg;
      msg.precision(12);
      msg << what << ": got " << got << ", want " << want << " +/- " << tol;
      failures.push_back(msg.str());
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_ms;  // 0 = none
  std::function<void(Check&)> body;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Shell {
  int code;
  std::string output;
};

// Runs the CLI binary with stderr folded into stdout.
Shell run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + POLLINFO_CLI + "\" " + args + " 2>&1";
  Shell r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) r.output += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

double scenario_value(const std::string& out, const std::string& label) {
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);)
    if (line.starts_with(label)) return std::stod(line.substr(line.find("= ") + 2));
  return std::nan("");
}

const fs::path kRoot = POLLINFO_SOURCE_DIR;

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "uniform n=3, base 10: S = S_max = 0.4771213", 1.0, [](Check& c) {
    AnalysisConfig cfg;
    const MeasureVector v = measure_vector(Distribution::uniform(3), cfg);
    c.near(v.s, 0.4771213, 1e-6, "S");
    c.near(v.s_max, 0.4771213, 1e-6, "S_max");
  }});

  criteria.push_back({2, "50/50, base 2: S = 1 bit", 0.0, [](Check& c) {
    c.near(shannon_entropy(Distribution({0.5, 0.5}), 2.0), 1.0, 1e-12, "S");
  }});

  criteria.push_back({3, "70/30, base e: S = 0.6109, S_max = 0.6931, drop 11.9%", 0.0, [](Check& c) {
    AnalysisConfig cfg;
    cfg.log_base = std::numbers::e;
    const MeasureVector v = measure_vector(Distribution({0.7, 0.3}), cfg);
    c.near(v.s, 0.6109, 5e-4, "S");
    c.near(v.s_max, 0.6931, 5e-4, "S_max");
    c.near((v.s_max - v.s) / v.s_max * 100.0, 11.9, 0.5, "drop %");
    c.expect(base_unit(cfg.log_base) == "nats", "base e must be labeled nats");
  }});

  criteria.push_back({4, "gamma = C = 0 for degenerate and uniform, 2 <= n <= 8", 0.0, [](Check& c) {
    AnalysisConfig cfg;
    for (std::size_t n = 2; n <= 8; ++n) {
      std::vector<Distribution> cases{Distribution::uniform(n)};
      for (std::size_t hot = 0; hot < n; ++hot) cases.push_back(Distribution::degenerate(n, hot));
      for (const auto& d : cases) {
        const MeasureVector v = measure_vector(d, cfg);
        c.near(v.gamma, 0.0, 1e-12, "gamma n=" + std::to_string(n));
        c.near(v.lmc, 0.0, 1e-12, "C n=" + std::to_string(n));
      }
    }
  }});

  criteria.push_back({5, "0.01 simplex grid (5151 points) matches direct summation within 1e-10", 5000.0, [](Check& c) {
    AnalysisConfig cfg;
    std::size_t points = 0;
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i)
      for (int j = 0; i + j <= 100; ++j) {
        const std::vector<double> p{i / 100.0, j / 100.0, (100 - i - j) / 100.0};
        const MeasureVector v = measure_vector(Distribution(p), cfg);
        const auto o = oracle::all(p, cfg.log_base);
        ++points;
        const auto diff = [&](double got, long double want) {
          if (std::isinf(want)) return is_saturated(got) ? 0.0 : 1.0;
          return double(std::abs(got - want) / std::max(1.0L, std::abs(want)));
        };
        for (double d : {diff(v.s, o.s), diff(v.s_max, o.s_max), diff(v.information, o.info),
                         diff(v.disorder, o.delta), diff(v.order, o.omega), diff(v.gamma, o.gamma),
                         diff(v.disequilibrium, o.d), diff(v.lmc, o.c), diff(v.fisher, o.f)})
          worst = std::max(worst, d);
      }
    c.expect(points == 5151, "grid size " + std::to_string(points));
    c.near(worst, 0.0, 1e-10, "worst deviation");
  }});

  criteria.push_back({6, "property suite over 1000 random distributions", 10000.0, [](Check& c) {
    std::mt19937_64 rng(1729);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    AnalysisConfig cfg;
    AnalysisConfig bits = cfg;
    bits.log_base = 2.0;
    const double tol = 1e-12;
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      const Distribution d = testing::random_distribution(rng);
      const std::size_t n = d.size();
      const MeasureVector v = measure_vector(d, cfg);
      bool ok = v.s >= 0.0 && v.s <= v.s_max + tol;
      ok = ok && std::abs(v.disorder + v.order - 1.0) <= tol;
      ok = ok && v.gamma >= 0.0 && v.gamma <= 0.25 + tol;
      ok = ok && v.disequilibrium >= -tol && v.disequilibrium <= double(n - 1) / double(n) + tol;

      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const MeasureVector w = measure_vector(d.permuted(order), cfg);
      ok = ok && std::abs(v.s - w.s) <= tol && std::abs(v.disequilibrium - w.disequilibrium) <= tol &&
           std::abs(v.lmc - w.lmc) <= tol && std::abs(v.gamma - w.gamma) <= tol;

      if (v.s > 1e-6) {
        const MeasureVector b = measure_vector(d, bits);
        ok = ok && std::abs(b.s / v.s - std::log(10.0) / std::log(2.0)) <= 1e-9;
        ok = ok && std::abs(b.gamma - v.gamma) <= tol;
      }

      const Distribution mixed = testing::mix_with_uniform(d, unit(rng));
      ok = ok && shannon_entropy(mixed, 10) >= v.s - tol;
      if (!ok) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " distributions broke a property");

    const Distribution desc({0.45, 0.40, 0.15});
    const std::vector<std::size_t> rev{2, 1, 0};
    const double f1 = fisher_discrete(desc, SingularityPolicy::Saturate);
    const double f2 = fisher_discrete(desc.permuted(rev), SingularityPolicy::Saturate);
    c.expect(std::abs(f1 - f2) > 1e-6, "sorting the triple must change F");
  }});

  criteria.push_back({7, "synthetic A/B/C pipeline: golden reports, S minimum of B at t=34", 0.0, [](Check& c) {
    const fs::path out1 = fs::temp_directory_path() / "pollinfo_acceptance_1";
    const fs::path out2 = fs::temp_directory_path() / "pollinfo_acceptance_2";
    fs::remove_all(out1);
    fs::remove_all(out2);
    const std::string inputs = "\"" + (kRoot / "data/synthetic/A.csv").string() + "\" \"" +
                               (kRoot / "data/synthetic/B.csv").string() + "\" \"" +
                               (kRoot / "data/synthetic/C.csv").string() + "\"";
    const Shell r1 = run_cli("analyze " + inputs + " --out \"" + out1.string() + "\"");
    const Shell r2 = run_cli("analyze " + inputs + " --out \"" + out2.string() + "\"");
    c.expect(r1.code == 0 && r2.code == 0, "analyze failed: " + r1.output);
    for (const std::string q : {"A", "B", "C"}) {
      const std::string a = slurp(out1 / (q + ".json"));
      c.expect(!a.empty(), q + ".json missing");
      c.expect(a == slurp(out2 / (q + ".json")), q + ".json differs between runs");
      c.expect(a == slurp(kRoot / "tests/golden" / (q + ".json")), q + ".json differs from golden file");
    }
    const MeasureSeries b = parse_report(slurp(out1 / "B.json"));
    const auto lo = b.extremum(Measure::S, ExtremumKind::Min);
    c.expect(lo && lo->t == 34, "B: S minimum is not at t=34");
    c.expect(b.points.size() == 40, "B must have 40 rows");
    fs::remove_all(out1);
    fs::remove_all(out2);
  }});

  criteria.push_back({8, "CLI: scenario examples and malformed CSV exit code", 0.0, [](Check& c) {
    const Shell a = run_cli("scenario 70 30 --base e");
    c.expect(a.code == 0, "70 30 exit code");
    c.near(scenario_value(a.output, "S     "), 0.611, 5e-4, "70/30 S");
    c.near(scenario_value(a.output, "S_max "), 0.693, 5e-4, "70/30 S_max");
    c.near(scenario_value(a.output, "drop  "), 12.0, 0.5, "70/30 drop");

    const Shell b = run_cli("scenario 50 50 --base 2");
    c.expect(b.code == 0, "50 50 exit code");
    c.near(scenario_value(b.output, "S     "), 1.0, 1e-12, "50/50 S");
    c.near(scenario_value(b.output, "drop  "), 0.0, 1e-12, "50/50 drop");

    const Shell d = run_cli("scenario 100 0 0");
    c.expect(d.code == 0, "100 0 0 exit code");
    c.near(scenario_value(d.output, "S     "), 0.0, 1e-12, "100/0/0 S");
    c.near(scenario_value(d.output, "drop  "), 100.0, 1e-12, "100/0/0 drop");

    const fs::path bad = fs::temp_directory_path() / "pollinfo_acceptance_bad.csv";
    std::ofstream(bad) << "t,ND,PASOK,Other\n0,45,40,15\n1,44,oops,15\n";
    const Shell e = run_cli("analyze \"" + bad.string() + "\" --out \"" + fs::temp_directory_path().string() + "\"");
    c.expect(e.code == 2, "malformed CSV exit code " + std::to_string(e.code));
    c.expect(e.output.find("line 3") != std::string::npos, "diagnostic lacks line number: " + e.output);
    fs::remove(bad);
  }});

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (cr.time_limit_ms > 0 && ms > cr.time_limit_ms) {
      check.failures.push_back("took " + std::to_string(ms) + " ms, limit " + std::to_string(cr.time_limit_ms) + " ms");
    }
    const bool ok = check.failures.empty();
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s (%.3f ms)\n", ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), ms);
    for (const auto& f : check.failures) std::printf("       - %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
