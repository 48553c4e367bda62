#pragma once

// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli_app.hpp
 * @brief The `pollinfo` command line: analyze, plot, scenario.
 *
 * Exit codes: 0 success, 1 usage error, 2 data error, 3 internal invariant
 * violation. run() never calls exit() so tests can drive it in-process.
 */

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pollinfo/pollinfo.hpp"

namespace pollinfo::cli {

namespace fs = std::filesystem;

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kInternal = 3 };

/// A usage problem detected after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  std::string base = "10";
  double alpha = 1.0;
  double beta = 1.0;
  double tolerance = 5.0;
  std::string singularity = "saturate";

  AnalysisConfig to_config() const {
    AnalysisConfig c;
    c.log_base = parse_log_base(base);
    c.alpha = alpha;
    c.beta = beta;
    c.normalization_tolerance = tolerance;
    c.singularity_policy = parse_singularity_policy(singularity);
    c.validate();
    return c;
  }
};

inline void add_config_flags(CLI::App& cmd, ConfigFlags& f) {
  cmd.add_option("--base", f.base, "Logarithm base: 2 (bits), e (nats), 10 (Hartleys)")
      ->check(CLI::IsMember({"2", "e", "10"}))
      ->capture_default_str();
  cmd.add_option("--alpha", f.alpha, "SDL disorder exponent")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd.add_option("--beta", f.beta, "SDL order exponent")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd.add_option("--tolerance", f.tolerance, "Max deviation of a row sum from 100, in points")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--singularity", f.singularity, "Division by zero in I and F: saturate or error")
      ->check(CLI::IsMember({"saturate", "error"}))
      ->capture_default_str();
}

namespace detail {

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IngestionError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Writes every (path, content) pair or none of them: all content goes to
/// temporaries first and is renamed into place once every write succeeded.
inline void write_all_or_nothing(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<fs::path> temps;
  try {
    for (const auto& [path, content] : files) {
      fs::path tmp = path;
      tmp += ".tmp";
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      temps.push_back(tmp);
      if (!out) throw IngestionError("cannot write " + tmp.string());
      out << content;
      out.close();
      if (!out) throw IngestionError("cannot write " + tmp.string());
    }
    for (std::size_t i = 0; i < files.size(); ++i) fs::rename(temps[i], files[i].first);
  } catch (...) {
    std::error_code ec;
    for (const auto& t : temps) fs::remove(t, ec);
    throw;
  }
}

inline void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw IngestionError("cannot create output directory " + dir.string());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  ConfigFlags flags;
};

/// One `<question_id>.json` report per input plus `manifest.json`.
inline int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  const AnalysisConfig config = opt.flags.to_config();
  std::vector<MeasureSeries> reports;
  std::map<std::string, std::string> id_owner;

  for (const auto& input : opt.inputs) {
    try {
      std::ifstream in(input, std::ios::binary);
      if (!in) throw IngestionError("cannot open file");
      PollSeries series = parse_poll_csv(in, fs::path(input).stem().string());
      if (series.question_id.empty()) throw IngestionError("empty question id");
      if (auto [it, fresh] = id_owner.emplace(series.question_id, input); !fresh)
        throw UsageError("question id '" + series.question_id + "' is also used by " + it->second);
      reports.push_back(compute_series(series, config));
    } catch (const UsageError& e) {
      err << "pollinfo: " << input << ": " << e.what() << '\n';
      return kUsage;
    } catch (const InvariantError& e) {
      err << "pollinfo: " << input << ": internal error: " << e.what() << '\n';
      return kInternal;
    } catch (const Error& e) {
      err << "pollinfo: " << input << ": " << e.what() << '\n';
      return kData;
    }
  }

  const fs::path dir(opt.out_dir);
  std::vector<std::pair<fs::path, std::string>> files;
  nlohmann::ordered_json manifest;
  manifest["tool"] = "pollinfo";
  manifest["version"] = kVersion;
  manifest["created_utc"] = detail::utc_timestamp();
  manifest["inputs"] = opt.inputs;
  manifest["config"] = nlohmann::ordered_json::parse(config_json(config));
  manifest["config"]["log_base_label"] = opt.flags.base;
  manifest["outputs"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    const fs::path path = dir / (r.question_id + ".json");
    files.emplace_back(path, to_json(r));
    manifest["outputs"].push_back(path.string());
  }
  const fs::path manifest_path = dir / "manifest.json";
  manifest["outputs"].push_back(manifest_path.string());
  files.emplace_back(manifest_path, manifest.dump(2) + "\n");

  try {
    detail::ensure_dir(dir);
    detail::write_all_or_nothing(files);
  } catch (const std::exception& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kData;
  }
  for (const auto& [path, content] : files) out << path.string() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// plot
// ---------------------------------------------------------------------------

struct PlotOptions {
  std::string report;
  std::string measure;
  std::string format = "csv";
  std::string out_dir = ".";
};

/// `<stem>_<measure>.csv` (+ `<stem>_S_max.csv` for S) or `<stem>_<measure>.svg`.
inline int cmd_plot(const PlotOptions& opt, std::ostream& out, std::ostream& err) {
  const auto measure = parse_measure(opt.measure);
  if (!measure) {
    err << "pollinfo: unknown measure '" << opt.measure << "'; valid measures: {" << measure_names_joined()
        << "}\n";
    return kUsage;
  }
  MeasureSeries report;
  try {
    report = parse_report(detail::read_file(opt.report));
  } catch (const Error& e) {
    err << "pollinfo: " << opt.report << ": " << e.what() << '\n';
    return kData;
  }
  if (report.points.empty()) {
    err << "pollinfo: " << opt.report << ": report has no points\n";
    return kData;
  }

  const fs::path dir(opt.out_dir);
  const std::string stem = fs::path(opt.report).stem().string();
  const std::string name(measure_name(*measure));
  std::vector<std::pair<fs::path, std::string>> files;
  if (opt.format == "svg") {
    files.emplace_back(dir / (stem + "_" + name + ".svg"), svg_chart(report, *measure));
  } else {
    files.emplace_back(dir / (stem + "_" + name + ".csv"), plot_csv(report, *measure));
    if (*measure == Measure::S)
      files.emplace_back(dir / (stem + "_S_max.csv"), plot_csv(report, Measure::S_max, "S_max"));
  }
  try {
    detail::ensure_dir(dir);
    detail::write_all_or_nothing(files);
  } catch (const std::exception& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kData;
  }
  for (const auto& [path, content] : files) out << path.string() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// scenario
// ---------------------------------------------------------------------------

struct ScenarioOptions {
  std::vector<double> values;
  ConfigFlags flags;
};

struct ScenarioResult {
  Distribution dist;
  bool percentages = false;
  MeasureVector measures;
  double drop_percent = 0.0;  ///< (S_max - S) / S_max * 100
};

/// Values summing near 1 are probabilities, near 100 percentages.
inline ScenarioResult evaluate_scenario(const std::vector<double>& values, const AnalysisConfig& config) {
  if (values.size() < 2 || values.size() > 16) throw UsageError("scenario takes 2 to 16 values");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double tol = config.normalization_tolerance;
  bool percentages = false;
  std::vector<double> raw = values;
  if (std::abs(sum - 1.0) <= tol / 100.0) {
    for (double& v : raw) v *= 100.0;
  } else if (std::abs(sum - 100.0) <= tol) {
    percentages = true;
  } else {
    std::ostringstream msg;
    msg << "values sum to " << sum << "; expected about 1 (probabilities) or 100 (percentages)";
    throw IngestionError(msg.str());
  }
  Distribution dist = normalize_row(raw, tol);
  const MeasureVector mv = measure_vector(dist, config);
  const double drop = (mv.s_max - mv.s) / mv.s_max * 100.0;
  return ScenarioResult{std::move(dist), percentages, mv, drop};
}

inline int cmd_scenario(const ScenarioOptions& opt, std::ostream& out, std::ostream& err) {
  std::optional<ScenarioResult> result;
  AnalysisConfig config;
  try {
    config = opt.flags.to_config();
    result = evaluate_scenario(opt.values, config);
  } catch (const UsageError& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    err << "pollinfo: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const ConfigError& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kData;
  }

  const ScenarioResult& r = *result;
  out << "input: " << (r.percentages ? "percentages" : "probabilities") << '\n';
  out << "p: ";
  for (std::size_t i = 0; i < r.dist.size(); ++i) out << (i ? " " : "") << format_number(r.dist[i]);
  out << '\n';
  out << "base: " << opt.flags.base << " (" << base_unit(config.log_base) << ")\n";
  const MeasureVector& v = r.measures;
  for (Measure m : kAllMeasures) {
    std::string label(measure_name(m));
    label.resize(6, ' ');
    out << label << "= " << format_number(measure_value(v, m)) << '\n';
  }
  out << "drop  = " << format_number(r.drop_percent) << "%\n";
  return kOk;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Entropy, complexity and Fisher information of categorical poll time series", "pollinfo"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Compute measure reports for poll CSV files");
  a->add_option("inputs", analyze.inputs, "Poll CSV files")->required();
  a->add_option("--out", analyze.out_dir, "Output directory")->capture_default_str();
  add_config_flags(*a, analyze.flags);

  PlotOptions plot;
  auto* p = app.add_subcommand("plot", "Project one measure of a report to CSV or SVG");
  p->add_option("report", plot.report, "Report JSON written by analyze")->required();
  p->add_option("measure", plot.measure, "One of " + measure_names_joined())->required();
  p->add_option("--format", plot.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}))->capture_default_str();
  p->add_option("--out", plot.out_dir, "Output directory")->capture_default_str();

  ScenarioOptions scenario;
  auto* s = app.add_subcommand("scenario", "Measures of a single distribution, e.g. `70 30 --base e`");
  s->add_option("values", scenario.values, "2 to 16 probabilities or percentages")->required();
  add_config_flags(*s, scenario.flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, out, err);
    if (p->parsed()) return cmd_plot(plot, out, err);
    if (s->parsed()) return cmd_scenario(scenario, out, err);
  } catch (const ConfigError& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    err << "pollinfo: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "pollinfo: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace pollinfo::cli
