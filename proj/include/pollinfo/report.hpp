#pragma once

// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief MeasureSeries JSON reports and plot CSV projections.
 *
 * Reports are golden-file stable: fixed field order, every number printed with
 * 10 significant digits, saturated values as the string "inf", and nothing
 * time-dependent. Reading a report and formatting a value again with
 * format_number() reproduces the report's bytes for that value.
 */

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pollinfo/config.hpp"
#include "pollinfo/errors.hpp"
#include "pollinfo/measures.hpp"
#include "pollinfo/series.hpp"

namespace pollinfo {

inline constexpr int kReportDigits = 10;

/// %.10g, or "inf" for saturated values.
inline std::string format_number(double v) {
  if (is_saturated(v)) return "inf";
  if (!std::isfinite(v)) throw InvariantError("cannot format a NaN or negative infinity");
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, v);
  return buf;
}

namespace detail {

inline std::string json_number(double v) {
  return is_saturated(v) ? "\"inf\"" : format_number(v);
}

inline std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

}  // namespace detail

inline std::string config_json(const AnalysisConfig& c) {
  std::string out = "{";
  out += "\"log_base\": " + format_number(c.log_base);
  out += ", \"alpha\": " + format_number(c.alpha);
  out += ", \"beta\": " + format_number(c.beta);
  out += ", \"normalization_tolerance\": " + format_number(c.normalization_tolerance);
  out += ", \"singularity_policy\": " + detail::json_string(to_string(c.singularity_policy));
  out += "}";
  return out;
}

/// One point per line, one extremum per line.
inline std::string to_json(const MeasureSeries& s) {
  std::string out = "{\n";
  out += "  \"question_id\": " + detail::json_string(s.question_id) + ",\n";
  out += "  \"config\": " + config_json(s.config_used) + ",\n";
  out += "  \"points\": [";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const SeriesPoint& p = s.points[i];
    out += i == 0 ? "\n    {" : ",\n    {";
    out += "\"t\": " + std::to_string(p.t);
    for (Measure m : kAllMeasures) {
      out += ", \"";
      out += measure_name(m);
      out += "\": " + detail::json_number(measure_value(p.measures, m));
    }
    out += "}";
  }
  out += s.points.empty() ? "],\n" : "\n  ],\n";
  out += "  \"extrema\": [";
  for (std::size_t i = 0; i < s.extrema.size(); ++i) {
    const Extremum& e = s.extrema[i];
    out += i == 0 ? "\n    {" : ",\n    {";
    out += "\"measure\": " + detail::json_string(measure_name(e.measure));
    out += ", \"kind\": " + detail::json_string(to_string(e.kind));
    out += ", \"t\": " + std::to_string(e.t);
    out += ", \"value\": " + detail::json_number(e.value);
    out += "}";
  }
  out += s.extrema.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

namespace detail {

inline double read_number(const nlohmann::json& j, std::string_view what) {
  if (j.is_string() && j.get<std::string>() == "inf") return kSaturated;
  if (!j.is_number()) throw ParseError("report field '" + std::string(what) + "' is not a number", 0);
  return j.get<double>();
}

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("report is missing '") + key + "'", 0);
  return obj.at(key);
}

}  // namespace detail

/// Parses a report produced by to_json().
inline MeasureSeries parse_report(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what(), 0);
  }
  MeasureSeries s;
  try {
    s.question_id = detail::field(j, "question_id").get<std::string>();
    const auto& c = detail::field(j, "config");
    s.config_used.log_base = detail::read_number(detail::field(c, "log_base"), "log_base");
    s.config_used.alpha = detail::read_number(detail::field(c, "alpha"), "alpha");
    s.config_used.beta = detail::read_number(detail::field(c, "beta"), "beta");
    s.config_used.normalization_tolerance =
        detail::read_number(detail::field(c, "normalization_tolerance"), "normalization_tolerance");
    s.config_used.singularity_policy =
        parse_singularity_policy(detail::field(c, "singularity_policy").get<std::string>());

    for (const auto& p : detail::field(j, "points")) {
      SeriesPoint pt;
      pt.t = detail::field(p, "t").get<long>();
      MeasureVector& v = pt.measures;
      v.s = detail::read_number(detail::field(p, "S"), "S");
      v.s_max = detail::read_number(detail::field(p, "S_max"), "S_max");
      v.information = detail::read_number(detail::field(p, "I"), "I");
      v.disorder = detail::read_number(detail::field(p, "delta"), "delta");
      v.order = detail::read_number(detail::field(p, "omega"), "omega");
      v.gamma = detail::read_number(detail::field(p, "gamma"), "gamma");
      v.disequilibrium = detail::read_number(detail::field(p, "D"), "D");
      v.lmc = detail::read_number(detail::field(p, "C"), "C");
      v.fisher = detail::read_number(detail::field(p, "F"), "F");
      s.points.push_back(pt);
    }
    for (const auto& e : detail::field(j, "extrema")) {
      Extremum x;
      const auto name = detail::field(e, "measure").get<std::string>();
      const auto m = parse_measure(name);
      if (!m) throw ParseError("report names unknown measure '" + name + "'", 0);
      x.measure = *m;
      const auto kind = detail::field(e, "kind").get<std::string>();
      if (kind != "min" && kind != "max") throw ParseError("extremum kind must be min or max", 0);
      x.kind = kind == "min" ? ExtremumKind::Min : ExtremumKind::Max;
      x.t = detail::field(e, "t").get<long>();
      x.value = detail::read_number(detail::field(e, "value"), "value");
      s.extrema.push_back(x);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  } catch (const ConfigError& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
  return s;
}

/// Two-column `t,<header>` projection of one measure.
inline std::string plot_csv(const MeasureSeries& s, Measure m, std::string_view value_header = "value") {
  std::string out = "t,";
  out += value_header;
  out += '\n';
  for (const TimedValue& v : s.values(m)) out += std::to_string(v.t) + "," + format_number(v.value) + "\n";
  return out;
}

}  // namespace pollinfo
