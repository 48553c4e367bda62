#pragma once

// SPDX-License-Identifier: Apache-2.0

/**
 * @file series.hpp
 * @brief Poll tables to measure time series.
 *
 * A PollSeries holds one question's raw percentage rows indexed by an integer
 * month offset t. compute_series() renormalizes each row, evaluates the full
 * measure battery and records the global extrema of every measure.
 *
 * Input CSV:
 *
 *     # question: Who is more suitable for Prime Minister?
 *     # epoch: t=0 is March 2004
 *     t,Karamanlis,Papandreou,Other
 *     0,45,40,15
 *     1,44.5,39,16.5
 *
 * `# id: <question_id>` may also appear among the leading comments.
 */

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pollinfo/config.hpp"
#include "pollinfo/distribution.hpp"
#include "pollinfo/errors.hpp"
#include "pollinfo/measures.hpp"

namespace pollinfo {

struct PollRow {
  long t = 0;
  std::vector<double> raw;  ///< percentages, one per label

  bool operator==(const PollRow&) const = default;
};

struct PollSeries {
  std::string question_id;
  std::string question_text;
  std::vector<std::string> labels;
  std::vector<PollRow> rows;
  std::string epoch_note;

  /// t strictly increasing, each row as wide as labels, raw values >= 0.
  void validate() const {
    if (labels.size() < 2) throw DomainError("a poll series needs at least 2 labels");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].raw.size() != labels.size())
        throw DomainError("row t=" + std::to_string(rows[i].t) + " has the wrong number of values");
      for (double v : rows[i].raw)
        if (!(v >= 0.0) || !std::isfinite(v))
          throw DomainError("row t=" + std::to_string(rows[i].t) + " has a negative or non-finite value");
      if (i > 0 && rows[i].t <= rows[i - 1].t) throw DomainError("t values must be strictly increasing");
    }
  }

  bool operator==(const PollSeries&) const = default;
};

// ---------------------------------------------------------------------------
// Measure names
// ---------------------------------------------------------------------------

enum class Measure { S, S_max, I, delta, omega, gamma, D, C, F };

inline constexpr std::array<Measure, 9> kAllMeasures = {Measure::S,     Measure::S_max, Measure::I,
                                                        Measure::delta, Measure::omega, Measure::gamma,
                                                        Measure::D,     Measure::C,     Measure::F};

inline std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::S: return "S";
    case Measure::S_max: return "S_max";
    case Measure::I: return "I";
    case Measure::delta: return "delta";
    case Measure::omega: return "omega";
    case Measure::gamma: return "gamma";
    case Measure::D: return "D";
    case Measure::C: return "C";
    case Measure::F: return "F";
  }
  return "?";
}

/// "S,S_max,I,delta,omega,gamma,D,C,F"
inline std::string measure_names_joined(std::string_view sep = ",") {
  std::string out;
  for (Measure m : kAllMeasures) {
    if (!out.empty()) out += sep;
    out += measure_name(m);
  }
  return out;
}

inline std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures)
    if (measure_name(m) == name) return m;
  return std::nullopt;
}

inline double measure_value(const MeasureVector& v, Measure m) {
  switch (m) {
    case Measure::S: return v.s;
    case Measure::S_max: return v.s_max;
    case Measure::I: return v.information;
    case Measure::delta: return v.disorder;
    case Measure::omega: return v.order;
    case Measure::gamma: return v.gamma;
    case Measure::D: return v.disequilibrium;
    case Measure::C: return v.lmc;
    case Measure::F: return v.fisher;
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Extrema
// ---------------------------------------------------------------------------

struct TimedValue {
  long t = 0;
  double value = 0.0;

  bool operator==(const TimedValue&) const = default;
};

struct MinMax {
  TimedValue min;
  TimedValue max;
};

/// Global min and max. Ties go to the smallest t.
inline MinMax find_extrema(std::span<const TimedValue> values) {
  if (values.empty()) throw DomainError("cannot take extrema of an empty series");
  MinMax out{values.front(), values.front()};
  for (const TimedValue& v : values.subspan(1)) {
    if (v.value < out.min.value || (v.value == out.min.value && v.t < out.min.t)) out.min = v;
    if (v.value > out.max.value || (v.value == out.max.value && v.t < out.max.t)) out.max = v;
  }
  return out;
}

enum class ExtremumKind { Min, Max };

inline std::string_view to_string(ExtremumKind k) { return k == ExtremumKind::Min ? "min" : "max"; }

struct Extremum {
  Measure measure = Measure::S;
  ExtremumKind kind = ExtremumKind::Min;
  long t = 0;
  double value = 0.0;

  bool operator==(const Extremum&) const = default;
};

struct SeriesPoint {
  long t = 0;
  MeasureVector measures;

  bool operator==(const SeriesPoint&) const = default;
};

struct MeasureSeries {
  std::string question_id;
  AnalysisConfig config_used;
  std::vector<SeriesPoint> points;
  std::vector<Extremum> extrema;  ///< min then max, for each measure in kAllMeasures order

  std::vector<TimedValue> values(Measure m) const {
    std::vector<TimedValue> out;
    out.reserve(points.size());
    for (const SeriesPoint& p : points) out.push_back({p.t, measure_value(p.measures, m)});
    return out;
  }

  std::optional<Extremum> extremum(Measure m, ExtremumKind kind) const {
    for (const Extremum& e : extrema)
      if (e.measure == m && e.kind == kind) return e;
    return std::nullopt;
  }

  bool operator==(const MeasureSeries&) const = default;
};

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

/// Divides a percentage row by its own sum once that sum is within
/// `tolerance` points of 100.
inline Distribution normalize_row(std::span<const double> raw, double tolerance,
                                  std::optional<long> t = std::nullopt,
                                  std::vector<std::string> labels = {}) {
  const std::string where = t ? " at t=" + std::to_string(*t) : "";
  if (raw.size() < 2) throw IngestionError("row" + where + " needs at least 2 values", t);
  double sum = 0.0;
  for (double v : raw) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw IngestionError("row" + where + " has a negative or non-finite value", t);
    sum += v;
  }
  if (sum <= 0.0) throw IngestionError("row" + where + " is all zeros", t);
  if (std::abs(sum - 100.0) > tolerance) {
    std::ostringstream msg;
    msg << "row" << where << " sums to " << sum << ", more than " << tolerance << " points from 100";
    throw IngestionError(msg.str(), t);
  }
  std::vector<double> probs;
  probs.reserve(raw.size());
  for (double v : raw) probs.push_back(v / sum);
  if (labels.empty()) return Distribution(std::move(probs));
  return Distribution(std::move(probs), std::move(labels));
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

template <typename T>
std::optional<T> parse_number(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) return std::nullopt;
  return value;
}

}  // namespace detail

/// Parses the poll CSV format. question_id comes from a `# id:` comment or
/// `default_id`.
inline PollSeries parse_poll_csv(std::istream& in, std::string default_id = "") {
  PollSeries series;
  series.question_id = std::move(default_id);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t header_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view = detail::trim(view.substr(3));
    if (view.empty()) continue;

    if (view.front() == '#') {
      if (have_header) throw ParseError("comment lines must precede the header", line_no);
      std::string_view body = detail::trim(view.substr(1));
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      const std::string_view key = detail::trim(body.substr(0, colon));
      const std::string value(detail::trim(body.substr(colon + 1)));
      if (key == "question") series.question_text = value;
      else if (key == "epoch") series.epoch_note = value;
      else if (key == "id") series.question_id = value;
      continue;
    }

    const auto cells = detail::split_commas(view);
    if (!have_header) {
      if (cells.front() != "t") throw ParseError("header must start with 't'", line_no);
      if (cells.size() < 3) throw ParseError("header needs at least 2 outcome labels", line_no);
      std::set<std::string_view> seen;
      for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].empty()) throw ParseError("empty label in header column " + std::to_string(i + 1), line_no);
        if (!seen.insert(cells[i]).second) throw ParseError("duplicate label '" + std::string(cells[i]) + "'", line_no);
        series.labels.emplace_back(cells[i]);
      }
      have_header = true;
      header_line = line_no;
      continue;
    }

    if (cells.size() != series.labels.size() + 1)
      throw ParseError("expected " + std::to_string(series.labels.size() + 1) + " cells, found " +
                           std::to_string(cells.size()),
                       line_no);
    PollRow row;
    const auto t = detail::parse_number<long>(cells[0]);
    if (!t) throw ParseError("t '" + std::string(cells[0]) + "' is not an integer", line_no);
    row.t = *t;
    if (!series.rows.empty() && row.t <= series.rows.back().t)
      throw ParseError("t=" + std::to_string(row.t) + " does not increase (previous t=" +
                           std::to_string(series.rows.back().t) + ")",
                       line_no);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const auto v = detail::parse_number<double>(cells[i]);
      if (!v || !std::isfinite(*v)) throw ParseError("'" + std::string(cells[i]) + "' is not a number", line_no);
      if (*v < 0.0 || *v > 100.0)
        throw ParseError("percentage " + std::string(cells[i]) + " is outside [0,100]", line_no);
      row.raw.push_back(*v);
    }
    series.rows.push_back(std::move(row));
  }

  if (!have_header) throw ParseError("missing header line", line_no);
  if (series.rows.empty()) throw ParseError("no rows", header_line);
  return series;
}

inline PollSeries parse_poll_csv(std::string_view text, std::string default_id = "") {
  std::istringstream in{std::string(text)};
  return parse_poll_csv(in, std::move(default_id));
}

/// Writes the series back in the CSV format parse_poll_csv reads.
inline std::string to_csv(const PollSeries& series) {
  std::ostringstream out;
  out.precision(17);
  if (!series.question_id.empty()) out << "# id: " << series.question_id << '\n';
  if (!series.question_text.empty()) out << "# question: " << series.question_text << '\n';
  if (!series.epoch_note.empty()) out << "# epoch: " << series.epoch_note << '\n';
  out << 't';
  for (const auto& l : series.labels) out << ',' << l;
  out << '\n';
  for (const auto& row : series.rows) {
    out << row.t;
    for (double v : row.raw) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

/// Measure battery for every row plus the global extrema of each measure.
/// Ingestion and singularity errors carry the offending t.
inline MeasureSeries compute_series(const PollSeries& series, const AnalysisConfig& config) {
  config.validate();
  series.validate();
  if (series.rows.empty()) throw DomainError("poll series has no rows");

  MeasureSeries out;
  out.question_id = series.question_id;
  out.config_used = config;
  out.points.reserve(series.rows.size());
  for (const PollRow& row : series.rows) {
    const Distribution dist = normalize_row(row.raw, config.normalization_tolerance, row.t, series.labels);
    out.points.push_back({row.t, measure_vector(dist, config, row.t)});
  }

  for (Measure m : kAllMeasures) {
    const auto vals = out.values(m);
    const MinMax mm = find_extrema(vals);
    out.extrema.push_back({m, ExtremumKind::Min, mm.min.t, mm.min.value});
    out.extrema.push_back({m, ExtremumKind::Max, mm.max.t, mm.max.value});
  }
  return out;
}

}  // namespace pollinfo
