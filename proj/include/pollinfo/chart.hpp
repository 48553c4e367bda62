#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pollinfo/report.hpp"
#include "pollinfo/series.hpp"

namespace pollinfo {

struct ChartStyle {
  int width = 640;
  int height = 400;
  int margin_left = 70;
  int margin_right = 20;
  int margin_top = 40;
  int margin_bottom = 50;
};

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/**
 * Static SVG line chart of one measure versus t.
 *
 * The measure is drawn as a single polyline through its finite points, with a
 * circle marker on the global min and max taken from the series extrema. For S
 * the constant S_max is added as a dashed reference line. Saturated points are
 * left out of the polyline; a saturated extremum is pinned to the top edge.
 */
inline std::string svg_chart(const MeasureSeries& s, Measure m, const ChartStyle& style = {}) {
  const auto vals = s.values(m);
  std::vector<TimedValue> finite;
  for (const auto& v : vals)
    if (std::isfinite(v.value)) finite.push_back(v);

  double tmin = 0, tmax = 1, vmin = 0, vmax = 1;
  if (!vals.empty()) {
    tmin = vals.front().t;
    tmax = vals.back().t;
    for (const auto& v : vals) {
      tmin = std::min<double>(tmin, v.t);
      tmax = std::max<double>(tmax, v.t);
    }
  }
  if (!finite.empty()) {
    vmin = vmax = finite.front().value;
    for (const auto& v : finite) {
      vmin = std::min(vmin, v.value);
      vmax = std::max(vmax, v.value);
    }
  }
  if (m == Measure::S && !s.points.empty()) {
    vmax = std::max(vmax, s.points.front().measures.s_max);
  }
  if (tmax == tmin) tmax = tmin + 1;
  if (vmax == vmin) {
    vmin -= 0.5;
    vmax += 0.5;
  }

  const double plot_w = style.width - style.margin_left - style.margin_right;
  const double plot_h = style.height - style.margin_top - style.margin_bottom;
  const auto x_of = [&](double t) { return style.margin_left + (t - tmin) / (tmax - tmin) * plot_w; };
  const auto y_of = [&](double v) {
    if (!std::isfinite(v)) return double(style.margin_top);
    return style.margin_top + (vmax - v) / (vmax - vmin) * plot_h;
  };

  const std::string name(measure_name(m));
  const std::string title = name + "(t)" + (s.question_id.empty() ? "" : " for question " + s.question_id);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.width) + "\" height=\"" +
         std::to_string(style.height) + "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
         std::to_string(style.height) + "\">\n";
  out += "<title>" + detail::xml_escape(title) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(style.width) + "\" height=\"" +
         std::to_string(style.height) + "\" fill=\"white\"/>\n";

  // axes
  const double x0 = style.margin_left, x1 = style.margin_left + plot_w;
  const double y0 = style.margin_top + plot_h, y1 = style.margin_top;
  out += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + detail::fmt2(x0) + "\" y1=\"" + detail::fmt2(y0) + "\" x2=\"" + detail::fmt2(x1) +
         "\" y2=\"" + detail::fmt2(y0) + "\"/>\n";
  out += "<line x1=\"" + detail::fmt2(x0) + "\" y1=\"" + detail::fmt2(y0) + "\" x2=\"" + detail::fmt2(x0) +
         "\" y2=\"" + detail::fmt2(y1) + "\"/>\n";
  out += "</g>\n";

  out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  out += "<text x=\"" + detail::fmt2(style.width / 2.0) + "\" y=\"20\" text-anchor=\"middle\">" +
         detail::xml_escape(title) + "</text>\n";
  out += "<text x=\"" + detail::fmt2((x0 + x1) / 2) + "\" y=\"" + detail::fmt2(style.height - 10.0) +
         "\" text-anchor=\"middle\">t (months)</text>\n";
  out += "<text x=\"" + detail::fmt2(x0) + "\" y=\"" + detail::fmt2(y0 + 18) + "\" text-anchor=\"middle\">" +
         format_number(tmin) + "</text>\n";
  out += "<text x=\"" + detail::fmt2(x1) + "\" y=\"" + detail::fmt2(y0 + 18) + "\" text-anchor=\"middle\">" +
         format_number(tmax) + "</text>\n";
  out += "<text x=\"" + detail::fmt2(x0 - 6) + "\" y=\"" + detail::fmt2(y0 + 4) + "\" text-anchor=\"end\">" +
         format_number(vmin) + "</text>\n";
  out += "<text x=\"" + detail::fmt2(x0 - 6) + "\" y=\"" + detail::fmt2(y1 + 4) + "\" text-anchor=\"end\">" +
         format_number(vmax) + "</text>\n";
  out += "</g>\n";

  if (m == Measure::S && !s.points.empty()) {
    const double ys = y_of(s.points.front().measures.s_max);
    out += "<line class=\"s-max\" x1=\"" + detail::fmt2(x0) + "\" y1=\"" + detail::fmt2(ys) + "\" x2=\"" +
           detail::fmt2(x1) + "\" y2=\"" + detail::fmt2(ys) +
           "\" stroke=\"gray\" stroke-dasharray=\"6,4\" stroke-width=\"1\"/>\n";
  }

  out += "<polyline class=\"series\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < finite.size(); ++i) {
    if (i) out += ' ';
    out += detail::fmt2(x_of(finite[i].t)) + "," + detail::fmt2(y_of(finite[i].value));
  }
  out += "\"/>\n";

  for (ExtremumKind kind : {ExtremumKind::Min, ExtremumKind::Max}) {
    const auto e = s.extremum(m, kind);
    if (!e) continue;
    const std::string k(to_string(kind));
    const std::string colour = kind == ExtremumKind::Min ? "firebrick" : "darkgreen";
    out += "<circle class=\"extremum " + k + "\" cx=\"" + detail::fmt2(x_of(e->t)) + "\" cy=\"" +
           detail::fmt2(y_of(e->value)) + "\" r=\"5\" fill=\"" + colour + "\"><title>" + k + " " + name +
           " = " + format_number(e->value) + " at t=" + std::to_string(e->t) + "</title></circle>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pollinfo
