// Copyright 2026 The tumornet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tumornet/plot.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "tumornet/error.hpp"
#include "tumornet/format.hpp"
#include "tumornet/report.hpp"
#include "tumornet/sweep.hpp"

namespace tumornet {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 80;
constexpr double kRight = 230;
constexpr double kTop = 30;
constexpr double kBottom = 60;
constexpr int kTicks = 5;

constexpr std::array<std::string_view, 8> kPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct Range {
  double lo = 0;
  double hi = 1;
};

Range padded(double lo, double hi) {
  if (hi - lo <= 0) return {lo - 1.0, hi + 1.0};
  return {lo, hi};
}

std::string escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_fixed(v, 2); }

std::string render(const std::vector<Series>& series, std::string_view x_label,
                   std::string_view y_label, std::string_view title) {
  double x_lo = series.front().points.front().first, x_hi = x_lo;
  double y_lo = series.front().points.front().second, y_hi = y_lo;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  const Range xr = padded(x_lo, x_hi);
  const Range yr = padded(std::min(0.0, y_lo), y_hi);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto sx = [&](double x) {
    return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto sy = [&](double y) {
    return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kLeft) + "\" y=\"20\" font-size=\"14\">" +
         escape(title) + "</text>\n";

  // Axes.
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) +
         "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" + num(kTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    svg += "<text x=\"" + num(sx(fx)) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + num(fx) +
           "</text>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(sy(fy) + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + num(fy) + "</text>\n";
  }
  svg += "<text class=\"x-label\" x=\"" + num(kLeft + plot_w / 2) +
         "\" y=\"" + num(kHeight - 15) +
         "\" font-size=\"12\" text-anchor=\"middle\">" + escape(x_label) +
         "</text>\n";
  svg += "<text class=\"y-label\" x=\"15\" y=\"" + num(kTop + plot_h / 2) +
         "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
         num(kTop + plot_h / 2) + ")\">" + escape(y_label) + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto color = kPalette[i % kPalette.size()];
    std::string points;
    for (const auto& [x, y] : series[i].points) {
      if (!points.empty()) points += ' ';
      points += num(sx(x)) + "," + num(sy(y));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    const double lx = kWidth - kRight + 15;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(lx + 20) + "\" y2=\"" + num(ly) + "\" stroke=\"" +
           std::string(color) + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(lx + 26) + "\" y=\"" + num(ly + 4) +
           "\" font-size=\"11\">" + escape(series[i].label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

double cell_number(const CsvTable& table, std::size_t row, std::size_t col) {
  const auto v = parse_double(table.rows[row][col]);
  if (!v) {
    throw Error(ErrorCode::kInvalidInput,
                "line " + std::to_string(row + 2) + ": bad number '" +
                    table.rows[row][col] + "' in column " +
                    table.header[col]);
  }
  return *v;
}

void require_header(const CsvTable& table, std::string_view expected) {
  std::string joined;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) joined += ',';
    joined += table.header[i];
  }
  if (joined != expected) {
    throw Error(ErrorCode::kInvalidInput,
                "header mismatch: expected '" + std::string(expected) + "'");
  }
  if (table.rows.empty()) {
    throw Error(ErrorCode::kInvalidInput, "CSV has no data rows");
  }
}

std::string plot_timeseries(const CsvTable& table) {
  require_header(table, kRunCsvHeader);
  const std::size_t step_col = *table.column("step");
  std::vector<Series> series;
  for (const std::string_view name :
       {"normal", "quiescent", "metastatic", "dead"}) {
    Series s;
    s.label = std::string(name);
    const std::size_t col = *table.column(name);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      s.points.emplace_back(cell_number(table, r, step_col),
                            cell_number(table, r, col));
    }
    series.push_back(std::move(s));
  }
  return render(series, "step", "normal, quiescent, metastatic, dead",
                "cell states per step");
}

std::string plot_sweep(const CsvTable& table) {
  require_header(table, kSweepSummaryHeader);
  const std::size_t x_col = *table.column("angiogenesis");
  const std::size_t y_col = *table.column("mean_volume_ratio");
  // Group rows by every other cell parameter, keeping first-seen order.
  std::map<std::string, std::size_t> index;
  std::vector<Series> series;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string label = "csc_count=" + row[*table.column("csc_count")] +
                              " K=" + row[*table.column("K")] +
                              " recovery=" + row[*table.column("recovery")] +
                              " quiescence=" +
                              row[*table.column("quiescence")];
    auto [it, inserted] = index.emplace(label, series.size());
    if (inserted) series.push_back(Series{label, {}});
    series[it->second].points.emplace_back(cell_number(table, r, x_col),
                                           cell_number(table, r, y_col));
  }
  for (auto& s : series) std::sort(s.points.begin(), s.points.end());
  return render(series, "angiogenesis", "mean_volume_ratio",
                "volume ratio against angiogenesis");
}

}  // namespace

std::optional<PlotKind> parse_plot_kind(std::string_view name) {
  if (name == "timeseries") return PlotKind::kTimeseries;
  if (name == "sweep") return PlotKind::kSweep;
  return std::nullopt;
}

std::string plot_svg(std::string_view csv_text, PlotKind kind) {
  const CsvTable table = parse_csv(csv_text);
  return kind == PlotKind::kTimeseries ? plot_timeseries(table)
                                       : plot_sweep(table);
}

}  // namespace tumornet
