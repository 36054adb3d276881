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

#include "tumornet/report.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tumornet/error.hpp"
#include "tumornet/format.hpp"

namespace tumornet {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return lines;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.emplace_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

}  // namespace

std::string run_csv(const TimeSeries& series) {
  if (series.empty()) {
    throw Error(ErrorCode::kInvalidInput, "cannot write an empty series");
  }
  std::string out(kRunCsvHeader);
  out += '\n';
  for (const auto& r : series.records) {
    out += std::to_string(r.step);
    out += ',';
    out += std::to_string(r.n_nodes);
    out += ',';
    out += std::to_string(r.n_edges);
    out += ',';
    out += std::to_string(r.count_normal);
    out += ',';
    out += std::to_string(r.count_quiescent);
    out += ',';
    out += std::to_string(r.count_metastatic);
    out += ',';
    out += std::to_string(r.count_dead);
    out += ',';
    out += format_fixed(r.volume_ratio, 6);
    out += '\n';
  }
  return out;
}

TimeSeries parse_run_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front() != kRunCsvHeader) {
    throw Error(ErrorCode::kInvalidInput,
                "line 1: expected header '" + std::string(kRunCsvHeader) + "'");
  }
  TimeSeries series;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split_fields(lines[i]);
    const std::string where = "line " + std::to_string(i + 1) + ": ";
    if (fields.size() != 8) {
      throw Error(ErrorCode::kInvalidInput,
                  where + "expected 8 columns, got " +
                      std::to_string(fields.size()));
    }
    std::array<unsigned long long, 7> ints{};
    for (std::size_t c = 0; c < 7; ++c) {
      const auto v = parse_uint(fields[c]);
      if (!v) {
        throw Error(ErrorCode::kInvalidInput,
                    where + "bad integer '" + fields[c] + "'");
      }
      ints[c] = *v;
    }
    const auto ratio = parse_double(fields[7]);
    if (!ratio) {
      throw Error(ErrorCode::kInvalidInput,
                  where + "bad volume_ratio '" + fields[7] + "'");
    }
    series.records.push_back(StepRecord{ints[0], ints[1], ints[2], ints[3],
                                        ints[4], ints[5], ints[6], *ratio});
  }
  return series;
}

std::string summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  const StepRecord& f = s.final_record;
  j["seed"] = s.seed;
  j["defaults_applied"] = s.defaults_applied;
  j["termination"] = std::string(to_string(s.termination));
  j["steps"] = f.step;
  j["n_nodes"] = f.n_nodes;
  j["n_edges"] = f.n_edges;
  j["normal"] = f.count_normal;
  j["quiescent"] = f.count_quiescent;
  j["metastatic"] = f.count_metastatic;
  j["dead"] = f.count_dead;
  j["volume_ratio"] = f.volume_ratio;
  j["tci"] = s.tci ? nlohmann::ordered_json(std::string(to_string(*s.tci)))
                   : nlohmann::ordered_json(nullptr);
  auto hist = nlohmann::ordered_json::object();
  for (const auto& [degree, count] : s.degree_histogram) {
    hist[std::to_string(degree)] = count;
  }
  j["degree_histogram"] = hist;
  j["wall_clock_seconds"] = s.wall_clock_seconds;
  return j.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "error reading '" + path.string() + "'");
  }
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() +
                                    "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIo, "error writing '" + path.string() + "'");
  }
}

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

CsvTable parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front().empty()) {
    throw Error(ErrorCode::kInvalidInput, "CSV has no header");
  }
  CsvTable table;
  table.header = split_fields(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto fields = split_fields(lines[i]);
    if (fields.size() != table.header.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "line " + std::to_string(i + 1) + ": expected " +
                      std::to_string(table.header.size()) +
                      " columns, got " + std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  return table;
}

}  // namespace tumornet
