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

#include "tumornet/config.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>

#include "tumornet/error.hpp"
#include "tumornet/format.hpp"

namespace tumornet {
namespace {

struct Entry {
  std::size_t line = 0;
  std::string value;
};

// key -> (line, raw value); rejects syntax errors, duplicates, unknown keys.
std::map<std::string, Entry> tokenize(std::string_view text,
                                      std::span<const std::string_view> keys,
                                      ErrorCode code) {
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(code, where + "expected key=value, got '" +
                            std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw Error(code, where + "unknown key '" + key + "'");
    }
    if (value.empty()) {
      throw Error(code, where + "missing value for '" + key + "'");
    }
    if (entries.contains(key)) {
      throw Error(code, where + "duplicate key '" + key + "'");
    }
    entries.emplace(key, Entry{line_no, value});
  }
  return entries;
}

[[noreturn]] void fail(ErrorCode code, const Entry& e, const std::string& key,
                       const std::string& why) {
  throw Error(code, "line " + std::to_string(e.line) + ": " + key + "=" +
                        e.value + ": " + why);
}

long long to_integer(ErrorCode code, const Entry& e, const std::string& key,
                     long long min_value) {
  const auto v = parse_int(e.value);
  if (!v) fail(code, e, key, "integer required");
  if (*v < min_value) {
    fail(code, e, key, "must be at least " + std::to_string(min_value));
  }
  return *v;
}

std::uint64_t to_u64(ErrorCode code, const Entry& e, const std::string& key) {
  const auto v = parse_uint(e.value);
  if (!v) fail(code, e, key, "non-negative integer required");
  return *v;
}

double to_probability(ErrorCode code, const Entry& e, const std::string& key,
                      std::string_view value, std::optional<Factor> factor) {
  if (factor) {
    if (const auto level = parse_level(value)) {
      return factor_level(*factor, *level);
    }
  }
  const auto v = parse_double(value);
  if (!v) {
    fail(code, e, key,
         factor ? "number or low/medium/high required" : "number required");
  }
  if (!(*v >= 0.0 && *v <= 1.0)) fail(code, e, key, "must lie in [0, 1]");
  return *v;
}

bool to_bool(ErrorCode code, const Entry& e, const std::string& key) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  fail(code, e, key, "true or false required");
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = value.find(',');
    items.push_back(trim(value.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

constexpr std::array<std::string_view, 12> kConfigKeys{
    "n_initial",      "K",          "p",
    "angiogenesis",   "recovery",   "quiescence",
    "spawn_rate",     "metastasis_rate", "apoptosis_rate",
    "max_steps",      "seed",       "allow_below_threshold"};

constexpr std::array<std::string_view, 9> kSweepKeys{
    "csc_counts", "K",         "angiogenesis", "recovery",
    "quiescence", "seeds_per_cell", "base_seed", "max_steps",
    "allow_below_threshold"};

}  // namespace

ParsedConfig parse_config(std::string_view text) {
  constexpr ErrorCode code = ErrorCode::kInvalidConfig;
  const auto entries = tokenize(text, kConfigKeys, code);
  ParsedConfig parsed;
  ModelConfig& c = parsed.config;

  for (const std::string_view required : {"n_initial", "K"}) {
    if (!entries.contains(std::string(required))) {
      throw Error(code, "missing required key '" + std::string(required) + "'");
    }
  }

  for (const std::string_view key_view : kConfigKeys) {
    const std::string key(key_view);
    const auto it = entries.find(key);
    if (it == entries.end()) {
      parsed.defaulted.push_back(key);
      continue;
    }
    const Entry& e = it->second;
    if (key == "n_initial") {
      c.n_initial = static_cast<std::size_t>(to_integer(code, e, key, 1));
    } else if (key == "K") {
      const auto k = to_integer(code, e, key, 1);
      if (k > std::numeric_limits<int>::max()) fail(code, e, key, "too large");
      c.avg_degree = static_cast<int>(k);
    } else if (key == "p") {
      c.edge_prob = to_probability(code, e, key, e.value, std::nullopt);
    } else if (key == "angiogenesis" || key == "recovery" ||
               key == "quiescence") {
      const double v = to_probability(code, e, key, e.value, parse_factor(key));
      if (key == "angiogenesis") c.factors.angiogenesis = v;
      if (key == "recovery") c.factors.recovery = v;
      if (key == "quiescence") c.factors.quiescence = v;
    } else if (key == "spawn_rate") {
      c.spawn_rate = to_probability(code, e, key, e.value, std::nullopt);
    } else if (key == "metastasis_rate") {
      c.metastasis_rate = to_probability(code, e, key, e.value, std::nullopt);
    } else if (key == "apoptosis_rate") {
      c.apoptosis_rate = to_probability(code, e, key, e.value, std::nullopt);
    } else if (key == "max_steps") {
      c.max_steps = to_u64(code, e, key);
    } else if (key == "seed") {
      c.seed = to_u64(code, e, key);
    } else if (key == "allow_below_threshold") {
      c.allow_below_threshold = to_bool(code, e, key);
    }
  }
  return parsed;
}

std::string serialize_config(const ModelConfig& c) {
  std::string out;
  const auto put = [&out](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  put("n_initial", std::to_string(c.n_initial));
  put("K", std::to_string(c.avg_degree));
  if (c.edge_prob) put("p", format_shortest(*c.edge_prob));
  put("angiogenesis", format_shortest(c.factors.angiogenesis));
  put("recovery", format_shortest(c.factors.recovery));
  put("quiescence", format_shortest(c.factors.quiescence));
  put("spawn_rate", format_shortest(c.spawn_rate));
  put("metastasis_rate", format_shortest(c.metastasis_rate));
  put("apoptosis_rate", format_shortest(c.apoptosis_rate));
  put("max_steps", std::to_string(c.max_steps));
  put("seed", std::to_string(c.seed));
  put("allow_below_threshold", c.allow_below_threshold ? "true" : "false");
  return out;
}

SweepSpec parse_sweep_spec(std::string_view text) {
  constexpr ErrorCode code = ErrorCode::kInvalidSpec;
  const auto entries = tokenize(text, kSweepKeys, code);
  for (const std::string_view required :
       {"csc_counts", "K", "angiogenesis", "recovery", "quiescence"}) {
    if (!entries.contains(std::string(required))) {
      throw Error(code, "missing required key '" + std::string(required) + "'");
    }
  }

  SweepSpec spec;
  for (const auto& [key, e] : entries) {
    if (key == "csc_counts" || key == "K") {
      for (const auto item : split_list(e.value)) {
        const auto v = parse_int(item);
        if (!v || *v < 1) fail(code, e, key, "positive integers required");
        if (key == "K") {
          spec.k_values.push_back(static_cast<int>(*v));
        } else {
          spec.csc_counts.push_back(static_cast<std::size_t>(*v));
        }
      }
    } else if (key == "angiogenesis" || key == "recovery" ||
               key == "quiescence") {
      auto& values = key == "angiogenesis" ? spec.angiogenesis_values
                     : key == "recovery"   ? spec.recovery_values
                                           : spec.quiescence_values;
      for (const auto item : split_list(e.value)) {
        values.push_back(to_probability(code, e, key, item, parse_factor(key)));
      }
    } else if (key == "seeds_per_cell") {
      spec.seeds_per_cell = static_cast<std::size_t>(to_integer(code, e, key, 1));
    } else if (key == "base_seed") {
      spec.base_seed = to_u64(code, e, key);
    } else if (key == "max_steps") {
      spec.max_steps = static_cast<std::uint64_t>(to_integer(code, e, key, 1));
    } else if (key == "allow_below_threshold") {
      spec.allow_below_threshold = to_bool(code, e, key);
    }
  }
  return spec;
}

}  // namespace tumornet
