// Copyright 2026 The swapbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "swapbit/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace swapbit::cli {

using nlohmann::json;

std::string_view to_string(Command c) {
  switch (c) {
    case Command::kProtocol: return "protocol";
    case Command::kSweep: return "sweep";
    case Command::kMonteCarlo: return "montecarlo";
    case Command::kVerifyKraus: return "verify-kraus";
    case Command::kTradeoff: return "tradeoff";
  }
  return "unknown";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kIdeal: return "ideal";
    case Family::kClassical: return "classical";
    case Family::kRandom: return "random";
  }
  return "unknown";
}

std::string_view to_string(Format f) { return f == Format::kJson ? "json" : "csv"; }

std::optional<Family> parse_family(std::string_view s) {
  if (s == "ideal") return Family::kIdeal;
  if (s == "classical") return Family::kClassical;
  if (s == "random") return Family::kRandom;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return std::nullopt;
}

namespace {

Family family_or_throw(const std::string& s) {
  if (auto f = parse_family(s)) return *f;
  throw ConfigError("gate", "must be one of ideal, classical, random (got '" + s + "')");
}

Format format_or_throw(const std::string& s) {
  if (auto f = parse_format(s)) return *f;
  throw ConfigError("format", "must be json or csv (got '" + s + "')");
}

template <class T>
T get_unsigned(const json& v, const std::string& key) {
  if (!v.is_number_unsigned()) throw ConfigError(key, "must be a non-negative integer");
  return v.get<T>();
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key, "must be a string");
  return v.get<std::string>();
}

}  // namespace

void apply_config_json(ExperimentConfig& cfg, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "top level must be an object");

  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      cfg.n = get_unsigned<std::size_t>(v, key);
    } else if (key == "n_max") {
      cfg.n_max = get_unsigned<std::size_t>(v, key);
    } else if (key == "gate") {
      cfg.gate = family_or_throw(get_string(v, key));
    } else if (key == "kraus_rank") {
      cfg.kraus_rank = get_unsigned<std::size_t>(v, key);
    } else if (key == "seed") {
      cfg.seed = get_unsigned<std::uint64_t>(v, key);
    } else if (key == "samples") {
      cfg.samples = get_unsigned<std::size_t>(v, key);
    } else if (key == "prior") {
      if (!v.is_number()) throw ConfigError(key, "must be a number");
      cfg.prior = v.get<double>();
    } else if (key == "format") {
      cfg.format = format_or_throw(get_string(v, key));
    } else if (key == "out") {
      cfg.out = get_string(v, key);
    } else if (key == "deterministic") {
      if (!v.is_boolean()) throw ConfigError(key, "must be true or false");
      cfg.deterministic = v.get<bool>();
    } else if (key == "input") {
      cfg.input = get_string(v, key);
    } else if (key == "threads") {
      cfg.threads = get_unsigned<unsigned>(v, key);
    } else {
      throw ConfigError(key, "unknown config key");
    }
  }
}

ExperimentConfig resolve_config(Command command, const ConfigOverrides& flags,
                                const std::optional<std::string>& config_path) {
  ExperimentConfig cfg;
  cfg.command = command;

  if (config_path) {
    std::ifstream in(*config_path, std::ios::binary);
    if (!in) throw IoError("cannot read config file '" + *config_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_json(cfg, text.str());
  }

  if (flags.n) cfg.n = *flags.n;
  if (flags.n_max) cfg.n_max = *flags.n_max;
  if (flags.gate) cfg.gate = family_or_throw(*flags.gate);
  if (flags.kraus_rank) cfg.kraus_rank = *flags.kraus_rank;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.samples) cfg.samples = *flags.samples;
  if (flags.prior) cfg.prior = *flags.prior;
  if (flags.format) cfg.format = format_or_throw(*flags.format);
  if (flags.out) cfg.out = *flags.out;
  if (flags.deterministic) cfg.deterministic = *flags.deterministic;
  if (flags.input) cfg.input = *flags.input;
  if (flags.threads) cfg.threads = *flags.threads;

  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.command == Command::kVerifyKraus) {
    if (cfg.input.empty()) throw ConfigError("input", "verify-kraus requires an input file");
    return;
  }
  const std::size_t n_min = cfg.command == Command::kTradeoff ? 2 : 1;
  if (cfg.n < n_min) throw ConfigError("n", "must be >= " + std::to_string(n_min));
  if (cfg.n_max && *cfg.n_max < cfg.n) throw ConfigError("n_max", "must be >= n");
  const std::size_t limit = cfg.command == Command::kMonteCarlo ? kMaxMonteCarloN : kMaxSweepN;
  if (cfg.n_last() > limit) {
    throw ConfigError(cfg.n_max ? "n_max" : "n", "must be <= " + std::to_string(limit) + " for " +
                                                     std::string(to_string(cfg.command)));
  }
  if (cfg.samples < 1) throw ConfigError("samples", "must be >= 1");
  if (!(cfg.prior >= 0.0 && cfg.prior <= 1.0)) throw ConfigError("prior", "must lie in [0, 1]");
  if (cfg.gate == Family::kRandom && cfg.kraus_rank < 1) throw ConfigError("kraus_rank", "must be >= 1");
}

}  // namespace swapbit::cli
