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


#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swapbit::cli {

enum class Command { kProtocol, kSweep, kMonteCarlo, kVerifyKraus, kTradeoff };
enum class Family { kIdeal, kClassical, kRandom };
enum class Format { kJson, kCsv };

std::string_view to_string(Command c);
std::string_view to_string(Family f);
std::string_view to_string(Format f);
std::optional<Family> parse_family(std::string_view s);
std::optional<Format> parse_format(std::string_view s);

/// Invalid configuration value; `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& constraint)
      : std::runtime_error(field + ": " + constraint), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Command command = Command::kProtocol;
  std::size_t n = 2;
  std::optional<std::size_t> n_max;
  Family gate = Family::kIdeal;
  std::size_t kraus_rank = 2;
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  double prior = 0.5;
  Format format = Format::kJson;
  std::string out;
  bool deterministic = false;
  std::string input;
  unsigned threads = 0;  // 0: hardware concurrency

  std::size_t n_last() const { return n_max.value_or(n); }
};

/// Values given on the command line; unset fields fall through.
struct ConfigOverrides {
  std::optional<std::size_t> n;
  std::optional<std::size_t> n_max;
  std::optional<std::string> gate;
  std::optional<std::size_t> kraus_rank;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<double> prior;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<bool> deterministic;
  std::optional<std::string> input;
  std::optional<unsigned> threads;
};

inline constexpr std::size_t kMaxSweepN = 64;
inline constexpr std::size_t kMaxMonteCarloN = 16;

/// Merges a JSON config object (keys as the long flags, '-' spelled '_')
/// into `cfg`. Syntax errors, unknown keys and wrong types throw ConfigError.
void apply_config_json(ExperimentConfig& cfg, std::string_view json_text);

/// Defaults, then the config file (if any), then flags. Result is validated.
ExperimentConfig resolve_config(Command command, const ConfigOverrides& flags,
                                const std::optional<std::string>& config_path);

void validate(const ExperimentConfig& cfg);

}  // namespace swapbit::cli
