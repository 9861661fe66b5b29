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
#include <iosfwd>
#include <string>
#include <vector>

#include "swapbit/cli/config.hpp"
#include "swapbit/cli/record.hpp"
#include "swapbit/entanglement.hpp"
#include "swapbit/gates.hpp"

namespace swapbit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitIo = 3;

struct CommandOutput {
  std::vector<Record> records;
  int exit_code = kExitOk;
};

/// Gate of the configured family; random gates draw from `gate_seed`.
GeneralizedControlGate make_gate(Family family, std::size_t n, std::size_t kraus_rank, std::uint64_t gate_seed);

/// Monte Carlo sample kinds, cycled by sample index.
enum class SampleKind { kPure, kMixed, kDiagonal, kClassicalLike };
std::string_view to_string(SampleKind k);

struct MonteCarloSample {
  SampleKind kind;
  IffRecord record;
};

/// One iff check. Classical-like samples replace the gate with classical_gate(n).
MonteCarloSample montecarlo_sample(Family family, std::size_t n, std::size_t kraus_rank, std::uint64_t cell_seed,
                                   std::size_t index);

struct MonteCarloSummary {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t degenerate = 0;
  std::size_t k0_certified = 0;
  std::size_t info_gain = 0;
  std::size_t npt = 0;
  double max_product_deviation = 0.0;
};

MonteCarloSummary summarize(std::size_t n, const std::vector<MonteCarloSample>& samples);

CommandOutput cmd_protocol(const ExperimentConfig& cfg, const std::string& timestamp);
CommandOutput cmd_sweep(const ExperimentConfig& cfg, const std::string& timestamp);
CommandOutput cmd_montecarlo(const ExperimentConfig& cfg, const std::string& timestamp);
CommandOutput cmd_verify_kraus(const ExperimentConfig& cfg, const std::string& timestamp);
CommandOutput cmd_tradeoff(const ExperimentConfig& cfg, const std::string& timestamp);

/// Dispatches on cfg.command. An empty timestamp is omitted from records.
CommandOutput run_command(const ExperimentConfig& cfg, const std::string& timestamp);

/// ISO 8601 UTC, second resolution.
std::string utc_timestamp();

/// Full command-line entry point; returns the process exit code.
/// Reports go to `out` unless an output file is selected.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// --out when given ("-" is stdout); else $SWAPBIT_OUTPUT_DIR/swapbit_<command>.<ext>; else stdout (empty).
std::string resolve_output_path(const ExperimentConfig& cfg, const char* env_output_dir);

inline constexpr const char* kOutputDirEnv = "SWAPBIT_OUTPUT_DIR";

}  // namespace swapbit::cli
