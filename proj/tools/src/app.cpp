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


#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "swapbit/cli/commands.hpp"
#include "swapbit/cli/kraus_io.hpp"
#include "swapbit/version.hpp"

namespace swapbit::cli {

std::string resolve_output_path(const ExperimentConfig& cfg, const char* env_output_dir) {
  if (!cfg.out.empty()) return cfg.out == "-" ? std::string() : cfg.out;
  if (env_output_dir != nullptr && *env_output_dir != '\0') {
    std::string name = "swapbit_" + std::string(to_string(cfg.command)) + "." + std::string(to_string(cfg.format));
    return (std::filesystem::path(env_output_dir) / name).string();
  }
  return {};
}

namespace {

struct Flags {
  ConfigOverrides values;
  std::string config_path;
  std::size_t n = 0, n_max = 0, kraus_rank = 0, samples = 0;
  std::uint64_t seed = 0;
  double prior = 0.0;
  std::string gate, format, out, input;
  unsigned threads = 0;
  bool deterministic = false;
};

struct Options {
  CLI::Option* config = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* n_max = nullptr;
  CLI::Option* gate = nullptr;
  CLI::Option* kraus_rank = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* prior = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* deterministic = nullptr;
  CLI::Option* input = nullptr;
  CLI::Option* threads = nullptr;
};

Options add_options(CLI::App* sub, Flags& f, Command command) {
  Options o;
  o.config = sub->add_option("--config", f.config_path, "JSON config file (flags take precedence)");
  if (command == Command::kVerifyKraus) {
    o.input = sub->add_option("--input", f.input, "Kraus set JSON file");
  } else {
    o.n = sub->add_option("--n", f.n, "Number of settings N (first N of a range)");
    o.n_max = sub->add_option("--n-max", f.n_max, "Last N of the range (default: --n)");
  }
  if (command == Command::kProtocol || command == Command::kSweep || command == Command::kMonteCarlo) {
    o.gate = sub->add_option("--gate", f.gate, "Gate family: ideal, classical or random");
    o.kraus_rank = sub->add_option("--kraus-rank", f.kraus_rank, "Kraus rank M of random gates");
    o.prior = sub->add_option("--prior", f.prior, "Prior probability of bit 0");
  }
  o.seed = sub->add_option("--seed", f.seed, "Master seed");
  if (command == Command::kMonteCarlo) o.samples = sub->add_option("--samples", f.samples, "Samples per N");
  o.format = sub->add_option("--format", f.format, "Output format: json or csv");
  o.out = sub->add_option("--out", f.out, "Output file ('-' for stdout)");
  o.deterministic = sub->add_flag("--deterministic", f.deterministic, "Omit the timestamp field");
  o.threads = sub->add_option("--threads", f.threads, "Worker threads (0: hardware concurrency)");
  return o;
}

template <class T>
void take(CLI::Option* opt, const T& value, std::optional<T>& slot) {
  if (opt != nullptr && opt->count() > 0) slot = value;
}

ConfigOverrides collect(const Options& o, const Flags& f) {
  ConfigOverrides v;
  take(o.n, f.n, v.n);
  take(o.n_max, f.n_max, v.n_max);
  take(o.gate, f.gate, v.gate);
  take(o.kraus_rank, f.kraus_rank, v.kraus_rank);
  take(o.seed, f.seed, v.seed);
  take(o.samples, f.samples, v.samples);
  take(o.prior, f.prior, v.prior);
  take(o.format, f.format, v.format);
  take(o.out, f.out, v.out);
  take(o.deterministic, f.deterministic, v.deterministic);
  take(o.input, f.input, v.input);
  take(o.threads, f.threads, v.threads);
  return v;
}

void emit(const ExperimentConfig& cfg, const std::vector<Record>& records, std::ostream& out) {
  const std::string path = resolve_output_path(cfg, std::getenv(kOutputDirEnv));
  if (path.empty()) {
    write_records(out, records, cfg.format);
    out.flush();
    return;
  }
  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  write_records(file, records, cfg.format);
  file.flush();
  if (!file) throw IoError("error writing output file '" + path + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Experiment runner for swap-controlled bit hiding protocols", "swapbit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  struct Sub {
    Command command;
    CLI::App* app;
    Flags flags;
    Options options;
  };
  std::vector<std::unique_ptr<Sub>> subs;
  const std::pair<Command, const char*> table[] = {
      {Command::kProtocol, "Run the protocol and report success probabilities per N"},
      {Command::kSweep, "Sweep N and compare the success probability with 1 - 1/(2N)"},
      {Command::kMonteCarlo, "Check information gain against entanglement on random samples"},
      {Command::kVerifyKraus, "Test whether a Kraus set is a generalized control gate"},
      {Command::kTradeoff, "Report the location/value measurement trade-off per N"},
  };
  for (const auto& [command, description] : table) {
    auto s = std::make_unique<Sub>();
    s->command = command;
    s->app = app.add_subcommand(std::string(to_string(command)), description);
    s->options = add_options(s->app, s->flags, command);
    subs.push_back(std::move(s));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Sub* chosen = nullptr;
  for (const auto& s : subs)
    if (s->app->parsed()) chosen = s.get();

  try {
    std::optional<std::string> config_path;
    if (chosen->options.config->count() > 0) config_path = chosen->flags.config_path;
    const ExperimentConfig cfg =
        resolve_config(chosen->command, collect(chosen->options, chosen->flags), config_path);
    const CommandOutput result = run_command(cfg, cfg.deterministic ? std::string() : utc_timestamp());
    emit(cfg, result.records, out);
    if (result.exit_code == kExitDisagreement) err << "swapbit: theorem check disagreement\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    err << "swapbit: config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "swapbit: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const KrausParseError& e) {
    err << "swapbit: invalid Kraus file: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotAChannelError& e) {
    err << "swapbit: not a channel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "swapbit: error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace swapbit::cli
