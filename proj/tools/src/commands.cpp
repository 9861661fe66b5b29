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


#include "swapbit/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>

#include "swapbit/cli/kraus_io.hpp"
#include "swapbit/cli/worker_pool.hpp"
#include "swapbit/density.hpp"
#include "swapbit/protocol.hpp"
#include "swapbit/random.hpp"
#include "swapbit/spaces.hpp"
#include "swapbit/version.hpp"

namespace swapbit::cli {

GeneralizedControlGate make_gate(Family family, std::size_t n, std::size_t kraus_rank, std::uint64_t gate_seed) {
  switch (family) {
    case Family::kIdeal: return ideal_gate(n);
    case Family::kClassical: return classical_gate(n);
    case Family::kRandom: return random_gate(n, kraus_rank, gate_seed);
  }
  throw std::invalid_argument("unknown gate family");
}

std::string_view to_string(SampleKind k) {
  switch (k) {
    case SampleKind::kPure: return "pure";
    case SampleKind::kMixed: return "mixed";
    case SampleKind::kDiagonal: return "diagonal";
    case SampleKind::kClassicalLike: return "classical_like";
  }
  return "unknown";
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

GateFamily report_family(Family f) {
  switch (f) {
    case Family::kIdeal: return GateFamily::kIdeal;
    case Family::kClassical: return GateFamily::kClassical;
    case Family::kRandom: return GateFamily::kCustom;
  }
  return GateFamily::kCustom;
}

DensityOperator uniform_input(std::size_t n) { return DensityOperator::from_pure(uniform_device_state(DeviceBasis(n))); }

// Config echo shared by every row.
Record header(const ExperimentConfig& cfg) {
  Record r;
  r.add("command", std::string(to_string(cfg.command)));
  r.add("version", std::string(kVersion));
  r.add("seed", cfg.seed);
  return r;
}

void finish(Record& r, const std::string& timestamp) {
  if (!timestamp.empty()) r.add("timestamp", timestamp);
}

std::vector<std::size_t> n_range(const ExperimentConfig& cfg) {
  std::vector<std::size_t> ns;
  for (std::size_t n = cfg.n; n <= cfg.n_last(); ++n) ns.push_back(n);
  return ns;
}

double max_mixed_deviation(const DensityOperator& rho) {
  const std::size_t n = rho.dim();
  return max_abs_diff(rho.matrix(), (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n));
}

}  // namespace

CommandOutput cmd_protocol(const ExperimentConfig& cfg, const std::string& timestamp) {
  const auto ns = n_range(cfg);
  CommandOutput out;
  out.records = parallel_map(ns.size(), cfg.threads, [&](std::size_t i) {
    const std::size_t n = ns[i];
    const std::uint64_t cell_seed = derive_seed(cfg.seed, n);
    const auto gate = make_gate(cfg.gate, n, cfg.kraus_rank, cell_seed);
    const auto rep = make_report(gate, report_family(cfg.gate), uniform_input(n), cfg.prior);
    const auto b0 = distinguishable_baseline(n, 0);
    const auto b1 = distinguishable_baseline(n, 1);

    Record r = header(cfg);
    r.add("cell_seed", cell_seed);
    r.add("n", static_cast<std::uint64_t>(n));
    r.add("gate", std::string(to_string(cfg.gate)));
    r.add("kraus_rank", static_cast<std::uint64_t>(gate.kraus_rank()));
    r.add("prior", cfg.prior);
    r.add("measurement", std::string(rep.measurement));
    r.add("p_success", rep.p_success);
    r.add("helstrom_bound", rep.helstrom_bound);
    r.add("trace_distance_device", rep.trace_distance_device);
    r.add("location_guess_prob", rep.location_guess_prob);
    if (n >= 2) {
      const auto t = location_tradeoff(n);
      r.add("setting_location_prob", t.value_ignorant_location_prob);
      r.add("setting_outcome_deviation", t.outcome_deviation);
    } else {
      r.add("setting_location_prob", std::monostate{});
      r.add("setting_outcome_deviation", std::monostate{});
    }
    r.add("baseline_trace_distance", trace_distance(b0, b1));
    r.add("baseline_mixed_deviation", std::max(max_mixed_deviation(b0), max_mixed_deviation(b1)));
    r.add("rho_d_final_k0", rep.rho_d_final_k0);
    r.add("rho_d_final_k1", rep.rho_d_final_k1);
    finish(r, timestamp);
    return r;
  });
  return out;
}

CommandOutput cmd_sweep(const ExperimentConfig& cfg, const std::string& timestamp) {
  const auto ns = n_range(cfg);
  CommandOutput out;
  out.records = parallel_map(ns.size(), cfg.threads, [&](std::size_t i) {
    const std::size_t n = ns[i];
    const std::uint64_t cell_seed = derive_seed(cfg.seed, n);
    const auto gate = make_gate(cfg.gate, n, cfg.kraus_rank, cell_seed);
    const DensityOperator phi = uniform_input(n);
    const auto reduced = reduced_device_states(gate, phi);
    const auto rep_family = report_family(cfg.gate);
    const MeasurementSpec m = rep_family == GateFamily::kCustom
                                  ? helstrom_measurement(reduced.rho0, reduced.rho1, cfg.prior)
                                  : canonical_measurement(phi);
    const double p_w = success_probability(reduced.rho0, reduced.rho1, m, cfg.prior);
    const double helstrom = helstrom_bound(reduced.rho0, reduced.rho1, cfg.prior);
    const double closed = 1.0 - 1.0 / (2.0 * static_cast<double>(n));

    Record r = header(cfg);
    r.add("cell_seed", cell_seed);
    r.add("n", static_cast<std::uint64_t>(n));
    r.add("gate", std::string(to_string(cfg.gate)));
    r.add("kraus_rank", static_cast<std::uint64_t>(gate.kraus_rank()));
    r.add("prior", cfg.prior);
    r.add("measurement", std::string(rep_family == GateFamily::kCustom ? "helstrom" : "canonical"));
    r.add("p_w", p_w);
    r.add("p_closed_form", closed);
    r.add("deviation", std::abs(p_w - closed));
    r.add("helstrom_bound", helstrom);
    r.add("helstrom_gap", helstrom - p_w);
    finish(r, timestamp);
    return r;
  });
  return out;
}

MonteCarloSample montecarlo_sample(Family family, std::size_t n, std::size_t kraus_rank, std::uint64_t cell_seed,
                                   std::size_t index) {
  Rng rng(cell_seed);
  const auto kind = static_cast<SampleKind>(index % 4);
  const std::uint64_t gate_seed = rng.next();
  const auto gate = kind == SampleKind::kClassicalLike ? classical_gate(n) : make_gate(family, n, kraus_rank, gate_seed);

  std::optional<DensityOperator> rho;
  switch (kind) {
    case SampleKind::kPure:
    case SampleKind::kClassicalLike:
      rho = random_pure_state(rng, n);
      break;
    case SampleKind::kMixed:
      rho = random_mixed_state(rng, n, std::min<std::size_t>(2, n));
      break;
    case SampleKind::kDiagonal: {
      std::vector<Complex> weights(n);
      double total = 0.0;
      for (auto& w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w.real();
      }
      for (auto& w : weights) w /= total;
      rho = DensityOperator::from_matrix(ComplexMatrix::diagonal(weights));
      break;
    }
  }
  return MonteCarloSample{kind, iff_theorem_check(gate, *rho)};
}

MonteCarloSummary summarize(std::size_t n, const std::vector<MonteCarloSample>& samples) {
  MonteCarloSummary s;
  s.n = n;
  s.samples = samples.size();
  for (const auto& sample : samples) {
    const IffRecord& rec = sample.record;
    if (rec.degenerate()) {
      ++s.degenerate;
    } else if (rec.info_gain == rec.npt_k1) {
      ++s.agree;
    } else {
      ++s.disagree;
    }
    s.k0_certified += rec.separable_k0_certified;
    s.info_gain += rec.info_gain;
    s.npt += rec.npt_k1;
    s.max_product_deviation = std::max(s.max_product_deviation, rec.product_deviation);
  }
  return s;
}

CommandOutput cmd_montecarlo(const ExperimentConfig& cfg, const std::string& timestamp) {
  const auto ns = n_range(cfg);
  // Flattened (N, sample) cells so the pool balances across N.
  const std::size_t total = ns.size() * cfg.samples;
  const auto samples = parallel_map(total, cfg.threads, [&](std::size_t cell) {
    const std::size_t n = ns[cell / cfg.samples];
    const std::size_t index = cell % cfg.samples;
    return montecarlo_sample(cfg.gate, n, cfg.kraus_rank, derive_seed(derive_seed(cfg.seed, n), index), index);
  });

  CommandOutput out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::vector<MonteCarloSample> cell(samples.begin() + static_cast<std::ptrdiff_t>(i * cfg.samples),
                                             samples.begin() + static_cast<std::ptrdiff_t>((i + 1) * cfg.samples));
    const MonteCarloSummary s = summarize(ns[i], cell);
    Record r = header(cfg);
    r.add("n", static_cast<std::uint64_t>(s.n));
    r.add("gate", std::string(to_string(cfg.gate)));
    if (cfg.gate == Family::kRandom) {
      r.add("kraus_rank", static_cast<std::uint64_t>(cfg.kraus_rank));
    } else {
      r.add("kraus_rank", std::monostate{});
    }
    r.add("samples", static_cast<std::uint64_t>(s.samples));
    r.add("agree", static_cast<std::uint64_t>(s.agree));
    r.add("disagree", static_cast<std::uint64_t>(s.disagree));
    r.add("degenerate", static_cast<std::uint64_t>(s.degenerate));
    r.add("k0_certified", static_cast<std::uint64_t>(s.k0_certified));
    r.add("info_gain", static_cast<std::uint64_t>(s.info_gain));
    r.add("npt_k1", static_cast<std::uint64_t>(s.npt));
    r.add("max_product_deviation", s.max_product_deviation);
    finish(r, timestamp);
    out.records.push_back(std::move(r));
    if (s.disagree > 0 || s.k0_certified != s.samples) out.exit_code = kExitDisagreement;
  }
  return out;
}

CommandOutput cmd_verify_kraus(const ExperimentConfig& cfg, const std::string& timestamp) {
  const KrausFile file = read_kraus_file(cfg.input);
  const MembershipVerdict v = verify_membership(file.kraus, file.n_settings);

  Record r = header(cfg);
  r.add("input", cfg.input);
  r.add("n_settings", static_cast<std::uint64_t>(file.n_settings));
  r.add("dim", static_cast<std::uint64_t>(file.kraus.dim()));
  r.add("operators", static_cast<std::uint64_t>(file.kraus.size()));
  r.add("completeness_deviation", file.kraus.completeness_deviation());
  r.add("verdict", std::string(v.member ? "member" : "not_member"));
  if (v.member) {
    r.add("gram", v.gram);
  } else {
    r.add("gram", std::monostate{});
  }
  if (v.witness) {
    r.add("witness_kind", std::string(to_string(v.witness->kind)));
    r.add("witness_operator", static_cast<std::uint64_t>(v.witness->operator_index));
    r.add("witness_block_row", static_cast<std::uint64_t>(v.witness->block_row));
    r.add("witness_block_col", static_cast<std::uint64_t>(v.witness->block_col));
    r.add("witness_magnitude", v.witness->magnitude);
  } else {
    for (const char* k : {"witness_kind", "witness_operator", "witness_block_row", "witness_block_col",
                          "witness_magnitude"})
      r.add(k, std::monostate{});
  }
  finish(r, timestamp);
  CommandOutput out;
  out.records.push_back(std::move(r));
  return out;
}

CommandOutput cmd_tradeoff(const ExperimentConfig& cfg, const std::string& timestamp) {
  const auto ns = n_range(cfg);
  CommandOutput out;
  out.records = parallel_map(ns.size(), cfg.threads, [&](std::size_t i) {
    const std::size_t n = ns[i];
    const auto t = location_tradeoff(n);
    const double expected = 1.0 / static_cast<double>(n);
    Record r = header(cfg);
    r.add("n", static_cast<std::uint64_t>(n));
    r.add("setting_location_prob", t.value_ignorant_location_prob);
    r.add("setting_outcome_deviation", t.outcome_deviation);
    r.add("post_protocol_location_guess", t.post_protocol_location_guess);
    r.add("expected_location_guess", expected);
    r.add("location_guess_deviation", std::abs(t.post_protocol_location_guess - expected));
    finish(r, timestamp);
    return r;
  });
  return out;
}

CommandOutput run_command(const ExperimentConfig& cfg, const std::string& timestamp) {
  switch (cfg.command) {
    case Command::kProtocol: return cmd_protocol(cfg, timestamp);
    case Command::kSweep: return cmd_sweep(cfg, timestamp);
    case Command::kMonteCarlo: return cmd_montecarlo(cfg, timestamp);
    case Command::kVerifyKraus: return cmd_verify_kraus(cfg, timestamp);
    case Command::kTradeoff: return cmd_tradeoff(cfg, timestamp);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace swapbit::cli
