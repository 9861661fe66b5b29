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


// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "swapbit/cli/commands.hpp"
#include "swapbit/density.hpp"
#include "swapbit/entanglement.hpp"
#include "swapbit/gates.hpp"
#include "swapbit/linalg.hpp"
#include "swapbit/protocol.hpp"
#include "swapbit/random.hpp"
#include "swapbit/spaces.hpp"

using namespace swapbit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates the worst value of a quantity against its bound.
class Bound {
 public:
  Bound(std::string name, double limit) : name_(std::move(name)), limit_(limit) {}
  void observe(double v) {
    if (std::isnan(v) || v > worst_) worst_ = v;
  }
  bool ok() const { return worst_ <= limit_; }
  std::string str() const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s %.3g (<= %.0e)", name_.c_str(), worst_, limit_);
    return buf;
  }

 private:
  std::string name_;
  double limit_;
  double worst_ = 0.0;
};

Outcome combine(std::initializer_list<const Bound*> bounds, std::string extra = {}, bool extra_ok = true) {
  Outcome o;
  o.pass = extra_ok;
  for (const Bound* b : bounds) {
    o.pass = o.pass && b->ok();
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += b->str();
  }
  if (!extra.empty()) o.detail += (o.detail.empty() ? "" : ", ") + extra;
  return o;
}

DensityOperator phi_state(std::size_t n) { return DensityOperator::from_pure(uniform_device_state(DeviceBasis(n))); }

Outcome criterion1() {
  const DensityOperator phi = phi_state(2);
  const auto r = reduced_device_states(ideal_gate(2), phi);
  Bound states("max entry error", 1e-12);
  states.observe(max_abs_diff(r.rho0.matrix(), phi.matrix()));
  states.observe(max_abs_diff(r.rho1.matrix(), 0.5 * ComplexMatrix::identity(2)));
  Bound p("|p - 3/4|", 1e-12);
  p.observe(std::abs(success_probability(r.rho0, r.rho1, canonical_measurement(phi)) - 0.75));
  return combine({&states, &p});
}

Outcome criterion2() {
  Bound closed("max |P_W - (1 - 1/2N)|", 1e-10);
  Bound helstrom("max |P_W - Helstrom|", 1e-10);
  for (std::size_t n = 1; n <= 64; ++n) {
    const DensityOperator phi = phi_state(n);
    const auto r = reduced_device_states(ideal_gate(n), phi);
    const double p = success_probability(r.rho0, r.rho1, canonical_measurement(phi));
    closed.observe(std::abs(p - (1.0 - 1.0 / (2.0 * static_cast<double>(n)))));
    helstrom.observe(std::abs(p - helstrom_bound(r.rho0, r.rho1)));
  }
  return combine({&closed, &helstrom}, "N = 1..64");
}

Outcome criterion3() {
  Bound mixed("max |rho - I/N|", 1e-12);
  Bound td("max trace distance", 1e-12);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r0 = distinguishable_baseline(n, 0);
    const auto r1 = distinguishable_baseline(n, 1);
    const ComplexMatrix target = (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n);
    mixed.observe(max_abs_diff(r0.matrix(), target));
    mixed.observe(max_abs_diff(r1.matrix(), target));
    td.observe(trace_distance(r0, r1));
  }
  return combine({&mixed, &td});
}

Outcome criterion4() {
  Bound equal("max |closed form - Kraus sum|", 1e-12);
  Bound complete("max completeness deviation", 1e-10);
  for (std::size_t n = 2; n <= 4; ++n) {
    Rng rng(derive_seed(4, n));
    for (int trial = 0; trial < 100; ++trial) {
      const auto gate = random_gate(n, 1 + rng.next() % 4, rng.next());
      const DensityOperator rd = random_mixed_state(rng, n, 1 + rng.next() % n);
      const DensityOperator rt = random_mixed_state(rng, n + 1, 1 + rng.next() % (n + 1));
      const KrausSet ks = kraus_set(gate);
      complete.observe(ks.completeness_deviation());
      equal.observe(max_abs_diff(apply(gate, rd, rt).matrix(), ks.evolve(kron(rd.matrix(), rt.matrix()))));
    }
  }
  return combine({&equal, &complete}, "300 triples");
}

Outcome criterion5() {
  Bound gram("max Gram error", 1e-8);
  std::size_t members = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    Rng rng(derive_seed(5, n));
    for (int trial = 0; trial < 50; ++trial) {
      const auto gate = random_gate(n, 1 + rng.next() % 4, rng.next());
      const auto v = verify_membership(kraus_set(gate), n);
      if (!v.member) {
        gram.observe(INFINITY);
        continue;
      }
      ++members;
      gram.observe(max_abs_diff(v.gram, gate.gram_matrix()));
    }
  }
  Rng rng(derive_seed(5, 99));
  bool rejected = true;
  std::string witness;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto v = verify_membership(KrausSet({haar_unitary(rng, n * (n + 1))}), n);
    const bool ok = !v.member && v.witness && v.witness->kind == MembershipWitness::Kind::kOffDiagonalBlock &&
                    v.witness->magnitude > tol::kMembership;
    rejected = rejected && ok;
    if (v.witness && n == 2) {
      witness = std::string("Haar witness ") + to_string(v.witness->kind) + " block (" +
                std::to_string(v.witness->block_row) + "," + std::to_string(v.witness->block_col) + ")";
    }
  }
  return combine({&gram}, std::to_string(members) + "/150 members, " + witness, members == 150 && rejected);
}

Outcome criterion6() {
  Bound residual("max residual", 1e-10);
  Bound spectrum("max spectrum gap", 1e-9);
  std::size_t pairs = 0;
  Rng rng(derive_seed(6, 0));
  for (int trial = 0; trial < 100; ++trial) {
    const auto gate = random_gate(3, 2, rng.next());
    const DensityOperator rd = random_pure_state(rng, 3);
    const OverlapMatrix alpha = overlap_matrix(gate, rd);
    const auto out1 = run_protocol(gate, rd, 1);
    const ComplexMatrix pt = partial_transpose_B(out1.matrix(), out1.factorization());
    const auto eig = hermitian_eigenvalues(pt);
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t l = k + 1; l <= 3; ++l) {
        const double mag = std::abs(alpha(k, l));
        if (mag <= 1e-8) continue;
        ++pairs;
        const auto w = analytic_npt_witness(alpha, k, l);
        residual.observe(max_abs(pt * w.vector - (-mag) * w.vector));
        double gap = INFINITY;
        for (double e : eig) gap = std::min(gap, std::abs(e + mag));
        spectrum.observe(gap);
      }
  }
  return combine({&residual, &spectrum}, std::to_string(pairs) + " pairs", pairs > 0);
}

Outcome criterion7() {
  std::size_t agree = 0, disagree = 0, degenerate = 0, certified = 0, total = 0, informative = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    Rng rng(derive_seed(7, n));
    for (int i = 0; i < 500; ++i) {
      const auto gate = random_gate(n, 1 + static_cast<std::size_t>(i % 3), rng.next());
      const DensityOperator rd = i % 2 == 0 ? random_pure_state(rng, n) : random_mixed_state(rng, n, 1 + rng.next() % n);
      const IffRecord rec = iff_theorem_check(gate, rd);
      ++total;
      certified += rec.separable_k0_certified;
      informative += rec.info_gain;
      if (rec.degenerate()) {
        ++degenerate;
      } else if (rec.info_gain == rec.npt_k1) {
        ++agree;
      } else {
        ++disagree;
      }
    }
  }
  Outcome o;
  o.pass = disagree == 0 && certified == total;
  o.detail = "agree " + std::to_string(agree) + ", disagree " + std::to_string(disagree) + ", degenerate " +
             std::to_string(degenerate) + ", informative " + std::to_string(informative) + ", k=0 product " +
             std::to_string(certified) + "/" + std::to_string(total);
  return o;
}

Outcome criterion8() {
  Bound certain("max |setting location prob - 1|", 1e-12);
  Bound same("max outcome deviation", 1e-12);
  Bound guess("max |location guess - 1/N|", 1e-12);
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto t = location_tradeoff(n);
    certain.observe(std::abs(t.value_ignorant_location_prob - 1.0));
    same.observe(t.outcome_deviation);
    guess.observe(std::abs(t.post_protocol_location_guess - 1.0 / static_cast<double>(n)));
  }
  return combine({&certain, &same, &guess});
}

Outcome criterion9() {
  const auto dir = std::filesystem::temp_directory_path() / "swapbit_acceptance_determinism";
  std::filesystem::create_directories(dir);
  std::vector<std::string> reports;
  for (int run = 0; run < 2; ++run) {
    const std::string path = (dir / ("run" + std::to_string(run) + ".json")).string();
    const char* argv[] = {"swapbit", "montecarlo", "--seed", "42", "--deterministic", "--out", path.c_str()};
    std::ostringstream out, err;
    const int code = cli::run_cli(7, argv, out, err);
    if (code != 0) return {false, "run " + std::to_string(run) + " exited " + std::to_string(code) + ": " + err.str()};
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    reports.push_back(text.str());
  }
  std::filesystem::remove_all(dir);
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same, std::to_string(reports[0].size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit_s;  // 0: none
  };
  const std::vector<Criterion> criteria{
      {"two-setting ideal protocol: exact reduced states, success 3/4", criterion1, 0.0},
      {"sweep N=1..64: success equals 1-1/(2N) and the Helstrom bound", criterion2, 10.0},
      {"distinguishable objects: device always maximally mixed", criterion3, 0.0},
      {"closed-form output equals Kraus sum; completeness", criterion4, 0.0},
      {"membership round trip; Haar unitary rejected", criterion5, 0.0},
      {"analytic NPT witness eigenpairs", criterion6, 0.0},
      {"information gain iff entanglement (Monte Carlo)", criterion7, 60.0},
      {"location trade-off", criterion8, 0.0},
      {"deterministic montecarlo reports are byte-identical", criterion9, 0.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].time_limit_s > 0.0 && secs > criteria[i].time_limit_s) {
      o.pass = false;
      o.detail += ", over the " + std::to_string(static_cast<int>(criteria[i].time_limit_s)) + " s limit";
    }
    failures += !o.pass;
    std::printf("[%s] %zu %s | %s | %.3f s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(),
                secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
