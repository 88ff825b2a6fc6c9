// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternlab/env.hpp"
#include "ternlab/random.hpp"
#include "ternlab/types.hpp"

namespace ternlab {

// One residual measured against one problem scale.
struct ResidualScale {
  double residual = 0.0;
  double scale = 0.0;
};

// Outcome of a randomized law check. (max_residual, scale) belong to the
// worst trial by margin residual - (atol + rtol*scale), so the recorded pair
// satisfies: pass  iff  max_residual <= atol + rtol*scale.
struct CheckReport {
  std::string law;
  int dim = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string rng = Rng::kName;
  double max_residual = 0.0;
  TolerancePolicy tolerance;
  double scale = 0.0;
  bool pass = false;
  std::optional<Env> counterexample;  // first failing trial, replayable
  std::optional<Json> detail;         // law-specific extras
  double wall_time_ms = 0.0;
};

Json report_to_json(const CheckReport& r);
// One-line human summary for terminals.
std::string report_summary(const CheckReport& r);

// Drives `trials` independent trials. Per trial: a fresh stream seeded
// seed + trial_index, sample(trial, rng) -> Env, then eval(env) -> one or
// more residual/scale pairs. A trial passes iff the policy admits every
// pair. detail["min_violation_ratio"] records min over trials of
// max(residual/bound); expected-fail checks assert it stays > 10.
template <typename SampleFn, typename EvalFn>
CheckReport run_law(const std::string& law, int dim, int trials,
                    std::uint64_t seed, TolerancePolicy tol, SampleFn sample,
                    EvalFn eval, bool keep_counterexample = true) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.law = law;
  rep.dim = dim;
  rep.trials = trials;
  rep.seed = seed;
  rep.tolerance = tol;
  rep.pass = true;
  double worst_margin = -1e300;
  double min_violation_ratio = 1e300;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    const Env env = sample(t, rng);
    const std::vector<ResidualScale> rs = eval(env);
    bool trial_pass = true;
    double trial_ratio = 0.0;
    for (const ResidualScale& x : rs) {
      if (!tol.admits(x.residual, x.scale)) trial_pass = false;
      const double bound = tol.bound(x.scale);
      const double margin = x.residual - bound;
      if (margin > worst_margin) {
        worst_margin = margin;
        rep.max_residual = x.residual;
        rep.scale = x.scale;
      }
      if (bound > 0.0) trial_ratio = std::max(trial_ratio, x.residual / bound);
    }
    min_violation_ratio = std::min(min_violation_ratio, trial_ratio);
    if (!trial_pass && rep.pass) {
      rep.pass = false;
      if (keep_counterexample) rep.counterexample = env;
    }
  }
  if (trials > 0) {
    rep.detail = Json{{"min_violation_ratio", min_violation_ratio}};
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

}  // namespace ternlab
