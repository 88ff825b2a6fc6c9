// SPDX-License-Identifier: Apache-2.0
#include "ternlab/report.hpp"

#include <sstream>

namespace ternlab {

Json report_to_json(const CheckReport& r) {
  Json j;
  j["law"] = r.law;
  j["dim"] = r.dim;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["rng"] = r.rng;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = Json{{"atol", r.tolerance.atol}, {"rtol", r.tolerance.rtol}};
  j["scale"] = r.scale;
  j["pass"] = r.pass;
  if (r.counterexample) j["counterexample"] = env_to_json(*r.counterexample);
  if (r.detail) j["detail"] = *r.detail;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::string report_summary(const CheckReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " " << r.law << " dim=" << r.dim
     << " trials=" << r.trials << " seed=" << r.seed
     << " max_residual=" << r.max_residual << " bound="
     << r.tolerance.bound(r.scale);
  return os.str();
}

}  // namespace ternlab
