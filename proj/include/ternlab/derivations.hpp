// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternlab/report.hpp"

namespace ternlab {

// || D [k1,k2,k3] - ([D k1,k2,k3] + [k1,D k2,k3] + [k1,k2,D k3]) ||.
// Zero for all triples exactly when D is anti-self-adjoint.
double leibniz_residual(const Operator& d, const Ket& k1, const Ket& k2,
                        const Ket& k3);

// || A [k1,k2,k3] - ([A k1,k2,k3] - [k1,A^dagger k2,k3] + [k1,k2,A k3]) ||.
// Zero for every operator A; the adjoint in the middle slot absorbs the
// conjugate-linearity.
double gen_leibniz_residual(const Operator& a, const Ket& k1, const Ket& k2,
                            const Ket& k3);

// || A [k1,k2,k3] - [A k1,k2,k3] ||. Zero for every A: the product scales
// its first slot by a scalar, which commutes with A.
double distributivity_residual(const Operator& a, const Ket& k1,
                               const Ket& k2, const Ket& k3);

struct DerivationVerdict {
  bool is_derivation = false;      // sampled all-plus Leibniz criterion
  bool algebraic = false;          // || D + D^dagger ||_max within tolerance
  double max_leibniz_residual = 0.0;
  double antiherm_defect = 0.0;
  CheckReport report;              // per-trial record, counterexample on fail
};

// Randomized criterion with the algebraic cross-check. The two verdicts
// agree on honest inputs; the suite treats any disagreement as a bug.
DerivationVerdict is_derivation(const Operator& d, int trials,
                                std::uint64_t seed, TolerancePolicy tol);

// i*H for self-adjoint H (bitwise anti-self-adjoint). Throws
// Error("not-hermitian") if H fails the self-adjointness tolerance.
Operator derivation_from_observable(const Operator& h, TolerancePolicy tol);

// [D1,D2] and a*D1 + b*D2 (real a, b) must again be derivations, while the
// negative control i*D1 must not be (it is self-adjoint when D1 = iH).
CheckReport lie_closure_check(const Operator& d1, const Operator& d2, double a,
                              double b, int trials, std::uint64_t seed,
                              TolerancePolicy tol);

enum class DerivLaw {
  Correspondence,  // derivation <=> generator iH, both directions sampled
  LieClosure,      // commutator / real-combination closure with control
};

const char* deriv_law_name(DerivLaw law);
std::optional<DerivLaw> deriv_law_from_name(const std::string& name);
std::vector<std::string> deriv_law_names();

CheckReport check_deriv_law(DerivLaw law, int dim, int trials,
                            std::uint64_t seed, TolerancePolicy tol);

}  // namespace ternlab
