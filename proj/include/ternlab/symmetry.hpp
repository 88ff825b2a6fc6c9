// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternlab/report.hpp"

namespace ternlab {

// Finite group as a Cayley table: cayley[g][h] = g*h, elements 0..order-1.
// validate() checks the table is a Latin square, the identity behaves, and
// multiplication is associative.
struct FiniteGroup {
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> cayley;

  void validate() const;  // throws Error("bad-group")
  int mul(int g, int h) const;
  int inverse_of(int g) const;
};

// Phase system omega: G x G -> C* attached to a projective action.
struct Cocycle {
  FiniteGroup group;
  std::vector<std::vector<Cx>> omega;

  const Cx& at(int g, int h) const { return omega[g][h]; }
};

// Assignment g -> U(g) with U(g1) U(g2) = omega(g1, g2) U(g1*g2).
struct ProjectiveRep {
  Cocycle cocycle;
  std::vector<Operator> ops;
  int dim = 0;

  const FiniteGroup& group() const { return cocycle.group; }
};

// File layout: {"order": n, "identity": 0, "cayley": [[...]],
//               "omega": [[[re, im], ...], ...]}            (cocycle)
// plus         {"dim": d, "ops": [[[[re, im], ...], ...], ...]}  (rep)
FiniteGroup group_from_json(const Json& j);
Cocycle cocycle_from_json(const Json& j);
ProjectiveRep projective_rep_from_json(const Json& j);
ProjectiveRep load_projective_rep_file(const std::string& path);
Cocycle load_cocycle_file(const std::string& path);

// V^dagger V = I within tolerance (scale 1).
bool is_isometry(const Operator& v, TolerancePolicy tol);

// || V [k1,k2,k3] - [V k1, V k2, V k3] ||.
double hom_residual_vec(const Operator& v, const Ket& k1, const Ket& k2,
                        const Ket& k3);

// Conjugation action A -> U^dagger A U. Throws Error("not-unitary") if U is
// not unitary within tolerance.
Operator rho_op(const Operator& u, const Operator& a, TolerancePolicy tol);

// Verifies normalization (omega(e,g) = omega(g,e) = 1), the inverse symmetry
// omega(g, g^-1) = omega(g^-1, g), and the associativity condition
// omega(g1,g2) omega(g1*g2, g3) = omega(g1, g2*g3) omega(g2, g3) over every
// triple. detail.first_fail holds the first offending triple, if any.
CheckReport cocycle_check(const Cocycle& c, TolerancePolicy tol);

// Verifies each U(g) is unitary and U(g1) U(g2) = omega(g1,g2) U(g1*g2)
// over every pair. detail.first_fail_pair holds the first offending pair.
CheckReport projective_rep_check(const ProjectiveRep& rep,
                                 TolerancePolicy tol);

enum class HomLaw {
  HomUnitary,      // Haar U and its inverse both respect the ternary product
  HomIsometry,     // tall isometry V respects the ternary product
  HomNonIsometry,  // scaled identity 2I does not (negative control)
  HomOperator,     // conjugation by U respects the operator ternary product
};

const char* hom_law_name(HomLaw law);
std::optional<HomLaw> hom_law_from_name(const std::string& name);
std::vector<std::string> hom_law_names();

// dim_to is only read by HomIsometry (codomain dimension, >= dim).
CheckReport check_hom_law(HomLaw law, int dim, int dim_to, int trials,
                          std::uint64_t seed, TolerancePolicy tol);

}  // namespace ternlab
