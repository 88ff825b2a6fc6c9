// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "ternlab/operator_ternary.hpp"

using namespace ternlab;

namespace {

Operator pauli_x() {
  CMat m(2, 2);
  m << Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0);
  return Operator(std::move(m));
}

Operator pauli_y() {
  CMat m(2, 2);
  m << Cx(0, 0), Cx(0, -1), Cx(0, 1), Cx(0, 0);
  return Operator(std::move(m));
}

Operator pauli_z() {
  CMat m(2, 2);
  m << Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(-1, 0);
  return Operator(std::move(m));
}

}  // namespace

TEST_CASE("operator triple product on Pauli matrices") {
  // X Y^dagger Z = X Y Z = i I.
  const Operator t = tern_op(pauli_x(), pauli_y(), pauli_z());
  CHECK(distance(t, Cx(0, 1) * Operator::identity(2)) == 0.0);
}

TEST_CASE("operator triple product in dimension one") {
  CMat a(1, 1), b(1, 1), c(1, 1);
  a << Cx(2, 0);
  b << Cx(0, 1);
  c << Cx(3, 0);
  CHECK(tern_op(Operator(a), Operator(b), Operator(c))(0, 0) == Cx(0, -6));
}

TEST_CASE("commutator of X and Y is 2iZ") {
  CHECK(distance(commutator(pauli_x(), pauli_y()),
                 Cx(0, 2) * pauli_z()) == 0.0);
}

TEST_CASE("op law registry round trips names") {
  for (const std::string& name : op_law_names()) {
    const auto law = op_law_from_name(name);
    REQUIRE(law.has_value());
    CHECK(op_law_name(*law) == name);
  }
}

TEST_CASE("positive operator laws hold") {
  const TolerancePolicy tol{};
  for (OpLaw law : {OpLaw::ParaAssoc, OpLaw::HeapUnitary, OpLaw::AdjointLaw,
                    OpLaw::JacobiLeibniz, OpLaw::GenJacobiLeibniz,
                    OpLaw::IDerivation, OpLaw::CompatClosure}) {
    for (int dim : {1, 2, 4}) {
      const CheckReport rep = check_op_law(law, dim, 40, 19, tol);
      INFO(op_law_name(law), " dim ", dim);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("generic operators are not a heap") {
  const CheckReport rep =
      check_op_law(OpLaw::HeapGeneric, 4, 60, 19, TolerancePolicy{});
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.detail.has_value());
  CHECK((*rep.detail)["min_violation_ratio"].get<double>() > 10.0);
  REQUIRE(rep.counterexample.has_value());
}

TEST_CASE("mixed expansion residual is tiny on random quadruples") {
  Rng rng(37);
  for (int t = 0; t < 25; ++t) {
    const Operator a1 = ginibre(4, 4, rng), a2 = ginibre(4, 4, rng),
                   a3 = ginibre(4, 4, rng), a4 = ginibre(4, 4, rng);
    CHECK(gen_jacobi_leibniz_residual(a1, a2, a3, a4) < 1e-11);
  }
}

TEST_CASE("adjoint reverses the triple product") {
  Rng rng(38);
  const Operator a = ginibre(3, 3, rng), b = ginibre(3, 3, rng),
                 c = ginibre(3, 3, rng);
  CHECK(distance(adjoint(tern_op(a, b, c)),
                 tern_op(adjoint(c), adjoint(b), adjoint(a))) < 1e-12);
}

TEST_CASE("triple product requires square operators") {
  const Operator rect = Operator::zero(2, 3);
  try {
    tern_op(rect, rect, rect);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == "dim-mismatch");
  }
}
