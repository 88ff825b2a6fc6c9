// SPDX-License-Identifier: Apache-2.0
#include <functional>
#include <string>

#include "doctest.h"
#include "ternlab/symmetry.hpp"

using namespace ternlab;

namespace {

std::string data_path(const char* name) {
  return std::string(TERNLAB_DATA_DIR) + "/" + name;
}

// Z2 x Z2 with X/Z phase twists: identity, flip, phase, flip*phase.
ProjectiveRep pauli_rep() {
  return load_projective_rep_file(data_path("pauli_rep.json"));
}

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("the packaged four-element table validates") {
  const ProjectiveRep rep = pauli_rep();
  rep.group().validate();
  CHECK(rep.group().order == 4);
  CHECK(rep.group().identity == 0);
  // Every element squares to the identity.
  for (int g = 0; g < 4; ++g) CHECK(rep.group().inverse_of(g) == g);
  CHECK(rep.group().mul(1, 2) == 3);
}

TEST_CASE("broken tables are rejected") {
  FiniteGroup g;
  g.order = 4;
  g.identity = 0;
  g.cayley = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  g.validate();  // sane starting point

  SUBCASE("identity index that does not act as identity") {
    g.identity = 1;
    CHECK(code_of([&] { g.validate(); }) == "bad-group");
  }
  SUBCASE("entry out of range") {
    g.cayley[2][2] = 9;
    CHECK(code_of([&] { g.validate(); }) == "bad-group");
  }
  SUBCASE("repeated entry breaks the Latin property") {
    g.cayley[1][1] = 1;
    CHECK(code_of([&] { g.validate(); }) == "bad-group");
  }
  SUBCASE("Latin square with identity but no associativity") {
    // Order-5 loop: (1*1)*2 = 2 while 1*(1*2) = 4.
    g.order = 5;
    g.identity = 0;
    g.cayley = {{0, 1, 2, 3, 4},
                {1, 0, 3, 4, 2},
                {2, 4, 0, 1, 3},
                {3, 2, 4, 0, 1},
                {4, 3, 1, 2, 0}};
    CHECK(g.cayley[g.cayley[1][1]][2] == 2);
    CHECK(g.cayley[1][g.cayley[1][2]] == 4);
    CHECK(code_of([&] { g.validate(); }) == "bad-group");
  }
}

TEST_CASE("phase table of the packaged rep is consistent") {
  const CheckReport rep = cocycle_check(pauli_rep().cocycle, TolerancePolicy{});
  CHECK(rep.pass);
  // Phases are exactly +-1, so every identity holds bitwise.
  CHECK(rep.max_residual == 0.0);
  CHECK(rep.rng == "exhaustive");
  CHECK(rep.seed == 0);
  CHECK(rep.trials > 0);
  CHECK_FALSE(rep.counterexample.has_value());
}

TEST_CASE("packaged operators satisfy the twisted multiplication") {
  const CheckReport rep = projective_rep_check(pauli_rep(), TolerancePolicy{});
  CHECK(rep.pass);
  CHECK(rep.max_residual == 0.0);
  CHECK(rep.dim == 2);
}

TEST_CASE("flattening the phases to one breaks the multiplication") {
  ProjectiveRep rep = pauli_rep();
  for (auto& row : rep.cocycle.omega) {
    for (Cx& w : row) w = Cx(1.0, 0.0);
  }
  const CheckReport r = projective_rep_check(rep, TolerancePolicy{});
  CHECK_FALSE(r.pass);
  REQUIRE(r.detail.has_value());
  const Json& ff = (*r.detail)["first_fail"];
  CHECK(ff["kind"].get<std::string>() == "pair");
  // Unitarity still holds; the first bad product, scanning pairs row-major,
  // is U(2) U(1) = -U(3) against the claimed +U(3).
  CHECK(ff["at"] == Json::array({2, 1}));
}

TEST_CASE("negating one phase breaks the cocycle identity") {
  Cocycle c = pauli_rep().cocycle;
  c.omega[0][1] = Cx(-1.0, 0.0);  // violates normalization at (e, 1)
  const CheckReport r = cocycle_check(c, TolerancePolicy{});
  CHECK_FALSE(r.pass);
  REQUIRE(r.detail.has_value());
  CHECK((*r.detail)["first_fail"]["kind"].get<std::string>() ==
        "normalization");
}

TEST_CASE("cocycle loader rejects malformed input") {
  Json j = {{"order", 2}, {"cayley", {{0, 1}, {1, 0}}}};
  CHECK(code_of([&] { cocycle_from_json(j); }) == "bad-group");  // no omega
  j["omega"] = Json::array({Json::array({Json::array({1.0, 0.0})})});
  CHECK(code_of([&] { cocycle_from_json(j); }) == "bad-group");  // wrong shape
}

TEST_CASE("isometry predicate") {
  const TolerancePolicy tol{};
  Rng rng(11);
  CHECK(is_isometry(random_unitary(4, rng), tol));
  CHECK(is_isometry(random_isometry(2, 5, rng), tol));
  CHECK_FALSE(is_isometry(Cx(2.0, 0.0) * Operator::identity(3), tol));
}

TEST_CASE("conjugation action on Pauli matrices") {
  const ProjectiveRep rep = pauli_rep();
  const Operator& x = rep.ops[1];
  const Operator& z = rep.ops[2];
  // X^dagger Z X = -Z.
  CHECK(distance(rho_op(x, z, TolerancePolicy{}), Cx(-1.0, 0.0) * z) == 0.0);
  // X^dagger X X = X.
  CHECK(distance(rho_op(x, x, TolerancePolicy{}), x) == 0.0);
}

TEST_CASE("conjugation rejects non-unitary maps") {
  const Operator bad = Cx(2.0, 0.0) * Operator::identity(2);
  CHECK(code_of([&] {
          rho_op(bad, Operator::identity(2), TolerancePolicy{});
        }) == "not-unitary");
}

TEST_CASE("hom law registry round trips names") {
  for (const std::string& name : hom_law_names()) {
    const auto law = hom_law_from_name(name);
    REQUIRE(law.has_value());
    CHECK(hom_law_name(*law) == name);
  }
}

TEST_CASE("unitaries respect the ternary product") {
  const CheckReport rep =
      check_hom_law(HomLaw::HomUnitary, 3, 3, 60, 23, TolerancePolicy{});
  CHECK(rep.pass);
}

TEST_CASE("tall isometries respect the ternary product") {
  const CheckReport rep =
      check_hom_law(HomLaw::HomIsometry, 2, 5, 60, 23, TolerancePolicy{});
  CHECK(rep.pass);
  // Rectangular samples have no square environment, so no counterexample.
  CHECK_FALSE(rep.counterexample.has_value());
  REQUIRE(rep.detail.has_value());
  CHECK((*rep.detail)["dim_to"].get<int>() == 5);
}

TEST_CASE("a scaled identity is not a morphism") {
  const CheckReport rep =
      check_hom_law(HomLaw::HomNonIsometry, 3, 3, 60, 23, TolerancePolicy{});
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.detail.has_value());
  // 2I scales the triple product by 4 on one side and 2 on the other.
  CHECK((*rep.detail)["min_violation_ratio"].get<double>() > 10.0);
}

TEST_CASE("conjugation respects the operator ternary product") {
  const CheckReport rep =
      check_hom_law(HomLaw::HomOperator, 3, 3, 60, 23, TolerancePolicy{});
  CHECK(rep.pass);
}

TEST_CASE("isometry codomain must not shrink") {
  CHECK(code_of([&] {
          check_hom_law(HomLaw::HomIsometry, 5, 2, 10, 1, TolerancePolicy{});
        }) == "no-isometry");
}
