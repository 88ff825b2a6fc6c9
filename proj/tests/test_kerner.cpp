// SPDX-License-Identifier: Apache-2.0
#include <tuple>

#include "doctest.h"
#include "ternlab/kerner.hpp"
#include "ternlab/random.hpp"
#include "ternlab/vector_ternary.hpp"

using namespace ternlab;

namespace {

Operator pauli_x() {
  CMat m(2, 2);
  m << Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0);
  return Operator(std::move(m));
}

}  // namespace

TEST_CASE("flip on the first basis state expands to one surviving term") {
  const OrthonormalBasis basis = OrthonormalBasis::standard(2);
  const Ket u = Ket::basis(2, 0);
  const TripletSum sum = kerner_expand(pauli_x(), u, basis, 1e-12);

  // c = (1, 0) and a_{ml} has ones only off-diagonal, so of the eight
  // candidate triples exactly (l,m,n) = (0,1,0) and (1,0,0) carry weight.
  REQUIRE(sum.terms.size() == 2);
  CHECK(sum.pruned == 6);
  CHECK(sum.terms[0].l == 0);
  CHECK(sum.terms[0].m == 1);
  CHECK(sum.terms[0].n == 0);
  CHECK(sum.terms[0].coeff == Cx(1, 0));
  CHECK(sum.terms[1].l == 1);
  CHECK(sum.terms[1].m == 0);
  CHECK(sum.terms[1].n == 0);
  CHECK(sum.terms[1].coeff == Cx(1, 0));

  // In the product [e_l, e_m, e_n] the (0,1,0) term kills itself through
  // <e_1|e_0> = 0; only (1,0,0) contributes, and it reproduces X u = d.
  CHECK(distance(tern_vec(basis.vec(0), basis.vec(1), basis.vec(0)),
                 Ket::zero(2)) == 0.0);
  CHECK(distance(kerner_evaluate(sum, basis), Ket::basis(2, 1)) == 0.0);
}

TEST_CASE("expansion reconstructs the action in random bases") {
  const TolerancePolicy tol{};
  Rng rng(51);
  for (int dim : {2, 3, 5, 8}) {
    const Operator a = ginibre(dim, dim, rng);
    const Ket psi = random_ket(dim, rng);
    const Ket direct = a * psi;

    const OrthonormalBasis std_basis = OrthonormalBasis::standard(dim);
    CHECK(distance(kerner_evaluate(kerner_expand(a, psi, std_basis, 0.0),
                                   std_basis),
                   direct) < 1e-11 * norm(direct));

    const OrthonormalBasis rot =
        OrthonormalBasis::from_operator_columns(random_unitary(dim, rng), tol);
    CHECK(distance(kerner_evaluate(kerner_expand(a, psi, rot, 0.0), rot),
                   direct) < 1e-11 * norm(direct));
  }
}

TEST_CASE("terms come out sorted with zero prune cutoff keeping everything") {
  Rng rng(52);
  const Operator a = ginibre(3, 3, rng);
  const Ket psi = random_ket(3, rng);
  const TripletSum sum =
      kerner_expand(a, psi, OrthonormalBasis::standard(3), 0.0);
  CHECK(sum.terms.size() == 27);
  CHECK(sum.pruned == 0);
  for (size_t i = 1; i < sum.terms.size(); ++i) {
    const auto& p = sum.terms[i - 1];
    const auto& q = sum.terms[i];
    CHECK(std::tuple(p.l, p.m, p.n) < std::tuple(q.l, q.m, q.n));
  }
}

TEST_CASE("non-orthonormal families are rejected") {
  std::vector<Ket> vecs;
  vecs.push_back(Ket::basis(2, 0));
  vecs.push_back(Ket::basis(2, 0));  // repeated, not orthogonal
  try {
    OrthonormalBasis basis(std::move(vecs), TolerancePolicy{});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == "invalid-basis");
  }

  CMat m(2, 2);
  m << Cx(2, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0);
  try {
    OrthonormalBasis::from_operator_columns(Operator(std::move(m)),
                                            TolerancePolicy{});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == "invalid-basis");
  }
}

TEST_CASE("triplet sums round trip through JSON with 1-based indices") {
  const OrthonormalBasis basis = OrthonormalBasis::standard(2);
  const TripletSum sum = kerner_expand(pauli_x(), Ket::basis(2, 0), basis,
                                       1e-12);
  const Json j = triplet_sum_to_json(sum, 2, "standard");
  CHECK(j["dim"].get<int>() == 2);
  CHECK(j["basis"].get<std::string>() == "standard");
  CHECK(j["pruned"].get<int>() == 6);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["l"].get<int>() == 1);
  CHECK(j["terms"][0]["m"].get<int>() == 2);
  CHECK(j["terms"][0]["n"].get<int>() == 1);
  CHECK(j["terms"][1]["l"].get<int>() == 2);
  CHECK(j["terms"][1]["m"].get<int>() == 1);
  CHECK(j["terms"][1]["n"].get<int>() == 1);

  const TripletSum back = triplet_sum_from_json(j);
  REQUIRE(back.terms.size() == sum.terms.size());
  for (size_t i = 0; i < back.terms.size(); ++i) {
    CHECK(back.terms[i].l == sum.terms[i].l);
    CHECK(back.terms[i].m == sum.terms[i].m);
    CHECK(back.terms[i].n == sum.terms[i].n);
    CHECK(back.terms[i].coeff == sum.terms[i].coeff);
  }
  CHECK(back.pruned == sum.pruned);
  CHECK(distance(kerner_evaluate(back, basis), Ket::basis(2, 1)) == 0.0);
}
