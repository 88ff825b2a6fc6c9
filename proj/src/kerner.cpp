// SPDX-License-Identifier: Apache-2.0
#include "ternlab/kerner.hpp"

#include <cmath>

#include "ternlab/vector_ternary.hpp"

namespace ternlab {

OrthonormalBasis::OrthonormalBasis(std::vector<Ket> vecs, TolerancePolicy tol)
    : vecs_(std::move(vecs)) {
  const int d = static_cast<int>(vecs_.size());
  if (d < 1) fail("invalid-basis", "basis needs at least one vector");
  for (const Ket& v : vecs_) {
    if (v.dim() != d) {
      fail("invalid-basis", "basis needs exactly dim vectors of length dim");
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const Cx g = inner(vecs_[i], vecs_[j]);
      const Cx expect = (i == j) ? Cx(1.0, 0.0) : Cx(0.0, 0.0);
      if (!tol.admits(std::abs(g - expect), 1.0)) {
        fail("invalid-basis", "vectors " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are not orthonormal");
      }
    }
  }
}

OrthonormalBasis OrthonormalBasis::standard(int dim) {
  std::vector<Ket> vecs;
  vecs.reserve(dim);
  for (int n = 0; n < dim; ++n) vecs.push_back(Ket::basis(dim, n));
  return OrthonormalBasis(std::move(vecs), TolerancePolicy{});
}

OrthonormalBasis OrthonormalBasis::from_operator_columns(const Operator& a,
                                                         TolerancePolicy tol) {
  const int d = a.dim();
  std::vector<Ket> vecs;
  vecs.reserve(d);
  for (int c = 0; c < d; ++c) vecs.push_back(Ket(a.mat().col(c)));
  return OrthonormalBasis(std::move(vecs), tol);
}

TripletSum kerner_expand(const Operator& a, const Ket& psi,
                         const OrthonormalBasis& basis, double prune_atol) {
  const int d = basis.dim();
  if (a.dim() != d || psi.dim() != d) {
    fail("dim-mismatch", "operator, state and basis dimensions must agree");
  }
  std::vector<Cx> c(d);
  for (int n = 0; n < d; ++n) c[n] = inner(basis.vec(n), psi);
  // aml[m][l] = <e_l| A |e_m>, so A = sum_{m,l} aml[m][l] |e_l><e_m|.
  std::vector<std::vector<Cx>> aml(d, std::vector<Cx>(d));
  for (int m = 0; m < d; ++m) {
    const Ket am = a * basis.vec(m);
    for (int l = 0; l < d; ++l) aml[m][l] = inner(basis.vec(l), am);
  }
  TripletSum sum;
  sum.prune_atol = prune_atol;
  // l-major generation keeps terms already in canonical (l, m, n) order.
  for (int l = 0; l < d; ++l) {
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        const Cx coeff = c[n] * aml[m][l];
        if (std::abs(coeff) <= prune_atol) {
          ++sum.pruned;
        } else {
          sum.terms.push_back({coeff, l, m, n});
        }
      }
    }
  }
  return sum;
}

Ket kerner_evaluate(const TripletSum& sum, const OrthonormalBasis& basis) {
  Ket acc = Ket::zero(basis.dim());
  for (const TripletTerm& t : sum.terms) {
    const int d = basis.dim();
    if (t.l < 0 || t.l >= d || t.m < 0 || t.m >= d || t.n < 0 || t.n >= d) {
      fail("dim-mismatch", "triplet term index out of range");
    }
    acc = acc +
          t.coeff * tern_vec(basis.vec(t.l), basis.vec(t.m), basis.vec(t.n));
  }
  return acc;
}

Json triplet_sum_to_json(const TripletSum& sum, int dim,
                         const std::string& basis_label) {
  Json j;
  j["basis"] = basis_label;
  j["dim"] = dim;
  j["prune_atol"] = sum.prune_atol;
  j["pruned"] = sum.pruned;
  Json terms = Json::array();
  for (const TripletTerm& t : sum.terms) {
    terms.push_back(Json{{"c", cx_to_json(t.coeff)},
                         {"l", t.l + 1},
                         {"m", t.m + 1},
                         {"n", t.n + 1}});
  }
  j["terms"] = std::move(terms);
  return j;
}

TripletSum triplet_sum_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    fail("bad-env", "triplet sum needs a \"terms\" array");
  }
  TripletSum sum;
  sum.prune_atol = j.value("prune_atol", 0.0);
  sum.pruned = j.value("pruned", 0);
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("c") || !t.contains("l") ||
        !t.contains("m") || !t.contains("n")) {
      fail("bad-env", "triplet term needs c, l, m, n");
    }
    TripletTerm term;
    term.coeff = cx_from_json(t["c"], "triplet coefficient");
    term.l = t["l"].get<int>() - 1;
    term.m = t["m"].get<int>() - 1;
    term.n = t["n"].get<int>() - 1;
    if (term.l < 0 || term.m < 0 || term.n < 0) {
      fail("bad-env", "triplet indices are 1-based");
    }
    sum.terms.push_back(term);
  }
  return sum;
}

}  // namespace ternlab
