// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ternlab/env.hpp"

namespace ternlab {

// A full orthonormal family, validated pairwise at construction.
class OrthonormalBasis {
 public:
  OrthonormalBasis(std::vector<Ket> vecs, TolerancePolicy tol);
  static OrthonormalBasis standard(int dim);
  // Columns of a square operator (e.g. a unitary) as basis vectors.
  static OrthonormalBasis from_operator_columns(const Operator& a,
                                                TolerancePolicy tol);

  int dim() const { return static_cast<int>(vecs_.size()); }
  const Ket& vec(int n) const { return vecs_[n]; }

 private:
  std::vector<Ket> vecs_;
};

// One summand coeff * [e_l, e_m, e_n]; indices are 0-based in memory and
// 1-based in JSON.
struct TripletTerm {
  Cx coeff;
  int l = 0;
  int m = 0;
  int n = 0;
};

struct TripletSum {
  std::vector<TripletTerm> terms;  // sorted by (l, m, n)
  int pruned = 0;                  // terms dropped by the magnitude cutoff
  double prune_atol = 0.0;
};

// Expansion of the action A|psi> as sum_{l,m,n} c_n a_{ml} [e_l, e_m, e_n]
// with c_n = <e_n|psi> and a_{ml} = <e_l|A|e_m>. Terms with
// |coeff| <= prune_atol are dropped and counted.
TripletSum kerner_expand(const Operator& a, const Ket& psi,
                         const OrthonormalBasis& basis, double prune_atol);

// Evaluates the sum strictly through the ternary product, term by term in
// canonical order; never forms A or a matrix-vector product.
Ket kerner_evaluate(const TripletSum& sum, const OrthonormalBasis& basis);

// {"basis": label, "dim": d, "prune_atol": x, "pruned": k,
//  "terms": [{"c": [re, im], "l": 1, "m": 1, "n": 1}, ...]}
Json triplet_sum_to_json(const TripletSum& sum, int dim,
                         const std::string& basis_label);
TripletSum triplet_sum_from_json(const Json& j);

}  // namespace ternlab
