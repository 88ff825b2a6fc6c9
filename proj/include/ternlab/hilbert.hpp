// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ternlab/types.hpp"

namespace ternlab {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Column vector |psi>.
class Ket {
 public:
  Ket() = default;
  explicit Ket(CVec v) : v_(std::move(v)) {}
  static Ket zero(int dim);
  static Ket basis(int dim, int index);  // e_index, 0-based

  int dim() const { return static_cast<int>(v_.size()); }
  const CVec& coeffs() const { return v_; }
  CVec& coeffs() { return v_; }
  Cx operator()(int i) const { return v_(i); }

 private:
  CVec v_;
};

// Row functional <psi|; stores its entries as given (already conjugated
// relative to the corresponding ket).
class Bra {
 public:
  Bra() = default;
  explicit Bra(CVec v) : v_(std::move(v)) {}
  static Bra zero(int dim);

  int dim() const { return static_cast<int>(v_.size()); }
  const CVec& coeffs() const { return v_; }
  CVec& coeffs() { return v_; }
  Cx operator()(int i) const { return v_(i); }

 private:
  CVec v_;
};

// Dense matrix. Usually square (an endomorphism); isometries into a larger
// space are the one rectangular case, so squareness is enforced at the
// operations that need it, not in the type.
class Operator {
 public:
  Operator() = default;
  explicit Operator(CMat m) : m_(std::move(m)) {}
  static Operator zero(int rows, int cols);
  static Operator identity(int dim);

  int rows() const { return static_cast<int>(m_.rows()); }
  int cols() const { return static_cast<int>(m_.cols()); }
  bool square() const { return m_.rows() == m_.cols(); }
  // Dimension of the underlying space; throws "dim-mismatch" if rectangular.
  int dim() const;
  const CMat& mat() const { return m_; }
  CMat& mat() { return m_; }
  Cx operator()(int r, int c) const { return m_(r, c); }

 private:
  CMat m_;
};

// ---- arithmetic (dimension-checked, throws Error("dim-mismatch")) ----

Ket operator+(const Ket& a, const Ket& b);
Ket operator-(const Ket& a, const Ket& b);
Ket operator-(const Ket& a);
Ket operator*(const Cx& c, const Ket& k);
Ket operator*(const Ket& k, const Cx& c);

Bra operator+(const Bra& a, const Bra& b);
Bra operator-(const Bra& a, const Bra& b);
Bra operator-(const Bra& a);
Bra operator*(const Cx& c, const Bra& b);
Bra operator*(const Bra& b, const Cx& c);

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator-(const Operator& a);
Operator operator*(const Cx& c, const Operator& a);
Operator operator*(const Operator& a, const Cx& c);
Operator operator*(const Operator& a, const Operator& b);  // composition
Ket operator*(const Operator& a, const Ket& k);             // application
Cx operator*(const Bra& b, const Ket& k);                   // pairing <b|k>
Bra operator*(const Bra& b, const Operator& a);             // <b| A
Operator outer(const Ket& k, const Bra& b);                 // |k><b|

// ---- inner product and norms ----

// Conjugate-linear in the FIRST argument: inner(x, y) = sum_i conj(x_i) y_i.
Cx inner(const Ket& x, const Ket& y);
double norm(const Ket& x);
double norm(const Bra& x);
// Largest entry magnitude; the operator-comparison norm used throughout.
double max_abs(const Operator& a);

// Residual helpers: distance between two objects of the same kind.
double distance(const Ket& a, const Ket& b);
double distance(const Bra& a, const Bra& b);
double distance(const Operator& a, const Operator& b);

// ---- adjoints ----

Bra adjoint(const Ket& k);       // |k> -> <k|
Ket adjoint(const Bra& b);       // <b| -> |b>
Operator adjoint(const Operator& a);
inline Bra adjoint_ket(const Ket& k) { return adjoint(k); }
inline Ket adjoint_bra(const Bra& b) { return adjoint(b); }
inline Operator adjoint_op(const Operator& a) { return adjoint(a); }

// Rank-one projector |k><k| / <k|k> is NOT taken here; this is the raw
// outer square |k><k| (callers pass normalized kets where it matters).
Operator projector(const Ket& k);

// ---- direct sums and tensor products ----

Ket direct_sum(const Ket& a, const Ket& b);
Operator direct_sum(const Operator& a, const Operator& b);  // block diag
Ket tensor(const Ket& a, const Ket& b);                     // Kronecker
Operator tensor(const Operator& a, const Operator& b);
inline Ket direct_sum_ket(const Ket& a, const Ket& b) { return direct_sum(a, b); }
inline Operator direct_sum_op(const Operator& a, const Operator& b) {
  return direct_sum(a, b);
}
inline Ket tensor_ket(const Ket& a, const Ket& b) { return tensor(a, b); }
inline Operator tensor_op(const Operator& a, const Operator& b) {
  return tensor(a, b);
}

// Slice of a direct sum: entries [offset, offset+len).
Ket block(const Ket& k, int offset, int len);

bool all_finite(const Ket& k);
bool all_finite(const Bra& b);
bool all_finite(const Operator& a);

}  // namespace ternlab
