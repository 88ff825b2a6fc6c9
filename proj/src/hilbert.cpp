// SPDX-License-Identifier: Apache-2.0
#include "ternlab/hilbert.hpp"

#include <cmath>

namespace ternlab {
namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    fail("dim-mismatch", std::string(what) + ": dimensions " +
                             std::to_string(a) + " and " + std::to_string(b) +
                             " differ");
  }
}

}  // namespace

Ket Ket::zero(int dim) { return Ket(CVec::Zero(dim)); }

Ket Ket::basis(int dim, int index) {
  if (index < 0 || index >= dim) {
    fail("dim-mismatch", "basis index " + std::to_string(index) +
                             " out of range for dimension " +
                             std::to_string(dim));
  }
  CVec v = CVec::Zero(dim);
  v(index) = Cx(1.0, 0.0);
  return Ket(std::move(v));
}

Bra Bra::zero(int dim) { return Bra(CVec::Zero(dim)); }

Operator Operator::zero(int rows, int cols) {
  return Operator(CMat::Zero(rows, cols));
}

Operator Operator::identity(int dim) {
  return Operator(CMat::Identity(dim, dim));
}

int Operator::dim() const {
  if (!square()) {
    fail("dim-mismatch", "operator is rectangular (" + std::to_string(rows()) +
                             "x" + std::to_string(cols()) +
                             "), square required");
  }
  return rows();
}

Ket operator+(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "ket + ket");
  return Ket(a.coeffs() + b.coeffs());
}

Ket operator-(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "ket - ket");
  return Ket(a.coeffs() - b.coeffs());
}

Ket operator-(const Ket& a) { return Ket(-a.coeffs()); }

Ket operator*(const Cx& c, const Ket& k) { return Ket(c * k.coeffs()); }
Ket operator*(const Ket& k, const Cx& c) { return Ket(c * k.coeffs()); }

Bra operator+(const Bra& a, const Bra& b) {
  require_same_dim(a.dim(), b.dim(), "bra + bra");
  return Bra(a.coeffs() + b.coeffs());
}

Bra operator-(const Bra& a, const Bra& b) {
  require_same_dim(a.dim(), b.dim(), "bra - bra");
  return Bra(a.coeffs() - b.coeffs());
}

Bra operator-(const Bra& a) { return Bra(-a.coeffs()); }

Bra operator*(const Cx& c, const Bra& b) { return Bra(c * b.coeffs()); }
Bra operator*(const Bra& b, const Cx& c) { return Bra(c * b.coeffs()); }

Operator operator+(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail("dim-mismatch", "op + op: shapes differ");
  }
  return Operator(a.mat() + b.mat());
}

Operator operator-(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail("dim-mismatch", "op - op: shapes differ");
  }
  return Operator(a.mat() - b.mat());
}

Operator operator-(const Operator& a) { return Operator(-a.mat()); }

Operator operator*(const Cx& c, const Operator& a) {
  return Operator(c * a.mat());
}
Operator operator*(const Operator& a, const Cx& c) {
  return Operator(c * a.mat());
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a.cols(), b.rows(), "op * op");
  return Operator(a.mat() * b.mat());
}

Ket operator*(const Operator& a, const Ket& k) {
  require_same_dim(a.cols(), k.dim(), "op * ket");
  return Ket(a.mat() * k.coeffs());
}

Cx operator*(const Bra& b, const Ket& k) {
  require_same_dim(b.dim(), k.dim(), "bra * ket");
  // The bra's entries are already conjugated; the pairing is a plain sum.
  return b.coeffs().cwiseProduct(k.coeffs()).sum();
}

Bra operator*(const Bra& b, const Operator& a) {
  require_same_dim(b.dim(), a.rows(), "bra * op");
  return Bra((b.coeffs().transpose() * a.mat()).transpose());
}

Operator outer(const Ket& k, const Bra& b) {
  return Operator(k.coeffs() * b.coeffs().transpose());
}

Cx inner(const Ket& x, const Ket& y) {
  require_same_dim(x.dim(), y.dim(), "inner");
  return x.coeffs().dot(y.coeffs());  // Eigen conjugates the first argument
}

double norm(const Ket& x) { return x.coeffs().norm(); }
double norm(const Bra& x) { return x.coeffs().norm(); }

double max_abs(const Operator& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  return a.mat().cwiseAbs().maxCoeff();
}

double distance(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "ket distance");
  return (a.coeffs() - b.coeffs()).norm();
}

double distance(const Bra& a, const Bra& b) {
  require_same_dim(a.dim(), b.dim(), "bra distance");
  return (a.coeffs() - b.coeffs()).norm();
}

double distance(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail("dim-mismatch", "op distance: shapes differ");
  }
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  return (a.mat() - b.mat()).cwiseAbs().maxCoeff();
}

Bra adjoint(const Ket& k) { return Bra(k.coeffs().conjugate()); }
Ket adjoint(const Bra& b) { return Ket(b.coeffs().conjugate()); }
Operator adjoint(const Operator& a) { return Operator(a.mat().adjoint()); }

Operator projector(const Ket& k) {
  return Operator(k.coeffs() * k.coeffs().adjoint());
}

Ket direct_sum(const Ket& a, const Ket& b) {
  CVec out(a.dim() + b.dim());
  out.head(a.dim()) = a.coeffs();
  out.tail(b.dim()) = b.coeffs();
  return Ket(std::move(out));
}

Operator direct_sum(const Operator& a, const Operator& b) {
  CMat out = CMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a.mat();
  out.bottomRightCorner(b.rows(), b.cols()) = b.mat();
  return Operator(std::move(out));
}

Ket tensor(const Ket& a, const Ket& b) {
  const int da = a.dim(), db = b.dim();
  CVec out(da * db);
  for (int i = 0; i < da; ++i) {
    out.segment(i * db, db) = a.coeffs()(i) * b.coeffs();
  }
  return Ket(std::move(out));
}

Operator tensor(const Operator& a, const Operator& b) {
  const int ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  CMat out(ra * rb, ca * cb);
  for (int i = 0; i < ra; ++i) {
    for (int j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a.mat()(i, j) * b.mat();
    }
  }
  return Operator(std::move(out));
}

Ket block(const Ket& k, int offset, int len) {
  if (offset < 0 || len < 0 || offset + len > k.dim()) {
    fail("dim-mismatch", "block [" + std::to_string(offset) + ", " +
                             std::to_string(offset + len) +
                             ") out of range for dimension " +
                             std::to_string(k.dim()));
  }
  return Ket(k.coeffs().segment(offset, len));
}

bool all_finite(const Ket& k) { return k.coeffs().allFinite(); }
bool all_finite(const Bra& b) { return b.coeffs().allFinite(); }
bool all_finite(const Operator& a) { return a.mat().allFinite(); }

}  // namespace ternlab
