// SPDX-License-Identifier: Apache-2.0
#include "ternlab/random.hpp"

#include <cmath>

namespace ternlab {

double Rng::uniform_pos() {
  // Top 53 bits, shifted into (0, 1] so log() below is always finite.
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_pos();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Cx Rng::cgauss() {
  const double re = gauss();
  const double im = gauss();
  return Cx(re * M_SQRT1_2, im * M_SQRT1_2);
}

Ket random_ket(int dim, Rng& rng, bool normalized) {
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.cgauss();
  if (normalized) {
    const double n = v.norm();
    if (n > 0.0) v /= n;
  }
  return Ket(std::move(v));
}

Cx random_scalar(Rng& rng) { return rng.cgauss(); }

Operator ginibre(int rows, int cols, Rng& rng) {
  CMat m(rows, cols);
  // Row-major fill order is part of the documented stream.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = rng.cgauss();
  }
  return Operator(std::move(m));
}

Operator random_hermitian(int dim, Rng& rng) {
  const CMat m = ginibre(dim, dim, rng).mat();
  // conj/add commute entrywise in IEEE arithmetic, so this is bitwise
  // self-adjoint, not just up to roundoff.
  return Operator(0.5 * (m + m.adjoint().eval()));
}

Operator random_antihermitian(int dim, Rng& rng) {
  return Cx(0.0, 1.0) * random_hermitian(dim, rng);
}

namespace {

// Phase fix: multiply column i by R_ii/|R_ii| so the distribution is exactly
// Haar rather than QR-convention-dependent.
CMat phase_fixed_q(const CMat& g, int keep_cols) {
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(g.rows(), keep_cols);
  const CMat& qrm = qr.matrixQR();
  for (int i = 0; i < keep_cols; ++i) {
    const Cx rii = qrm(i, i);
    const double a = std::abs(rii);
    q.col(i) *= (a > 0.0) ? (rii / a) : Cx(1.0, 0.0);
  }
  return q;
}

}  // namespace

Operator random_unitary(int dim, Rng& rng) {
  return Operator(phase_fixed_q(ginibre(dim, dim, rng).mat(), dim));
}

Operator random_isometry(int dim_from, int dim_to, Rng& rng) {
  if (dim_to < dim_from) {
    fail("no-isometry", "no isometry from dimension " +
                            std::to_string(dim_from) + " into dimension " +
                            std::to_string(dim_to));
  }
  return Operator(
      phase_fixed_q(ginibre(dim_to, dim_from, rng).mat(), dim_from));
}

Ket random_ket(int dim, std::uint64_t seed, bool normalized) {
  Rng rng(seed);
  return random_ket(dim, rng, normalized);
}

Operator random_hermitian(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(dim, rng);
}

Operator random_antihermitian(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_antihermitian(dim, rng);
}

Operator random_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

Operator random_isometry(int dim_from, int dim_to, std::uint64_t seed) {
  Rng rng(seed);
  return random_isometry(dim_from, dim_to, rng);
}

}  // namespace ternlab
