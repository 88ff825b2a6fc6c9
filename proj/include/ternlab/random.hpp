// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "ternlab/hilbert.hpp"

namespace ternlab {

// Deterministic sample stream. The Gaussian is a hand-rolled Box-Muller over
// the raw mt19937_64 output because std::normal_distribution is free to vary
// between standard libraries; this stream is bit-identical everywhere.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64-boxmuller";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on (0, 1]; 53-bit resolution, never exactly zero.
  double uniform_pos();
  // Uniform on [0, 1).
  double uniform();
  // Standard normal N(0, 1).
  double gauss();
  // Standard complex normal, E|z|^2 = 1.
  Cx cgauss();
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Entries are iid standard complex normals. normalized divides by the norm.
Ket random_ket(int dim, Rng& rng, bool normalized = false);
Cx random_scalar(Rng& rng);
// Square matrix of iid standard complex normals.
Operator ginibre(int rows, int cols, Rng& rng);
// H = (M + M^dagger)/2 for Ginibre M; bitwise self-adjoint.
Operator random_hermitian(int dim, Rng& rng);
// i * H; bitwise anti-self-adjoint.
Operator random_antihermitian(int dim, Rng& rng);
// Haar-distributed: QR of a Ginibre matrix with the R-diagonal phase fix
// U = Q * diag(R_ii / |R_ii|).
Operator random_unitary(int dim, Rng& rng);
// Haar-random isometry V: C^dim_from -> C^dim_to, V^dagger V = I.
// Requires dim_to >= dim_from; otherwise throws Error("no-isometry").
Operator random_isometry(int dim_from, int dim_to, Rng& rng);

// Seed-taking conveniences; each constructs a fresh stream.
Ket random_ket(int dim, std::uint64_t seed, bool normalized = false);
Operator random_hermitian(int dim, std::uint64_t seed);
Operator random_antihermitian(int dim, std::uint64_t seed);
Operator random_unitary(int dim, std::uint64_t seed);
Operator random_isometry(int dim_from, int dim_to, std::uint64_t seed);

}  // namespace ternlab
