// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ternlab/report.hpp"

namespace ternlab {

// [k1, k2, k3] = k1 * <k2|k3>. Conjugate-linear in the middle slot only.
Ket tern_vec(const Ket& k1, const Ket& k2, const Ket& k3);

// Dual-side product on functionals, positionally
// [b1, b2, b3] = (sum_n b1_n * conj(b2_n)) * b3,
// chosen so that adjoint(tern_vec(a, b, c)) ==
// tern_dual(adjoint(c), adjoint(b), adjoint(a)).
Bra tern_dual(const Bra& b1, const Bra& b2, const Bra& b3);

// Componentwise product on a direct sum of two spaces: each slot is the
// pair (x_i, y_i), and the result is [x1,x2,x3] (+) [y1,y2,y3]. This is the
// definition on pairs, not the canonical product of the concatenated
// vectors (those differ by cross pairings).
Ket tern_vec_dsum(const std::pair<Ket, Ket>& p1, const std::pair<Ket, Ket>& p2,
                  const std::pair<Ket, Ket>& p3);

// Product on a tensor product of two spaces, slotwise on factors:
// result = [x1,x2,x3] (x) [y1,y2,y3]. Unlike the direct-sum case this DOES
// agree with the canonical product of the Kronecker vectors.
Ket tern_vec_tensor(const std::pair<Ket, Ket>& p1,
                    const std::pair<Ket, Ket>& p2,
                    const std::pair<Ket, Ket>& p3);

enum class VecLaw {
  ParaAssoc,       // [[a,b,c],d,e] = [a,[d,c,b],e] = [a,b,[c,d,e]]
  MalcevRight,     // [a,b,b] = a   (holds only when <b|b> = 1)
  MalcevLeft,      // [b,b,a] = a   (fails generically; see Projection)
  Projection,      // [b,b,a] = |b><b| a for unit b
  Linearity1,      // linear in slot 1
  Linearity2Conj,  // conjugate-linear in slot 2
  Linearity3,      // linear in slot 3
  ZeroAbsorb,      // zero in any slot annihilates
  NormBound,       // ||[a,b,c]|| <= ||a|| ||b|| ||c||
  DualCompat,      // adj([a,b,c]) = [adj(c), adj(b), adj(a)] on duals
  DsumSplit,       // componentwise product = summed canonical embeddings
  TensorSplit,     // factorwise product = canonical product of Kroneckers
};

const char* vec_law_name(VecLaw law);
std::optional<VecLaw> vec_law_from_name(const std::string& name);
std::vector<std::string> vec_law_names();

// Randomized check. `normalized` draws unit-norm repeated arguments for the
// two malcev laws (no effect elsewhere). DsumSplit reads dim as the total
// dimension (>= 2, split floor/ceil); TensorSplit reads dim as the factor
// dimension (product space dim^2).
CheckReport check_law(VecLaw law, int dim, int trials, std::uint64_t seed,
                      TolerancePolicy tol, bool normalized = false);

}  // namespace ternlab
