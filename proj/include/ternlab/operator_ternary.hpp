// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternlab/report.hpp"

namespace ternlab {

// [A, B, C] = A * B^dagger * C on square operators of one dimension.
Operator tern_op(const Operator& a, const Operator& b, const Operator& c);

Operator commutator(const Operator& a, const Operator& b);

// Residual of the mixed commutator/ternary expansion
// [A1, [A2,A3,A4]] = [[A1,A2], A3, A4] - [A2, [A1^dagger, A3], A4]
//                  + [A2, A3, [A1,A4]].
double gen_jacobi_leibniz_residual(const Operator& a1, const Operator& a2,
                                   const Operator& a3, const Operator& a4);

enum class OpLaw {
  ParaAssoc,         // [[A,B,C],D,E] = [A,[D,C,B],E] = [A,B,[C,D,E]]
  HeapUnitary,       // [U,V,V] = U and [V,V,U] = U for unitaries
  HeapGeneric,       // same identities on generic operators (breaks)
  AdjointLaw,        // [A,B,C]^dagger = [C^dagger, B^dagger, A^dagger]
  JacobiLeibniz,     // binary commutator Jacobi in Leibniz form
  GenJacobiLeibniz,  // the mixed expansion above
  IDerivation,       // X -> [iH, X] satisfies the all-plus ternary Leibniz
  CompatClosure,     // ternary product of a commuting family stays compatible
};

const char* op_law_name(OpLaw law);
std::optional<OpLaw> op_law_from_name(const std::string& name);
std::vector<std::string> op_law_names();

CheckReport check_op_law(OpLaw law, int dim, int trials, std::uint64_t seed,
                         TolerancePolicy tol);

}  // namespace ternlab
