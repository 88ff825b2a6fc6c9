// SPDX-License-Identifier: Apache-2.0
#include "ternlab/operator_ternary.hpp"

#include <algorithm>

namespace ternlab {

Operator tern_op(const Operator& a, const Operator& b, const Operator& c) {
  const int d = a.dim();
  if (b.dim() != d || c.dim() != d) {
    fail("dim-mismatch",
         "ternary product needs three square operators of equal dimension");
  }
  return a * adjoint(b) * c;
}

Operator commutator(const Operator& a, const Operator& b) {
  return a * b - b * a;
}

double gen_jacobi_leibniz_residual(const Operator& a1, const Operator& a2,
                                   const Operator& a3, const Operator& a4) {
  const Operator lhs = commutator(a1, tern_op(a2, a3, a4));
  const Operator rhs = tern_op(commutator(a1, a2), a3, a4) -
                       tern_op(a2, commutator(adjoint(a1), a3), a4) +
                       tern_op(a2, a3, commutator(a1, a4));
  return distance(lhs, rhs);
}

namespace {

struct LawName {
  OpLaw law;
  const char* name;
};

constexpr LawName kOpLaws[] = {
    {OpLaw::ParaAssoc, "para-assoc-op"},
    {OpLaw::HeapUnitary, "heap-unitary"},
    {OpLaw::HeapGeneric, "heap-generic"},
    {OpLaw::AdjointLaw, "adjoint-law"},
    {OpLaw::JacobiLeibniz, "jacobi-leibniz"},
    {OpLaw::GenJacobiLeibniz, "gen-jacobi-leibniz"},
    {OpLaw::IDerivation, "i-derivation"},
    {OpLaw::CompatClosure, "compat-closure"},
};

ResidualScale compare(const Operator& lhs, const Operator& rhs) {
  return {distance(lhs, rhs), std::max(max_abs(lhs), max_abs(rhs))};
}

Env sample_ops(int dim, Rng& rng, std::initializer_list<const char*> names) {
  Env env;
  env.dim = dim;
  for (const char* n : names) env.insert_op(n, ginibre(dim, dim, rng));
  return env;
}

}  // namespace

const char* op_law_name(OpLaw law) {
  for (const auto& e : kOpLaws) {
    if (e.law == law) return e.name;
  }
  return "?";
}

std::optional<OpLaw> op_law_from_name(const std::string& name) {
  for (const auto& e : kOpLaws) {
    if (name == e.name) return e.law;
  }
  return std::nullopt;
}

std::vector<std::string> op_law_names() {
  std::vector<std::string> out;
  for (const auto& e : kOpLaws) out.push_back(e.name);
  return out;
}

CheckReport check_op_law(OpLaw law, int dim, int trials, std::uint64_t seed,
                         TolerancePolicy tol) {
  if (dim < 1) fail("bad-dim", "operator laws need dim >= 1");
  const std::string name = op_law_name(law);

  switch (law) {
    case OpLaw::ParaAssoc:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            return sample_ops(dim, rng, {"A", "B", "C", "D", "E"});
          },
          [](const Env& e) {
            const Operator &a = e.ops.at("A"), &b = e.ops.at("B"),
                           &c = e.ops.at("C"), &d = e.ops.at("D"),
                           &f = e.ops.at("E");
            const Operator lhs = tern_op(tern_op(a, b, c), d, f);
            const Operator mid = tern_op(a, tern_op(d, c, b), f);
            const Operator rhs = tern_op(a, b, tern_op(c, d, f));
            return std::vector<ResidualScale>{compare(lhs, mid),
                                              compare(lhs, rhs)};
          });
    case OpLaw::HeapUnitary:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_op("U", random_unitary(dim, rng));
            env.insert_op("V", random_unitary(dim, rng));
            return env;
          },
          [](const Env& e) {
            const Operator &u = e.ops.at("U"), &v = e.ops.at("V");
            return std::vector<ResidualScale>{compare(tern_op(u, v, v), u),
                                              compare(tern_op(v, v, u), u)};
          });
    case OpLaw::HeapGeneric:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) { return sample_ops(dim, rng, {"U", "V"}); },
          [](const Env& e) {
            const Operator &u = e.ops.at("U"), &v = e.ops.at("V");
            return std::vector<ResidualScale>{compare(tern_op(u, v, v), u),
                                              compare(tern_op(v, v, u), u)};
          });
    case OpLaw::AdjointLaw:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            return sample_ops(dim, rng, {"A", "B", "C"});
          },
          [](const Env& e) {
            const Operator &a = e.ops.at("A"), &b = e.ops.at("B"),
                           &c = e.ops.at("C");
            const Operator lhs = adjoint(tern_op(a, b, c));
            const Operator rhs =
                tern_op(adjoint(c), adjoint(b), adjoint(a));
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case OpLaw::JacobiLeibniz:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            return sample_ops(dim, rng, {"A", "B", "C"});
          },
          [](const Env& e) {
            const Operator &a = e.ops.at("A"), &b = e.ops.at("B"),
                           &c = e.ops.at("C");
            const Operator lhs = commutator(a, commutator(b, c));
            const Operator rhs = commutator(commutator(a, b), c) +
                                 commutator(b, commutator(a, c));
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case OpLaw::GenJacobiLeibniz:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            return sample_ops(dim, rng, {"A1", "A2", "A3", "A4"});
          },
          [](const Env& e) {
            const Operator &a1 = e.ops.at("A1"), &a2 = e.ops.at("A2"),
                           &a3 = e.ops.at("A3"), &a4 = e.ops.at("A4");
            const Operator lhs = commutator(a1, tern_op(a2, a3, a4));
            const Operator rhs =
                tern_op(commutator(a1, a2), a3, a4) -
                tern_op(a2, commutator(adjoint(a1), a3), a4) +
                tern_op(a2, a3, commutator(a1, a4));
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case OpLaw::IDerivation:
      // D = iH with H self-adjoint: the middle-slot sign flip cancels and
      // X -> [D, X] distributes over all three slots with plus signs.
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_op("H", random_hermitian(dim, rng));
            env.insert_op("A", ginibre(dim, dim, rng));
            env.insert_op("B", ginibre(dim, dim, rng));
            env.insert_op("C", ginibre(dim, dim, rng));
            return env;
          },
          [](const Env& e) {
            const Operator d = Cx(0.0, 1.0) * e.ops.at("H");
            const Operator &a = e.ops.at("A"), &b = e.ops.at("B"),
                           &c = e.ops.at("C");
            const Operator lhs = commutator(d, tern_op(a, b, c));
            const Operator rhs = tern_op(commutator(d, a), b, c) +
                                 tern_op(a, commutator(d, b), c) +
                                 tern_op(a, b, commutator(d, c));
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case OpLaw::CompatClosure:
      // Commuting self-adjoint family: one Haar rotation of independent real
      // diagonals. The ternary product must stay self-adjoint and commute
      // with every member.
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            const Operator u = random_unitary(dim, rng);
            Env env;
            env.dim = dim;
            for (const char* n : {"A", "B", "C"}) {
              CVec diag(dim);
              for (int k = 0; k < dim; ++k) diag(k) = Cx(rng.gauss(), 0.0);
              const CMat m =
                  u.mat() * diag.asDiagonal() * u.mat().adjoint();
              env.insert_op(n, Operator(m));
            }
            return env;
          },
          [](const Env& e) {
            const Operator &a = e.ops.at("A"), &b = e.ops.at("B"),
                           &c = e.ops.at("C");
            const Operator t = tern_op(a, b, c);
            std::vector<ResidualScale> out;
            out.push_back(compare(t, adjoint(t)));
            for (const Operator* x : {&a, &b, &c}) {
              out.push_back(compare(t * (*x), (*x) * t));
            }
            return out;
          });
  }
  fail("bad-law", "unhandled operator law");
}

}  // namespace ternlab
