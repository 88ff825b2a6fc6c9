// SPDX-License-Identifier: Apache-2.0
#include "ternlab/vector_ternary.hpp"

#include <algorithm>
#include <cmath>

namespace ternlab {

Ket tern_vec(const Ket& k1, const Ket& k2, const Ket& k3) {
  if (k1.dim() != k2.dim() || k1.dim() != k3.dim()) {
    fail("dim-mismatch", "ternary product needs three kets of equal dimension");
  }
  return inner(k2, k3) * k1;
}

Bra tern_dual(const Bra& b1, const Bra& b2, const Bra& b3) {
  if (b1.dim() != b2.dim() || b1.dim() != b3.dim()) {
    fail("dim-mismatch", "ternary product needs three bras of equal dimension");
  }
  // Pairing of b1 with the ket whose bra is b2.
  const Cx s = b1.coeffs().cwiseProduct(b2.coeffs().conjugate()).sum();
  return s * b3;
}

Ket tern_vec_dsum(const std::pair<Ket, Ket>& p1, const std::pair<Ket, Ket>& p2,
                  const std::pair<Ket, Ket>& p3) {
  return direct_sum(tern_vec(p1.first, p2.first, p3.first),
                    tern_vec(p1.second, p2.second, p3.second));
}

Ket tern_vec_tensor(const std::pair<Ket, Ket>& p1,
                    const std::pair<Ket, Ket>& p2,
                    const std::pair<Ket, Ket>& p3) {
  return tensor(tern_vec(p1.first, p2.first, p3.first),
                tern_vec(p1.second, p2.second, p3.second));
}

namespace {

struct LawName {
  VecLaw law;
  const char* name;
};

constexpr LawName kVecLaws[] = {
    {VecLaw::ParaAssoc, "para-assoc-vector"},
    {VecLaw::MalcevRight, "malcev-right"},
    {VecLaw::MalcevLeft, "malcev-left"},
    {VecLaw::Projection, "projection"},
    {VecLaw::Linearity1, "linearity-1"},
    {VecLaw::Linearity2Conj, "linearity-2-conj"},
    {VecLaw::Linearity3, "linearity-3"},
    {VecLaw::ZeroAbsorb, "zero-absorb"},
    {VecLaw::NormBound, "norm-bound"},
    {VecLaw::DualCompat, "dual-compat"},
    {VecLaw::DsumSplit, "dsum-split"},
    {VecLaw::TensorSplit, "tensor-split"},
};

ResidualScale compare(const Ket& lhs, const Ket& rhs) {
  return {distance(lhs, rhs), std::max(norm(lhs), norm(rhs))};
}

ResidualScale compare(const Bra& lhs, const Bra& rhs) {
  return {distance(lhs, rhs), std::max(norm(lhs), norm(rhs))};
}

}  // namespace

const char* vec_law_name(VecLaw law) {
  for (const auto& e : kVecLaws) {
    if (e.law == law) return e.name;
  }
  return "?";
}

std::optional<VecLaw> vec_law_from_name(const std::string& name) {
  for (const auto& e : kVecLaws) {
    if (name == e.name) return e.law;
  }
  return std::nullopt;
}

std::vector<std::string> vec_law_names() {
  std::vector<std::string> out;
  for (const auto& e : kVecLaws) out.push_back(e.name);
  return out;
}

CheckReport check_law(VecLaw law, int dim, int trials, std::uint64_t seed,
                      TolerancePolicy tol, bool normalized) {
  const int min_dim = (law == VecLaw::DsumSplit) ? 2 : 1;
  if (dim < min_dim) {
    fail("bad-dim", std::string(vec_law_name(law)) + " needs dim >= " +
                        std::to_string(min_dim));
  }
  const std::string name = vec_law_name(law);

  // Samplers bind fixed variable names in a fixed draw order; the eval side
  // reads only the environment, so a saved counterexample replays exactly.
  auto sample_kets = [dim](Rng& rng, std::initializer_list<const char*> names) {
    Env env;
    env.dim = dim;
    for (const char* n : names) env.insert_ket(n, random_ket(dim, rng));
    return env;
  };

  switch (law) {
    case VecLaw::ParaAssoc:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            return sample_kets(rng, {"a", "b", "c", "d", "e"});
          },
          [](const Env& e) {
            const Ket &a = e.kets.at("a"), &b = e.kets.at("b"),
                      &c = e.kets.at("c"), &d = e.kets.at("d"),
                      &f = e.kets.at("e");
            const Ket lhs = tern_vec(tern_vec(a, b, c), d, f);
            const Ket mid = tern_vec(a, tern_vec(d, c, b), f);
            const Ket rhs = tern_vec(a, b, tern_vec(c, d, f));
            return std::vector<ResidualScale>{compare(lhs, mid),
                                              compare(lhs, rhs)};
          });
    case VecLaw::MalcevRight:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_ket("a", random_ket(dim, rng));
            env.insert_ket("b", random_ket(dim, rng, normalized));
            return env;
          },
          [](const Env& e) {
            const Ket &a = e.kets.at("a"), &b = e.kets.at("b");
            return std::vector<ResidualScale>{compare(tern_vec(a, b, b), a)};
          });
    case VecLaw::MalcevLeft:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_ket("a", random_ket(dim, rng));
            env.insert_ket("b", random_ket(dim, rng, normalized));
            return env;
          },
          [](const Env& e) {
            const Ket &a = e.kets.at("a"), &b = e.kets.at("b");
            return std::vector<ResidualScale>{compare(tern_vec(b, b, a), a)};
          });
    case VecLaw::Projection:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_ket("a", random_ket(dim, rng));
            env.insert_ket("b", random_ket(dim, rng, /*normalized=*/true));
            return env;
          },
          [](const Env& e) {
            const Ket &a = e.kets.at("a"), &b = e.kets.at("b");
            return std::vector<ResidualScale>{
                compare(tern_vec(b, b, a), projector(b) * a)};
          });
    case VecLaw::Linearity1:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            Env env = sample_kets(rng, {"x", "x2", "y", "z"});
            env.insert_scalar("c", random_scalar(rng));
            return env;
          },
          [](const Env& e) {
            const Ket &x = e.kets.at("x"), &x2 = e.kets.at("x2"),
                      &y = e.kets.at("y"), &z = e.kets.at("z");
            const Cx c = e.scalars.at("c");
            const Ket lhs = tern_vec(x + c * x2, y, z);
            const Ket rhs = tern_vec(x, y, z) + c * tern_vec(x2, y, z);
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case VecLaw::Linearity2Conj:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            Env env = sample_kets(rng, {"x", "y", "y2", "z"});
            env.insert_scalar("c", random_scalar(rng));
            return env;
          },
          [](const Env& e) {
            const Ket &x = e.kets.at("x"), &y = e.kets.at("y"),
                      &y2 = e.kets.at("y2"), &z = e.kets.at("z");
            const Cx c = e.scalars.at("c");
            const Ket lhs = tern_vec(x, y + c * y2, z);
            const Ket rhs =
                tern_vec(x, y, z) + std::conj(c) * tern_vec(x, y2, z);
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case VecLaw::Linearity3:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            Env env = sample_kets(rng, {"x", "y", "z", "z2"});
            env.insert_scalar("c", random_scalar(rng));
            return env;
          },
          [](const Env& e) {
            const Ket &x = e.kets.at("x"), &y = e.kets.at("y"),
                      &z = e.kets.at("z"), &z2 = e.kets.at("z2");
            const Cx c = e.scalars.at("c");
            const Ket lhs = tern_vec(x, y, z + c * z2);
            const Ket rhs = tern_vec(x, y, z) + c * tern_vec(x, y, z2);
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case VecLaw::ZeroAbsorb:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) { return sample_kets(rng, {"x", "y", "z"}); },
          [dim](const Env& e) {
            const Ket &x = e.kets.at("x"), &y = e.kets.at("y"),
                      &z = e.kets.at("z");
            const Ket zero = Ket::zero(dim);
            return std::vector<ResidualScale>{
                compare(tern_vec(zero, y, z), zero),
                compare(tern_vec(x, zero, z), zero),
                compare(tern_vec(x, y, zero), zero)};
          });
    case VecLaw::NormBound:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) { return sample_kets(rng, {"a", "b", "c"}); },
          [](const Env& e) {
            const Ket &a = e.kets.at("a"), &b = e.kets.at("b"),
                      &c = e.kets.at("c");
            const double lhs = norm(tern_vec(a, b, c));
            const double bound = norm(a) * norm(b) * norm(c);
            return std::vector<ResidualScale>{
                {std::max(0.0, lhs - bound), bound}};
          });
    case VecLaw::DualCompat:
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) { return sample_kets(rng, {"a", "b", "c"}); },
          [](const Env& e) {
            const Ket &a = e.kets.at("a"), &b = e.kets.at("b"),
                      &c = e.kets.at("c");
            const Bra lhs = adjoint(tern_vec(a, b, c));
            const Bra rhs = tern_dual(adjoint(c), adjoint(b), adjoint(a));
            return std::vector<ResidualScale>{compare(lhs, rhs)};
          });
    case VecLaw::DsumSplit:
      // dim is the total dimension; blocks are [0, d1) and [d1, dim).
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) { return sample_kets(rng, {"v1", "v2", "v3"}); },
          [dim](const Env& e) {
            const int d1 = dim / 2, d2 = dim - dim / 2;
            const Ket &v1 = e.kets.at("v1"), &v2 = e.kets.at("v2"),
                      &v3 = e.kets.at("v3");
            auto split = [&](const Ket& v) {
              return std::pair<Ket, Ket>{block(v, 0, d1), block(v, d1, d2)};
            };
            const auto p1 = split(v1), p2 = split(v2), p3 = split(v3);
            const Ket componentwise = tern_vec_dsum(p1, p2, p3);
            // Same quantity from the canonical product on the big space,
            // applied to the two block embeddings separately.
            auto embed_lo = [&](const Ket& x) {
              return direct_sum(x, Ket::zero(d2));
            };
            auto embed_hi = [&](const Ket& y) {
              return direct_sum(Ket::zero(d1), y);
            };
            const Ket canonical =
                tern_vec(embed_lo(p1.first), embed_lo(p2.first),
                         embed_lo(p3.first)) +
                tern_vec(embed_hi(p1.second), embed_hi(p2.second),
                         embed_hi(p3.second));
            return std::vector<ResidualScale>{
                compare(componentwise, canonical)};
          });
    case VecLaw::TensorSplit:
      // dim is the factor dimension; the product space has dim^2.
      return run_law(
          name, dim, trials, seed, tol,
          [&](int, Rng& rng) {
            return sample_kets(rng, {"x1", "x2", "x3", "y1", "y2", "y3"});
          },
          [](const Env& e) {
            const Ket &x1 = e.kets.at("x1"), &x2 = e.kets.at("x2"),
                      &x3 = e.kets.at("x3"), &y1 = e.kets.at("y1"),
                      &y2 = e.kets.at("y2"), &y3 = e.kets.at("y3");
            const Ket factorwise =
                tern_vec_tensor({x1, y1}, {x2, y2}, {x3, y3});
            const Ket canonical =
                tern_vec(tensor(x1, y1), tensor(x2, y2), tensor(x3, y3));
            return std::vector<ResidualScale>{compare(factorwise, canonical)};
          });
  }
  fail("bad-law", "unhandled vector law");
}

}  // namespace ternlab
