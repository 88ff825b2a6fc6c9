// SPDX-License-Identifier: Apache-2.0
#include "ternlab/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "ternlab/vector_ternary.hpp"
#include "ternlab/operator_ternary.hpp"

namespace ternlab {

void FiniteGroup::validate() const {
  if (order < 1) fail("bad-group", "group order must be >= 1");
  if (identity < 0 || identity >= order) {
    fail("bad-group", "identity index out of range");
  }
  if (static_cast<int>(cayley.size()) != order) {
    fail("bad-group", "cayley table must have `order` rows");
  }
  for (int g = 0; g < order; ++g) {
    if (static_cast<int>(cayley[g].size()) != order) {
      fail("bad-group", "cayley row " + std::to_string(g) + " has wrong size");
    }
    for (int h = 0; h < order; ++h) {
      const int v = cayley[g][h];
      if (v < 0 || v >= order) {
        fail("bad-group", "cayley entry out of range at (" +
                              std::to_string(g) + ", " + std::to_string(h) +
                              ")");
      }
    }
  }
  for (int g = 0; g < order; ++g) {
    if (cayley[identity][g] != g || cayley[g][identity] != g) {
      fail("bad-group", "identity does not act as identity on element " +
                            std::to_string(g));
    }
  }
  // Latin square: every row and column is a permutation.
  for (int g = 0; g < order; ++g) {
    std::vector<bool> row(order, false), col(order, false);
    for (int h = 0; h < order; ++h) {
      if (row[cayley[g][h]]) {
        fail("bad-group", "row " + std::to_string(g) + " repeats an element");
      }
      row[cayley[g][h]] = true;
      if (col[cayley[h][g]]) {
        fail("bad-group",
             "column " + std::to_string(g) + " repeats an element");
      }
      col[cayley[h][g]] = true;
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) {
          fail("bad-group", "multiplication is not associative at (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
        }
      }
    }
  }
}

int FiniteGroup::mul(int g, int h) const {
  if (g < 0 || g >= order || h < 0 || h >= order) {
    fail("bad-group", "element index out of range");
  }
  return cayley[g][h];
}

int FiniteGroup::inverse_of(int g) const {
  for (int h = 0; h < order; ++h) {
    if (mul(g, h) == identity) return h;
  }
  fail("bad-group", "element " + std::to_string(g) + " has no inverse");
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("cayley")) {
    fail("bad-group", "group file needs \"order\" and \"cayley\"");
  }
  FiniteGroup g;
  g.order = j["order"].get<int>();
  g.identity = j.value("identity", 0);
  for (const auto& row : j["cayley"]) {
    g.cayley.push_back(row.get<std::vector<int>>());
  }
  g.validate();
  return g;
}

Cocycle cocycle_from_json(const Json& j) {
  Cocycle c;
  c.group = group_from_json(j);
  if (!j.contains("omega")) fail("bad-group", "cocycle file needs \"omega\"");
  const Json& om = j["omega"];
  const int n = c.group.order;
  if (!om.is_array() || static_cast<int>(om.size()) != n) {
    fail("bad-group", "omega must have `order` rows");
  }
  c.omega.assign(n, std::vector<Cx>(n));
  for (int g = 0; g < n; ++g) {
    if (!om[g].is_array() || static_cast<int>(om[g].size()) != n) {
      fail("bad-group", "omega row " + std::to_string(g) + " has wrong size");
    }
    for (int h = 0; h < n; ++h) {
      c.omega[g][h] = cx_from_json(om[g][h], "omega(" + std::to_string(g) +
                                                 ", " + std::to_string(h) +
                                                 ")");
    }
  }
  return c;
}

ProjectiveRep projective_rep_from_json(const Json& j) {
  ProjectiveRep rep;
  rep.cocycle = cocycle_from_json(j);
  if (!j.contains("dim") || !j.contains("ops")) {
    fail("bad-group", "representation file needs \"dim\" and \"ops\"");
  }
  rep.dim = j["dim"].get<int>();
  if (rep.dim < 1) fail("bad-group", "\"dim\" must be >= 1");
  const Json& ops = j["ops"];
  const int n = rep.group().order;
  if (!ops.is_array() || static_cast<int>(ops.size()) != n) {
    fail("bad-group", "\"ops\" must list one operator per group element");
  }
  for (int g = 0; g < n; ++g) {
    const Json& m = ops[g];
    if (!m.is_array() || static_cast<int>(m.size()) != rep.dim) {
      fail("bad-group", "op " + std::to_string(g) + " has wrong row count");
    }
    CMat mat(rep.dim, rep.dim);
    for (int r = 0; r < rep.dim; ++r) {
      if (!m[r].is_array() || static_cast<int>(m[r].size()) != rep.dim) {
        fail("bad-group", "op " + std::to_string(g) + " row " +
                              std::to_string(r) + " has wrong size");
      }
      for (int col = 0; col < rep.dim; ++col) {
        mat(r, col) = cx_from_json(m[r][col],
                                   "op " + std::to_string(g) + " entry");
      }
    }
    rep.ops.push_back(Operator(std::move(mat)));
  }
  return rep;
}

namespace {

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io-error", "cannot open file: " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const Json::exception& e) {
    fail("parse-error", path + ": " + e.what());
  }
}

// Worst residual by margin plus first failure, mirroring run_law's rule.
struct Aggregate {
  TolerancePolicy tol;
  double worst_margin = -1e300;
  double max_residual = 0.0;
  double scale = 0.0;
  bool pass = true;
  int checks = 0;
  Json first_fail;

  void add(double residual, double s, const Json& tag) {
    ++checks;
    const double margin = residual - tol.bound(s);
    if (margin > worst_margin) {
      worst_margin = margin;
      max_residual = residual;
      scale = s;
    }
    if (!tol.admits(residual, s) && pass) {
      pass = false;
      first_fail = tag;
    }
  }

  CheckReport finish(const std::string& law, int dim,
                     std::chrono::steady_clock::time_point t0) const {
    CheckReport rep;
    rep.law = law;
    rep.dim = dim;
    rep.trials = checks;
    rep.seed = 0;
    rep.rng = "exhaustive";
    rep.max_residual = max_residual;
    rep.tolerance = tol;
    rep.scale = scale;
    rep.pass = pass;
    if (!pass) rep.detail = Json{{"first_fail", first_fail}};
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
  }
};

}  // namespace

ProjectiveRep load_projective_rep_file(const std::string& path) {
  return projective_rep_from_json(parse_json_file(path));
}

Cocycle load_cocycle_file(const std::string& path) {
  return cocycle_from_json(parse_json_file(path));
}

bool is_isometry(const Operator& v, TolerancePolicy tol) {
  const Operator gram = adjoint(v) * v;
  return tol.admits(distance(gram, Operator::identity(v.cols())), 1.0);
}

double hom_residual_vec(const Operator& v, const Ket& k1, const Ket& k2,
                        const Ket& k3) {
  return distance(v * tern_vec(k1, k2, k3),
                  tern_vec(v * k1, v * k2, v * k3));
}

Operator rho_op(const Operator& u, const Operator& a, TolerancePolicy tol) {
  const int d = u.dim();
  if (!tol.admits(distance(adjoint(u) * u, Operator::identity(d)), 1.0)) {
    fail("not-unitary", "conjugation action needs a unitary operator");
  }
  return adjoint(u) * a * u;
}

CheckReport cocycle_check(const Cocycle& c, TolerancePolicy tol) {
  const auto t0 = std::chrono::steady_clock::now();
  c.group.validate();
  const int n = c.group.order;
  const int e = c.group.identity;
  Aggregate agg{tol};

  auto tag = [](const char* kind, std::initializer_list<int> idx) {
    Json t;
    t["kind"] = kind;
    t["at"] = Json(std::vector<int>(idx));
    return t;
  };

  agg.add(std::abs(c.at(e, e) - Cx(1.0, 0.0)), 1.0, tag("normalization", {e, e}));
  for (int g = 0; g < n; ++g) {
    agg.add(std::abs(c.at(g, e) - Cx(1.0, 0.0)), 1.0,
            tag("normalization", {g, e}));
    agg.add(std::abs(c.at(e, g) - Cx(1.0, 0.0)), 1.0,
            tag("normalization", {e, g}));
    agg.add(std::abs(std::abs(c.at(g, e)) - 1.0), 1.0, tag("modulus", {g, e}));
    const int gi = c.group.inverse_of(g);
    agg.add(std::abs(c.at(g, gi) - c.at(gi, g)), 1.0,
            tag("inverse-symmetry", {g, gi}));
  }
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      agg.add(std::abs(std::abs(c.at(g, h)) - 1.0), 1.0, tag("modulus", {g, h}));
      for (int k = 0; k < n; ++k) {
        const Cx lhs = c.at(g, h) * c.at(c.group.mul(g, h), k);
        const Cx rhs = c.at(g, c.group.mul(h, k)) * c.at(h, k);
        agg.add(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)),
                tag("associativity", {g, h, k}));
      }
    }
  }
  return agg.finish("cocycle", n, t0);
}

CheckReport projective_rep_check(const ProjectiveRep& rep,
                                 TolerancePolicy tol) {
  const auto t0 = std::chrono::steady_clock::now();
  rep.group().validate();
  const int n = rep.group().order;
  if (static_cast<int>(rep.ops.size()) != n) {
    fail("bad-group", "representation is missing operators");
  }
  Aggregate agg{tol};
  const Operator eye = Operator::identity(rep.dim);
  for (int g = 0; g < n; ++g) {
    if (rep.ops[g].rows() != rep.dim || rep.ops[g].cols() != rep.dim) {
      fail("dim-mismatch", "op " + std::to_string(g) + " is not dim x dim");
    }
    agg.add(distance(adjoint(rep.ops[g]) * rep.ops[g], eye), 1.0,
            Json{{"kind", "unitarity"}, {"at", Json::array({g})}});
  }
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const Operator lhs = rep.ops[g] * rep.ops[h];
      const Operator rhs =
          rep.cocycle.at(g, h) * rep.ops[rep.group().mul(g, h)];
      agg.add(distance(lhs, rhs), std::max(max_abs(lhs), max_abs(rhs)),
              Json{{"kind", "pair"}, {"at", Json::array({g, h})}});
    }
  }
  return agg.finish("projective-rep", rep.dim, t0);
}

namespace {

struct HomName {
  HomLaw law;
  const char* name;
};

constexpr HomName kHomLaws[] = {
    {HomLaw::HomUnitary, "hom-unitary"},
    {HomLaw::HomIsometry, "hom-isometry"},
    {HomLaw::HomNonIsometry, "hom-non-isometry"},
    {HomLaw::HomOperator, "hom-operator"},
};

ResidualScale compare_kets(const Ket& lhs, const Ket& rhs) {
  return {distance(lhs, rhs), std::max(norm(lhs), norm(rhs))};
}

ResidualScale compare_ops(const Operator& lhs, const Operator& rhs) {
  return {distance(lhs, rhs), std::max(max_abs(lhs), max_abs(rhs))};
}

}  // namespace

const char* hom_law_name(HomLaw law) {
  for (const auto& e : kHomLaws) {
    if (e.law == law) return e.name;
  }
  return "?";
}

std::optional<HomLaw> hom_law_from_name(const std::string& name) {
  for (const auto& e : kHomLaws) {
    if (name == e.name) return e.law;
  }
  return std::nullopt;
}

std::vector<std::string> hom_law_names() {
  std::vector<std::string> out;
  for (const auto& e : kHomLaws) out.push_back(e.name);
  return out;
}

CheckReport check_hom_law(HomLaw law, int dim, int dim_to, int trials,
                          std::uint64_t seed, TolerancePolicy tol) {
  if (dim < 1) fail("bad-dim", "hom laws need dim >= 1");
  const std::string name = hom_law_name(law);

  switch (law) {
    case HomLaw::HomUnitary:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_op("U", random_unitary(dim, rng));
            env.insert_ket("k1", random_ket(dim, rng));
            env.insert_ket("k2", random_ket(dim, rng));
            env.insert_ket("k3", random_ket(dim, rng));
            return env;
          },
          [](const Env& e) {
            const Operator& u = e.ops.at("U");
            const Operator ui = adjoint(u);
            const Ket &k1 = e.kets.at("k1"), &k2 = e.kets.at("k2"),
                      &k3 = e.kets.at("k3");
            const Ket t = tern_vec(k1, k2, k3);
            // U and its inverse are both morphisms of the triple product.
            return std::vector<ResidualScale>{
                compare_kets(u * t, tern_vec(u * k1, u * k2, u * k3)),
                compare_kets(ui * t, tern_vec(ui * k1, ui * k2, ui * k3))};
          });
    case HomLaw::HomIsometry: {
      if (dim_to < dim) {
        fail("no-isometry", "hom-isometry needs dim_to >= dim");
      }
      // Rectangular samples cannot live in a square-operator environment,
      // so this law never records a counterexample.
      const auto t0 = std::chrono::steady_clock::now();
      CheckReport rep;
      rep.law = name;
      rep.dim = dim;
      rep.trials = trials;
      rep.seed = seed;
      rep.tolerance = tol;
      rep.pass = true;
      double worst_margin = -1e300;
      for (int t = 0; t < trials; ++t) {
        Rng rng(seed + static_cast<std::uint64_t>(t));
        const Operator v = random_isometry(dim, dim_to, rng);
        const Ket k1 = random_ket(dim, rng), k2 = random_ket(dim, rng),
                  k3 = random_ket(dim, rng);
        const Ket lhs = v * tern_vec(k1, k2, k3);
        const Ket rhs = tern_vec(v * k1, v * k2, v * k3);
        const ResidualScale rs = compare_kets(lhs, rhs);
        const double margin = rs.residual - tol.bound(rs.scale);
        if (margin > worst_margin) {
          worst_margin = margin;
          rep.max_residual = rs.residual;
          rep.scale = rs.scale;
        }
        if (!tol.admits(rs.residual, rs.scale)) rep.pass = false;
      }
      rep.detail = Json{{"dim_to", dim_to}};
      rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
      return rep;
    }
    case HomLaw::HomNonIsometry:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_op("V", Cx(2.0, 0.0) * Operator::identity(dim));
            env.insert_ket("k1", random_ket(dim, rng));
            env.insert_ket("k2", random_ket(dim, rng));
            env.insert_ket("k3", random_ket(dim, rng));
            return env;
          },
          [](const Env& e) {
            const Operator& v = e.ops.at("V");
            const Ket &k1 = e.kets.at("k1"), &k2 = e.kets.at("k2"),
                      &k3 = e.kets.at("k3");
            return std::vector<ResidualScale>{
                compare_kets(v * tern_vec(k1, k2, k3),
                             tern_vec(v * k1, v * k2, v * k3))};
          });
    case HomLaw::HomOperator:
      return run_law(
          name, dim, trials, seed, tol,
          [dim](int, Rng& rng) {
            Env env;
            env.dim = dim;
            env.insert_op("U", random_unitary(dim, rng));
            env.insert_op("A", ginibre(dim, dim, rng));
            env.insert_op("B", ginibre(dim, dim, rng));
            env.insert_op("C", ginibre(dim, dim, rng));
            return env;
          },
          [tol](const Env& e) {
            const Operator &u = e.ops.at("U"), &a = e.ops.at("A"),
                           &b = e.ops.at("B"), &c = e.ops.at("C");
            const Operator lhs = rho_op(u, tern_op(a, b, c), tol);
            const Operator rhs = tern_op(rho_op(u, a, tol), rho_op(u, b, tol),
                                         rho_op(u, c, tol));
            return std::vector<ResidualScale>{compare_ops(lhs, rhs)};
          });
  }
  fail("bad-law", "unhandled hom law");
}

}  // namespace ternlab
