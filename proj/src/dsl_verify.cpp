// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

#include "ternlab/dsl.hpp"

namespace ternlab {
namespace {

VarKind var_kind_from_name(const std::string& s) {
  if (s == "ket") return VarKind::KetVar;
  if (s == "bra") return VarKind::BraVar;
  if (s == "op") return VarKind::OpVar;
  if (s == "scalar") return VarKind::ScalarVar;
  fail("bad-vars", "unknown variable kind '" + s + "'");
}

VarConstraint var_constraint_from_name(const std::string& s) {
  if (s == "none") return VarConstraint::None;
  if (s == "normalized") return VarConstraint::Normalized;
  if (s == "unitary") return VarConstraint::Unitary;
  if (s == "hermitian") return VarConstraint::Hermitian;
  if (s == "antihermitian") return VarConstraint::AntiHermitian;
  fail("bad-vars", "unknown constraint '" + s + "'");
}

void validate_spec(const VarSpec& spec) {
  if (!valid_identifier(spec.name)) {
    fail("bad-vars", "'" + spec.name + "' is not a usable variable name");
  }
  const bool is_op = spec.kind == VarKind::OpVar;
  const bool is_vec =
      spec.kind == VarKind::KetVar || spec.kind == VarKind::BraVar;
  if (spec.kind != VarKind::ScalarVar && spec.dim < 1) {
    fail("bad-vars", "variable '" + spec.name + "' needs a dimension >= 1");
  }
  switch (spec.constraint) {
    case VarConstraint::None:
      break;
    case VarConstraint::Normalized:
      if (!is_vec) {
        fail("bad-vars", "'normalized' applies to kets and bras only");
      }
      break;
    case VarConstraint::Unitary:
    case VarConstraint::Hermitian:
    case VarConstraint::AntiHermitian:
      if (!is_op) {
        fail("bad-vars", "operator constraints apply to ops only");
      }
      break;
  }
}

void bind_sample(Env& env, const VarSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case VarKind::KetVar:
      env.insert_ket(spec.name,
                     random_ket(spec.dim, rng,
                                spec.constraint == VarConstraint::Normalized));
      return;
    case VarKind::BraVar:
      env.insert_bra(spec.name,
                     adjoint(random_ket(
                         spec.dim, rng,
                         spec.constraint == VarConstraint::Normalized)));
      return;
    case VarKind::OpVar:
      switch (spec.constraint) {
        case VarConstraint::Unitary:
          env.insert_op(spec.name, random_unitary(spec.dim, rng));
          return;
        case VarConstraint::Hermitian:
          env.insert_op(spec.name, random_hermitian(spec.dim, rng));
          return;
        case VarConstraint::AntiHermitian:
          env.insert_op(spec.name, random_antihermitian(spec.dim, rng));
          return;
        default:
          env.insert_op(spec.name, ginibre(spec.dim, spec.dim, rng));
          return;
      }
    case VarKind::ScalarVar:
      env.insert_scalar(spec.name, rng.cgauss());
      return;
  }
}

template <typename Fn>
auto with_side(const char* side, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(side) + ": " + e.what());
  }
}

ResidualScale value_residual(const Expr& where, const Value& lhs,
                             const Value& rhs) {
  if (lhs.v.index() != rhs.v.index()) {
    fail("kind-mismatch", std::string("sides evaluate to different kinds: ") +
                              lhs.kind_name() + " vs " + rhs.kind_name());
  }
  (void)where;
  if (lhs.is_scalar()) {
    return {std::abs(lhs.scalar() - rhs.scalar()),
            std::max(std::abs(lhs.scalar()), std::abs(rhs.scalar()))};
  }
  if (lhs.is_ket()) {
    if (lhs.ket().dim() != rhs.ket().dim()) {
      fail("dim-mismatch", "sides evaluate to kets of different dimension");
    }
    return {distance(lhs.ket(), rhs.ket()),
            std::max(norm(lhs.ket()), norm(rhs.ket()))};
  }
  if (lhs.is_bra()) {
    if (lhs.bra().dim() != rhs.bra().dim()) {
      fail("dim-mismatch", "sides evaluate to bras of different dimension");
    }
    return {distance(lhs.bra(), rhs.bra()),
            std::max(norm(lhs.bra()), norm(rhs.bra()))};
  }
  if (lhs.op().rows() != rhs.op().rows() ||
      lhs.op().cols() != rhs.op().cols()) {
    fail("dim-mismatch", "sides evaluate to ops of different shape");
  }
  return {distance(lhs.op(), rhs.op()),
          std::max(max_abs(lhs.op()), max_abs(rhs.op()))};
}

}  // namespace

std::string var_kind_name(VarKind k) {
  switch (k) {
    case VarKind::KetVar: return "ket";
    case VarKind::BraVar: return "bra";
    case VarKind::OpVar: return "op";
    case VarKind::ScalarVar: return "scalar";
  }
  return "?";
}

std::string var_constraint_name(VarConstraint c) {
  switch (c) {
    case VarConstraint::None: return "none";
    case VarConstraint::Normalized: return "normalized";
    case VarConstraint::Unitary: return "unitary";
    case VarConstraint::Hermitian: return "hermitian";
    case VarConstraint::AntiHermitian: return "antihermitian";
  }
  return "?";
}

std::vector<VarSpec> parse_var_specs(const std::string& text) {
  std::vector<VarSpec> out;
  std::set<std::string> seen;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    pos = end + 1;
    // Trim surrounding spaces.
    const size_t first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      fail("bad-vars", "empty variable spec");
    }
    const size_t last = item.find_last_not_of(" \t");
    item = item.substr(first, last - first + 1);

    VarSpec spec;
    const size_t colon = item.find(':');
    if (colon == std::string::npos) {
      fail("bad-vars", "variable spec '" + item + "' needs name:kind");
    }
    spec.name = item.substr(0, colon);
    std::string rest = item.substr(colon + 1);

    const size_t brace = rest.find('{');
    if (brace != std::string::npos) {
      if (rest.back() != '}') {
        fail("bad-vars", "unterminated constraint in '" + item + "'");
      }
      spec.constraint = var_constraint_from_name(
          rest.substr(brace + 1, rest.size() - brace - 2));
      rest = rest.substr(0, brace);
    }
    const size_t brack = rest.find('[');
    if (brack != std::string::npos) {
      if (rest.back() != ']') {
        fail("bad-vars", "unterminated dimension in '" + item + "'");
      }
      const std::string num = rest.substr(brack + 1, rest.size() - brack - 2);
      if (num.empty() ||
          num.find_first_not_of("0123456789") != std::string::npos) {
        fail("bad-vars", "bad dimension '" + num + "' in '" + item + "'");
      }
      spec.dim = std::stoi(num);
      rest = rest.substr(0, brack);
    }
    spec.kind = var_kind_from_name(rest);
    if (spec.kind == VarKind::ScalarVar && spec.dim != 0) {
      fail("bad-vars", "scalars take no dimension");
    }
    validate_spec(spec);
    if (!seen.insert(spec.name).second) {
      fail("bad-vars", "duplicate variable '" + spec.name + "'");
    }
    out.push_back(std::move(spec));
  }
  if (out.empty()) fail("bad-vars", "no variables given");
  return out;
}

CheckReport verify_identity(const std::string& lhs, const std::string& rhs,
                            const std::vector<VarSpec>& vars, int trials,
                            std::uint64_t seed, TolerancePolicy tol) {
  const auto t0 = std::chrono::steady_clock::now();
  {
    std::set<std::string> seen;
    for (const VarSpec& spec : vars) {
      validate_spec(spec);
      if (!seen.insert(spec.name).second) {
        fail("bad-vars", "duplicate variable '" + spec.name + "'");
      }
    }
  }
  const ExprPtr le = with_side("lhs", [&] { return parse_expression(lhs); });
  const ExprPtr re = with_side("rhs", [&] { return parse_expression(rhs); });

  // A counterexample can only be saved when every non-scalar variable lives
  // at one dimension (the environment format has a single dim field).
  int common_dim = 0;
  bool uniform = true;
  for (const VarSpec& spec : vars) {
    if (spec.kind == VarKind::ScalarVar) continue;
    if (common_dim == 0) {
      common_dim = spec.dim;
    } else if (spec.dim != common_dim) {
      uniform = false;
    }
  }

  CheckReport rep;
  rep.law = "identity";
  rep.dim = uniform ? common_dim : 0;
  rep.trials = trials;
  rep.seed = seed;
  rep.tolerance = tol;
  rep.pass = true;
  double worst_margin = -1e300;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    Env env;
    env.dim = common_dim > 0 ? common_dim : 1;
    for (const VarSpec& spec : vars) bind_sample(env, spec, rng);
    const Value lv = with_side("lhs", [&] { return eval(*le, env); });
    const Value rv = with_side("rhs", [&] { return eval(*re, env); });
    const ResidualScale rs = value_residual(*le, lv, rv);
    const double margin = rs.residual - tol.bound(rs.scale);
    if (margin > worst_margin) {
      worst_margin = margin;
      rep.max_residual = rs.residual;
      rep.scale = rs.scale;
    }
    if (!tol.admits(rs.residual, rs.scale) && rep.pass) {
      rep.pass = false;
      if (uniform) rep.counterexample = env;
    }
  }
  rep.detail = Json{{"lhs", pretty_print(*le)}, {"rhs", pretty_print(*re)}};
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io-error", "cannot open corpus file: " + path);
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      fail("parse-error",
           path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    CorpusEntry entry;
    if (!j.is_object() || !j.contains("name") || !j.contains("lhs") ||
        !j.contains("rhs") || !j.contains("vars") || !j.contains("expect")) {
      fail("bad-corpus", path + ":" + std::to_string(lineno) +
                             ": entry needs name/lhs/rhs/vars/expect");
    }
    entry.name = j["name"].get<std::string>();
    entry.lhs = j["lhs"].get<std::string>();
    entry.rhs = j["rhs"].get<std::string>();
    const std::string expect = j["expect"].get<std::string>();
    if (expect == "pass") {
      entry.expect_pass = true;
    } else if (expect == "fail") {
      entry.expect_pass = false;
    } else {
      fail("bad-corpus", path + ":" + std::to_string(lineno) +
                             ": expect must be \"pass\" or \"fail\"");
    }
    for (const Json& v : j["vars"]) {
      VarSpec spec;
      spec.name = v.at("name").get<std::string>();
      spec.kind = var_kind_from_name(v.at("kind").get<std::string>());
      spec.dim = v.value("dim", 0);
      spec.constraint =
          var_constraint_from_name(v.value("constraint", "none"));
      validate_spec(spec);
      entry.vars.push_back(std::move(spec));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries,
                                      int trials, std::uint64_t seed,
                                      TolerancePolicy tol) {
  std::vector<CorpusOutcome> out;
  std::uint64_t entry_seed = seed;
  for (const CorpusEntry& entry : entries) {
    CorpusOutcome o;
    o.name = entry.name;
    o.expect_pass = entry.expect_pass;
    o.report =
        verify_identity(entry.lhs, entry.rhs, entry.vars, trials, entry_seed,
                        tol);
    o.report.law = "identity:" + entry.name;
    o.matched = o.report.pass == entry.expect_pass;
    out.push_back(std::move(o));
    // Decorrelate entries while keeping the whole run reproducible.
    entry_seed += 7919;
  }
  return out;
}

}  // namespace ternlab
