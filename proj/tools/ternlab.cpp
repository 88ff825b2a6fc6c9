// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: randomized law checks, expression evaluation,
// identity verification, corpus runs and triple-product decompositions.
// Exit codes: 0 = check passed, 1 = check failed (report still written),
// 2 = usage, I/O or evaluation error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ternlab/derivations.hpp"
#include "ternlab/dsl.hpp"
#include "ternlab/kerner.hpp"
#include "ternlab/operator_ternary.hpp"
#include "ternlab/symmetry.hpp"
#include "ternlab/vector_ternary.hpp"

namespace {

using namespace ternlab;

constexpr const char* kVersion = "ternlab 0.1.0";

void emit(const Json& j, const std::string& json_path) {
  std::cout << j.dump(2) << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) fail("io-error", "cannot write " + json_path);
    out << j.dump(2) << "\n";
  }
}

int finish_report(const CheckReport& rep, const std::string& json_path) {
  emit(report_to_json(rep), json_path);
  std::cerr << report_summary(rep) << "\n";
  return rep.pass ? 0 : 1;
}

std::vector<std::string> all_law_names() {
  std::vector<std::string> names = vec_law_names();
  for (const auto& n : op_law_names()) names.push_back(n);
  for (const auto& n : hom_law_names()) names.push_back(n);
  for (const auto& n : deriv_law_names()) names.push_back(n);
  names.push_back("cocycle");
  names.push_back("projective-rep");
  return names;
}

struct CheckArgs {
  std::string law;
  int dim = 4;
  int trials = 1000;
  std::uint64_t seed = 42;
  double atol = 1e-12;
  double rtol = 1e-9;
  bool normalized = false;
  int dim_to = 0;  // 0: pick dim + 3 for the isometry law
  std::string group_file;
  std::string json_path;
};

int cmd_check(const CheckArgs& a) {
  const TolerancePolicy tol{a.atol, a.rtol};
  if (auto law = vec_law_from_name(a.law)) {
    return finish_report(
        check_law(*law, a.dim, a.trials, a.seed, tol, a.normalized),
        a.json_path);
  }
  if (auto law = op_law_from_name(a.law)) {
    return finish_report(check_op_law(*law, a.dim, a.trials, a.seed, tol),
                         a.json_path);
  }
  if (auto law = hom_law_from_name(a.law)) {
    const int dim_to = a.dim_to > 0 ? a.dim_to : a.dim + 3;
    return finish_report(
        check_hom_law(*law, a.dim, dim_to, a.trials, a.seed, tol),
        a.json_path);
  }
  if (auto law = deriv_law_from_name(a.law)) {
    return finish_report(check_deriv_law(*law, a.dim, a.trials, a.seed, tol),
                         a.json_path);
  }
  if (a.law == "cocycle" || a.law == "projective-rep") {
    if (a.group_file.empty()) {
      fail("bad-usage", a.law + " needs --group FILE");
    }
    if (a.law == "cocycle") {
      return finish_report(cocycle_check(load_cocycle_file(a.group_file), tol),
                           a.json_path);
    }
    return finish_report(
        projective_rep_check(load_projective_rep_file(a.group_file), tol),
        a.json_path);
  }
  std::string names;
  for (const auto& n : all_law_names()) names += "\n  " + n;
  fail("bad-law", "unknown law '" + a.law + "'; valid names are:" + names);
}

int cmd_eval(const std::string& env_path, const std::string& expr,
             const std::string& json_path) {
  const Env env = load_env_file(env_path);
  const ExprPtr e = parse_expression(expr);
  const Value val = eval(*e, env);
  Json j = value_to_json(val);
  j["expr"] = pretty_print(*e);
  emit(j, json_path);
  return 0;
}

int cmd_verify(const std::string& lhs, const std::string& rhs,
               const std::string& vars, int trials, std::uint64_t seed,
               double atol, double rtol, const std::string& json_path) {
  const CheckReport rep = verify_identity(
      lhs, rhs, parse_var_specs(vars), trials, seed, TolerancePolicy{atol, rtol});
  return finish_report(rep, json_path);
}

int cmd_corpus(const std::string& path, int trials, std::uint64_t seed,
               double atol, double rtol, const std::string& json_path) {
  const auto entries = load_corpus_file(path);
  const auto outcomes =
      run_corpus(entries, trials, seed, TolerancePolicy{atol, rtol});
  Json j;
  j["entries"] = Json::array();
  bool all_matched = true;
  for (const CorpusOutcome& o : outcomes) {
    Json e;
    e["name"] = o.name;
    e["expect"] = o.expect_pass ? "pass" : "fail";
    e["matched"] = o.matched;
    e["report"] = report_to_json(o.report);
    j["entries"].push_back(std::move(e));
    all_matched = all_matched && o.matched;
    std::cerr << (o.matched ? "ok      " : "MISMATCH") << " " << o.name
              << " (expected " << (o.expect_pass ? "pass" : "fail")
              << ", got " << (o.report.pass ? "pass" : "fail") << ")\n";
  }
  j["all_matched"] = all_matched;
  j["total"] = static_cast<int>(outcomes.size());
  emit(j, json_path);
  return all_matched ? 0 : 1;
}

int cmd_decompose(const std::string& env_path, const std::string& op_name,
                  const std::string& ket_name, const std::string& basis_name,
                  double prune_atol, double atol, double rtol,
                  const std::string& json_path) {
  const Env env = load_env_file(env_path);
  const auto op_it = env.ops.find(op_name);
  if (op_it == env.ops.end()) {
    fail("unbound-variable", "no operator '" + op_name + "' in environment");
  }
  const auto ket_it = env.kets.find(ket_name);
  if (ket_it == env.kets.end()) {
    fail("unbound-variable", "no ket '" + ket_name + "' in environment");
  }
  const TolerancePolicy tol{atol, rtol};
  OrthonormalBasis basis = OrthonormalBasis::standard(env.dim);
  std::string label = "standard";
  if (!basis_name.empty() && basis_name != "standard") {
    const auto basis_it = env.ops.find(basis_name);
    if (basis_it == env.ops.end()) {
      fail("unbound-variable",
           "no operator '" + basis_name + "' to use as a basis");
    }
    basis = OrthonormalBasis::from_operator_columns(basis_it->second, tol);
    label = basis_name;
  }
  const TripletSum sum =
      kerner_expand(op_it->second, ket_it->second, basis, prune_atol);
  const Ket rebuilt = kerner_evaluate(sum, basis);
  const Ket direct = op_it->second * ket_it->second;
  const double residual = distance(rebuilt, direct);
  const double scale = std::max(norm(rebuilt), norm(direct));
  Json j = triplet_sum_to_json(sum, env.dim, label);
  j["evaluated"] = ket_to_json(rebuilt);
  j["residual"] = residual;
  j["scale"] = scale;
  const bool pass = tol.admits(residual, scale);
  j["pass"] = pass;
  emit(j, json_path);
  std::cerr << (pass ? "PASS" : "FAIL") << " decompose " << op_name << "|"
            << ket_name << "> residual=" << residual << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary bracket laboratory"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CheckArgs ca;
  CLI::App* check = app.add_subcommand("check", "Run a randomized law check");
  check->add_option("--law", ca.law, "Law name (see --law help on error)")
      ->required();
  check->add_option("--dim", ca.dim, "Space dimension");
  check->add_option("--trials", ca.trials, "Number of random trials");
  check->add_option("--seed", ca.seed, "Base seed; trial t uses seed + t");
  check->add_option("--atol", ca.atol, "Absolute tolerance");
  check->add_option("--rtol", ca.rtol, "Relative tolerance");
  check->add_flag("--normalized", ca.normalized,
                  "Draw unit-norm repeated arguments (malcev laws)");
  check->add_option("--dim-to", ca.dim_to,
                    "Codomain dimension for hom-isometry (default dim + 3)");
  check->add_option("--group", ca.group_file,
                    "Group/representation JSON file (cocycle laws)");
  check->add_option("--json", ca.json_path, "Also write the report here");

  std::string env_path, expr, json_path;
  CLI::App* ev = app.add_subcommand("eval", "Evaluate one expression");
  ev->add_option("--env", env_path, "Environment JSON file")->required();
  ev->add_option("--expr", expr, "Expression text")->required();
  ev->add_option("--json", json_path, "Also write the value here");

  std::string lhs, rhs, vars;
  int vtrials = 200;
  std::uint64_t vseed = 42;
  double vatol = 1e-12, vrtol = 1e-9;
  CLI::App* vf = app.add_subcommand("verify", "Check lhs == rhs on samples");
  vf->add_option("--lhs", lhs, "Left expression")->required();
  vf->add_option("--rhs", rhs, "Right expression")->required();
  vf->add_option("--vars", vars,
                 "Specs name:kind[dim]{constraint}, comma separated")
      ->required();
  vf->add_option("--trials", vtrials, "Number of random trials");
  vf->add_option("--seed", vseed, "Base seed");
  vf->add_option("--atol", vatol, "Absolute tolerance");
  vf->add_option("--rtol", vrtol, "Relative tolerance");
  vf->add_option("--json", json_path, "Also write the report here");

  std::string corpus_path;
  CLI::App* cp = app.add_subcommand("corpus", "Run a JSONL identity corpus");
  cp->add_option("--file", corpus_path, "Corpus file, one entry per line")
      ->required();
  cp->add_option("--trials", vtrials, "Trials per entry");
  cp->add_option("--seed", vseed, "Base seed");
  cp->add_option("--atol", vatol, "Absolute tolerance");
  cp->add_option("--rtol", vrtol, "Relative tolerance");
  cp->add_option("--json", json_path, "Also write the results here");

  std::string op_name, ket_name, basis_name = "standard";
  double prune_atol = 1e-12;
  CLI::App* dc = app.add_subcommand(
      "decompose", "Expand an operator action into basis triple products");
  dc->add_option("--env", env_path, "Environment JSON file")->required();
  dc->add_option("--op", op_name, "Operator name")->required();
  dc->add_option("--ket", ket_name, "State name")->required();
  dc->add_option("--basis", basis_name,
                 "\"standard\" or an operator whose columns form the basis");
  dc->add_option("--prune-atol", prune_atol,
                 "Drop terms with |coeff| <= this");
  dc->add_option("--atol", vatol, "Absolute tolerance");
  dc->add_option("--rtol", vrtol, "Relative tolerance");
  dc->add_option("--json", json_path, "Also write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(ca);
    if (ev->parsed()) return cmd_eval(env_path, expr, json_path);
    if (vf->parsed()) {
      return cmd_verify(lhs, rhs, vars, vtrials, vseed, vatol, vrtol,
                        json_path);
    }
    if (cp->parsed()) {
      return cmd_corpus(corpus_path, vtrials, vseed, vatol, vrtol, json_path);
    }
    if (dc->parsed()) {
      return cmd_decompose(env_path, op_name, ket_name, basis_name,
                           prune_atol, vatol, vrtol, json_path);
    }
  } catch (const Error& e) {
    Json err;
    err["error"] = Json{{"code", e.code()}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = Json{{"code", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 2;
}
