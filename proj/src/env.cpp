// SPDX-License-Identifier: Apache-2.0
#include "ternlab/env.hpp"

#include <cctype>
#include <cmath>
#include <fstream>

namespace ternlab {
namespace {

void require_fresh(const Env& env, const std::string& name) {
  if (!valid_identifier(name)) {
    fail("bad-name", "'" + name + "' is not a usable binding name");
  }
  if (env.has(name)) {
    fail("bad-name", "duplicate binding '" + name + "'");
  }
}

void require_finite_pair(double re, double im, const std::string& where) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    fail("non-finite", where + ": entry is not finite");
  }
}

}  // namespace

bool Env::has(const std::string& name) const {
  return kets.count(name) || bras.count(name) || ops.count(name) ||
         scalars.count(name);
}

void Env::insert_ket(const std::string& name, Ket k) {
  require_fresh(*this, name);
  kets.emplace(name, std::move(k));
}

void Env::insert_bra(const std::string& name, Bra b) {
  require_fresh(*this, name);
  bras.emplace(name, std::move(b));
}

void Env::insert_op(const std::string& name, Operator a) {
  require_fresh(*this, name);
  ops.emplace(name, std::move(a));
}

void Env::insert_scalar(const std::string& name, Cx s) {
  require_fresh(*this, name);
  scalars.emplace(name, s);
}

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "i" && name != "adj";
}

Json cx_to_json(const Cx& z) { return Json::array({z.real(), z.imag()}); }

Cx cx_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    fail("bad-env", where + ": expected [re, im]");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  require_finite_pair(re, im, where);
  return Cx(re, im);
}

Json ket_to_json(const Ket& k) {
  Json arr = Json::array();
  for (int n = 0; n < k.dim(); ++n) arr.push_back(cx_to_json(k(n)));
  return arr;
}

Json op_to_json(const Operator& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(cx_to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

CVec vec_from_json(const Json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    fail("dim-mismatch",
         where + ": expected " + std::to_string(dim) + " entries");
  }
  CVec v(dim);
  for (int n = 0; n < dim; ++n) {
    v(n) = cx_from_json(j[n], where + "[" + std::to_string(n) + "]");
  }
  return v;
}

}  // namespace

Env env_from_json(const Json& j) {
  if (!j.is_object()) fail("bad-env", "environment must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    fail("bad-env", "environment needs an integer \"dim\"");
  }
  Env env;
  env.dim = j["dim"].get<int>();
  if (env.dim < 1) fail("bad-env", "\"dim\" must be >= 1");

  if (j.contains("kets")) {
    for (auto& [name, val] : j["kets"].items()) {
      env.insert_ket(name, Ket(vec_from_json(val, env.dim, "ket " + name)));
    }
  }
  if (j.contains("bras")) {
    for (auto& [name, val] : j["bras"].items()) {
      env.insert_bra(name, Bra(vec_from_json(val, env.dim, "bra " + name)));
    }
  }
  if (j.contains("ops")) {
    for (auto& [name, val] : j["ops"].items()) {
      const std::string where = "op " + name;
      if (!val.is_array() || static_cast<int>(val.size()) != env.dim) {
        fail("dim-mismatch",
             where + ": expected " + std::to_string(env.dim) + " rows");
      }
      CMat m(env.dim, env.dim);
      for (int r = 0; r < env.dim; ++r) {
        m.row(r) = vec_from_json(val[r],
                                 env.dim,
                                 where + " row " + std::to_string(r))
                       .transpose();
      }
      env.insert_op(name, Operator(std::move(m)));
    }
  }
  if (j.contains("scalars")) {
    for (auto& [name, val] : j["scalars"].items()) {
      env.insert_scalar(name, cx_from_json(val, "scalar " + name));
    }
  }
  return env;
}

Json env_to_json(const Env& env) {
  Json j;
  j["dim"] = env.dim;
  j["kets"] = Json::object();
  for (auto& [name, k] : env.kets) j["kets"][name] = ket_to_json(k);
  j["bras"] = Json::object();
  for (auto& [name, b] : env.bras) {
    Json arr = Json::array();
    for (int n = 0; n < b.dim(); ++n) arr.push_back(cx_to_json(b(n)));
    j["bras"][name] = std::move(arr);
  }
  j["ops"] = Json::object();
  for (auto& [name, a] : env.ops) j["ops"][name] = op_to_json(a);
  j["scalars"] = Json::object();
  for (auto& [name, s] : env.scalars) j["scalars"][name] = cx_to_json(s);
  return j;
}

Env load_env_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io-error", "cannot open environment file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail("parse-error", path + ": " + e.what());
  }
  return env_from_json(j);
}

void save_env_file(const Env& env, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("io-error", "cannot write environment file: " + path);
  out << env_to_json(env).dump(2) << "\n";
}

}  // namespace ternlab
