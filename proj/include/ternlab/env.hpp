// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "ternlab/hilbert.hpp"

namespace ternlab {

using Json = nlohmann::json;

// Named bindings at one common dimension. Operators stored here are square
// (dim x dim). std::map keeps names sorted, which keeps serialization stable.
struct Env {
  int dim = 0;
  std::map<std::string, Ket> kets;
  std::map<std::string, Bra> bras;
  std::map<std::string, Operator> ops;
  std::map<std::string, Cx> scalars;

  bool has(const std::string& name) const;
  void insert_ket(const std::string& name, Ket k);
  void insert_bra(const std::string& name, Bra b);
  void insert_op(const std::string& name, Operator a);
  void insert_scalar(const std::string& name, Cx s);
};

// Names must be usable as expression identifiers: [A-Za-z_][A-Za-z0-9_]*,
// and not the reserved words "i" and "adj".
bool valid_identifier(const std::string& name);

// JSON layout:
//   {"dim": d,
//    "kets": {"name": [[re, im], ...]},
//    "bras": {"name": [[re, im], ...]},
//    "ops":  {"name": [[[re, im], ...], ...]},   row-major
//    "scalars": {"name": [re, im]}}
// Every section is optional on input; all are emitted on output.
Env env_from_json(const Json& j);
Json env_to_json(const Env& env);
Env load_env_file(const std::string& path);
void save_env_file(const Env& env, const std::string& path);

Json cx_to_json(const Cx& z);
Cx cx_from_json(const Json& j, const std::string& where);
Json ket_to_json(const Ket& k);
Json op_to_json(const Operator& a);

}  // namespace ternlab
