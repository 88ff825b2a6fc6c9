// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ternlab/report.hpp"

namespace ternlab {

// Grammar (precedence low to high):
//   expr  := add
//   add   := mul (('+' | '-') mul)*
//   mul   := unary ('*' unary)*
//   unary := '-' unary | atom
//   atom  := NUMBER [IMAG_UNIT] | IMAG_UNIT | IDENT | 'adj' '(' expr ')'
//          | '[' expr ',' expr ',' expr ']' | '<' expr '|' expr '>'
//          | '(' expr ')'
// An identifier run equal to "i" is the imaginary unit, "adj" is the adjoint
// keyword; everything else is a variable name. "3i" lexes as NUMBER then
// IMAG_UNIT; "3id" lexes as NUMBER then IDENT (longest match wins).

enum class TokKind {
  Number,
  ImagUnit,
  Ident,
  Plus,
  Minus,
  Star,
  LBrack,
  RBrack,
  LParen,
  RParen,
  LAngle,
  RAngle,
  Pipe,
  Comma,
  Adj,
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  double value = 0.0;  // Number only
  int line = 1;        // 1-based
  int col = 1;         // 1-based
};

// Throws Error("lex-error") with line:col on any unexpected byte.
std::vector<Token> tokenize(const std::string& src);

enum class ExprKind {
  Number,   // literal; value in `scalar` (re or pure-imaginary)
  Var,      // name in `name`
  Neg,      // kids[0]
  Add,      // kids[0] + kids[1]
  Sub,      // kids[0] - kids[1]
  Mul,      // kids[0] * kids[1]
  Adj,      // adj(kids[0])
  Ternary,  // [kids[0], kids[1], kids[2]]
  Inner,    // <kids[0] | kids[1]>
};

struct Expr {
  ExprKind kind = ExprKind::Number;
  Cx scalar{0.0, 0.0};
  std::string name;
  std::vector<std::unique_ptr<Expr>> kids;
  int line = 1;
  int col = 1;
};

using ExprPtr = std::unique_ptr<Expr>;

// Throws Error("parse-error") with position on malformed input; nesting
// deeper than an internal cap is rejected rather than risking the stack.
ExprPtr parse_tokens(const std::vector<Token>& toks);
ExprPtr parse_expression(const std::string& src);

// Canonical fully parenthesized form. parse(pretty_print(e)) pretty-prints
// to the same string, and numbers never use exponent notation, so output is
// always re-parseable.
std::string pretty_print(const Expr& e);
std::string format_number(double x);

struct Value {
  std::variant<Cx, Ket, Bra, Operator> v;

  bool is_scalar() const { return std::holds_alternative<Cx>(v); }
  bool is_ket() const { return std::holds_alternative<Ket>(v); }
  bool is_bra() const { return std::holds_alternative<Bra>(v); }
  bool is_op() const { return std::holds_alternative<Operator>(v); }
  const char* kind_name() const;
  const Cx& scalar() const { return std::get<Cx>(v); }
  const Ket& ket() const { return std::get<Ket>(v); }
  const Bra& bra() const { return std::get<Bra>(v); }
  const Operator& op() const { return std::get<Operator>(v); }
};

// Throws Error: "unbound-variable", "type-error", "dim-mismatch".
Value eval(const Expr& e, const Env& env);
Json value_to_json(const Value& val);

// ---- randomized identity checking ----

enum class VarKind { KetVar, BraVar, OpVar, ScalarVar };
enum class VarConstraint { None, Normalized, Unitary, Hermitian, AntiHermitian };

struct VarSpec {
  std::string name;
  VarKind kind = VarKind::KetVar;
  int dim = 0;  // ignored for scalars
  VarConstraint constraint = VarConstraint::None;
};

// "a:ket[4]{normalized},B:op[4],c:scalar"; throws Error("bad-vars").
std::vector<VarSpec> parse_var_specs(const std::string& text);
std::string var_kind_name(VarKind k);
std::string var_constraint_name(VarConstraint c);

// Samples the variables `trials` times and compares the two sides. A
// value-kind or dimension mismatch between the sides is an error
// ("kind-mismatch" / "dim-mismatch"), not a numeric failure.
CheckReport verify_identity(const std::string& lhs, const std::string& rhs,
                            const std::vector<VarSpec>& vars, int trials,
                            std::uint64_t seed, TolerancePolicy tol);

struct CorpusEntry {
  std::string name;
  std::string lhs;
  std::string rhs;
  std::vector<VarSpec> vars;
  bool expect_pass = true;
};

struct CorpusOutcome {
  std::string name;
  bool expect_pass = true;
  CheckReport report;
  bool matched = false;  // report.pass == expect_pass
};

// One JSON object per line:
// {"name": .., "lhs": .., "rhs": .., "vars": [{"name": .., "kind": ..,
//  "dim": .., "constraint": ..}], "expect": "pass" | "fail"}
std::vector<CorpusEntry> load_corpus_file(const std::string& path);
std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries,
                                      int trials, std::uint64_t seed,
                                      TolerancePolicy tol);

}  // namespace ternlab
