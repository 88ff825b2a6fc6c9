// SPDX-License-Identifier: Apache-2.0
#include "ternlab/dsl.hpp"
#include "ternlab/vector_ternary.hpp"
#include "ternlab/operator_ternary.hpp"

namespace ternlab {

const char* Value::kind_name() const {
  if (is_scalar()) return "scalar";
  if (is_ket()) return "ket";
  if (is_bra()) return "bra";
  return "op";
}

namespace {

std::string at(const Expr& e) {
  return " at " + std::to_string(e.line) + ":" + std::to_string(e.col);
}

[[noreturn]] void type_fail(const Expr& e, const std::string& what) {
  fail("type-error", what + at(e));
}

Value eval_mul(const Expr& e, Value lhs, Value rhs) {
  if (lhs.is_scalar()) {
    const Cx c = lhs.scalar();
    if (rhs.is_scalar()) return {c * rhs.scalar()};
    if (rhs.is_ket()) return {c * rhs.ket()};
    if (rhs.is_bra()) return {c * rhs.bra()};
    return {c * rhs.op()};
  }
  if (rhs.is_scalar()) {
    const Cx c = rhs.scalar();
    if (lhs.is_ket()) return {lhs.ket() * c};
    if (lhs.is_bra()) return {lhs.bra() * c};
    return {lhs.op() * c};
  }
  if (lhs.is_op() && rhs.is_op()) return {lhs.op() * rhs.op()};
  if (lhs.is_op() && rhs.is_ket()) return {lhs.op() * rhs.ket()};
  if (lhs.is_bra() && rhs.is_ket()) return {lhs.bra() * rhs.ket()};
  if (lhs.is_ket() && rhs.is_bra()) return {outer(lhs.ket(), rhs.bra())};
  if (lhs.is_bra() && rhs.is_op()) return {lhs.bra() * rhs.op()};
  type_fail(e, std::string("cannot multiply ") + lhs.kind_name() + " * " +
                   rhs.kind_name());
}

}  // namespace

Value eval(const Expr& e, const Env& env) {
  switch (e.kind) {
    case ExprKind::Number:
      return {e.scalar};
    case ExprKind::Var: {
      if (auto it = env.kets.find(e.name); it != env.kets.end()) {
        return {it->second};
      }
      if (auto it = env.bras.find(e.name); it != env.bras.end()) {
        return {it->second};
      }
      if (auto it = env.ops.find(e.name); it != env.ops.end()) {
        return {it->second};
      }
      if (auto it = env.scalars.find(e.name); it != env.scalars.end()) {
        return {it->second};
      }
      fail("unbound-variable", "unbound variable '" + e.name + "'" + at(e));
    }
    case ExprKind::Neg: {
      Value x = eval(*e.kids[0], env);
      if (x.is_scalar()) return {-x.scalar()};
      if (x.is_ket()) return {-x.ket()};
      if (x.is_bra()) return {-x.bra()};
      return {-x.op()};
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      Value lhs = eval(*e.kids[0], env);
      Value rhs = eval(*e.kids[1], env);
      const bool add = e.kind == ExprKind::Add;
      if (lhs.v.index() != rhs.v.index()) {
        type_fail(e, std::string("cannot ") + (add ? "add " : "subtract ") +
                         lhs.kind_name() + (add ? " + " : " - ") +
                         rhs.kind_name());
      }
      if (lhs.is_scalar()) {
        return {add ? lhs.scalar() + rhs.scalar()
                    : lhs.scalar() - rhs.scalar()};
      }
      if (lhs.is_ket()) {
        return {add ? lhs.ket() + rhs.ket() : lhs.ket() - rhs.ket()};
      }
      if (lhs.is_bra()) {
        return {add ? lhs.bra() + rhs.bra() : lhs.bra() - rhs.bra()};
      }
      return {add ? lhs.op() + rhs.op() : lhs.op() - rhs.op()};
    }
    case ExprKind::Mul:
      return eval_mul(e, eval(*e.kids[0], env), eval(*e.kids[1], env));
    case ExprKind::Adj: {
      Value x = eval(*e.kids[0], env);
      if (x.is_scalar()) return {std::conj(x.scalar())};
      if (x.is_ket()) return {adjoint(x.ket())};
      if (x.is_bra()) return {adjoint(x.bra())};
      return {adjoint(x.op())};
    }
    case ExprKind::Ternary: {
      Value a = eval(*e.kids[0], env);
      Value b = eval(*e.kids[1], env);
      Value c = eval(*e.kids[2], env);
      if (a.is_ket() && b.is_ket() && c.is_ket()) {
        return {tern_vec(a.ket(), b.ket(), c.ket())};
      }
      if (a.is_bra() && b.is_bra() && c.is_bra()) {
        return {tern_dual(a.bra(), b.bra(), c.bra())};
      }
      if (a.is_op() && b.is_op() && c.is_op()) {
        return {tern_op(a.op(), b.op(), c.op())};
      }
      type_fail(e, std::string("ternary product needs three kets, three "
                               "bras or three ops, got [") +
                       a.kind_name() + ", " + b.kind_name() + ", " +
                       c.kind_name() + "]");
    }
    case ExprKind::Inner: {
      Value a = eval(*e.kids[0], env);
      Value b = eval(*e.kids[1], env);
      if (a.is_ket() && b.is_ket()) return {inner(a.ket(), b.ket())};
      type_fail(e, std::string("inner product needs two kets, got <") +
                       a.kind_name() + " | " + b.kind_name() + ">");
    }
  }
  fail("type-error", "unhandled expression kind");
}

Json value_to_json(const Value& val) {
  Json j;
  j["kind"] = val.kind_name();
  if (val.is_scalar()) {
    j["value"] = cx_to_json(val.scalar());
  } else if (val.is_ket()) {
    j["dim"] = val.ket().dim();
    j["value"] = ket_to_json(val.ket());
  } else if (val.is_bra()) {
    Json arr = Json::array();
    for (int n = 0; n < val.bra().dim(); ++n) {
      arr.push_back(cx_to_json(val.bra()(n)));
    }
    j["dim"] = val.bra().dim();
    j["value"] = std::move(arr);
  } else {
    j["dim"] = val.op().rows();
    j["value"] = op_to_json(val.op());
  }
  return j;
}

}  // namespace ternlab
