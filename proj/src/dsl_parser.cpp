// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <charconv>
#include <cmath>

#include "ternlab/dsl.hpp"

namespace ternlab {
namespace {

// Deep nesting is rejected instead of risking the call stack on inputs like
// a long run of '('.
constexpr int kMaxDepth = 256;

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  ExprPtr run() {
    ExprPtr e = parse_add(0);
    expect(TokKind::End, "end of input");
    return e;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void parse_fail(const Token& at, const std::string& what) {
    fail("parse-error", "parse error at " + std::to_string(at.line) + ":" +
                            std::to_string(at.col) + ": " + what);
  }

  void expect(TokKind kind, const char* what) {
    if (peek().kind != kind) {
      parse_fail(peek(), std::string("expected ") + what);
    }
    take();
  }

  ExprPtr node(ExprKind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->col = at.col;
    return e;
  }

  void check_depth(int depth, const Token& at) {
    if (depth > kMaxDepth) parse_fail(at, "expression nests too deeply");
  }

  ExprPtr parse_add(int depth) {
    check_depth(depth, peek());
    ExprPtr lhs = parse_mul(depth + 1);
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const Token op = take();
      ExprPtr rhs = parse_mul(depth + 1);
      ExprPtr e =
          node(op.kind == TokKind::Plus ? ExprKind::Add : ExprKind::Sub, op);
      e->kids.push_back(std::move(lhs));
      e->kids.push_back(std::move(rhs));
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr parse_mul(int depth) {
    check_depth(depth, peek());
    ExprPtr lhs = parse_unary(depth + 1);
    while (peek().kind == TokKind::Star) {
      const Token op = take();
      ExprPtr rhs = parse_unary(depth + 1);
      ExprPtr e = node(ExprKind::Mul, op);
      e->kids.push_back(std::move(lhs));
      e->kids.push_back(std::move(rhs));
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr parse_unary(int depth) {
    check_depth(depth, peek());
    if (peek().kind == TokKind::Minus) {
      const Token op = take();
      ExprPtr e = node(ExprKind::Neg, op);
      e->kids.push_back(parse_unary(depth + 1));
      return e;
    }
    return parse_atom(depth + 1);
  }

  ExprPtr parse_atom(int depth) {
    check_depth(depth, peek());
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Number: {
        const Token num = take();
        ExprPtr e = node(ExprKind::Number, num);
        if (peek().kind == TokKind::ImagUnit) {
          take();
          e->scalar = Cx(0.0, num.value);
        } else {
          e->scalar = Cx(num.value, 0.0);
        }
        return e;
      }
      case TokKind::ImagUnit: {
        const Token unit = take();
        ExprPtr e = node(ExprKind::Number, unit);
        e->scalar = Cx(0.0, 1.0);
        return e;
      }
      case TokKind::Ident: {
        const Token id = take();
        ExprPtr e = node(ExprKind::Var, id);
        e->name = id.text;
        return e;
      }
      case TokKind::Adj: {
        const Token kw = take();
        expect(TokKind::LParen, "'(' after adj");
        ExprPtr e = node(ExprKind::Adj, kw);
        e->kids.push_back(parse_add(depth + 1));
        expect(TokKind::RParen, "')'");
        return e;
      }
      case TokKind::LBrack: {
        const Token open = take();
        ExprPtr e = node(ExprKind::Ternary, open);
        e->kids.push_back(parse_add(depth + 1));
        expect(TokKind::Comma, "','");
        e->kids.push_back(parse_add(depth + 1));
        expect(TokKind::Comma, "','");
        e->kids.push_back(parse_add(depth + 1));
        expect(TokKind::RBrack, "']'");
        return e;
      }
      case TokKind::LAngle: {
        const Token open = take();
        ExprPtr e = node(ExprKind::Inner, open);
        e->kids.push_back(parse_add(depth + 1));
        expect(TokKind::Pipe, "'|'");
        e->kids.push_back(parse_add(depth + 1));
        expect(TokKind::RAngle, "'>'");
        return e;
      }
      case TokKind::LParen: {
        take();
        ExprPtr e = parse_add(depth + 1);
        expect(TokKind::RParen, "')'");
        return e;
      }
      default:
        parse_fail(t, "expected a value");
    }
  }
};

}  // namespace

ExprPtr parse_tokens(const std::vector<Token>& toks) {
  if (toks.empty() || toks.back().kind != TokKind::End) {
    fail("parse-error", "token stream must end with End");
  }
  return Parser(toks).run();
}

ExprPtr parse_expression(const std::string& src) {
  return parse_tokens(tokenize(src));
}

std::string format_number(double x) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                           std::chars_format::general);
  std::string s(buf.data(), res.ptr);
  if (s.find('e') != std::string::npos || s.find('E') != std::string::npos) {
    // Exponent forms are not in the grammar; fall back to plain decimal.
    res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                        std::chars_format::fixed);
    s.assign(buf.data(), res.ptr);
  }
  return s;
}

namespace {

std::string print_scalar(const Cx& z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) {
    if (re < 0.0) return "(-" + format_number(-re) + ")";
    return format_number(re);
  }
  if (re == 0.0) {
    if (im == 1.0) return "i";
    if (im == -1.0) return "(-i)";
    if (im < 0.0) return "(-" + format_number(-im) + "i)";
    return format_number(im) + "i";
  }
  const std::string re_part =
      re < 0.0 ? "(-" + format_number(-re) + ")" : format_number(re);
  const std::string im_part =
      im < 0.0 ? "(-" + format_number(-im) + "i)"
               : (im == 1.0 ? "i" : format_number(im) + "i");
  return "(" + re_part + " + " + im_part + ")";
}

}  // namespace

std::string pretty_print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return print_scalar(e.scalar);
    case ExprKind::Var:
      return e.name;
    case ExprKind::Neg:
      return "(-" + pretty_print(*e.kids[0]) + ")";
    case ExprKind::Add:
      return "(" + pretty_print(*e.kids[0]) + " + " +
             pretty_print(*e.kids[1]) + ")";
    case ExprKind::Sub:
      return "(" + pretty_print(*e.kids[0]) + " - " +
             pretty_print(*e.kids[1]) + ")";
    case ExprKind::Mul:
      return "(" + pretty_print(*e.kids[0]) + " * " +
             pretty_print(*e.kids[1]) + ")";
    case ExprKind::Adj:
      return "adj(" + pretty_print(*e.kids[0]) + ")";
    case ExprKind::Ternary:
      return "[" + pretty_print(*e.kids[0]) + ", " +
             pretty_print(*e.kids[1]) + ", " + pretty_print(*e.kids[2]) + "]";
    case ExprKind::Inner:
      return "<" + pretty_print(*e.kids[0]) + " | " +
             pretty_print(*e.kids[1]) + ">";
  }
  fail("parse-error", "unhandled expression kind");
}

}  // namespace ternlab
