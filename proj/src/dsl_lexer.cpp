// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <charconv>

#include "ternlab/dsl.hpp"

namespace ternlab {
namespace {

[[noreturn]] void lex_fail(int line, int col, const std::string& what) {
  fail("lex-error", "lex error at " + std::to_string(line) + ":" +
                        std::to_string(col) + ": " + what);
}

}  // namespace

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  const size_t n = src.size();

  auto advance = [&](size_t count) {
    for (size_t k = 0; k < count; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < n) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < n && src[j] == '.') {
        ++j;
        if (j >= n || !std::isdigit(static_cast<unsigned char>(src[j]))) {
          lex_fail(line, col, "digit expected after decimal point");
        }
        while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      tok.kind = TokKind::Number;
      tok.text = src.substr(i, j - i);
      const auto res = std::from_chars(tok.text.data(),
                                       tok.text.data() + tok.text.size(),
                                       tok.value);
      if (res.ec != std::errc()) {
        lex_fail(line, col, "unreadable number '" + tok.text + "'");
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                       src[j] == '_')) {
        ++j;
      }
      tok.text = src.substr(i, j - i);
      if (tok.text == "i") {
        tok.kind = TokKind::ImagUnit;
      } else if (tok.text == "adj") {
        tok.kind = TokKind::Adj;
      } else {
        tok.kind = TokKind::Ident;
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    switch (c) {
      case '+': tok.kind = TokKind::Plus; break;
      case '-': tok.kind = TokKind::Minus; break;
      case '*': tok.kind = TokKind::Star; break;
      case '[': tok.kind = TokKind::LBrack; break;
      case ']': tok.kind = TokKind::RBrack; break;
      case '(': tok.kind = TokKind::LParen; break;
      case ')': tok.kind = TokKind::RParen; break;
      case '<': tok.kind = TokKind::LAngle; break;
      case '>': tok.kind = TokKind::RAngle; break;
      case '|': tok.kind = TokKind::Pipe; break;
      case ',': tok.kind = TokKind::Comma; break;
      default:
        lex_fail(line, col,
                 std::string("unexpected character '") + c + "'");
    }
    tok.text = std::string(1, c);
    advance(1);
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokKind::End;
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

}  // namespace ternlab
