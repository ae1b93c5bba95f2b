//! @file statexpr.hpp
//! A small expression language for states, used by the CLI --state flag and
//! by .stx corpus files (one expression per line, '#' comments).
//!
//! Grammar:
//!   input  := expr ['@' 'd' '=' INT]
//!   expr   := term (('+'|'-') term)*
//!   term   := scalar '*' chain | chain ('/' scalar)*
//!   chain  := atom ('x' atom)*            (tensor product)
//!   atom   := ket | call | '(' expr ')'
//!   ket    := '|' DIGIT+ '>' | '|' INT (',' INT)+ '>'
//!   call   := IDENT '(' scalar (',' scalar)* ')'
//!   scalar := sfac (('*'|'/') sfac)*
//!   sfac   := ['-'] (NUMBER ['i'] | 'i' | 'sqrt' '(' scalar ')' | '(' scalar ')')
#pragma once

#include <memory>
#include <string>

#include "sympent/state.hpp"

namespace sympent {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column, std::string expected_tokens)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(column) +
                           (expected_tokens.empty() ? "" : " (expected " + expected_tokens + ")")),
        line(line),
        column(column),
        expected(std::move(expected_tokens)) {}
  int line;
  int column;
  std::string expected;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateExpr;
using StateExprPtr = std::shared_ptr<const StateExpr>;

struct StateExpr {
  enum class Kind { Ket, Call, Scale, Sum, Tensor };
  Kind kind;
  std::vector<int> digits;          // Ket
  std::string name;                 // Call
  std::vector<cplx> args;           // Call (numeric arguments)
  cplx scalar{1.0, 0.0};            // Scale
  std::vector<StateExprPtr> children;
  int local_dim = 0;                // root only; 0 = unset ('@ d=N')
};

StateExprPtr parse(const std::string& text);

//! Canonical text form; parse(print(e)) reproduces the same tree.
std::string print(const StateExpr& expr);

MultipartiteState eval(const StateExpr& expr, int default_dim = 2);

//! parse + eval in one call.
MultipartiteState eval_state(const std::string& text, int default_dim = 2);

}  // namespace sympent
