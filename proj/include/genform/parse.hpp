#pragma once

#include "genform/gvector.hpp"

#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

namespace genform {

struct SourceSpan {
  int line = 1;
  int col = 1;
};

// Syntax or type error with source position.
class ParseError : public std::runtime_error {
public:
  ParseError(SourceSpan span, std::string message);
  SourceSpan span() const { return span_; }

private:
  SourceSpan span_;
};

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

enum class AstKind {
  GenFormLit,
  GenVecLit,
  Wedge,
  GD,
  Contract,
  LieCartan,
  LieHat,
  LieHatVec,
  Commutator,
  GScale,
};

enum class ValueKind { Form, Vector };

struct Ast {
  AstKind kind;
  SourceSpan span;
  ValueKind value_kind;
  std::vector<AstPtr> args;
  // literal payloads
  std::shared_ptr<const GenForm> form;
  std::shared_ptr<const GenVec> vec;
};

using Value = std::variant<GenForm, GenVec>;

// Grammar:
//   expr  := unary ('^' unary)*                       (wedge, left-assoc)
//   unary := 'd(' expr ')' | 'I(' e ',' e ')' | 'L(' e ',' e ')'
//          | 'Lhat(' e ',' e ')' | 'Lhatv(' e ',' e ')'
//          | 'comm(' e ',' e ')' | 'scale(' e ',' e ')'
//          | gform | gvec | '(' expr ')'
//   gform := 'gf(' int ';' oform ';' oform ')'
//   gvec  := 'gv(' ovec ';' poly ')'
// Operand kinds are checked during parsing; degrees at evaluation.
AstPtr parse(const std::string& source, const Chart& chart);

Value eval(const AstPtr& ast, const Chart& chart);

std::string to_string(const Value& v, const Chart& chart);

// Standalone sub-grammar entry points (used by the CLI and mechanics).
Poly parse_poly(const std::string& source, const Chart& chart);
OrdForm parse_ordform(const std::string& source, const Chart& chart, int degree);
OrdVec parse_ordvec(const std::string& source, const Chart& chart);

} // namespace genform
