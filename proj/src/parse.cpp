#include "genform/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace genform {

ParseError::ParseError(SourceSpan span, std::string message)
    : std::runtime_error(std::to_string(span.line) + ":" +
                         std::to_string(span.col) + ": " + message),
      span_(span) {}

namespace {

enum class Tok {
  Int,
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto span = [&] { return SourceSpan{line, col}; };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    SourceSpan here = span();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        num += src[i++];
        ++col;
      }
      out.push_back({Tok::Int, num, here});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        id += src[i++];
        ++col;
      }
      out.push_back({Tok::Ident, id, here});
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      default:
        throw ParseError(here, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), here});
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", span()});
  return out;
}

class Parser {
public:
  Parser(const std::string& src, const Chart& chart)
      : chart_(chart), tokens_(tokenize(src)) {
    for (int i = 0; i < chart.n; ++i) coord_index_[chart.coords[i]] = i;
  }

  AstPtr parse_expression() {
    AstPtr e = parse_expr();
    expect(Tok::End);
    return e;
  }

  Poly parse_full_poly() {
    Poly p = parse_poly();
    expect(Tok::End);
    return p;
  }

  OrdForm parse_full_ordform(int degree) {
    OrdForm f = parse_oform(degree);
    expect(Tok::End);
    return f;
  }

  OrdVec parse_full_ordvec() {
    OrdVec v = parse_ovec();
    expect(Tok::End);
    return v;
  }

private:
  const Chart& chart_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, int> coord_index_;

  const Token& peek(int ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool match(Tok kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }
  Token expect(Tok kind) {
    if (peek().kind != kind)
      throw ParseError(peek().span, std::string("expected ") + tok_name(kind) +
                                        ", found " + tok_name(peek().kind));
    return advance();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().span, msg);
  }

  int parse_int() {
    bool neg = match(Tok::Minus);
    Token t = expect(Tok::Int);
    int v = std::stoi(t.text);
    return neg ? -v : v;
  }

  std::optional<int> coord_of(const std::string& name) const {
    auto it = coord_index_.find(name);
    if (it == coord_index_.end()) return std::nullopt;
    return it->second;
  }

  // "d" + coordinate name, e.g. dx1 or dq2
  std::optional<int> form_basis_of(const std::string& name) const {
    if (name.size() < 2 || name[0] != 'd') return std::nullopt;
    return coord_of(name.substr(1));
  }

  // "e" + 1-based coordinate index, e.g. e1
  std::optional<int> vec_basis_of(const std::string& name) const {
    if (name.size() < 2 || name[0] != 'e') return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    int idx = std::stoi(name.substr(1)) - 1;
    if (idx < 0 || idx >= chart_.n) return std::nullopt;
    return idx;
  }

  // --- polynomials ---

  Rational parse_rational_literal() {
    Token t = expect(Tok::Int);
    Integer num(t.text);
    if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
      advance();
      Integer den(expect(Tok::Int).text);
      if (den == 0) fail("zero denominator in rational literal");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Poly parse_poly_base() {
    const Token& t = peek();
    if (t.kind == Tok::Int)
      return Poly(chart_.n, parse_rational_literal());
    if (t.kind == Tok::Ident) {
      if (auto idx = coord_of(t.text)) {
        advance();
        return Poly::variable(chart_.n, *idx);
      }
      fail("unknown variable '" + t.text + "'");
    }
    if (match(Tok::LParen)) {
      Poly p = parse_poly();
      expect(Tok::RParen);
      return p;
    }
    fail("expected polynomial factor (number, variable, or '(')");
  }

  Poly parse_poly_factor() {
    Poly base = parse_poly_base();
    if (match(Tok::Caret)) {
      Token e = expect(Tok::Int);
      base = base.pow(std::stoi(e.text));
    }
    return base;
  }

  Poly parse_poly_term() {
    Poly p = parse_poly_factor();
    while (match(Tok::Star)) p = p * parse_poly_factor();
    return p;
  }

  Poly parse_poly() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      advance();
      neg = true;
    } else {
      match(Tok::Plus);
    }
    Poly p = parse_poly_term();
    if (neg) p = -p;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = advance().kind == Tok::Minus;
      Poly t = parse_poly_term();
      p = minus ? p - t : p + t;
    }
    return p;
  }

  // --- ordinary forms and vectors ---

  bool at_form_basis() const {
    return peek().kind == Tok::Ident && form_basis_of(peek().text).has_value();
  }
  bool at_vec_basis() const {
    return peek().kind == Tok::Ident && vec_basis_of(peek().text).has_value();
  }

  // coefficient * dxi^dxj^...; coefficient optional
  void parse_form_term(OrdForm& acc, bool negate) {
    Poly coeff(chart_.n, 1);
    while (!at_form_basis()) {
      coeff = coeff * parse_poly_factor();
      expect(Tok::Star);
    }
    MultiIndex idx;
    idx.push_back(*form_basis_of(advance().text));
    while (match(Tok::Caret)) {
      if (!at_form_basis()) fail("expected basis form after '^'");
      idx.push_back(*form_basis_of(advance().text));
    }
    if (static_cast<int>(idx.size()) != acc.degree())
      fail("mixed degrees inside form bracket");
    acc.add_term(std::move(idx), negate ? -coeff : coeff);
  }

  OrdForm parse_bracket_form() {
    SourceSpan start = peek().span;
    expect(Tok::LBracket);
    // degree fixed by the first term's basis chain
    std::size_t probe = pos_;
    int degree = -1;
    // lightweight scan for the first basis chain length
    {
      int depth = 0;
      int chain = 0;
      bool in_chain = false;
      for (std::size_t i = probe; i < tokens_.size(); ++i) {
        const Token& t = tokens_[i];
        if (t.kind == Tok::LParen) ++depth;
        if (t.kind == Tok::RParen) --depth;
        if (depth == 0 && t.kind == Tok::Ident && form_basis_of(t.text)) {
          chain = 1;
          std::size_t j = i + 1;
          while (j + 1 < tokens_.size() && tokens_[j].kind == Tok::Caret &&
                 tokens_[j + 1].kind == Tok::Ident &&
                 form_basis_of(tokens_[j + 1].text)) {
            ++chain;
            j += 2;
          }
          in_chain = true;
          break;
        }
        if (depth == 0 &&
            (t.kind == Tok::RBracket || t.kind == Tok::End))
          break;
      }
      if (!in_chain)
        throw ParseError(start, "form bracket contains no basis form");
      degree = chain;
    }
    OrdForm acc(chart_.n, degree);
    bool negate = match(Tok::Minus);
    parse_form_term(acc, negate);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = advance().kind == Tok::Minus;
      parse_form_term(acc, minus);
    }
    expect(Tok::RBracket);
    return acc;
  }

  // expected < 0 means "any degree"
  OrdForm parse_oform(int expected) {
    SourceSpan start = peek().span;
    if (peek().kind == Tok::LBracket) {
      OrdForm f = parse_bracket_form();
      if (!f.is_zero() && f.degree() != expected)
        throw ParseError(start, "form has degree " + std::to_string(f.degree()) +
                                    ", expected " + std::to_string(expected));
      if (f.is_zero()) return OrdForm::zero(chart_.n, expected);
      return f;
    }
    Poly p = parse_poly();
    if (p.is_zero()) return OrdForm::zero(chart_.n, expected);
    if (expected != 0)
      throw ParseError(start, "expected a degree-" + std::to_string(expected) +
                                  " form, found a scalar");
    return OrdForm::scalar(std::move(p));
  }

  void parse_vec_term(OrdVec& acc, bool negate) {
    Poly coeff(chart_.n, 1);
    while (!at_vec_basis()) {
      coeff = coeff * parse_poly_factor();
      expect(Tok::Star);
    }
    int idx = *vec_basis_of(advance().text);
    Poly cur = acc.component(idx);
    acc.set_component(idx, negate ? cur - coeff : cur + coeff);
  }

  OrdVec parse_ovec() {
    if (peek().kind != Tok::LBracket) {
      SourceSpan start = peek().span;
      Poly p = parse_poly();
      if (!p.is_zero())
        throw ParseError(start, "expected a vector ('[' or 0)");
      return OrdVec(chart_.n);
    }
    expect(Tok::LBracket);
    OrdVec acc(chart_.n);
    bool negate = match(Tok::Minus);
    parse_vec_term(acc, negate);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = advance().kind == Tok::Minus;
      parse_vec_term(acc, minus);
    }
    expect(Tok::RBracket);
    return acc;
  }

  // --- generalized literals and expressions ---

  AstPtr make_node(AstKind kind, SourceSpan span, ValueKind vk,
                   std::vector<AstPtr> args) {
    auto node = std::make_shared<Ast>();
    node->kind = kind;
    node->span = span;
    node->value_kind = vk;
    node->args = std::move(args);
    return node;
  }

  AstPtr parse_gform_literal(SourceSpan span) {
    expect(Tok::LParen);
    int p = parse_int();
    expect(Tok::Semi);
    SourceSpan s1 = peek().span;
    OrdForm first = parse_oform(p);
    expect(Tok::Semi);
    OrdForm second = parse_oform(p + 1);
    expect(Tok::RParen);
    // degrees outside [-1, n] only name the canonical zero
    if ((p < -1 || p > chart_.n) && !(first.is_zero() && second.is_zero()))
      throw ParseError(span, "generalized degree " + std::to_string(p) +
                                 " outside [-1, " + std::to_string(chart_.n) + "]");
    if (p == -1 && !first.is_zero())
      throw ParseError(s1, "a (-1)-form must have a zero first slot");
    auto node = std::make_shared<Ast>();
    node->kind = AstKind::GenFormLit;
    node->span = span;
    node->value_kind = ValueKind::Form;
    node->form = std::make_shared<GenForm>(p, std::move(first), std::move(second));
    return node;
  }

  AstPtr parse_gvec_literal(SourceSpan span) {
    expect(Tok::LParen);
    OrdVec v1 = parse_ovec();
    expect(Tok::Semi);
    Poly v0 = parse_poly();
    expect(Tok::RParen);
    auto node = std::make_shared<Ast>();
    node->kind = AstKind::GenVecLit;
    node->span = span;
    node->value_kind = ValueKind::Vector;
    node->vec = std::make_shared<GenVec>(std::move(v1), std::move(v0));
    return node;
  }

  void require_kind(const AstPtr& node, ValueKind want, const std::string& what) {
    if (node->value_kind != want)
      throw ParseError(node->span,
                       what + " must be a " +
                           (want == ValueKind::Form ? "generalized form"
                                                    : "generalized vector"));
  }

  AstPtr parse_call(AstKind kind, SourceSpan span) {
    expect(Tok::LParen);
    std::vector<AstPtr> args;
    args.push_back(parse_expr());
    int arity = kind == AstKind::GD ? 1 : 2;
    for (int i = 1; i < arity; ++i) {
      expect(Tok::Comma);
      args.push_back(parse_expr());
    }
    expect(Tok::RParen);

    ValueKind result = ValueKind::Form;
    switch (kind) {
      case AstKind::GD:
        require_kind(args[0], ValueKind::Form, "operand of d");
        break;
      case AstKind::Contract:
      case AstKind::LieCartan:
      case AstKind::LieHat:
        require_kind(args[0], ValueKind::Vector, "first operand");
        require_kind(args[1], ValueKind::Form, "second operand");
        break;
      case AstKind::LieHatVec:
      case AstKind::Commutator:
        require_kind(args[0], ValueKind::Vector, "first operand");
        require_kind(args[1], ValueKind::Vector, "second operand");
        result = ValueKind::Vector;
        break;
      case AstKind::GScale:
        require_kind(args[0], ValueKind::Form, "first operand");
        require_kind(args[1], ValueKind::Vector, "second operand");
        result = ValueKind::Vector;
        break;
      default:
        break;
    }
    return make_node(kind, span, result, std::move(args));
  }

  AstPtr parse_unary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      advance();
      AstPtr e = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    if (t.kind != Tok::Ident)
      fail("expected expression (gf, gv, d, I, L, Lhat, Lhatv, comm, scale, or '(')");
    SourceSpan span = t.span;
    std::string name = advance().text;
    if (name == "gf") return parse_gform_literal(span);
    if (name == "gv") return parse_gvec_literal(span);
    if (name == "d") return parse_call(AstKind::GD, span);
    if (name == "I") return parse_call(AstKind::Contract, span);
    if (name == "L") return parse_call(AstKind::LieCartan, span);
    if (name == "Lhat") return parse_call(AstKind::LieHat, span);
    if (name == "Lhatv") return parse_call(AstKind::LieHatVec, span);
    if (name == "comm") return parse_call(AstKind::Commutator, span);
    if (name == "scale") return parse_call(AstKind::GScale, span);
    throw ParseError(span, "unknown operator '" + name + "'");
  }

  AstPtr parse_expr() {
    AstPtr lhs = parse_unary();
    while (peek().kind == Tok::Caret) {
      SourceSpan span = advance().span;
      AstPtr rhs = parse_unary();
      require_kind(lhs, ValueKind::Form, "left operand of '^'");
      require_kind(rhs, ValueKind::Form, "right operand of '^'");
      lhs = make_node(AstKind::Wedge, span, ValueKind::Form, {lhs, rhs});
    }
    return lhs;
  }
};

} // namespace

AstPtr parse(const std::string& source, const Chart& chart) {
  return Parser(source, chart).parse_expression();
}

Value eval(const AstPtr& ast, const Chart& chart) {
  auto form = [&](const AstPtr& a) { return std::get<GenForm>(eval(a, chart)); };
  auto vec = [&](const AstPtr& a) { return std::get<GenVec>(eval(a, chart)); };
  try {
    switch (ast->kind) {
      case AstKind::GenFormLit: return *ast->form;
      case AstKind::GenVecLit: return *ast->vec;
      case AstKind::Wedge: return gwedge(form(ast->args[0]), form(ast->args[1]));
      case AstKind::GD: return gd(chart, form(ast->args[0]));
      case AstKind::Contract:
        return gcontract(vec(ast->args[0]), form(ast->args[1]));
      case AstKind::LieCartan:
        return glie_cartan(chart, vec(ast->args[0]), form(ast->args[1]));
      case AstKind::LieHat:
        return glie_hat(chart, vec(ast->args[0]), form(ast->args[1]));
      case AstKind::LieHatVec:
        return glie_hat_vec(chart, vec(ast->args[0]), vec(ast->args[1]));
      case AstKind::Commutator:
        return gcommutator(vec(ast->args[0]), vec(ast->args[1]));
      case AstKind::GScale:
        return gscale(form(ast->args[0]), vec(ast->args[1]));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(ast->span, e.what());
  }
  throw ParseError(ast->span, "unreachable node kind");
}

std::string to_string(const Value& v, const Chart& chart) {
  return std::visit([&](const auto& x) { return x.to_string(chart); }, v);
}

Poly parse_poly(const std::string& source, const Chart& chart) {
  return Parser(source, chart).parse_full_poly();
}

OrdForm parse_ordform(const std::string& source, const Chart& chart, int degree) {
  return Parser(source, chart).parse_full_ordform(degree);
}

OrdVec parse_ordvec(const std::string& source, const Chart& chart) {
  return Parser(source, chart).parse_full_ordvec();
}

} // namespace genform
