#include "qweyl/expression.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

struct Position {
  int line = 1, column = 1;
};

enum class Tok { Number, Symbol, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  Position pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  Position p;
  std::size_t i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
    ++i;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const Position start = p;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        t += s[i];
        advance();
      }
      out.push_back({Tok::Number, t, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        t += s[i];
        advance();
      }
      out.push_back({Tok::Symbol, t, start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start.line, start.column);
    }
    out.push_back({k, std::string(1, c), start});
    advance();
  }
  out.push_back({Tok::End, "", p});
  return out;
}

[[noreturn]] void fail(const std::string& what, const Token& t) { throw ParseError(what, t.pos.line, t.pos.column); }

// Generic recursive-descent driver; Sem supplies the value type and operations.
template <class Sem>
class Parser {
 public:
  using Value = typename Sem::Value;
  Parser(std::string_view text, Sem& sem) : toks_(tokenize(text)), sem_(sem) {}

  Value parse() {
    if (peek().kind == Tok::End) fail("empty expression", peek());
    Value v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  Value expr() {
    Value v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      Value r = term();
      v = minus ? sem_.add(v, sem_.neg(r)) : sem_.add(v, r);
    }
    return v;
  }

  Value term() {
    Value v = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = take();
      Value r = unary();
      v = op.kind == Tok::Star ? sem_.mul(v, r) : sem_.div(v, r, op);
    }
    return v;
  }

  Value unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return sem_.neg(unary());
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (peek().kind != Tok::Caret) return base;
    const Token caret = take();
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::Number) fail("expected an integer exponent", peek());
    const Token num = take();
    if (num.text.size() > 6) fail("exponent too large", num);
    const long k = std::stol(num.text);
    return sem_.pow(base, negative ? -k : k, caret);
  }

  Value primary() {
    const Token t = take();
    switch (t.kind) {
      case Tok::Number:
        return sem_.number(t.text);
      case Tok::Symbol:
        return sem_.symbol(t);
      case Tok::LParen: {
        Value v = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek());
        take();
        // A parenthesized group is never an atom for exponent purposes.
        return sem_.group(v);
      }
      case Tok::End:
        fail("unexpected end of input", t);
      default:
        fail("unexpected '" + t.text + "'", t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Sem& sem_;
};

Scalar scalar_symbol(const Field& f, const Token& t) {
  if (t.text == "q" && f.has_q()) return Scalar::q(f);
  if (t.text == "zeta" && f.kind() == FieldKind::Cyclotomic) return Scalar::q(f);
  if (t.text == "q" || t.text == "zeta") fail("symbol '" + t.text + "' is not defined over " + f.name(), t);
  fail("unknown symbol '" + t.text + "'", t);
}

Scalar number(const Field& f, const std::string& digits) { return Scalar::from_rational(f, Rational(Integer(digits))); }

struct ScalarSem {
  using Value = Scalar;
  Field field;
  Value number(const std::string& s) { return qweyl::number(field, s); }
  Value symbol(const Token& t) { return scalar_symbol(field, t); }
  Value group(Value v) { return v; }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b, const Token&) { return a / b; }
  Value pow(const Value& a, long k, const Token&) { return a.pow(k); }
};

// Values are kept polynomial until a denominator is needed.
struct AlgebraValue {
  std::optional<PbwElement> poly;
  std::optional<LocalizedElement> frac;
  // Index of a bare a<i> symbol, which alone may take negative exponents.
  std::optional<std::size_t> euler_atom;
  bool generator_atom = false;
};

struct AlgebraSem {
  using Value = AlgebraValue;
  const AlgebraSpec& spec;

  static Value of(PbwElement p) { return {std::move(p), std::nullopt, std::nullopt, false}; }
  static Value of(LocalizedElement l) { return {std::nullopt, std::move(l), std::nullopt, false}; }

  LocalizedElement localized(const Value& v) const {
    if (v.frac) return *v.frac;
    return LocalizedElement(*v.poly);
  }

  static std::optional<Scalar> constant_value(const Value& v) {
    const PbwElement* p = v.poly ? &*v.poly : (v.frac && !v.frac->has_denominator() ? &v.frac->numerator() : nullptr);
    if (!p) return std::nullopt;
    if (p->is_zero()) return Scalar::zero(p->spec().field());
    if (p->size() != 1 || !p->terms().begin()->first.is_one()) return std::nullopt;
    return p->terms().begin()->second;
  }

  Value number(const std::string& s) { return of(PbwElement::constant(spec, qweyl::number(spec.field(), s))); }

  Value symbol(const Token& t) {
    const std::string& s = t.text;
    if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'd' || s[0] == 'a') &&
        s.find_first_not_of("0123456789", 1) == std::string::npos && s[1] != '0') {
      const std::size_t i = std::stoul(s.substr(1));
      if (i < 1 || i > spec.rank())
        fail("unknown symbol '" + s + "' (rank is " + std::to_string(spec.rank()) + ")", t);
      if (s[0] == 'a') {
        Value v = of(PbwElement::euler(spec, i - 1));
        v.euler_atom = i - 1;
        return v;
      }
      Value v = of(s[0] == 'x' ? PbwElement::x(spec, i - 1) : PbwElement::d(spec, i - 1));
      v.generator_atom = true;
      return v;
    }
    return of(PbwElement::constant(spec, scalar_symbol(spec.field(), t)));
  }

  Value group(Value v) {
    v.euler_atom.reset();
    v.generator_atom = false;
    return v;
  }

  Value add(const Value& a, const Value& b) {
    if (a.poly && b.poly) return of(*a.poly + *b.poly);
    return of(localized_add(localized(a), localized(b)));
  }

  Value neg(const Value& a) { return mul(of(PbwElement::constant(spec, -Scalar::one(spec.field()))), a); }

  Value mul(const Value& a, const Value& b) {
    if (a.poly && b.poly) return of(*a.poly * *b.poly);
    return of(localized_multiply(localized(a), localized(b)));
  }

  Value div(const Value& a, const Value& b, const Token& op) {
    auto c = constant_value(b);
    if (!c) fail("division is only defined by scalars", op);
    if (c->is_zero()) throw ZeroDivisorError("division by zero at " + std::to_string(op.pos.line) + ":" +
                                             std::to_string(op.pos.column));
    return mul(a, of(PbwElement::constant(spec, c->inverse())));
  }

  Value pow(const Value& a, long k, const Token& caret) {
    if (k < 0) {
      if (auto c = constant_value(a); c && !a.euler_atom) {
        if (c->is_zero()) throw ZeroDivisorError("zero raised to a negative power");
        return of(PbwElement::constant(spec, c->pow(k)));
      }
      if (!a.euler_atom) fail("negative exponents are only allowed on a<i> and scalars", caret);
      if (spec.normalization() != Normalization::Rescaled)
        throw DomainError("a" + std::to_string(*a.euler_atom + 1) +
                          "^-k needs the localization, which requires the rescaled presentation");
      IntVector denom(spec.rank(), 0);
      denom[*a.euler_atom] = -k;
      return of(LocalizedElement(PbwElement::one(spec), denom));
    }
    if (a.generator_atom && a.poly) {
      const PbwElement& g = *a.poly;
      const Monomial& m = g.terms().begin()->first;
      for (std::size_t i = 0; i < spec.rank(); ++i) {
        if (m.x(i)) return of(PbwElement::x(spec, i, static_cast<unsigned>(k)));
        if (m.d(i)) return of(PbwElement::d(spec, i, static_cast<unsigned>(k)));
      }
    }
    Value r = of(PbwElement::one(spec));
    Value base = a;
    for (long e = k; e > 0; e >>= 1) {
      if (e & 1) r = mul(r, base);
      if (e > 1) base = mul(base, base);
    }
    return r;
  }
};

}  // namespace

LocalizedElement parse_localized(std::string_view text, const AlgebraSpec& spec) {
  if (spec.normalization() != Normalization::Rescaled)
    throw ParameterError("the localization requires the rescaled presentation");
  AlgebraSem sem{spec};
  AlgebraValue v = Parser<AlgebraSem>(text, sem).parse();
  return sem.localized(v);
}

PbwElement parse_expression(std::string_view text, const AlgebraSpec& spec) {
  AlgebraSem sem{spec};
  AlgebraValue v = Parser<AlgebraSem>(text, sem).parse();
  if (v.poly) return *v.poly;
  if (!v.frac->has_denominator()) return v.frac->numerator();
  throw DomainError("expression needs Euler denominators: " + to_string(*v.frac));
}

Scalar parse_scalar(std::string_view text, Field field) {
  ScalarSem sem{field};
  return Parser<ScalarSem>(text, sem).parse();
}

std::string canonical_form(std::string_view text, const AlgebraSpec& spec) {
  AlgebraSem sem{spec};
  AlgebraValue v = Parser<AlgebraSem>(text, sem).parse();
  if (v.poly) return to_string(*v.poly);
  return to_string(*v.frac);
}

}  // namespace qweyl
