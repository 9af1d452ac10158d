#include "qweyl/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace detail {
struct FieldData {
  FieldKind kind;
  int l = 0;
  int degree = 0;
  Polynomial modulus;
};
}  // namespace detail

namespace {

const detail::FieldData* intern(FieldKind kind, int l) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<detail::FieldData>> table;
  std::lock_guard lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), l);
  auto it = table.find(key);
  if (it != table.end()) return it->second.get();
  auto data = std::make_unique<detail::FieldData>();
  data->kind = kind;
  data->l = l;
  switch (kind) {
    case FieldKind::Rational:
      data->degree = 1;
      break;
    case FieldKind::RationalFunctionInQ:
      data->degree = 0;
      break;
    case FieldKind::Cyclotomic:
      data->modulus = cyclotomic_polynomial(l);
      data->degree = static_cast<int>(data->modulus.degree());
      break;
  }
  auto* raw = data.get();
  table.emplace(key, std::move(data));
  return raw;
}

// Reduces a polynomial in zeta modulo Phi_l (folding t^l = 1 first).
Polynomial cyclotomic_reduce(const Polynomial& p, const detail::FieldData& f) {
  if (p.degree() < f.degree) return p;
  const auto l = static_cast<std::size_t>(f.l);
  std::vector<Rational> folded(std::min(l, p.coeffs().size()), Rational(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) folded[i % l] += p.coeffs()[i];
  return Polynomial::divmod(Polynomial(std::move(folded)), f.modulus).second;
}

}  // namespace

Field Field::rational() { return Field(intern(FieldKind::Rational, 0)); }
Field Field::rational_function() { return Field(intern(FieldKind::RationalFunctionInQ, 0)); }

Field Field::cyclotomic(int l) {
  if (l <= 1) throw ParameterError("l must be greater than 1 (got " + std::to_string(l) + ")");
  if (l % 2 == 0) throw ParameterError("l must be odd (got " + std::to_string(l) + ")");
  return Field(intern(FieldKind::Cyclotomic, l));
}

FieldKind Field::kind() const noexcept { return data_->kind; }
int Field::l() const noexcept { return data_->l; }
int Field::degree() const noexcept { return data_->degree; }
const Polynomial& Field::modulus() const noexcept { return data_->modulus; }

std::string Field::name() const {
  switch (kind()) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::RationalFunctionInQ:
      return "Q(q)";
    case FieldKind::Cyclotomic:
      return "Q(zeta_" + std::to_string(l()) + ")";
  }
  return "?";
}

Field make_field(FieldKind kind, std::optional<int> l) {
  switch (kind) {
    case FieldKind::Rational:
      return Field::rational();
    case FieldKind::RationalFunctionInQ:
      return Field::rational_function();
    case FieldKind::Cyclotomic:
      if (!l) throw ParameterError("cyclotomic field requires l");
      return Field::cyclotomic(*l);
  }
  throw ParameterError("unknown field kind");
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  *this = from_parts(std::move(num), std::move(den));
}

RationalFunction RationalFunction::from_parts(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDivisorError("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  if (den.is_monomial()) {
    // Only powers of q can cancel.
    auto k = static_cast<long>(std::min<std::size_t>(num.valuation(), den.valuation()));
    Rational lead_inv = 1 / den.leading();
    r.num_ = num.shifted(-k) * lead_inv;
    r.den_ = Polynomial::monomial(1, static_cast<std::size_t>(den.degree() - k));
    return r;
  }
  Polynomial g = Polynomial::gcd(num, den);
  if (g.degree() > 0) {
    num = Polynomial::divmod(num, g).first;
    den = Polynomial::divmod(den, g).first;
  }
  Rational lead_inv = 1 / den.leading();
  r.num_ = num * lead_inv;
  r.den_ = den * lead_inv;
  return r;
}

RationalFunction RationalFunction::q_power(long k) {
  RationalFunction r;
  if (k >= 0) {
    r.num_ = Polynomial::monomial(1, static_cast<std::size_t>(k));
  } else {
    r.num_ = Polynomial(Rational(1));
    r.den_ = Polynomial::monomial(1, static_cast<std::size_t>(-k));
  }
  return r;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) return RationalFunction(a.num_ + b.num_);
    return RationalFunction::from_parts(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    long ka = a.den_.degree(), kb = b.den_.degree();
    long k = std::max(ka, kb);
    Polynomial num = a.num_.shifted(k - ka) + b.num_.shifted(k - kb);
    return RationalFunction::from_parts(std::move(num), Polynomial::monomial(1, static_cast<std::size_t>(k)));
  }
  return RationalFunction::from_parts(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  if (a.den_.is_monomial() && b.den_.is_monomial())
    return RationalFunction::from_parts(a.num_ * b.num_, a.den_ * b.den_);
  // Cross-cancel before multiplying to keep degrees small.
  Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
  Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
  Polynomial n1 = Polynomial::divmod(a.num_, g1).first;
  Polynomial d2 = Polynomial::divmod(b.den_, g1).first;
  Polynomial n2 = Polynomial::divmod(b.num_, g2).first;
  Polynomial d1 = Polynomial::divmod(a.den_, g2).first;
  RationalFunction r;
  Polynomial den = d1 * d2;
  Rational lead_inv = 1 / den.leading();
  r.num_ = n1 * n2 * lead_inv;
  r.den_ = den * lead_inv;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDivisorError("inverse of zero in Q(q)");
  return from_parts(den_, num_);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : field_(Field::rational()), value_(Rational(0)) {}

Scalar Scalar::zero(Field f) { return from_integer(f, 0); }
Scalar Scalar::one(Field f) { return from_integer(f, 1); }

Scalar Scalar::from_integer(Field f, long v) { return from_rational(f, Rational(v)); }

Scalar Scalar::from_rational(Field f, const Rational& v) {
  switch (f.kind()) {
    case FieldKind::Rational:
      return Scalar(f, v);
    case FieldKind::RationalFunctionInQ:
      return Scalar(f, RationalFunction(Polynomial(v)));
    case FieldKind::Cyclotomic:
      return Scalar(f, Polynomial(v));
  }
  throw ParameterError("unknown field kind");
}

Scalar Scalar::q(Field f) { return q_power(f, 1); }

Scalar Scalar::q_power(Field f, long k) {
  switch (f.kind()) {
    case FieldKind::Rational:
      if (k == 0) return one(f);
      throw ParameterError("the symbol q is not an element of Q");
    case FieldKind::RationalFunctionInQ:
      return Scalar(f, RationalFunction::q_power(k));
    case FieldKind::Cyclotomic: {
      long e = ((k % f.l()) + f.l()) % f.l();
      return from_cyclotomic(f, Polynomial::monomial(1, static_cast<std::size_t>(e)));
    }
  }
  throw ParameterError("unknown field kind");
}

Scalar Scalar::from_rational_function(Field f, RationalFunction v) {
  if (f.kind() != FieldKind::RationalFunctionInQ)
    throw ParameterError("rational function value requires the field Q(q)");
  return Scalar(f, std::move(v));
}

Scalar Scalar::from_cyclotomic(Field f, Polynomial v) {
  if (f.kind() != FieldKind::Cyclotomic) throw ParameterError("cyclotomic value requires Q(zeta_l)");
  return Scalar(f, cyclotomic_reduce(v, *intern(FieldKind::Cyclotomic, f.l())));
}

bool Scalar::is_zero() const noexcept {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 0;
    case 1:
      return std::get<1>(value_).is_zero();
    default:
      return std::get<2>(value_).is_zero();
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 1;
    case 1: {
      const auto& r = std::get<1>(value_);
      return r.is_polynomial() && r.num().degree() == 0 && r.num().leading() == 1;
    }
    default: {
      const auto& p = std::get<2>(value_);
      return p.degree() == 0 && p.leading() == 1;
    }
  }
}

bool Scalar::is_rational() const {
  switch (value_.index()) {
    case 0:
      return true;
    case 1: {
      const auto& r = std::get<1>(value_);
      return r.is_polynomial() && r.num().is_constant();
    }
    default:
      return std::get<2>(value_).is_constant();
  }
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw ParameterError("scalar " + to_string() + " is not rational");
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_);
    case 1:
      return std::get<1>(value_).num().coeff(0);
    default:
      return std::get<2>(value_).coeff(0);
  }
}

const RationalFunction& Scalar::rational_function() const {
  if (value_.index() != 1) throw ParameterError("scalar is not in Q(q)");
  return std::get<1>(value_);
}

const Polynomial& Scalar::cyclotomic() const {
  if (value_.index() != 2) throw ParameterError("scalar is not in Q(zeta_l)");
  return std::get<2>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw ParameterError("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0:
      return Scalar(field_, Rational(-std::get<0>(value_)));
    case 1:
      return Scalar(field_, -std::get<1>(value_));
    default:
      return Scalar(field_, -std::get<2>(value_));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) += std::get<0>(o.value_);
      break;
    case 1:
      std::get<1>(value_) = std::get<1>(value_) + std::get<1>(o.value_);
      break;
    default:
      std::get<2>(value_) += std::get<2>(o.value_);
      break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) *= std::get<0>(o.value_);
      break;
    case 1:
      std::get<1>(value_) = std::get<1>(value_) * std::get<1>(o.value_);
      break;
    default: {
      const auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(o.value_);
      if (b.is_constant()) {
        std::get<2>(value_) = a * b.coeff(0);
      } else if (a.is_constant()) {
        std::get<2>(value_) = b * a.coeff(0);
      } else {
        std::get<2>(value_) = cyclotomic_reduce(a * b, *intern(FieldKind::Cyclotomic, field_.l()));
      }
      break;
    }
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.value_ == b.value_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivisorError("inverse of zero in " + field_.name());
  switch (value_.index()) {
    case 0:
      return Scalar(field_, Rational(1 / std::get<0>(value_)));
    case 1:
      return Scalar(field_, std::get<1>(value_).inverse());
    default: {
      const auto& p = std::get<2>(value_);
      if (p.is_constant()) return Scalar(field_, Polynomial(Rational(1 / p.coeff(0))));
      auto [g, s] = Polynomial::inverse_mod(p, field_.modulus());
      if (g.degree() != 0) throw InvariantError("non-invertible element in cyclotomic field");
      return Scalar(field_, s);
    }
  }
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result = one(field_);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

namespace {

// Clears denominators so num/den print with integer coefficients.
std::pair<Polynomial, Polynomial> integerize(const Polynomial& num, const Polynomial& den) {
  Integer lcm = 1;
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Polynomial n = num * Rational(lcm), d = den * Rational(lcm);
  Integer g = 0;
  for (const auto* p : {&n, &d})
    for (const auto& c : p->coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  if (g != 0 && g != 1) {
    Rational inv(Integer(1), g);
    n *= inv;
    d *= inv;
  }
  return {n, d};
}

bool is_atom(const std::string& s) {
  return s.find_first_of("+-*/") == std::string::npos;
}

}  // namespace

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0:
      return rational_to_string(std::get<0>(value_));
    case 1: {
      const auto& r = std::get<1>(value_);
      if (r.is_polynomial()) return r.num().to_string("q");
      auto [n, d] = integerize(r.num(), r.den());
      std::string ns = n.to_string("q");
      std::string ds = d.to_string("q");
      if (n.term_count() > 1) ns = "(" + ns + ")";
      if (!is_atom(ds)) ds = "(" + ds + ")";
      return ns + "/" + ds;
    }
    default:
      return std::get<2>(value_).to_string("zeta");
  }
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const std::optional<Scalar>& b, long exponent) {
  switch (op) {
    case ScalarOp::Add:
      if (!b) throw ParameterError("add requires two operands");
      return a + *b;
    case ScalarOp::Mul:
      if (!b) throw ParameterError("mul requires two operands");
      return a * *b;
    case ScalarOp::Neg:
      return -a;
    case ScalarOp::Inv:
      return a.inverse();
    case ScalarOp::Pow:
      return a.pow(exponent);
  }
  throw ParameterError("unknown scalar operation");
}

Scalar q_integer(unsigned n, Field f) {
  // Q carries no q; the classical value q = 1 gives n.
  if (!f.has_q()) return Scalar::from_integer(f, static_cast<long>(n));
  Scalar acc = Scalar::zero(f);
  for (unsigned k = 0; k < n; ++k) acc += Scalar::q_power(f, k);
  return acc;
}

Scalar specialize(const Scalar& v, Field cyclotomic) {
  if (cyclotomic.kind() != FieldKind::Cyclotomic)
    throw ParameterError("specialize targets a cyclotomic field");
  if (v.field().kind() != FieldKind::RationalFunctionInQ)
    throw ParameterError("specialize expects a Q(q) value");
  const auto& r = v.rational_function();
  Scalar num = Scalar::from_cyclotomic(cyclotomic, r.num());
  Scalar den = Scalar::from_cyclotomic(cyclotomic, r.den());
  if (den.is_zero())
    throw DomainError("denominator of " + v.to_string() + " vanishes at zeta_" +
                      std::to_string(cyclotomic.l()));
  return num / den;
}

std::optional<Rational> rational_root(const Rational& v, int l) {
  if (l <= 0) throw ParameterError("root order must be positive");
  if (v == 0) return Rational(0);
  if (v < 0 && l % 2 == 0) return std::nullopt;
  Integer num = abs(v.get_num());
  Integer den = v.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(l))) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(l))) return std::nullopt;
  Rational r(rn, rd);
  if (v < 0) r = -r;
  return r;
}

}  // namespace qweyl
