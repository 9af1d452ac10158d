#include "qweyl/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& coeff, std::size_t degree) {
  Polynomial p;
  if (coeff == 0) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = coeff;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

std::size_t Polynomial::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

std::size_t Polynomial::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Polynomial Polynomial::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial r;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }
  auto drop = static_cast<std::size_t>(-k);
  if (drop > valuation()) throw InvariantError("Polynomial::shifted: inexact division by t^k");
  r.coeffs_.assign(coeffs_.begin() + static_cast<long>(drop), coeffs_.end());
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDivisorError("polynomial division by zero");
  Polynomial rem = a;
  Polynomial quo;
  if (a.degree() < b.degree()) return {quo, rem};
  quo.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational lead_inv = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    Rational c = rem.leading() * lead_inv;
    quo.coeffs_[shift] = c;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem.coeffs_[shift + j] -= c * b.coeffs_[j];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<Polynomial, Polynomial> Polynomial::inverse_mod(const Polynomial& a, const Polynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  Polynomial r0 = m, r1 = divmod(a, m).second;
  Polynomial s0, s1(Rational(1));
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    Polynomial s2 = s0 - quo * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, divmod(s0 * inv, m).second};
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (k == 0) {
      out << rational_to_string(mag);
      continue;
    }
    if (mag != 1) out << rational_to_string(mag) << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

int euler_phi(int l) {
  int result = l;
  int m = l;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Polynomial cyclotomic_polynomial(int l) {
  // Phi_l = (t^l - 1) / prod_{d | l, d < l} Phi_d.
  if (l < 1) throw ParameterError("cyclotomic_polynomial: l must be positive");
  Polynomial num = Polynomial::monomial(1, static_cast<std::size_t>(l)) - Polynomial(Rational(1));
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    num = Polynomial::divmod(num, cyclotomic_polynomial(d)).first;
  }
  return num;
}

}  // namespace qweyl
