#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qweyl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial over the rationals. Coefficient i multiplies
/// t^i; the coefficient vector never has trailing zeros, so the zero
/// polynomial is the empty vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  explicit Polynomial(const Rational& constant);

  static Polynomial monomial(const Rational& coeff, std::size_t degree);
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Index of the lowest nonzero coefficient (t-adic valuation); 0 for zero.
  std::size_t valuation() const noexcept;
  /// Number of nonzero coefficients.
  std::size_t term_count() const noexcept;
  /// True when the polynomial is c * t^k for a single nonzero c.
  bool is_monomial() const noexcept { return term_count() == 1; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by t^k (k >= 0) or divides exactly by t^{-k} (k < 0).
  Polynomial shifted(long k) const;
  Polynomial monic() const;
  Rational evaluate(const Rational& t) const;

  /// Quotient and remainder; throws ZeroDivisorError on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic greatest common divisor (zero when both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);
  /// Returns (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
  static std::pair<Polynomial, Polynomial> inverse_mod(const Polynomial& a, const Polynomial& m);

  /// Renders in descending powers, e.g. "q^2+2*q-1/3".
  std::string to_string(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// The l-th cyclotomic polynomial, integer coefficients, degree phi(l).
Polynomial cyclotomic_polynomial(int l);

/// Euler's totient.
int euler_phi(int l);

/// Renders a rational as "p" or "p/r".
std::string rational_to_string(const Rational& r);

}  // namespace qweyl
