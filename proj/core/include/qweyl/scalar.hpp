#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "qweyl/polynomial.hpp"

namespace qweyl {

enum class FieldKind { Rational, RationalFunctionInQ, Cyclotomic };

namespace detail {
struct FieldData;
}

/// Handle to one of the three exact coefficient fields: Q, Q(q), Q(zeta_l).
///
/// Descriptors are interned for the lifetime of the process, so handles are
/// trivially copyable and compare by identity.
class Field {
 public:
  static Field rational();
  static Field rational_function();
  /// Q(zeta_l); l must be odd and greater than one.
  static Field cyclotomic(int l);

  FieldKind kind() const noexcept;
  /// Root-of-unity order (Cyclotomic only, 0 otherwise).
  int l() const noexcept;
  /// Dimension over Q: phi(l) for Cyclotomic, 1 for Rational, 0 (infinite) for Q(q).
  int degree() const noexcept;
  /// The l-th cyclotomic polynomial (Cyclotomic only, zero otherwise).
  const Polynomial& modulus() const noexcept;
  /// Whether the symbol q denotes an element of this field.
  bool has_q() const noexcept { return kind() != FieldKind::Rational; }
  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.data_ == b.data_; }
  friend bool operator!=(Field a, Field b) noexcept { return a.data_ != b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;
};

/// make_field(kind, l): builds a descriptor; l is required for Cyclotomic.
Field make_field(FieldKind kind, std::optional<int> l = std::nullopt);

/// Element of Q(q), kept as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// q^k for any integer k.
  static RationalFunction q_power(long k);

 private:
  static RationalFunction from_parts(Polynomial num, Polynomial den);
  Polynomial num_;
  Polynomial den_{Rational(1)};
};

/// An exact element of one of the coefficient fields.
class Scalar {
 public:
  /// Rational zero.
  Scalar();

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_integer(Field f, long v);
  static Scalar from_rational(Field f, const Rational& v);
  /// The deformation parameter: the indeterminate in Q(q), zeta_l in Q(zeta_l).
  static Scalar q(Field f);
  /// q^k without going through repeated multiplication.
  static Scalar q_power(Field f, long k);
  static Scalar from_rational_function(Field f, RationalFunction v);
  /// Cyclotomic element from coefficients of 1, zeta, zeta^2, ...; reduced mod Phi_l.
  static Scalar from_cyclotomic(Field f, Polynomial v);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const;
  /// True when the value lies in the prime field Q.
  bool is_rational() const;
  /// The value as a rational; throws ParameterError unless is_rational().
  Rational to_rational() const;
  const RationalFunction& rational_function() const;
  /// Coefficient vector over the power basis (Cyclotomic only).
  const Polynomial& cyclotomic() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Multiplicative inverse; ZeroDivisorError on zero.
  Scalar inverse() const;
  /// Integer power; negative exponents invert.
  Scalar pow(long k) const;

  /// Canonical string in the scalar literal grammar (see expression.hpp).
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  using Value = std::variant<Rational, RationalFunction, Polynomial>;
  Scalar(Field f, Value v) : field_(f), value_(std::move(v)) {}
  void require_same_field(const Scalar& o) const;

  Field field_;
  Value value_;
};

enum class ScalarOp { Add, Mul, Neg, Inv, Pow };

/// Dispatching form of the field operations. `b` is the second operand for
/// Add/Mul; `exponent` is used by Pow.
Scalar scalar_arith(ScalarOp op, const Scalar& a, const std::optional<Scalar>& b = std::nullopt,
                    long exponent = 0);

/// 1 + q + ... + q^{n-1}; zero for n = 0. Over Q (no q) this is n.
Scalar q_integer(unsigned n, Field f);

/// Evaluates a Q(q) value at q = zeta_l. DomainError when the denominator
/// vanishes at zeta_l.
Scalar specialize(const Scalar& v, Field cyclotomic);

/// Rational l-th root of a rational, if one exists.
std::optional<Rational> rational_root(const Rational& v, int l);

}  // namespace qweyl
