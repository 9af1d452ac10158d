#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/scalar.hpp"

namespace qweyl {

using IntMatrix = std::vector<std::vector<long>>;
using IntVector = std::vector<long>;

/// Which presentation of the q-Weyl algebra an AlgebraSpec denotes.
///
/// Unscaled is the Heisenberg-double presentation:
///   x_i x_j = q_ij x_j x_i,  d_i d_j = q_ij d_j d_i,
///   d_i x_j = q_ij^{-1} x_j d_i + delta_ij,            q_ij = q^{m_ij}.
/// Rescaled is the q-difference presentation built on M' (diagonal of M
/// negated), with q_ij = q^{m'_ij}:
///   x_j x_i = q_ij x_i x_j,  d_j d_i = q_ij d_i d_j      (i < j),
///   d_i x_j = q_ij x_j d_i  (i != j),
///   d_i x_i = q_ii x_i d_i + (q_ii - 1).
/// The Euler operators 1 + x_i d_i q-commute with the generators only in
/// the Rescaled presentation.
enum class Normalization { Unscaled, Rescaled };

namespace detail {
struct SpecData;
}

/// Rank, braiding exponents, normalization and coefficient field of a
/// multi-parameter q-Weyl algebra. Cheap to copy (shared immutable state).
class AlgebraSpec {
 public:
  /// Validates m_ji = -m_ij off the diagonal.
  AlgebraSpec(IntMatrix m, Normalization norm, Field field);

  /// The single-parameter family: relation exponents 1 on and above the
  /// diagonal, -1 below it, for either normalization. For Rescaled the
  /// declared matrix carries -1 on the diagonal so that q_ii = q.
  static AlgebraSpec single_parameter(std::size_t n, Normalization norm, Field field);

  std::size_t rank() const noexcept;
  Normalization normalization() const noexcept;
  Field field() const noexcept;
  /// The declared braiding matrix M.
  const IntMatrix& matrix() const noexcept;
  /// Exponent e_ij with q_ij = q^{e_ij} as used in the relations
  /// (M for Unscaled, M' for Rescaled).
  long relation_exponent(std::size_t i, std::size_t j) const;
  /// q_ij for the relations.
  Scalar q_ij(std::size_t i, std::size_t j) const;
  /// Braiding exponent deg(u) . M . deg(v)^t on the declared matrix.
  long braiding_exponent(const IntVector& deg_u, const IntVector& deg_v) const;
  /// True when the relation exponents equal the single-parameter preset.
  bool is_single_parameter() const;

  /// Exponent of x_i x_j = q^{e} x_j x_i (also d_i d_j = q^{e} d_j d_i).
  long xx_exponent(std::size_t i, std::size_t j) const;
  /// Exponent of d_i x_j = q^{e} x_j d_i for i != j.
  long dx_exponent(std::size_t i, std::size_t j) const;
  /// d_i x_i = q^{p} x_i d_i + r; returns p.
  long diagonal_exponent(std::size_t i) const;
  /// The constant r in the diagonal relation.
  const Scalar& diagonal_constant(std::size_t i) const;

  Scalar q_power(long k) const;

  /// Coefficients of d^b x^c = sum_k T[k] x^{c-k} d^{b-k} in one coordinate.
  const std::vector<Scalar>& straightening_table(std::size_t i, unsigned b, unsigned c) const;

  std::string describe() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);
  friend bool operator!=(const AlgebraSpec& a, const AlgebraSpec& b) { return !(a == b); }

 private:
  std::shared_ptr<const detail::SpecData> data_;
};

/// Exponent data of x_1^{a_1}...x_n^{a_n} d_1^{b_1}...d_n^{b_n}, stored as
/// a single vector (a, b) of length 2n. Ordered lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(2 * n, 0) {}
  Monomial(const std::vector<unsigned>& a, const std::vector<unsigned>& b);

  std::size_t rank() const noexcept { return e_.size() / 2; }
  unsigned x(std::size_t i) const { return e_[i]; }
  unsigned d(std::size_t i) const { return e_[rank() + i]; }
  unsigned& x(std::size_t i) { return e_[i]; }
  unsigned& d(std::size_t i) { return e_[rank() + i]; }
  std::vector<unsigned> x_exponents() const;
  std::vector<unsigned> d_exponents() const;
  const std::vector<unsigned>& raw() const noexcept { return e_; }

  unsigned total_degree() const;
  /// a - b.
  IntVector grading() const;
  bool is_one() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> e_;
};

/// Finite linear combination of PBW monomials with nonzero coefficients.
class PbwElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit PbwElement(AlgebraSpec spec);

  static PbwElement zero(const AlgebraSpec& spec) { return PbwElement(spec); }
  static PbwElement constant(const AlgebraSpec& spec, const Scalar& c);
  static PbwElement one(const AlgebraSpec& spec);
  static PbwElement monomial(const AlgebraSpec& spec, const Monomial& m,
                             const Scalar& c);
  static PbwElement x(const AlgebraSpec& spec, std::size_t i, unsigned power = 1);
  static PbwElement d(const AlgebraSpec& spec, std::size_t i, unsigned power = 1);
  /// The Euler operator alpha_i = 1 + x_i d_i.
  static PbwElement euler(const AlgebraSpec& spec, std::size_t i);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;
  unsigned max_degree() const;

  void add_term(const Monomial& m, const Scalar& c);

  PbwElement operator-() const;
  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  PbwElement& operator*=(const Scalar& c);
  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator*(PbwElement a, const Scalar& c) { return a *= c; }
  friend PbwElement operator*(const Scalar& c, PbwElement a) { return a *= c; }
  friend PbwElement operator*(const PbwElement& a, const PbwElement& b);
  friend bool operator==(const PbwElement& a, const PbwElement& b);
  friend bool operator!=(const PbwElement& a, const PbwElement& b) { return !(a == b); }

  PbwElement pow(unsigned k) const;

 private:
  void require_same_spec(const PbwElement& o) const;
  AlgebraSpec spec_;
  Terms terms_;
};

/// Bilinear product; both operands must share a spec.
PbwElement multiply(const PbwElement& u, const PbwElement& v);

/// Appends c * (x^a d^b)(x^c d^e) in PBW order to `out`, scaled by `scale`.
void multiply_monomials(const AlgebraSpec& spec, const Monomial& left, const Monomial& right,
                        const Scalar& scale, PbwElement::Terms& out);

enum class Generator { X, D };

/// One factor of a word: a generator power or a scalar.
struct WordFactor {
  enum class Kind { Generator, Scalar } kind = Kind::Scalar;
  Generator gen = Generator::X;
  std::size_t index = 0;
  unsigned power = 1;
  std::optional<Scalar> scalar;

  static WordFactor x(std::size_t i, unsigned p = 1) {
    return {Kind::Generator, Generator::X, i, p, std::nullopt};
  }
  static WordFactor d(std::size_t i, unsigned p = 1) {
    return {Kind::Generator, Generator::D, i, p, std::nullopt};
  }
  static WordFactor coeff(const Scalar& c) { return {Kind::Scalar, Generator::X, 0, 1, c}; }
};

using Word = std::vector<WordFactor>;

/// PBW expansion of a product of generator powers and scalars.
/// ParameterError on a generator index outside [0, n).
PbwElement normal_form(const Word& word, const AlgebraSpec& spec);

/// a - b when every term shares it; nullopt when the element is
/// inhomogeneous. The zero element is reported as degree 0.
std::optional<IntVector> grading_degree(const PbwElement& u);

/// Human-readable PBW form, e.g. "q*x1*d1 + (q-1)", descending lex order.
std::string to_string(const PbwElement& u);
std::string monomial_to_string(const Monomial& m);
/// Renders "c*m" with the parenthesization rules used by every printer.
std::string format_term(const std::string& coefficient, const std::string& monomial);
/// Joins rendered terms with " + " / " - "; "0" when empty.
std::string join_terms(const std::vector<std::string>& terms);

using Exponents = std::vector<unsigned>;
/// All exponent vectors of length n with total degree <= max_total, in
/// graded lexicographic order.
std::vector<Exponents> exponent_vectors(std::size_t n, unsigned max_total);

/// Per-identity outcome of an automated verification.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 32) failures.push_back(what);
  }
  std::string summary() const;
};

/// Symbolic check of the power identities and Euler-operator conjugations
/// for all coordinates and powers 1..nmax. Requires the Rescaled presentation.
CheckReport verify_power_identities(const AlgebraSpec& spec, unsigned nmax);

}  // namespace qweyl
