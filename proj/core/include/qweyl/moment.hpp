#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qweyl/algebra.hpp"
#include "qweyl/localized.hpp"

namespace qweyl {

/// Column Hermite form H = A U of an integer matrix. Pivots are taken from the
/// bottom row upwards: column j has a positive pivot in row pivot_rows[j],
/// zeros below it, and the other columns carry entries in [0, pivot) in that
/// row. U is unimodular.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Embedding data K -> T given by an n x d integer matrix of full column rank.
class TorusData {
 public:
  explicit TorusData(IntMatrix a);
  /// Rank-n torus with no subtorus (d = 0).
  static TorusData trivial(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  const IntMatrix& a() const noexcept { return a_; }
  const HermiteForm& hermite() const noexcept { return hnf_; }
  /// Column j of A.
  IntVector column(std::size_t j) const;

  /// Splits c = r + A s with r the canonical coset representative.
  std::pair<IntVector, IntVector> reduce_exponent(IntVector c) const;

 private:
  std::size_t n_ = 0, d_ = 0;
  IntMatrix a_;
  HermiteForm hnf_;
};

/// Target point eta of K together with root-of-unity order and the inert
/// stability character.
struct ReductionDatum {
  ReductionDatum(TorusData torus, std::vector<Scalar> eta, int l = 0, IntVector chi = {});
  TorusData torus;
  std::vector<Scalar> eta;
  int l = 0;
  IntVector chi;
};

/// z^c -> prod alpha_i^{c_i}.
LocalizedElement comoment_torus(const IntVector& c, const AlgebraSpec& spec);
/// u^e -> z^{A e} -> prod alpha_i^{(Ae)_i}.
LocalizedElement comoment_subtorus(const IntVector& e, const TorusData& torus, const AlgebraSpec& spec);

/// Conjugation by Phi(z_i) and Phi(u_j) acts on each generator and each alpha_k
/// by the grading character.
CheckReport verify_moment_identity(const TorusData& torus, const AlgebraSpec& spec);

/// ((1 + p_i w_i)_i, (prod_i (1 + p_i w_i)^{a_ij})_j). DomainError off the open locus.
std::pair<std::vector<Scalar>, std::vector<Scalar>> classical_moment_eval(const std::vector<Scalar>& p,
                                                                        const std::vector<Scalar>& w,
                                                                        const TorusData& torus);

/// x^a d^b alpha^c with min(a_i, b_i) = 0 and c a canonical coset representative.
struct CanonicalMonomial {
  Exponents a, b;
  IntVector c;
  friend auto operator<=>(const CanonicalMonomial&, const CanonicalMonomial&) = default;
  friend bool operator==(const CanonicalMonomial&, const CanonicalMonomial&) = default;
};

/// Linear combination of canonical monomials; an element of the quotient by
/// the left ideal generated by Phi(u_j) - eta_j.
class ReducedElement {
 public:
  using Terms = std::map<CanonicalMonomial, Scalar>;
  explicit ReducedElement(AlgebraSpec spec) : spec_(std::move(spec)) {}

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const CanonicalMonomial& m, const Scalar& c);

  ReducedElement& operator+=(const ReducedElement& o);
  friend ReducedElement operator+(ReducedElement a, const ReducedElement& b) { return a += b; }
  friend ReducedElement operator*(const Scalar& c, ReducedElement a);
  friend bool operator==(const ReducedElement& a, const ReducedElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ReducedElement& a, const ReducedElement& b) { return !(a == b); }

 private:
  AlgebraSpec spec_;
  Terms terms_;
};

/// Which mixed pair x_i d_i is eliminated first.
enum class EliminationOrder { Ascending, Descending };

ReducedElement moment_ideal_reduce(const LocalizedElement& u, const ReductionDatum& datum,
                                   EliminationOrder order = EliminationOrder::Ascending);
/// Re-reduces an element whose terms may carry arbitrary alpha exponents.
ReducedElement moment_ideal_reduce(const ReducedElement& u, const ReductionDatum& datum,
                                   EliminationOrder order = EliminationOrder::Ascending);
/// The canonical monomial as a reduced element (coefficient 1), not reduced further.
ReducedElement reduced_monomial(const AlgebraSpec& spec, const CanonicalMonomial& m);

/// True when conjugation by every Phi(u_j) fixes the monomial's grading, i.e.
/// sum_i a_ij e_ii (a_i - b_i) = 0 for all j.
bool is_invariant(const CanonicalMonomial& m, const TorusData& torus, const AlgebraSpec& spec);

/// Canonical invariant monomials with |a| + |b| + sum |c_i| <= degree_bound.
std::vector<CanonicalMonomial> invariant_monomials(const TorusData& torus, const AlgebraSpec& spec,
                                                   unsigned degree_bound);

/// Product of invariant representatives followed by reduction.
ReducedElement reduced_product(const ReducedElement& u, const ReducedElement& v, const ReductionDatum& datum);

std::string to_string(const ReducedElement& u);

}  // namespace qweyl
