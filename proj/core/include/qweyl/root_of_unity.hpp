#pragma once

#include <vector>

#include "qweyl/algebra.hpp"
#include "qweyl/linalg.hpp"

namespace qweyl {

/// Values of x_i^l and d_i^l on a representation.
struct CentralCharacter {
  std::vector<Scalar> a;
  std::vector<Scalar> omega;
};

/// Matrices for x_i and d_i at q = zeta_l, satisfying the relations of the
/// Rescaled single-parameter algebra `spec`.
struct MatrixRep {
  AlgebraSpec spec;
  std::size_t dim = 0;
  std::vector<Matrix> x;
  std::vector<Matrix> y;
  CentralCharacter character;
};

/// Builder data for one coordinate.
struct RankOneData {
  enum class Kind { Diagonal, Nilpotent } kind = Kind::Diagonal;
  Scalar lambda;
  std::vector<Scalar> b;

  static RankOneData diagonal(Scalar lambda, std::vector<Scalar> b) {
    return {Kind::Diagonal, std::move(lambda), std::move(b)};
  }
  static RankOneData nilpotent() { return {Kind::Nilpotent, Scalar(), {}}; }
};

/// The Rescaled single-parameter algebra of rank n over Q(zeta_l).
AlgebraSpec root_of_unity_spec(std::size_t n, int l);

/// u commutes with every x_i and d_i.
bool is_central(const PbwElement& u);

/// Basis of the elements of span{x^a d^b : a_i, b_i <= bound} commuting with all generators.
std::vector<PbwElement> centralizer_basis(const AlgebraSpec& spec, unsigned bound);

/// Delta^l = prod (1 + x_i^l d_i^l) with Delta = prod alpha_i.
CheckReport verify_delta_power(const AlgebraSpec& spec);

/// X = diag(lambda q^i); Y has -1/lambda_i on the diagonal and b_i at (i, i+1 mod l).
MatrixRep build_irrep_rank1(const Scalar& lambda, const std::vector<Scalar>& b, int l);
/// X e_m = e_{m+1}, Y e_m = (q^m - 1) e_{m-1} on the truncated polynomial module.
MatrixRep build_irrep_nilpotent(int l);
/// Tensor construction X_k = D^{(1)} x ... x D^{(k-1)} x X x I ..., Y_k likewise with
/// inverse twists, D the Euler matrix of each earlier slot (or another invertible
/// matrix q-commuting with it when that one is singular). Every relation is
/// verified before returning; InvariantError names the first failure.
MatrixRep build_irrep(const std::vector<RankOneData>& slots, int l);

/// All defining relations plus scalar l-th powers.
CheckReport verify_relations(const MatrixRep& rep);

/// dim {M : M X_i = X_i M, M Y_i = Y_i M}.
std::size_t commutant_dimension(const MatrixRep& rep);
/// Dimension of the unital algebra generated by the X_i, Y_i; it equals dim^2
/// exactly when the module is irreducible (Burnside).
std::size_t generated_algebra_dimension(const MatrixRep& rep);

/// prod_i (1 + a_i omega_i) != 0.
bool azumaya_membership(const CentralCharacter& chi);

/// I + X_i Y_i.
Matrix euler_matrix(const MatrixRep& rep, std::size_t i);

/// The products (x^r d^s)(x^{lu} d^{lv}) with 0 <= r, s < l and 0 <= u, v <= central_bound
/// are linearly independent, l^{2n} per central monomial.
CheckReport verify_freeness(const AlgebraSpec& spec, unsigned central_bound);

}  // namespace qweyl
