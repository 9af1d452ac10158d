#pragma once

#include <cstddef>
#include <vector>

#include "qweyl/moment.hpp"
#include "qweyl/root_of_unity.hpp"

namespace qweyl {

/// Phi(u_j) = prod_i (I + X_i Y_i)^{a_ij} on a representation, together with
/// the scalars prod_i (1 + a_i omega_i)^{a_ij} that their l-th powers equal.
struct MomentOperators {
  std::vector<Matrix> phi;
  std::vector<Scalar> phi_l;
};

MomentOperators moment_operators(const MatrixRep& rep, const TorusData& torus);

/// Joint eta-eigenspace of the moment operators.
struct WeightSpaceResult {
  std::vector<Vector> basis;
  std::vector<Scalar> eta;
  std::vector<Matrix> moment_ops;
};

WeightSpaceResult weight_space(const MatrixRep& rep, const TorusData& torus, const std::vector<Scalar>& eta);

/// Compares the left ideal J = End(V) (Phi(u_j) - eta_j) with the kernel of
/// restriction to V_eta, both as subspaces of End(V).
struct KernelIdentityResult {
  std::size_t weight_dimension = 0;
  std::size_t ideal_dimension = 0;
  std::size_t kernel_dimension = 0;
  CheckReport report;
};

KernelIdentityResult restriction_kernel_check(const MatrixRep& rep, const TorusData& torus,
                                              const std::vector<Scalar>& eta);

/// Commutant of the representation acting on Hom(V_eta, V) by postcomposition,
/// compared with End(V_eta) acting by precomposition.
struct ReducedAlgebraResult {
  std::size_t dimension = 0;
  std::size_t weight_dimension = 0;
  bool iso_verified = false;
  /// Images of the matrix units of End(V_eta), as operators on Hom(V_eta, V)
  /// in row-major coordinates.
  std::vector<Matrix> witness;
};

ReducedAlgebraResult reduced_endomorphism_algebra(const MatrixRep& rep, const TorusData& torus,
                                                  const std::vector<Scalar>& eta);

/// Some t in the field with t^l = v. Rational values only; DomainError otherwise.
Scalar lth_root(const Scalar& v, int l);

/// r with r^l equal to the value of alpha^l on the slot's rank-one module.
Scalar alpha_root(const RankOneData& slot, int l);

/// Distinct eta with eta_j = prod_i (r_i zeta^{k_i})^{a_ij}, k ranging over (Z/l)^n.
std::vector<std::vector<Scalar>> compatible_etas(const std::vector<Scalar>& alpha_roots, const TorusData& torus,
                                                 int l);

/// All T with T_i^l = alpha_l_values[i] and prod_i T_i^{a_ij} = eta_j, by brute
/// force over l^n root choices. ParameterError when l^n exceeds cap.
std::vector<std::vector<Scalar>> cover_fiber_points(const std::vector<Scalar>& alpha_l_values,
                                                    const TorusData& torus, const std::vector<Scalar>& eta, int l,
                                                    std::size_t cap = 10000);

}  // namespace qweyl
