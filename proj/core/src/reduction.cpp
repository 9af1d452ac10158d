#include "qweyl/reduction.hpp"

#include <string>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

void require_matching(const MatrixRep& rep, const TorusData& torus) {
  if (rep.spec.rank() != torus.n())
    throw ParameterError("torus has n = " + std::to_string(torus.n()) + " but the representation has rank " +
                         std::to_string(rep.spec.rank()));
}

void require_eta(const MatrixRep& rep, const TorusData& torus, const std::vector<Scalar>& eta) {
  if (eta.size() != torus.d())
    throw ParameterError("eta has " + std::to_string(eta.size()) + " entries, expected d = " + std::to_string(torus.d()));
  for (const auto& e : eta)
    if (e.field() != rep.spec.field()) throw ParameterError("eta must lie in the representation's field");
}

// Calls visit(k) for every k in {0..l-1}^n.
template <class F>
void for_each_residue(std::size_t n, int l, F&& visit) {
  std::vector<long> k(n, 0);
  while (true) {
    visit(k);
    std::size_t pos = 0;
    while (pos < n && k[pos] == l - 1) k[pos++] = 0;
    if (pos == n) return;
    ++k[pos];
  }
}

Field cyclotomic_of(const std::vector<Scalar>& values, int l) {
  if (values.empty()) return Field::cyclotomic(l);
  const Field f = values.front().field();
  if (f.kind() != FieldKind::Cyclotomic || f.l() != l)
    throw ParameterError("values must lie in Q(zeta_" + std::to_string(l) + ")");
  return f;
}

std::vector<Scalar> torus_point(const std::vector<Scalar>& t, const TorusData& torus) {
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < torus.d(); ++j) {
    Scalar p = Scalar::one(t.front().field());
    for (std::size_t i = 0; i < torus.n(); ++i) p *= t[i].pow(torus.a()[i][j]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

MomentOperators moment_operators(const MatrixRep& rep, const TorusData& torus) {
  require_matching(rep, torus);
  const Field f = rep.spec.field();
  const unsigned l = static_cast<unsigned>(f.l());
  MomentOperators out;
  std::vector<Matrix> alpha, alpha_inv(torus.n());
  for (std::size_t i = 0; i < torus.n(); ++i) alpha.push_back(euler_matrix(rep, i));
  for (std::size_t j = 0; j < torus.d(); ++j) {
    Matrix phi = Matrix::identity(rep.dim, f);
    Scalar phi_l = Scalar::one(f);
    for (std::size_t i = 0; i < torus.n(); ++i) {
      const long e = torus.a()[i][j];
      if (e == 0) continue;
      const Scalar value = Scalar::one(f) + rep.character.a[i] * rep.character.omega[i];
      if (e < 0) {
        if (alpha_inv[i].rows() == 0) {
          auto inv = inverse(alpha[i]);
          if (!inv)
            throw DomainError("I + X_" + std::to_string(i + 1) + " Y_" + std::to_string(i + 1) +
                              " is singular but appears with a negative exponent");
          alpha_inv[i] = std::move(*inv);
        }
        phi = phi * alpha_inv[i].pow(static_cast<unsigned>(-e));
      } else {
        phi = phi * alpha[i].pow(static_cast<unsigned>(e));
      }
      phi_l *= value.pow(e);
    }
    if (phi.pow(l) != Matrix::scalar(rep.dim, phi_l))
      throw InvariantError("Phi(u_" + std::to_string(j + 1) + ")^l differs from " + phi_l.to_string() + " * Id");
    out.phi.push_back(std::move(phi));
    out.phi_l.push_back(std::move(phi_l));
  }
  return out;
}

WeightSpaceResult weight_space(const MatrixRep& rep, const TorusData& torus, const std::vector<Scalar>& eta) {
  require_eta(rep, torus, eta);
  MomentOperators ops = moment_operators(rep, torus);
  const std::size_t n = rep.dim;
  const Field f = rep.spec.field();
  EchelonBasis eq(n, f);
  for (std::size_t j = 0; j < ops.phi.size(); ++j) {
    const Matrix b = ops.phi[j] - Matrix::scalar(n, eta[j]);
    for (std::size_t r = 0; r < n; ++r) {
      Vector row(b.data().begin() + static_cast<long>(r * n), b.data().begin() + static_cast<long>((r + 1) * n));
      eq.insert(row);
    }
  }
  return {eq.null_space(), eta, std::move(ops.phi)};
}

KernelIdentityResult restriction_kernel_check(const MatrixRep& rep, const TorusData& torus,
                                              const std::vector<Scalar>& eta) {
  const WeightSpaceResult ws = weight_space(rep, torus, eta);
  const std::size_t n = rep.dim, m = ws.basis.size();
  if (m == 0) throw ParameterError("the eta-weight space is zero");
  const Field f = rep.spec.field();
  KernelIdentityResult out;
  out.weight_dimension = m;
  out.report.name = "restriction kernel identity";

  std::vector<Matrix> shifted;
  for (std::size_t j = 0; j < ws.moment_ops.size(); ++j) shifted.push_back(ws.moment_ops[j] - Matrix::scalar(n, eta[j]));

  // J is spanned by E_ab B_j: row a of that product is row b of B_j.
  EchelonBasis ideal(n * n, f);
  for (const auto& b : shifted)
    for (std::size_t r = 0; r < n; ++r) {
      SparseVector row;
      for (std::size_t c = 0; c < n; ++c)
        if (!b(r, c).is_zero()) row.emplace_back(c, b(r, c));
      if (row.empty()) continue;
      for (std::size_t a = 0; a < n; ++a) {
        SparseVector placed;
        for (const auto& [c, v] : row) placed.emplace_back(a * n + c, v);
        ideal.insert(std::move(placed));
      }
    }

  // f lies in ker(res) iff row a of f annihilates every basis vector of V_eta.
  EchelonBasis restriction(n * n, f);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& v : ws.basis) {
      SparseVector row;
      for (std::size_t c = 0; c < n; ++c)
        if (!v[c].is_zero()) row.emplace_back(a * n + c, v[c]);
      restriction.insert(std::move(row));
    }
  const auto kernel_basis = restriction.null_space();

  out.ideal_dimension = ideal.rank();
  out.kernel_dimension = kernel_basis.size();
  const std::size_t expected = n * (n - m);
  out.report.expect(out.ideal_dimension == expected,
                    "dim J = " + std::to_string(out.ideal_dimension) + ", expected " + std::to_string(expected));
  out.report.expect(out.kernel_dimension == expected, "dim ker(res) = " + std::to_string(out.kernel_dimension) +
                                                          ", expected " + std::to_string(expected));
  for (std::size_t j = 0; j < shifted.size(); ++j)
    for (const auto& v : ws.basis) {
      bool zero = true;
      for (const auto& x : shifted[j] * v) zero = zero && x.is_zero();
      out.report.expect(zero, "generator of J built from Phi(u_" + std::to_string(j + 1) + ") restricts to nonzero");
    }
  for (std::size_t k = 0; k < kernel_basis.size(); ++k)
    out.report.expect(ideal.contains(kernel_basis[k]), "kernel vector " + std::to_string(k) + " lies outside J");
  return out;
}

ReducedAlgebraResult reduced_endomorphism_algebra(const MatrixRep& rep, const TorusData& torus,
                                                  const std::vector<Scalar>& eta) {
  const WeightSpaceResult ws = weight_space(rep, torus, eta);
  const std::size_t n = rep.dim, m = ws.basis.size();
  if (m == 0) throw ParameterError("the eta-weight space is zero");
  const Field f = rep.spec.field();
  ReducedAlgebraResult out;
  out.weight_dimension = m;

  // Hom(V_eta, V) as n x m matrices g, coordinates g(a, k) at a * m + k.
  const Matrix id_m = Matrix::identity(m, f), id_n = Matrix::identity(n, f);
  std::vector<Matrix> post;
  for (const auto* gens : {&rep.x, &rep.y})
    for (const auto& g : *gens) post.push_back(kronecker(g, id_m));
  out.dimension = commutant_basis(post).size();

  // f -> (g -> g f); precomposition by f acts as I (x) f^T.
  EchelonBasis image(n * m * n * m, f);
  bool commutes = true;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < m; ++r) {
      Matrix unit_t(m, m, f);
      unit_t(r, p) = Scalar::one(f);
      Matrix w = kronecker(id_n, unit_t);
      for (const auto& g : post) commutes = commutes && g * w == w * g;
      image.insert(flatten(w));
      out.witness.push_back(std::move(w));
    }
  out.iso_verified = commutes && image.rank() == m * m && out.dimension == m * m;
  return out;
}

Scalar lth_root(const Scalar& v, int l) {
  if (v.is_rational()) {
    if (auto r = rational_root(v.to_rational(), l)) return Scalar::from_rational(v.field(), *r);
  }
  throw DomainError(v.to_string() + " has no rational " + std::to_string(l) + "-th root");
}

Scalar alpha_root(const RankOneData& slot, int l) {
  const Field f = Field::cyclotomic(l);
  if (slot.kind == RankOneData::Kind::Nilpotent) return Scalar::one(f);
  // alpha is a weighted cyclic shift with weights lambda q^i b_i.
  Scalar prod = Scalar::q_power(f, static_cast<long>(l) * (l - 1) / 2);
  for (const auto& b : slot.b) prod *= b;
  return slot.lambda * lth_root(prod, l);
}

std::vector<std::vector<Scalar>> compatible_etas(const std::vector<Scalar>& alpha_roots, const TorusData& torus,
                                                 int l) {
  if (alpha_roots.size() != torus.n()) throw ParameterError("one alpha root per coordinate expected");
  const Field f = cyclotomic_of(alpha_roots, l);
  std::vector<std::vector<Scalar>> out;
  for_each_residue(torus.n(), l, [&](const std::vector<long>& k) {
    std::vector<Scalar> t;
    for (std::size_t i = 0; i < torus.n(); ++i) t.push_back(alpha_roots[i] * Scalar::q_power(f, k[i]));
    auto eta = torus_point(t, torus);
    for (const auto& seen : out)
      if (seen == eta) return;
    out.push_back(std::move(eta));
  });
  return out;
}

std::vector<std::vector<Scalar>> cover_fiber_points(const std::vector<Scalar>& alpha_l_values,
                                                    const TorusData& torus, const std::vector<Scalar>& eta, int l,
                                                    std::size_t cap) {
  if (alpha_l_values.size() != torus.n()) throw ParameterError("one alpha^l value per coordinate expected");
  if (eta.size() != torus.d()) throw ParameterError("eta must have d entries");
  const Field f = cyclotomic_of(alpha_l_values, l);
  for (const auto& e : eta) {
    if (e.field() != f) throw ParameterError("eta must lie in Q(zeta_" + std::to_string(l) + ")");
    if (e.is_zero()) throw ParameterError("eta entries must be nonzero");
  }
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < torus.n(); ++i) {
    candidates *= static_cast<std::size_t>(l);
    if (candidates > cap)
      throw ParameterError("enumeration needs " + std::to_string(l) + "^" + std::to_string(torus.n()) +
                           " candidates, above the cap " + std::to_string(cap));
  }
  std::vector<Scalar> roots;
  for (const auto& v : alpha_l_values) {
    if (v.is_zero()) throw ParameterError("alpha^l values must be nonzero");
    roots.push_back(lth_root(v, l));
  }
  std::vector<std::vector<Scalar>> out;
  for_each_residue(torus.n(), l, [&](const std::vector<long>& k) {
    std::vector<Scalar> t;
    for (std::size_t i = 0; i < torus.n(); ++i) t.push_back(roots[i] * Scalar::q_power(f, k[i]));
    if (torus_point(t, torus) == eta) out.push_back(std::move(t));
  });
  return out;
}

}  // namespace qweyl
