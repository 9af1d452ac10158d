#include "qweyl/root_of_unity.hpp"

#include <deque>
#include <map>
#include <optional>
#include <string>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

void require_root_of_unity(const AlgebraSpec& spec, const char* what) {
  if (spec.field().kind() != FieldKind::Cyclotomic)
    throw ParameterError(std::string(what) + " requires a cyclotomic coefficient field");
  if (spec.normalization() != Normalization::Rescaled)
    throw ParameterError(std::string(what) + " requires the rescaled presentation");
  if (!spec.is_single_parameter()) throw ParameterError(std::string(what) + " requires the single-parameter preset");
}

std::vector<PbwElement> generators(const AlgebraSpec& spec) {
  std::vector<PbwElement> g;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    g.push_back(PbwElement::x(spec, i));
    g.push_back(PbwElement::d(spec, i));
  }
  return g;
}

}  // namespace

AlgebraSpec root_of_unity_spec(std::size_t n, int l) {
  return AlgebraSpec::single_parameter(n, Normalization::Rescaled, Field::cyclotomic(l));
}

bool is_central(const PbwElement& u) {
  for (const auto& g : generators(u.spec()))
    if (g * u != u * g) return false;
  return true;
}

std::vector<PbwElement> centralizer_basis(const AlgebraSpec& spec, unsigned bound) {
  const std::size_t n = spec.rank();
  // Commutators preserve the grading shift, so each grading class is solved separately.
  std::map<IntVector, std::vector<Monomial>> classes;
  std::vector<unsigned> e(2 * n, 0);
  while (true) {
    Monomial m(std::vector<unsigned>(e.begin(), e.begin() + static_cast<long>(n)),
               std::vector<unsigned>(e.begin() + static_cast<long>(n), e.end()));
    classes[m.grading()].push_back(m);
    std::size_t pos = 0;
    while (pos < e.size() && e[pos] == bound) e[pos++] = 0;
    if (pos == e.size()) break;
    ++e[pos];
  }
  const auto gens = generators(spec);
  std::vector<PbwElement> basis;
  for (const auto& [grade, monos] : classes) {
    std::map<std::pair<std::size_t, Monomial>, SparseVector> rows;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const PbwElement m = PbwElement::monomial(spec, monos[k], Scalar::one(spec.field()));
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const PbwElement comm = gens[g] * m - m * gens[g];
        for (const auto& [mono, c] : comm.terms()) rows[{g, mono}].emplace_back(k, c);
      }
    }
    EchelonBasis eq(monos.size(), spec.field());
    for (auto& [key, row] : rows) eq.insert(std::move(row));
    for (const auto& v : eq.null_space()) {
      PbwElement u(spec);
      for (std::size_t k = 0; k < v.size(); ++k) u.add_term(monos[k], v[k]);
      basis.push_back(std::move(u));
    }
  }
  return basis;
}

CheckReport verify_delta_power(const AlgebraSpec& spec) {
  require_root_of_unity(spec, "verify_delta_power");
  const int l = spec.field().l();
  CheckReport report{"Delta^l identity", 0, {}};
  PbwElement delta = PbwElement::one(spec), rhs = PbwElement::one(spec);
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    delta = delta * PbwElement::euler(spec, i);
    rhs = rhs * (PbwElement::one(spec) +
                 PbwElement::x(spec, i, static_cast<unsigned>(l)) * PbwElement::d(spec, i, static_cast<unsigned>(l)));
  }
  const PbwElement lhs = delta.pow(static_cast<unsigned>(l));
  report.expect(lhs == rhs, "Delta^" + std::to_string(l) + " = " + to_string(lhs));
  return report;
}

namespace {

MatrixRep finish_rank1(AlgebraSpec spec, Matrix x, Matrix y) {
  MatrixRep rep{std::move(spec), x.rows(), {std::move(x)}, {std::move(y)}, {}};
  const unsigned l = static_cast<unsigned>(rep.spec.field().l());
  auto a = rep.x[0].pow(l).scalar_value();
  auto w = rep.y[0].pow(l).scalar_value();
  if (!a || !w) throw InvariantError("l-th powers of the rank-one matrices are not scalar");
  rep.character = {{*a}, {*w}};
  CheckReport r = verify_relations(rep);
  if (!r.passed()) throw InvariantError("rank-one representation violates " + r.failures.front());
  return rep;
}

}  // namespace

MatrixRep build_irrep_rank1(const Scalar& lambda, const std::vector<Scalar>& b, int l) {
  AlgebraSpec spec = root_of_unity_spec(1, l);
  const Field f = spec.field();
  if (lambda.field() != f) throw ParameterError("lambda must lie in Q(zeta_" + std::to_string(l) + ")");
  if (lambda.is_zero()) throw ParameterError("lambda must be nonzero");
  if (b.size() != static_cast<std::size_t>(l)) throw ParameterError("b must have l entries");
  for (const auto& v : b)
    if (v.field() != f) throw ParameterError("b entries must lie in Q(zeta_" + std::to_string(l) + ")");
  const std::size_t n = static_cast<std::size_t>(l);
  Matrix x(n, n, f), y(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar li = lambda * spec.q_power(static_cast<long>(i));
    x(i, i) = li;
    y(i, i) = -li.inverse();
    y(i, (i + 1) % n) += b[i];
  }
  return finish_rank1(std::move(spec), std::move(x), std::move(y));
}

MatrixRep build_irrep_nilpotent(int l) {
  AlgebraSpec spec = root_of_unity_spec(1, l);
  const Field f = spec.field();
  const std::size_t n = static_cast<std::size_t>(l);
  Matrix x(n, n, f), y(n, n, f);
  for (std::size_t m = 0; m + 1 < n; ++m) x(m + 1, m) = Scalar::one(f);
  for (std::size_t m = 1; m < n; ++m) y(m - 1, m) = spec.q_power(static_cast<long>(m)) - Scalar::one(f);
  return finish_rank1(std::move(spec), std::move(x), std::move(y));
}

Matrix euler_matrix(const MatrixRep& rep, std::size_t i) {
  return Matrix::identity(rep.dim, rep.spec.field()) + rep.x.at(i) * rep.y.at(i);
}

namespace {

// Invertible D with D X = q X D and D Y = q^{-1} Y D on one slot.
Matrix twist_for_slot(const MatrixRep& slot) {
  Matrix alpha = euler_matrix(slot, 0);
  if (inverse(alpha)) return alpha;
  const Field f = slot.spec.field();
  const std::size_t n = slot.dim;
  const auto ker = commutant_basis({slot.x[0], slot.y[0]}, {slot.spec.q_power(1), slot.spec.q_power(-1)});
  for (const auto& d : ker)
    if (inverse(d)) return d;
  if (!ker.empty()) {
    Matrix sum(n, n, f);
    for (std::size_t k = 0; k < ker.size(); ++k) sum += Scalar::from_integer(f, static_cast<long>(k + 1)) * ker[k];
    if (inverse(sum)) return sum;
  }
  throw InvariantError("no invertible matrix q-commutes with this slot's generators; its Euler matrix is singular");
}

}  // namespace

MatrixRep build_irrep(const std::vector<RankOneData>& slots, int l) {
  if (slots.empty()) throw ParameterError("build_irrep needs at least one slot");
  std::vector<MatrixRep> base;
  for (const auto& s : slots)
    base.push_back(s.kind == RankOneData::Kind::Nilpotent ? build_irrep_nilpotent(l)
                                                           : build_irrep_rank1(s.lambda, s.b, l));
  if (base.size() == 1) return base.front();
  AlgebraSpec spec = root_of_unity_spec(slots.size(), l);
  const Field f = spec.field();
  const std::size_t n = slots.size();
  // Twists normally sit on the slots before k. When one of those slots admits
  // no invertible twist, the mirrored layout (inverse twists after k) is tried.
  std::vector<std::optional<Matrix>> twist(n);
  std::optional<std::string> first_failure;
  for (std::size_t s = 0; s < n; ++s) {
    try {
      twist[s] = twist_for_slot(base[s]);
    } catch (const InvariantError& e) {
      if (!first_failure) first_failure = "slot " + std::to_string(s + 1) + ": " + e.what();
    }
  }
  auto available = [&](std::size_t from, std::size_t to) {
    for (std::size_t s = from; s < to; ++s)
      if (!twist[s]) return false;
    return true;
  };
  const bool leading = available(0, n - 1);
  if (!leading && !available(1, n)) throw InvariantError("tensor construction failed at " + *first_failure);
  std::vector<Matrix> twist_x(n), twist_y(n);
  for (std::size_t s = 0; s < n; ++s)
    if (twist[s]) {
      twist_x[s] = leading ? *twist[s] : *inverse(*twist[s]);
      twist_y[s] = leading ? *inverse(*twist[s]) : *twist[s];
    }
  const Matrix id = Matrix::identity(static_cast<std::size_t>(l), f);
  MatrixRep rep{spec, 1, {}, {}, {}};
  for (std::size_t s = 0; s < n; ++s) rep.dim *= static_cast<std::size_t>(l);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix xk = Matrix::identity(1, f), yk = Matrix::identity(1, f);
    for (std::size_t s = 0; s < n; ++s) {
      const bool twisted = leading ? s < k : s > k;
      const Matrix& xs = s == k ? base[s].x[0] : (twisted ? twist_x[s] : id);
      const Matrix& ys = s == k ? base[s].y[0] : (twisted ? twist_y[s] : id);
      xk = kronecker(xk, xs);
      yk = kronecker(yk, ys);
    }
    rep.x.push_back(std::move(xk));
    rep.y.push_back(std::move(yk));
  }
  for (std::size_t k = 0; k < n; ++k) {
    auto a = rep.x[k].pow(static_cast<unsigned>(l)).scalar_value();
    auto w = rep.y[k].pow(static_cast<unsigned>(l)).scalar_value();
    if (!a || !w) throw InvariantError("X_" + std::to_string(k + 1) + "^l or Y_" + std::to_string(k + 1) + "^l is not scalar");
    rep.character.a.push_back(*a);
    rep.character.omega.push_back(*w);
  }
  CheckReport r = verify_relations(rep);
  if (!r.passed()) throw InvariantError("tensor representation violates " + r.failures.front());
  return rep;
}

CheckReport verify_relations(const MatrixRep& rep) {
  const AlgebraSpec& spec = rep.spec;
  const std::size_t n = spec.rank();
  const Field f = spec.field();
  CheckReport report{"representation relations", 0, {}};
  const Matrix id = Matrix::identity(rep.dim, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::string tag = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (i != j) {
        const Scalar c = spec.q_power(spec.xx_exponent(i, j));
        report.expect(rep.x[i] * rep.x[j] == c * (rep.x[j] * rep.x[i]), "X_i X_j relation at " + tag);
        report.expect(rep.y[i] * rep.y[j] == c * (rep.y[j] * rep.y[i]), "Y_i Y_j relation at " + tag);
        report.expect(rep.y[i] * rep.x[j] == spec.q_power(spec.dx_exponent(i, j)) * (rep.x[j] * rep.y[i]),
                      "Y_i X_j relation at " + tag);
      } else {
        report.expect(rep.y[i] * rep.x[i] == spec.q_power(spec.diagonal_exponent(i)) * (rep.x[i] * rep.y[i]) +
                                                 spec.diagonal_constant(i) * id,
                      "Y_i X_i relation at " + tag);
      }
    }
  const unsigned l = static_cast<unsigned>(f.l());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    if (i < rep.character.a.size())
      report.expect(rep.x[i].pow(l) == Matrix::scalar(rep.dim, rep.character.a[i]), "X_" + k + "^l = a_" + k);
    if (i < rep.character.omega.size())
      report.expect(rep.y[i].pow(l) == Matrix::scalar(rep.dim, rep.character.omega[i]), "Y_" + k + "^l = omega_" + k);
  }
  return report;
}

std::size_t commutant_dimension(const MatrixRep& rep) {
  std::vector<Matrix> ops = rep.x;
  ops.insert(ops.end(), rep.y.begin(), rep.y.end());
  return commutant_basis(ops).size();
}

std::size_t generated_algebra_dimension(const MatrixRep& rep) {
  const Field f = rep.spec.field();
  EchelonBasis span(rep.dim * rep.dim, f);
  std::deque<Matrix> queue;
  const Matrix id = Matrix::identity(rep.dim, f);
  span.insert(flatten(id));
  queue.push_back(id);
  while (!queue.empty()) {
    Matrix w = std::move(queue.front());
    queue.pop_front();
    for (const auto* gens : {&rep.x, &rep.y})
      for (const auto& g : *gens) {
        Matrix next = g * w;
        if (span.insert(flatten(next))) queue.push_back(std::move(next));
      }
  }
  return span.rank();
}

bool azumaya_membership(const CentralCharacter& chi) {
  if (chi.a.size() != chi.omega.size()) throw ParameterError("character vectors differ in length");
  for (std::size_t i = 0; i < chi.a.size(); ++i)
    if ((Scalar::one(chi.a[i].field()) + chi.a[i] * chi.omega[i]).is_zero()) return false;
  return true;
}

CheckReport verify_freeness(const AlgebraSpec& spec, unsigned central_bound) {
  require_root_of_unity(spec, "verify_freeness");
  const std::size_t n = spec.rank();
  const unsigned l = static_cast<unsigned>(spec.field().l());
  CheckReport report{"l-center freeness", 0, {}};
  std::map<Monomial, std::size_t> index;
  auto sparse = [&](const PbwElement& u) {
    SparseVector v;
    for (const auto& [m, c] : u.terms()) {
      auto it = index.try_emplace(m, index.size()).first;
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };
  // Dimension is only used for null spaces, which are not needed here.
  EchelonBasis all(0, spec.field());
  auto box = [&](unsigned hi) {
    std::vector<Exponents> out;
    Exponents e(2 * n, 0);
    while (true) {
      out.push_back(e);
      std::size_t pos = 0;
      while (pos < e.size() && e[pos] == hi) e[pos++] = 0;
      if (pos == e.size()) break;
      ++e[pos];
    }
    return out;
  };
  const auto local = box(l - 1);
  for (const auto& uv : box(central_bound)) {
    Exponents za(n), zb(n);
    for (std::size_t i = 0; i < n; ++i) {
      za[i] = l * uv[i];
      zb[i] = l * uv[n + i];
    }
    const PbwElement z = PbwElement::monomial(spec, Monomial(za, zb), Scalar::one(spec.field()));
    EchelonBasis block(0, spec.field());
    std::size_t independent = 0;
    for (const auto& rs : local) {
      Exponents r(rs.begin(), rs.begin() + static_cast<long>(n)), s(rs.begin() + static_cast<long>(n), rs.end());
      const SparseVector v = sparse(PbwElement::monomial(spec, Monomial(r, s), Scalar::one(spec.field())) * z);
      if (block.insert(v)) ++independent;
      all.insert(v);
    }
    std::string tag = "(";
    for (std::size_t i = 0; i < uv.size(); ++i) tag += (i ? "," : "") + std::to_string(uv[i]);
    report.expect(independent == local.size(),
                  "block " + tag + ") has rank " + std::to_string(independent) + " of " + std::to_string(local.size()));
  }
  report.expect(all.rank() == local.size() * box(central_bound).size(), "blocks are jointly independent");
  return report;
}

}  // namespace qweyl
