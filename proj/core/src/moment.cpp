#include "qweyl/moment.hpp"

#include <cstdlib>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// col_k -= f * col_c in both H and U.
void column_axpy(HermiteForm& hf, std::size_t k, std::size_t c, long f) {
  if (f == 0) return;
  for (auto& row : hf.h) row[k] -= f * row[c];
  for (auto& row : hf.u) row[k] -= f * row[c];
}

void column_swap(HermiteForm& hf, std::size_t a, std::size_t b) {
  for (auto& row : hf.h) std::swap(row[a], row[b]);
  for (auto& row : hf.u) std::swap(row[a], row[b]);
}

void column_negate(HermiteForm& hf, std::size_t k) {
  for (auto& row : hf.h) row[k] = -row[k];
  for (auto& row : hf.u) row[k] = -row[k];
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t d = n ? a[0].size() : 0;
  HermiteForm hf;
  hf.h = a;
  hf.u.assign(d, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) hf.u[i][i] = 1;
  std::size_t col = 0;
  for (std::size_t r = n; r-- > 0 && col < d;) {
    // Euclid across columns col..d-1 in row r.
    while (true) {
      std::size_t best = d;
      for (std::size_t k = col; k < d; ++k)
        if (hf.h[r][k] != 0 && (best == d || std::labs(hf.h[r][k]) < std::labs(hf.h[r][best]))) best = k;
      if (best == d) break;
      if (best != col) column_swap(hf, best, col);
      bool done = true;
      for (std::size_t k = col + 1; k < d; ++k) {
        if (hf.h[r][k] == 0) continue;
        column_axpy(hf, k, col, floor_div(hf.h[r][k], hf.h[r][col]));
        if (hf.h[r][k] != 0) done = false;
      }
      if (done) break;
    }
    if (hf.h[r][col] == 0) continue;
    if (hf.h[r][col] < 0) column_negate(hf, col);
    for (std::size_t k = 0; k < col; ++k) column_axpy(hf, k, col, floor_div(hf.h[r][k], hf.h[r][col]));
    hf.pivot_rows.push_back(r);
    ++col;
  }
  return hf;
}

TorusData::TorusData(IntMatrix a) : a_(std::move(a)) {
  n_ = a_.size();
  if (n_ == 0) throw ParameterError("A must have at least one row");
  d_ = a_[0].size();
  for (const auto& row : a_)
    if (row.size() != d_) throw ParameterError("A rows must all have length d");
  if (d_ > n_) throw ParameterError("A must satisfy d <= n");
  hnf_ = hermite_normal_form(a_);
  if (hnf_.pivot_rows.size() != d_) throw ParameterError("A must have full column rank");
}

TorusData TorusData::trivial(std::size_t n) { return TorusData(IntMatrix(n, IntVector{})); }

IntVector TorusData::column(std::size_t j) const {
  IntVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = a_[i][j];
  return c;
}

std::pair<IntVector, IntVector> TorusData::reduce_exponent(IntVector c) const {
  if (c.size() != n_) throw ParameterError("exponent vector length must equal n");
  IntVector t(d_, 0);
  for (std::size_t j = 0; j < d_; ++j) {
    const std::size_t r = hnf_.pivot_rows[j];
    const long f = floor_div(c[r], hnf_.h[r][j]);
    if (f == 0) continue;
    t[j] = f;
    for (std::size_t i = 0; i < n_; ++i) c[i] -= f * hnf_.h[i][j];
  }
  // c_old = c + H t = c + A (U t).
  IntVector s(d_, 0);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) s[i] += hnf_.u[i][j] * t[j];
  return {std::move(c), std::move(s)};
}

ReductionDatum::ReductionDatum(TorusData t, std::vector<Scalar> e, int order, IntVector character)
    : torus(std::move(t)), eta(std::move(e)), l(order), chi(std::move(character)) {
  if (eta.size() != torus.d()) throw ParameterError("eta must have d entries");
  for (std::size_t j = 0; j < eta.size(); ++j)
    if (eta[j].is_zero()) throw ParameterError("eta_" + std::to_string(j + 1) + " must be nonzero");
  if (!chi.empty() && chi.size() != torus.d()) throw ParameterError("chi must have d entries");
}

LocalizedElement comoment_torus(const IntVector& c, const AlgebraSpec& spec) {
  if (c.size() != spec.rank()) throw ParameterError("torus exponent length must equal n");
  IntVector pos(c.size()), neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    pos[i] = std::max(c[i], 0L);
    neg[i] = std::max(-c[i], 0L);
  }
  return LocalizedElement(euler_power(spec, pos), neg);
}

LocalizedElement comoment_subtorus(const IntVector& e, const TorusData& torus, const AlgebraSpec& spec) {
  if (e.size() != torus.d()) throw ParameterError("subtorus exponent length must equal d");
  if (torus.n() != spec.rank()) throw ParameterError("torus rank must equal the algebra rank");
  IntVector c(torus.n(), 0);
  for (std::size_t i = 0; i < torus.n(); ++i)
    for (std::size_t j = 0; j < torus.d(); ++j) c[i] += torus.a()[i][j] * e[j];
  return comoment_torus(c, spec);
}

CheckReport verify_moment_identity(const TorusData& torus, const AlgebraSpec& spec) {
  const std::size_t n = spec.rank();
  if (torus.n() != n) throw ParameterError("torus rank must equal the algebra rank");
  CheckReport report{"quantum moment identity", 0, {}};

  struct Probe {
    std::string name;
    LocalizedElement element;
    IntVector degree;
  };
  std::vector<Probe> probes;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector deg(n, 0);
    deg[j] = 1;
    probes.push_back({"x" + std::to_string(j + 1), LocalizedElement(PbwElement::x(spec, j)), deg});
    deg[j] = -1;
    probes.push_back({"d" + std::to_string(j + 1), LocalizedElement(PbwElement::d(spec, j)), deg});
    probes.push_back({"a" + std::to_string(j + 1), LocalizedElement(PbwElement::euler(spec, j)), IntVector(n, 0)});
  }

  auto check = [&](const std::string& who, const LocalizedElement& phi, const LocalizedElement& phi_inv,
                   const IntVector& weights) {
    report.expect(localized_equal(localized_multiply(phi, phi_inv), LocalizedElement(PbwElement::one(spec))),
                  who + " is not inverted by its antipode image");
    for (const auto& p : probes) {
      long e = 0;
      for (std::size_t i = 0; i < n; ++i) e += weights[i] * spec.relation_exponent(i, i) * p.degree[i];
      LocalizedElement lhs = localized_multiply(localized_multiply(phi, p.element), phi_inv);
      LocalizedElement rhs(spec.q_power(e) * p.element.numerator(), p.element.denom());
      report.expect(localized_equal(lhs, rhs), who + " conjugation on " + p.name);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    IntVector c(n, 0);
    c[i] = 1;
    IntVector mc(n, 0);
    mc[i] = -1;
    check("z" + std::to_string(i + 1), comoment_torus(c, spec), comoment_torus(mc, spec), c);
  }
  for (std::size_t j = 0; j < torus.d(); ++j) {
    IntVector e(torus.d(), 0), me(torus.d(), 0);
    e[j] = 1;
    me[j] = -1;
    check("u" + std::to_string(j + 1), comoment_subtorus(e, torus, spec), comoment_subtorus(me, torus, spec),
          torus.column(j));
  }
  return report;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> classical_moment_eval(const std::vector<Scalar>& p,
                                                                        const std::vector<Scalar>& w,
                                                                        const TorusData& torus) {
  const std::size_t n = torus.n();
  if (p.size() != n || w.size() != n) throw ParameterError("p and w must have n entries");
  std::vector<Scalar> t;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar v = Scalar::one(p[i].field()) + p[i] * w[i];
    if (v.is_zero())
      throw DomainError("1 + p_" + std::to_string(i + 1) + " w_" + std::to_string(i + 1) +
                        " vanishes; the point is off the open locus");
    t.push_back(std::move(v));
  }
  std::vector<Scalar> k;
  for (std::size_t j = 0; j < torus.d(); ++j) {
    Scalar acc = Scalar::one(t.front().field());
    for (std::size_t i = 0; i < n; ++i) acc *= t[i].pow(torus.a()[i][j]);
    k.push_back(std::move(acc));
  }
  return {std::move(t), std::move(k)};
}

void ReducedElement::add_term(const CanonicalMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ReducedElement& ReducedElement::operator+=(const ReducedElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ReducedElement operator*(const Scalar& c, ReducedElement a) {
  if (c.is_zero()) {
    a.terms_.clear();
    return a;
  }
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

namespace {

void require_datum(const AlgebraSpec& spec, const ReductionDatum& datum) {
  if (spec.normalization() != Normalization::Rescaled)
    throw ParameterError("moment reduction requires the rescaled presentation");
  if (datum.torus.n() != spec.rank()) throw ParameterError("torus rank must equal the algebra rank");
  for (const auto& e : datum.eta)
    if (e.field() != spec.field()) throw ParameterError("eta must lie in the algebra's coefficient field");
}

// Adds coef * x^a d^b alpha^c to out in canonical form.
void reduce_term(const AlgebraSpec& spec, const ReductionDatum& datum, Exponents a, Exponents b, IntVector c,
                 const Scalar& coef, EliminationOrder order, ReducedElement& out) {
  if (coef.is_zero()) return;
  const std::size_t n = spec.rank();
  std::size_t pick = n;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order == EliminationOrder::Ascending ? k : n - 1 - k;
    if (a[i] > 0 && b[i] > 0) {
      pick = i;
      break;
    }
  }
  if (pick == n) {
    auto [r, s] = datum.torus.reduce_exponent(std::move(c));
    Scalar scale = coef;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j] != 0) scale *= datum.eta[j].pow(s[j]);
    out.add_term(CanonicalMonomial{std::move(a), std::move(b), std::move(r)}, scale);
    return;
  }
  const std::size_t i = pick;
  // x^a = q^{.} x^{a - e_i} x_i and d^b = q^{.} d_i d^{b - e_i}; then x_i d_i = alpha_i - 1
  // and alpha_i d^{b'} = q_ii^{-b'_i} d^{b'} alpha_i.
  long e = 0;
  for (std::size_t j = i + 1; j < n; ++j) e += spec.xx_exponent(i, j) * static_cast<long>(a[j]);
  for (std::size_t j = 0; j < i; ++j) e += spec.xx_exponent(j, i) * static_cast<long>(b[j]);
  a[i] -= 1;
  b[i] -= 1;
  const Scalar scaled = e == 0 ? coef : coef * spec.q_power(e);
  IntVector c_up = c;
  c_up[i] += 1;
  reduce_term(spec, datum, a, b, std::move(c_up),
              scaled * spec.q_power(-spec.relation_exponent(i, i) * static_cast<long>(b[i])), order, out);
  reduce_term(spec, datum, std::move(a), std::move(b), std::move(c), -scaled, order, out);
}

}  // namespace

ReducedElement moment_ideal_reduce(const LocalizedElement& u, const ReductionDatum& datum, EliminationOrder order) {
  require_datum(u.spec(), datum);
  ReducedElement out(u.spec());
  IntVector c(u.denom().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -u.denom()[i];
  for (const auto& [m, coef] : u.numerator().terms())
    reduce_term(u.spec(), datum, m.x_exponents(), m.d_exponents(), c, coef, order, out);
  return out;
}

ReducedElement moment_ideal_reduce(const ReducedElement& u, const ReductionDatum& datum, EliminationOrder order) {
  require_datum(u.spec(), datum);
  ReducedElement out(u.spec());
  for (const auto& [m, coef] : u.terms()) reduce_term(u.spec(), datum, m.a, m.b, m.c, coef, order, out);
  return out;
}

ReducedElement reduced_monomial(const AlgebraSpec& spec, const CanonicalMonomial& m) {
  ReducedElement r(spec);
  r.add_term(m, Scalar::one(spec.field()));
  return r;
}

bool is_invariant(const CanonicalMonomial& m, const TorusData& torus, const AlgebraSpec& spec) {
  for (std::size_t j = 0; j < torus.d(); ++j) {
    long s = 0;
    for (std::size_t i = 0; i < torus.n(); ++i)
      s += torus.a()[i][j] * spec.relation_exponent(i, i) * (static_cast<long>(m.a[i]) - static_cast<long>(m.b[i]));
    if (s != 0) return false;
  }
  return true;
}

std::vector<CanonicalMonomial> invariant_monomials(const TorusData& torus, const AlgebraSpec& spec,
                                                   unsigned degree_bound) {
  const std::size_t n = spec.rank();
  if (torus.n() != n) throw ParameterError("torus rank must equal the algebra rank");
  // Candidate alpha exponents: integer vectors with sum |c_i| <= bound that are
  // their own coset representatives.
  std::vector<std::pair<IntVector, unsigned>> alphas;
  for (const auto& mag : exponent_vectors(n, degree_bound)) {
    const unsigned weight = [&] {
      unsigned s = 0;
      for (unsigned v : mag) s += v;
      return s;
    }();
    std::size_t nonzero = 0;
    for (unsigned v : mag) nonzero += v != 0;
    for (std::size_t signs = 0; signs < (std::size_t{1} << nonzero); ++signs) {
      IntVector c(n);
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = mag[i];
        if (mag[i] != 0 && ((signs >> bit++) & 1U)) c[i] = -c[i];
      }
      if (torus.reduce_exponent(c).first == c) alphas.emplace_back(std::move(c), weight);
    }
  }
  std::vector<CanonicalMonomial> out;
  for (const auto& ab : exponent_vectors(2 * n, degree_bound)) {
    Exponents a(ab.begin(), ab.begin() + static_cast<long>(n)), b(ab.begin() + static_cast<long>(n), ab.end());
    bool mixed = false;
    unsigned deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mixed = mixed || (a[i] > 0 && b[i] > 0);
      deg += a[i] + b[i];
    }
    if (mixed) continue;
    CanonicalMonomial probe{a, b, IntVector(n, 0)};
    if (!is_invariant(probe, torus, spec)) continue;
    for (const auto& [c, w] : alphas)
      if (deg + w <= degree_bound) out.push_back(CanonicalMonomial{a, b, c});
  }
  return out;
}

ReducedElement reduced_product(const ReducedElement& u, const ReducedElement& v, const ReductionDatum& datum) {
  const AlgebraSpec& spec = u.spec();
  if (spec != v.spec()) throw ParameterError("algebra mismatch in reduced_product");
  require_datum(spec, datum);
  for (const auto* x : {&u, &v})
    for (const auto& [m, c] : x->terms())
      if (!is_invariant(m, datum.torus, spec))
        throw ParameterError("reduced_product expects invariant operands; " +
                             monomial_to_string(Monomial(m.a, m.b)) + " is not invariant");
  ReducedElement out(spec);
  const std::size_t n = spec.rank();
  for (const auto& [m1, c1] : u.terms())
    for (const auto& [m2, c2] : v.terms()) {
      // alpha^{c1} x^{a2} d^{b2} = sigma^{c1}(x^{a2} d^{b2}) alpha^{c1}.
      long e = 0;
      IntVector c(n);
      for (std::size_t i = 0; i < n; ++i) {
        e += m1.c[i] * spec.relation_exponent(i, i) * (static_cast<long>(m2.a[i]) - static_cast<long>(m2.b[i]));
        c[i] = m1.c[i] + m2.c[i];
      }
      PbwElement::Terms prod;
      multiply_monomials(spec, Monomial(m1.a, m1.b), Monomial(m2.a, m2.b), c1 * c2 * spec.q_power(e), prod);
      for (const auto& [m, coef] : prod)
        reduce_term(spec, datum, m.x_exponents(), m.d_exponents(), c, coef, EliminationOrder::Ascending, out);
    }
  return out;
}

std::string to_string(const ReducedElement& u) {
  std::vector<std::string> terms;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const CanonicalMonomial& m = it->first;
    std::string mono = monomial_to_string(Monomial(m.a, m.b));
    std::ostringstream alpha;
    for (std::size_t i = 0; i < m.c.size(); ++i) {
      if (m.c[i] == 0) continue;
      if (alpha.tellp() > 0) alpha << "*";
      alpha << "a" << (i + 1);
      if (m.c[i] != 1) alpha << "^" << m.c[i];
    }
    if (!alpha.str().empty()) mono = mono == "1" ? alpha.str() : mono + "*" + alpha.str();
    terms.push_back(format_term(it->second.to_string(), mono));
  }
  return join_terms(terms);
}

}  // namespace qweyl
