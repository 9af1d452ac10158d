#include "qweyl/hopf.hpp"

#include <mutex>

#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"

namespace qweyl {

IntVector plane_degree(Side side, const Exponents& e) {
  IntVector d(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) d[i] = side == Side::X ? static_cast<long>(e[i]) : -static_cast<long>(e[i]);
  return d;
}

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_unit(const Exponents& e) {
  for (unsigned v : e)
    if (v) return false;
  return true;
}

unsigned total(const Exponents& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

std::size_t first_nonzero(const Exponents& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) return i;
  return e.size();
}

Exponents unit_vector(std::size_t n, std::size_t i) {
  Exponents e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

void PlaneElement::add(const Exponents& e, const Scalar& c) { accumulate(terms, e, c); }
void TensorElement::add(const Exponents& a, const Exponents& b, const Scalar& c) {
  accumulate(terms, std::make_pair(a, b), c);
}
void DoubleElement::add(const Exponents& a, const Exponents& b, const Scalar& c) {
  accumulate(terms, std::make_pair(a, b), c);
}

struct BraidedHopf::Cache {
  std::mutex mu;
  std::map<std::pair<Side, Exponents>, TensorElement> coproducts;
  std::map<Exponents, Scalar> pairings;
  std::map<Exponents, Scalar> pairings_by_coproduct;
};

BraidedHopf::BraidedHopf(AlgebraSpec spec, ActionBraiding action)
    : spec_(std::move(spec)), action_(action), cache_(std::make_shared<Cache>()) {}

namespace {

// Scalar exponent of x^{e1} x^{e2} = q^{k} x^{e1+e2} (the same on the dual side).
long plane_exponent(const AlgebraSpec& spec, const Exponents& e1, const Exponents& e2) {
  const IntMatrix& m = spec.matrix();
  long k = 0;
  for (std::size_t i = 0; i < e1.size(); ++i) {
    if (!e1[i]) continue;
    for (std::size_t j = 0; j < i; ++j) k += m[i][j] * static_cast<long>(e1[i]) * static_cast<long>(e2[j]);
  }
  return k;
}

}  // namespace

PlaneElement BraidedHopf::plane_product(const PlaneElement& a, const PlaneElement& b) const {
  if (a.side != b.side) throw ParameterError("plane product across different sides");
  PlaneElement r{a.side, {}};
  for (const auto& [e1, c1] : a.terms)
    for (const auto& [e2, c2] : b.terms) r.add(add(e1, e2), c1 * c2 * spec_.q_power(plane_exponent(spec_, e1, e2)));
  return r;
}

TensorElement BraidedHopf::tensor_product(const TensorElement& u, const TensorElement& v) const {
  if (u.left != v.left || u.right != v.right) throw ParameterError("tensor product across different sides");
  TensorElement r{u.left, u.right, {}};
  for (const auto& [ab, c1] : u.terms)
    for (const auto& [cd, c2] : v.terms) {
      const auto& [a, b] = ab;
      const auto& [c, d] = cd;
      long k = spec_.braiding_exponent(plane_degree(u.right, b), plane_degree(v.left, c));
      k += plane_exponent(spec_, a, c) + plane_exponent(spec_, b, d);
      r.add(add(a, c), add(b, d), c1 * c2 * spec_.q_power(k));
    }
  return r;
}

const TensorElement& BraidedHopf::coproduct(Side side, const Exponents& e) const {
  if (e.size() != spec_.rank()) throw ParameterError("exponent vector length must equal the rank");
  auto key = std::make_pair(side, e);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->coproducts.find(key);
    if (it != cache_->coproducts.end()) return it->second;
  }
  const std::size_t n = spec_.rank();
  const Field f = spec_.field();
  TensorElement result{side, side, {}};
  if (is_unit(e)) {
    result.add(e, e, Scalar::one(f));
  } else {
    // Peel the last generator: x^e = x^{e - e_k} x_k with no reordering.
    std::size_t k = n;
    while (e[k - 1] == 0) --k;
    Exponents rest = e;
    rest[k - 1] -= 1;
    const Exponents zero(n, 0), g = unit_vector(n, k - 1);
    TensorElement delta_g{side, side, {}};
    delta_g.add(g, zero, Scalar::one(f));
    delta_g.add(zero, g, Scalar::one(f));
    result = tensor_product(coproduct(side, rest), delta_g);
  }
  std::lock_guard lock(cache_->mu);
  return cache_->coproducts.emplace(std::move(key), std::move(result)).first->second;
}

Scalar BraidedHopf::counit(const Exponents& e) const {
  return is_unit(e) ? Scalar::one(spec_.field()) : Scalar::zero(spec_.field());
}

PlaneElement BraidedHopf::antipode(Side side, const Exponents& e) const {
  const std::size_t n = spec_.rank();
  PlaneElement r{side, {}};
  if (is_unit(e)) {
    r.add(e, Scalar::one(spec_.field()));
    return r;
  }
  // S(g rest) = q^{deg g . M . deg rest} S(rest) S(g), S(g) = -g.
  const std::size_t i = first_nonzero(e);
  Exponents rest = e;
  rest[i] -= 1;
  const Exponents g = unit_vector(n, i);
  PlaneElement sg{side, {}};
  sg.add(g, -Scalar::one(spec_.field()));
  PlaneElement prod = plane_product(antipode(side, rest), sg);
  const Scalar twist = spec_.q_power(spec_.braiding_exponent(plane_degree(side, g), plane_degree(side, rest)));
  for (auto& [m, c] : prod.terms) c *= twist;
  return prod;
}

Scalar BraidedHopf::pairing(const Exponents& f, const Exponents& h) const {
  const Field fld = spec_.field();
  if (f != h) return Scalar::zero(fld);
  const unsigned deg = total(f);
  if (deg == 0) return Scalar::one(fld);
  if (deg == 1) return Scalar::one(fld);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->pairings.find(f);
    if (it != cache_->pairings.end()) return it->second;
  }
  // <d_i d^{f'}, h> = sum_{Delta h} q^{deg d^{f'} . M . deg h1} <d_i, h1><d^{f'}, h2>.
  const std::size_t i = first_nonzero(f);
  Exponents rest = f;
  rest[i] -= 1;
  const Exponents g = unit_vector(spec_.rank(), i);
  Scalar acc = Scalar::zero(fld);
  for (const auto& [h12, c] : coproduct(Side::X, h).terms) {
    const auto& [h1, h2] = h12;
    if (h1 != g || h2 != rest) continue;
    const long k = spec_.braiding_exponent(plane_degree(Side::D, rest), plane_degree(Side::X, h1));
    acc += c * spec_.q_power(k) * pairing(g, h1) * pairing(rest, h2);
  }
  std::lock_guard lock(cache_->mu);
  cache_->pairings.emplace(f, acc);
  return acc;
}

Scalar BraidedHopf::pairing_by_coproduct(const Exponents& f, const Exponents& h) const {
  const Field fld = spec_.field();
  if (f != h) return Scalar::zero(fld);
  if (total(h) <= 1) return Scalar::one(fld);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->pairings_by_coproduct.find(h);
    if (it != cache_->pairings_by_coproduct.end()) return it->second;
  }
  // <f, x_j h'> = sum_{Delta f} q^{deg f2 . M . deg x_j} <f1, x_j><f2, h'>.
  const std::size_t j = first_nonzero(h);
  Exponents rest = h;
  rest[j] -= 1;
  const Exponents g = unit_vector(spec_.rank(), j);
  Scalar acc = Scalar::zero(fld);
  for (const auto& [f12, c] : coproduct(Side::D, f).terms) {
    const auto& [f1, f2] = f12;
    if (f1 != g || f2 != rest) continue;
    const long k = spec_.braiding_exponent(plane_degree(Side::D, f2), plane_degree(Side::X, g));
    acc += c * spec_.q_power(k) * pairing_by_coproduct(f1, g) * pairing_by_coproduct(f2, rest);
  }
  std::lock_guard lock(cache_->mu);
  cache_->pairings_by_coproduct.emplace(h, acc);
  return acc;
}

PlaneElement BraidedHopf::left_regular_action(const Exponents& f, const Exponents& h) const {
  PlaneElement r{Side::X, {}};
  for (const auto& [h12, c] : coproduct(Side::X, h).terms) {
    const auto& [h1, h2] = h12;
    if (h2 != f) continue;
    const IntVector d1 = plane_degree(Side::X, h1), d2 = plane_degree(Side::X, h2);
    const long k = action_ == ActionBraiding::Literal ? spec_.braiding_exponent(d1, d2) : -spec_.braiding_exponent(d2, d1);
    r.add(h1, c * spec_.q_power(k) * pairing(f, h2));
  }
  return r;
}

DoubleElement BraidedHopf::heisenberg_product(const DoubleElement& u, const DoubleElement& v) const {
  DoubleElement r;
  for (const auto& [ab, c1] : u.terms) {
    const auto& [a, b] = ab;
    const TensorElement& delta_b = coproduct(Side::D, b);
    for (const auto& [ce, c2] : v.terms) {
      const auto& [c, e] = ce;
      for (const auto& [f12, c3] : delta_b.terms) {
        const auto& [f1, f2] = f12;
        // Braid f2 past x^c, let f1 act on x^c, multiply in each factor.
        const long k = spec_.braiding_exponent(plane_degree(Side::D, f2), plane_degree(Side::X, c));
        const Scalar scale = c1 * c2 * c3 * spec_.q_power(k);
        PlaneElement acted = left_regular_action(f1, c);
        if (acted.terms.empty()) continue;
        PlaneElement left = plane_product(PlaneElement{Side::X, {{a, Scalar::one(spec_.field())}}}, acted);
        PlaneElement right = plane_product(PlaneElement{Side::D, {{f2, Scalar::one(spec_.field())}}},
                                           PlaneElement{Side::D, {{e, Scalar::one(spec_.field())}}});
        for (const auto& [x, cx] : left.terms)
          for (const auto& [d, cd] : right.terms) r.add(x, d, scale * cx * cd);
      }
    }
  }
  return r;
}

TensorElement coproduct(const Exponents& e, Side side, const AlgebraSpec& spec) {
  return BraidedHopf(spec).coproduct(side, e);
}

PlaneElement antipode(const Exponents& e, Side side, const AlgebraSpec& spec) {
  return BraidedHopf(spec).antipode(side, e);
}

Scalar hopf_pairing(const Exponents& f, const Exponents& h, const AlgebraSpec& spec) {
  return BraidedHopf(spec).pairing(f, h);
}

PlaneElement left_regular_action(const Exponents& f, const Exponents& h, const AlgebraSpec& spec,
                                 ActionBraiding action) {
  return BraidedHopf(spec, action).left_regular_action(f, h);
}

DoubleElement heisenberg_product(const DoubleElement& u, const DoubleElement& v, const AlgebraSpec& spec,
                                 ActionBraiding action) {
  return BraidedHopf(spec, action).heisenberg_product(u, v);
}

DoubleElement double_monomial(const Exponents& a, const Exponents& b, const Scalar& c) {
  DoubleElement r;
  r.add(a, b, c);
  return r;
}

PbwElement to_pbw(const DoubleElement& u, const AlgebraSpec& unscaled) {
  PbwElement r(unscaled);
  for (const auto& [ab, c] : u.terms) r.add_term(Monomial(ab.first, ab.second), c);
  return r;
}

namespace {

AlgebraSpec unscaled_twin(const AlgebraSpec& spec) {
  if (spec.normalization() == Normalization::Unscaled) return spec;
  return AlgebraSpec(spec.matrix(), Normalization::Unscaled, spec.field());
}

std::string exps(const Exponents& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

}  // namespace

CheckReport verify_double_presentation(const AlgebraSpec& spec, unsigned degree_bound, ActionBraiding action) {
  const AlgebraSpec u = unscaled_twin(spec);
  const BraidedHopf hopf(u, action);
  const std::size_t n = u.rank();
  const Field f = u.field();
  const Scalar one = Scalar::one(f);
  CheckReport report{"double presentation", 0, {}};

  std::vector<std::pair<Exponents, Exponents>> basis;
  for (const auto& e : exponent_vectors(2 * n, degree_bound))
    basis.emplace_back(Exponents(e.begin(), e.begin() + static_cast<long>(n)),
                       Exponents(e.begin() + static_cast<long>(n), e.end()));
  for (const auto& [a, b] : basis)
    for (const auto& [c, e] : basis) {
      DoubleElement h = hopf.heisenberg_product(double_monomial(a, b, one), double_monomial(c, e, one));
      PbwElement presented = PbwElement::monomial(u, Monomial(a, b), one) * PbwElement::monomial(u, Monomial(c, e), one);
      report.expect(to_pbw(h, u) == presented, "x^" + exps(a) + " d^" + exps(b) + " * x^" + exps(c) + " d^" +
                                                   exps(e) + ": double gives " + to_string(to_pbw(h, u)) +
                                                   ", presentation gives " + to_string(presented));
    }

  // Defining relations, evaluated with the smash product.
  const Exponents zero(n, 0);
  auto gen = [&](Side side, std::size_t i) {
    return side == Side::X ? double_monomial(unit_vector(n, i), zero, one) : double_monomial(zero, unit_vector(n, i), one);
  };
  auto combine = [&](const DoubleElement& p, const DoubleElement& q, const Scalar& c) {
    DoubleElement r = p;
    for (const auto& [k, v] : q.terms) r.add(k.first, k.second, -c * v);
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar qij = u.q_power(u.matrix()[i][j]);
      const std::string tag = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (i != j) {
        auto xx = combine(hopf.heisenberg_product(gen(Side::X, i), gen(Side::X, j)),
                          hopf.heisenberg_product(gen(Side::X, j), gen(Side::X, i)), qij);
        report.expect(xx.terms.empty(), "x_i x_j - q_ij x_j x_i for " + tag);
        auto dd = combine(hopf.heisenberg_product(gen(Side::D, i), gen(Side::D, j)),
                          hopf.heisenberg_product(gen(Side::D, j), gen(Side::D, i)), qij);
        report.expect(dd.terms.empty(), "d_i d_j - q_ij d_j d_i for " + tag);
      }
      auto dx = combine(hopf.heisenberg_product(gen(Side::D, i), gen(Side::X, j)),
                        hopf.heisenberg_product(gen(Side::X, j), gen(Side::D, i)), qij.inverse());
      if (i == j) dx.add(zero, zero, -one);
      report.expect(dx.terms.empty(), "d_i x_j - q_ij^-1 x_j d_i - delta_ij for " + tag);
    }
  return report;
}

CheckReport verify_hopf_axioms(const AlgebraSpec& spec, unsigned degree_bound) {
  const BraidedHopf hopf(spec);
  const std::size_t n = spec.rank();
  const Field f = spec.field();
  CheckReport report{"braided Hopf axioms", 0, {}};
  using Triple = std::map<std::array<Exponents, 3>, Scalar>;

  for (Side side : {Side::X, Side::D}) {
    const std::string tag = side == Side::X ? "S_q " : "S_q* ";
    for (const auto& e : exponent_vectors(n, degree_bound)) {
      const TensorElement& delta = hopf.coproduct(side, e);
      Triple left, right;
      for (const auto& [h12, c] : delta.terms) {
        for (const auto& [ab, c2] : hopf.coproduct(side, h12.first).terms)
          accumulate(left, std::array<Exponents, 3>{ab.first, ab.second, h12.second}, c * c2);
        for (const auto& [ab, c2] : hopf.coproduct(side, h12.second).terms)
          accumulate(right, std::array<Exponents, 3>{h12.first, ab.first, ab.second}, c * c2);
      }
      report.expect(left == right, tag + "coassociativity at " + exps(e));

      PlaneElement eps_left{side, {}}, eps_right{side, {}}, s_left{side, {}}, s_right{side, {}};
      for (const auto& [h12, c] : delta.terms) {
        const auto& [h1, h2] = h12;
        eps_left.add(h2, c * hopf.counit(h1));
        eps_right.add(h1, c * hopf.counit(h2));
        PlaneElement a{side, {{h1, c}}};
        for (const auto& [m, v] : hopf.plane_product(a, hopf.antipode(side, h2)).terms) s_left.add(m, v);
        for (const auto& [m, v] : hopf.plane_product(hopf.antipode(side, h1), PlaneElement{side, {{h2, c}}}).terms)
          s_right.add(m, v);
      }
      PlaneElement id{side, {{e, Scalar::one(f)}}};
      report.expect(eps_left == id && eps_right == id, tag + "counit law at " + exps(e));
      PlaneElement unit{side, {}};
      unit.add(Exponents(n, 0), hopf.counit(e));
      report.expect(s_left == unit, tag + "m(id x S)Delta = eps at " + exps(e));
      report.expect(s_right == unit, tag + "m(S x id)Delta = eps at " + exps(e));
    }
  }
  for (const auto& e : exponent_vectors(n, degree_bound))
    report.expect(hopf.pairing(e, e) == hopf.pairing_by_coproduct(e, e), "pairing axioms agree at " + exps(e));
  return report;
}

CheckReport verify_pairing_nondegenerate(const AlgebraSpec& spec, unsigned degree_bound) {
  const BraidedHopf hopf(spec);
  const std::size_t n = spec.rank();
  CheckReport report{"pairing nondegeneracy", 0, {}};
  const auto all = exponent_vectors(n, degree_bound);
  for (unsigned d = 0; d <= degree_bound; ++d) {
    std::vector<Exponents> layer;
    for (const auto& e : all)
      if (total(e) == d) layer.push_back(e);
    Matrix m(layer.size(), layer.size(), spec.field());
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (std::size_t j = 0; j < layer.size(); ++j) m(i, j) = hopf.pairing(layer[i], layer[j]);
    report.expect(rank(m) == layer.size(), "pairing matrix in degree " + std::to_string(d) + " is singular");
  }
  return report;
}

CheckReport verify_classical_limit(const AlgebraSpec& spec) {
  const std::size_t n = spec.rank();
  for (const auto& row : spec.matrix())
    for (long v : row)
      if (v != 0) throw ParameterError("the classical limit needs M = 0");
  CheckReport report{"classical Weyl relations in the double", 0, {}};
  const BraidedHopf hopf(spec);
  const Exponents zero(n, 0);
  const Scalar one = Scalar::one(spec.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents ei = zero, ej = zero;
      ei[i] = 1;
      ej[j] = 1;
      const DoubleElement lhs = hopf.heisenberg_product(double_monomial(zero, ei, one), double_monomial(ej, zero, one));
      DoubleElement rhs = double_monomial(ej, ei, one);
      if (i == j) rhs.add(zero, zero, one);
      report.expect(lhs == rhs, "d" + std::to_string(i + 1) + "*x" + std::to_string(j + 1));
      const DoubleElement xx =
          hopf.heisenberg_product(double_monomial(ei, zero, one), double_monomial(ej, zero, one));
      const DoubleElement xx_swapped =
          hopf.heisenberg_product(double_monomial(ej, zero, one), double_monomial(ei, zero, one));
      report.expect(xx == xx_swapped, "x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1) + " commute");
    }
  return report;
}

}  // namespace qweyl
