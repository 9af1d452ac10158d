#include "qweyl/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace detail {

struct SpecData {
  std::size_t n = 0;
  IntMatrix m;
  IntMatrix e;  // relation exponents
  Normalization norm = Normalization::Unscaled;
  Field field = Field::rational();
  std::vector<Scalar> diag_constant;
  std::vector<Scalar> cyclic_powers;  // q^0..q^{l-1} for cyclotomic fields

  mutable std::mutex cache_mu;
  mutable std::map<std::tuple<std::size_t, unsigned, unsigned>, std::vector<Scalar>> tables;
};

}  // namespace detail

namespace {

std::string matrix_to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out << ",";
      out << m[i][j];
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace

AlgebraSpec::AlgebraSpec(IntMatrix m, Normalization norm, Field field) {
  const std::size_t n = m.size();
  if (n == 0) throw ParameterError("algebra rank must be at least 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ParameterError("M must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (m[j][i] != -m[i][j])
        throw ParameterError("M must satisfy m_ji = -m_ij off the diagonal (entry " +
                             std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  if (field.kind() == FieldKind::Rational) {
    for (const auto& row : m)
      for (long v : row)
        if (v != 0) throw ParameterError("over Q the braiding matrix must vanish (q is undefined)");
  }
  auto data = std::make_shared<detail::SpecData>();
  data->n = n;
  data->m = m;
  data->e = m;
  data->norm = norm;
  data->field = field;
  if (norm == Normalization::Rescaled)
    for (std::size_t i = 0; i < n; ++i) data->e[i][i] = -m[i][i];
  if (field.kind() == FieldKind::Cyclotomic)
    for (int k = 0; k < field.l(); ++k) data->cyclic_powers.push_back(Scalar::q_power(field, k));
  for (std::size_t i = 0; i < n; ++i) {
    if (norm == Normalization::Unscaled) {
      data->diag_constant.push_back(Scalar::one(field));
    } else {
      data->diag_constant.push_back(Scalar::q_power(field, data->e[i][i]) - Scalar::one(field));
    }
  }
  data_ = std::move(data);
}

AlgebraSpec AlgebraSpec::single_parameter(std::size_t n, Normalization norm, Field field) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i <= j) ? 1 : -1;
  if (norm == Normalization::Rescaled)
    for (std::size_t i = 0; i < n; ++i) m[i][i] = -1;
  return AlgebraSpec(std::move(m), norm, field);
}

std::size_t AlgebraSpec::rank() const noexcept { return data_->n; }
Normalization AlgebraSpec::normalization() const noexcept { return data_->norm; }
Field AlgebraSpec::field() const noexcept { return data_->field; }
const IntMatrix& AlgebraSpec::matrix() const noexcept { return data_->m; }

long AlgebraSpec::relation_exponent(std::size_t i, std::size_t j) const { return data_->e.at(i).at(j); }

Scalar AlgebraSpec::q_ij(std::size_t i, std::size_t j) const { return q_power(relation_exponent(i, j)); }

long AlgebraSpec::braiding_exponent(const IntVector& deg_u, const IntVector& deg_v) const {
  long acc = 0;
  for (std::size_t i = 0; i < data_->n; ++i) {
    if (deg_u[i] == 0) continue;
    for (std::size_t j = 0; j < data_->n; ++j) acc += deg_u[i] * data_->m[i][j] * deg_v[j];
  }
  return acc;
}

bool AlgebraSpec::is_single_parameter() const {
  for (std::size_t i = 0; i < data_->n; ++i)
    for (std::size_t j = 0; j < data_->n; ++j)
      if (data_->e[i][j] != ((i <= j) ? 1 : -1)) return false;
  return true;
}

long AlgebraSpec::xx_exponent(std::size_t i, std::size_t j) const {
  return data_->norm == Normalization::Unscaled ? data_->e[i][j] : -data_->e[i][j];
}

long AlgebraSpec::dx_exponent(std::size_t i, std::size_t j) const {
  return data_->norm == Normalization::Unscaled ? -data_->e[i][j] : data_->e[i][j];
}

long AlgebraSpec::diagonal_exponent(std::size_t i) const {
  return data_->norm == Normalization::Unscaled ? -data_->e[i][i] : data_->e[i][i];
}

const Scalar& AlgebraSpec::diagonal_constant(std::size_t i) const { return data_->diag_constant.at(i); }

Scalar AlgebraSpec::q_power(long k) const {
  if (!data_->cyclic_powers.empty()) {
    long l = static_cast<long>(data_->cyclic_powers.size());
    return data_->cyclic_powers[static_cast<std::size_t>(((k % l) + l) % l)];
  }
  return Scalar::q_power(data_->field, k);
}

const std::vector<Scalar>& AlgebraSpec::straightening_table(std::size_t i, unsigned b,
                                                            unsigned c) const {
  auto key = std::make_tuple(i, b, c);
  {
    std::lock_guard lock(data_->cache_mu);
    auto it = data_->tables.find(key);
    if (it != data_->tables.end()) return it->second;
  }
  // d x^c = p^c x^c d + r [c]_p x^{c-1}, iterated b times:
  // T(b,c)[k] = p^c T(b-1,c)[k] + r [c]_p T(b-1,c-1)[k-1].
  const Field f = data_->field;
  const long p = diagonal_exponent(i);
  const Scalar& r = diagonal_constant(i);
  std::vector<Scalar> p_pow(c + 1), bracket(c + 1);
  for (unsigned k = 0; k <= c; ++k) p_pow[k] = q_power(p * static_cast<long>(k));
  bracket[0] = Scalar::zero(f);
  for (unsigned k = 1; k <= c; ++k) bracket[k] = bracket[k - 1] + p_pow[k - 1];
  // prev[cc] = table for (bb-1, cc), cc = 0..c.
  std::vector<std::vector<Scalar>> prev(c + 1, std::vector<Scalar>{Scalar::one(f)});
  for (unsigned bb = 1; bb <= b; ++bb) {
    std::vector<std::vector<Scalar>> cur(c + 1);
    for (unsigned cc = 0; cc <= c; ++cc) {
      std::size_t len = std::min(bb, cc) + 1;
      cur[cc].assign(len, Scalar::zero(f));
      for (std::size_t k = 0; k < prev[cc].size() && k < len; ++k)
        cur[cc][k] += p_pow[cc] * prev[cc][k];
      if (cc > 0) {
        Scalar lower = r * bracket[cc];
        for (std::size_t k = 1; k < len && k - 1 < prev[cc - 1].size(); ++k)
          cur[cc][k] += lower * prev[cc - 1][k - 1];
      }
    }
    prev = std::move(cur);
  }
  std::lock_guard lock(data_->cache_mu);
  auto [it, inserted] = data_->tables.emplace(key, std::move(prev[c]));
  return it->second;
}

std::string AlgebraSpec::describe() const {
  std::ostringstream out;
  out << "n=" << data_->n << " "
      << (data_->norm == Normalization::Unscaled ? "unscaled" : "rescaled")
      << " M=" << matrix_to_string(data_->m) << " over " << data_->field.name();
  return out.str();
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->m == b.data_->m && a.data_->norm == b.data_->norm && a.data_->field == b.data_->field;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  if (a.size() != b.size()) throw ParameterError("monomial exponent vectors differ in length");
  e_ = a;
  e_.insert(e_.end(), b.begin(), b.end());
}

std::vector<unsigned> Monomial::x_exponents() const {
  return {e_.begin(), e_.begin() + static_cast<long>(rank())};
}

std::vector<unsigned> Monomial::d_exponents() const {
  return {e_.begin() + static_cast<long>(rank()), e_.end()};
}

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (unsigned v : e_) s += v;
  return s;
}

IntVector Monomial::grading() const {
  IntVector g(rank());
  for (std::size_t i = 0; i < rank(); ++i) g[i] = static_cast<long>(x(i)) - static_cast<long>(d(i));
  return g;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](unsigned v) { return v == 0; });
}

// ---------------------------------------------------------------------------
// PbwElement

PbwElement::PbwElement(AlgebraSpec spec) : spec_(std::move(spec)) {}

PbwElement PbwElement::constant(const AlgebraSpec& spec, const Scalar& c) {
  return monomial(spec, Monomial(spec.rank()), c);
}

PbwElement PbwElement::one(const AlgebraSpec& spec) { return constant(spec, Scalar::one(spec.field())); }

PbwElement PbwElement::monomial(const AlgebraSpec& spec, const Monomial& m, const Scalar& c) {
  if (m.rank() != spec.rank()) throw ParameterError("monomial rank does not match the algebra");
  PbwElement r(spec);
  r.add_term(m, c);
  return r;
}

PbwElement PbwElement::x(const AlgebraSpec& spec, std::size_t i, unsigned power) {
  if (i >= spec.rank()) throw ParameterError("generator index x" + std::to_string(i + 1) + " out of range");
  Monomial m(spec.rank());
  m.x(i) = power;
  return monomial(spec, m, Scalar::one(spec.field()));
}

PbwElement PbwElement::d(const AlgebraSpec& spec, std::size_t i, unsigned power) {
  if (i >= spec.rank()) throw ParameterError("generator index d" + std::to_string(i + 1) + " out of range");
  Monomial m(spec.rank());
  m.d(i) = power;
  return monomial(spec, m, Scalar::one(spec.field()));
}

PbwElement PbwElement::euler(const AlgebraSpec& spec, std::size_t i) {
  if (i >= spec.rank()) throw ParameterError("generator index a" + std::to_string(i + 1) + " out of range");
  Monomial m(spec.rank());
  m.x(i) = 1;
  m.d(i) = 1;
  PbwElement r = one(spec);
  r.add_term(m, Scalar::one(spec.field()));
  return r;
}

Scalar PbwElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(spec_.field()) : it->second;
}

unsigned PbwElement::max_degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.total_degree());
  return best;
}

void PbwElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void PbwElement::require_same_spec(const PbwElement& o) const {
  if (spec_ != o.spec_) throw ParameterError("algebra mismatch: " + spec_.describe() + " vs " + o.spec_.describe());
}

PbwElement PbwElement::operator-() const {
  PbwElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  require_same_spec(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  require_same_spec(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PbwElement& PbwElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const PbwElement& a, const PbwElement& b) {
  a.require_same_spec(b);
  return a.terms_ == b.terms_;
}

PbwElement operator*(const PbwElement& a, const PbwElement& b) { return multiply(a, b); }

PbwElement PbwElement::pow(unsigned k) const {
  PbwElement result = one(spec_);
  for (unsigned i = 0; i < k; ++i) result = multiply(result, *this);
  return result;
}

void multiply_monomials(const AlgebraSpec& spec, const Monomial& left, const Monomial& right,
                        const Scalar& scale, PbwElement::Terms& out) {
  const std::size_t n = spec.rank();
  std::vector<const std::vector<Scalar>*> tables(n);
  long base = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tables[i] = &spec.straightening_table(i, left.d(i), right.x(i));
    for (std::size_t j = i + 1; j < n; ++j)
      base += spec.dx_exponent(j, i) * static_cast<long>(left.d(j)) * static_cast<long>(right.x(i));
  }
  std::vector<unsigned> k(n, 0);
  Monomial result(n);
  while (true) {
    Scalar coef = scale;
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      const Scalar& t = (*tables[i])[k[i]];
      if (t.is_zero()) {
        zero = true;
      } else if (!t.is_one()) {
        coef *= t;
      }
    }
    if (!zero) {
      long e = base;
      for (std::size_t i = 0; i < n; ++i) {
        const long bi = static_cast<long>(left.d(i) - k[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          const long cj = static_cast<long>(right.x(j) - k[j]);
          e += spec.dx_exponent(i, j) * bi * cj;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        const long ai = left.x(i);
        const long bi = static_cast<long>(left.d(i) - k[i]);
        for (std::size_t j = 0; j < i; ++j) {
          const long cj = static_cast<long>(right.x(j) - k[j]);
          e += spec.xx_exponent(i, j) * (ai * cj + bi * static_cast<long>(right.d(j)));
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        result.x(i) = left.x(i) + right.x(i) - k[i];
        result.d(i) = left.d(i) - k[i] + right.d(i);
      }
      if (e != 0) coef *= spec.q_power(e);
      auto [it, inserted] = out.try_emplace(result, coef);
      if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    // Odometer over 0 <= k_i <= min(b_i, c_i).
    std::size_t pos = 0;
    while (pos < n) {
      if (k[pos] < std::min(left.d(pos), right.x(pos))) {
        ++k[pos];
        break;
      }
      k[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
}

PbwElement multiply(const PbwElement& u, const PbwElement& v) {
  if (u.spec() != v.spec())
    throw ParameterError("algebra mismatch: " + u.spec().describe() + " vs " + v.spec().describe());
  PbwElement r(u.spec());
  PbwElement::Terms out;
  for (const auto& [m1, c1] : u.terms())
    for (const auto& [m2, c2] : v.terms()) multiply_monomials(u.spec(), m1, m2, c1 * c2, out);
  for (auto& [m, c] : out) r.add_term(m, c);
  return r;
}

PbwElement normal_form(const Word& word, const AlgebraSpec& spec) {
  PbwElement acc = PbwElement::one(spec);
  for (const auto& f : word) {
    if (f.kind == WordFactor::Kind::Scalar) {
      if (!f.scalar) throw ParameterError("scalar word factor without a value");
      acc *= *f.scalar;
      continue;
    }
    if (f.index >= spec.rank())
      throw ParameterError(std::string("unknown generator ") + (f.gen == Generator::X ? "x" : "d") +
                           std::to_string(f.index + 1) + " for rank " + std::to_string(spec.rank()));
    PbwElement g = f.gen == Generator::X ? PbwElement::x(spec, f.index, f.power)
                                         : PbwElement::d(spec, f.index, f.power);
    acc = multiply(acc, g);
  }
  return acc;
}

std::optional<IntVector> grading_degree(const PbwElement& u) {
  if (u.is_zero()) return IntVector(u.spec().rank(), 0);
  std::optional<IntVector> deg;
  for (const auto& [m, c] : u.terms()) {
    IntVector g = m.grading();
    if (!deg) {
      deg = std::move(g);
    } else if (*deg != g) {
      return std::nullopt;
    }
  }
  return deg;
}

std::string monomial_to_string(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](char sym, std::size_t i, unsigned p) {
    if (p == 0) return;
    if (!first) out << "*";
    first = false;
    out << sym << (i + 1);
    if (p > 1) out << "^" << p;
  };
  for (std::size_t i = 0; i < m.rank(); ++i) emit('x', i, m.x(i));
  for (std::size_t i = 0; i < m.rank(); ++i) emit('d', i, m.d(i));
  return first ? "1" : out.str();
}

namespace {

bool is_compound(const std::string& s) {
  return s.find('+', 1) != std::string::npos || s.find('-', 1) != std::string::npos;
}

}  // namespace

std::string format_term(const std::string& coefficient, const std::string& monomial) {
  const bool compound = is_compound(coefficient);
  if (monomial.empty() || monomial == "1") return compound ? "(" + coefficient + ")" : coefficient;
  if (coefficient == "1") return monomial;
  if (coefficient == "-1") return "-" + monomial;
  if (compound) return "(" + coefficient + ")*" + monomial;
  return coefficient + "*" + monomial;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-') {
      out += " - " + terms[i].substr(1);
    } else {
      out += " + " + terms[i];
    }
  }
  return out;
}

std::string to_string(const PbwElement& u) {
  std::vector<std::string> terms;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it)
    terms.push_back(format_term(it->second.to_string(), monomial_to_string(it->first)));
  return join_terms(terms);
}

std::vector<Exponents> exponent_vectors(std::size_t n, unsigned max_total) {
  std::vector<Exponents> out;
  Exponents cur(n, 0);
  // Recursive fill of exactly `total` units over positions >= pos.
  auto fill = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == n) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  for (unsigned total = 0; total <= max_total; ++total) {
    if (n == 0) {
      if (total == 0) out.push_back(cur);
      continue;
    }
    fill(fill, 0, total);
  }
  return out;
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << name << ": " << (passed() ? "pass" : "FAIL") << " (" << checked << " checks";
  if (!failures.empty()) out << ", " << failures.size() << " failures; first: " << failures.front();
  out << ")";
  return out.str();
}

CheckReport verify_power_identities(const AlgebraSpec& spec, unsigned nmax) {
  if (spec.normalization() != Normalization::Rescaled)
    throw ParameterError("power identities hold in the rescaled presentation only");
  if (nmax < 1) throw ParameterError("nmax must be at least 1");
  CheckReport report{"power identities", 0, {}};
  const std::size_t n = spec.rank();
  const Field f = spec.field();
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar qii = spec.q_ij(i, i);
    for (unsigned m = 1; m <= nmax; ++m) {
      const Scalar qm = qii.pow(m);
      PbwElement lhs = PbwElement::d(spec, i) * PbwElement::x(spec, i, m);
      PbwElement rhs = qm * (PbwElement::x(spec, i, m) * PbwElement::d(spec, i)) +
                       (qm - one) * PbwElement::x(spec, i, m - 1);
      report.expect(lhs == rhs, "d" + std::to_string(i + 1) + "*x" + std::to_string(i + 1) + "^" +
                                    std::to_string(m) + " = " + to_string(lhs));
      lhs = PbwElement::d(spec, i, m) * PbwElement::x(spec, i);
      rhs = qm * (PbwElement::x(spec, i) * PbwElement::d(spec, i, m)) +
            (qm - one) * PbwElement::d(spec, i, m - 1);
      report.expect(lhs == rhs, "d" + std::to_string(i + 1) + "^" + std::to_string(m) + "*x" +
                                    std::to_string(i + 1) + " = " + to_string(lhs));
    }
    const PbwElement alpha = PbwElement::euler(spec, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar twist = i == j ? qii : one;
      PbwElement xj = PbwElement::x(spec, j), dj = PbwElement::d(spec, j);
      report.expect(alpha * xj == twist * (xj * alpha),
                    "a" + std::to_string(i + 1) + "*x" + std::to_string(j + 1));
      report.expect(alpha * dj == twist.inverse() * (dj * alpha),
                    "a" + std::to_string(i + 1) + "*d" + std::to_string(j + 1));
    }
  }
  return report;
}

}  // namespace qweyl
