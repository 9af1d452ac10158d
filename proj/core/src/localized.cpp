#include "qweyl/localized.hpp"

#include <algorithm>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

void require_rescaled(const AlgebraSpec& spec) {
  if (spec.normalization() != Normalization::Rescaled)
    throw ParameterError("Euler-operator localization requires the rescaled presentation");
}

void require_same(const LocalizedElement& s, const LocalizedElement& t) {
  if (s.spec() != t.spec())
    throw ParameterError("algebra mismatch: " + s.spec().describe() + " vs " + t.spec().describe());
}

}  // namespace

LocalizedElement::LocalizedElement(PbwElement numerator)
    : LocalizedElement(numerator, IntVector(numerator.spec().rank(), 0)) {}

LocalizedElement::LocalizedElement(PbwElement numerator, IntVector denom)
    : num_(std::move(numerator)), denom_(std::move(denom)) {
  require_rescaled(num_.spec());
  if (denom_.size() != num_.spec().rank()) throw ParameterError("denominator length must equal the rank");
  for (long k : denom_)
    if (k < 0) throw ParameterError("denominator exponents must be nonnegative");
}

bool LocalizedElement::has_denominator() const {
  return std::any_of(denom_.begin(), denom_.end(), [](long k) { return k != 0; });
}

PbwElement sigma_power(const PbwElement& v, const IntVector& k) {
  const AlgebraSpec& spec = v.spec();
  PbwElement out(spec);
  for (const auto& [m, c] : v.terms()) {
    long e = 0;
    for (std::size_t i = 0; i < spec.rank(); ++i)
      e += k[i] * spec.relation_exponent(i, i) * (static_cast<long>(m.x(i)) - static_cast<long>(m.d(i)));
    out.add_term(m, e == 0 ? c : c * spec.q_power(e));
  }
  return out;
}

PbwElement euler_power(const AlgebraSpec& spec, const IntVector& c) {
  PbwElement acc = PbwElement::one(spec);
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    if (c[i] < 0) throw ParameterError("euler_power expects nonnegative exponents");
    if (c[i] > 0) acc = acc * PbwElement::euler(spec, i).pow(static_cast<unsigned>(c[i]));
  }
  return acc;
}

LocalizedElement localized_multiply(const LocalizedElement& s, const LocalizedElement& t) {
  require_same(s, t);
  IntVector neg(s.denom().size()), sum(s.denom().size());
  for (std::size_t i = 0; i < neg.size(); ++i) {
    neg[i] = -s.denom()[i];
    sum[i] = s.denom()[i] + t.denom()[i];
  }
  return LocalizedElement(s.numerator() * sigma_power(t.numerator(), neg), std::move(sum));
}

namespace {

// Numerators of s and t over the common denominator max(k, m).
std::pair<PbwElement, PbwElement> common_numerators(const LocalizedElement& s, const LocalizedElement& t,
                                                    IntVector& common) {
  const std::size_t n = s.denom().size();
  common.assign(n, 0);
  IntVector ds(n), dt(n);
  for (std::size_t i = 0; i < n; ++i) {
    common[i] = std::max(s.denom()[i], t.denom()[i]);
    ds[i] = common[i] - s.denom()[i];
    dt[i] = common[i] - t.denom()[i];
  }
  return {s.numerator() * euler_power(s.spec(), ds), t.numerator() * euler_power(t.spec(), dt)};
}

}  // namespace

LocalizedElement localized_add(const LocalizedElement& s, const LocalizedElement& t) {
  require_same(s, t);
  IntVector common;
  auto [u, v] = common_numerators(s, t, common);
  return LocalizedElement(u + v, std::move(common));
}

bool localized_equal(const LocalizedElement& s, const LocalizedElement& t) {
  require_same(s, t);
  IntVector common;
  auto [u, v] = common_numerators(s, t, common);
  return u == v;
}

LocalizedElement times_euler(const LocalizedElement& s, const IntVector& c) {
  const std::size_t n = c.size();
  IntVector pos(n, 0), denom = s.denom();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] >= 0) {
      pos[i] = c[i];
    } else {
      denom[i] -= c[i];
    }
  }
  // u a^{-k} a^{p} = u a^{p} a^{-k} since the Euler operators commute.
  return LocalizedElement(s.numerator() * euler_power(s.spec(), pos), std::move(denom));
}

std::string to_string(const LocalizedElement& s) {
  std::string num = to_string(s.numerator());
  if (!s.has_denominator() || s.numerator().is_zero()) return num;
  std::string out = s.numerator().size() == 1 && num.find(' ') == std::string::npos ? num : "(" + num + ")";
  for (std::size_t i = 0; i < s.denom().size(); ++i)
    if (s.denom()[i] != 0) out += "*a" + std::to_string(i + 1) + "^-" + std::to_string(s.denom()[i]);
  return out;
}

}  // namespace qweyl
