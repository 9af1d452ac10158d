#include "qweyl/properties.hpp"

namespace qweyl {

Scalar random_scalar(const Field& f, Rng& rng) {
  std::uniform_int_distribution<long> coeff(1, 3), sign(0, 1), qpow(-2, 2);
  Scalar c = Scalar::from_integer(f, sign(rng) ? coeff(rng) : -coeff(rng));
  if (f.has_q()) c *= Scalar::q_power(f, qpow(rng));
  return c;
}

Monomial random_monomial(std::size_t n, unsigned max_degree, Rng& rng) {
  std::vector<unsigned> a(n, 0), b(n, 0);
  std::uniform_int_distribution<unsigned> total(0, max_degree);
  std::uniform_int_distribution<std::size_t> slot(0, 2 * n - 1);
  for (unsigned k = total(rng); k > 0; --k) {
    const std::size_t s = slot(rng);
    ++(s < n ? a[s] : b[s - n]);
  }
  return Monomial(a, b);
}

PbwElement random_element(const AlgebraSpec& spec, unsigned max_degree, unsigned max_terms, Rng& rng) {
  PbwElement u(spec);
  std::uniform_int_distribution<unsigned> terms(1, std::max(1u, max_terms));
  for (unsigned k = terms(rng); k > 0; --k)
    u.add_term(random_monomial(spec.rank(), max_degree, rng), random_scalar(spec.field(), rng));
  return u;
}

Word random_word(std::size_t n, unsigned max_length, Rng& rng, const Field& f) {
  std::uniform_int_distribution<unsigned> length(1, std::max(1u, max_length));
  std::uniform_int_distribution<std::size_t> slot(0, 2 * n - 1);
  std::uniform_int_distribution<unsigned> power(1, 2), coin(0, 3);
  Word w;
  for (unsigned k = length(rng); k > 0; --k) {
    if (coin(rng) == 0) w.push_back(WordFactor::coeff(random_scalar(f, rng)));
    const std::size_t s = slot(rng);
    w.push_back(s < n ? WordFactor::x(s, power(rng)) : WordFactor::d(s - n, power(rng)));
  }
  return w;
}

namespace {

PbwElement factor_value(const WordFactor& f, const AlgebraSpec& spec) {
  if (f.kind == WordFactor::Kind::Scalar) return PbwElement::constant(spec, *f.scalar);
  return f.gen == Generator::X ? PbwElement::x(spec, f.index, f.power) : PbwElement::d(spec, f.index, f.power);
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

CheckReport verify_engine_properties(const AlgebraSpec& spec, unsigned cases, unsigned max_degree,
                                     std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report{"engine associativity, confluence and grading", 0, {}};
  for (unsigned t = 0; t < cases; ++t) {
    const PbwElement a = random_element(spec, max_degree, 3, rng);
    const PbwElement b = random_element(spec, max_degree, 3, rng);
    const PbwElement c = random_element(spec, max_degree, 3, rng);
    report.expect((a * b) * c == a * (b * c),
                  "associativity fails for (" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")");

    const Word w = random_word(spec.rank(), max_degree, rng, spec.field());
    PbwElement left = PbwElement::one(spec), right = PbwElement::one(spec);
    for (const auto& f : w) left = left * factor_value(f, spec);
    for (auto it = w.rbegin(); it != w.rend(); ++it) right = factor_value(*it, spec) * right;
    const PbwElement nf = normal_form(w, spec);
    report.expect(nf == left && nf == right, "reduction orders disagree on a word of length " + std::to_string(w.size()));

    const Monomial m1 = random_monomial(spec.rank(), max_degree, rng);
    const Monomial m2 = random_monomial(spec.rank(), max_degree, rng);
    const PbwElement p = PbwElement::monomial(spec, m1, Scalar::one(spec.field())) *
                         PbwElement::monomial(spec, m2, Scalar::one(spec.field()));
    const auto g = grading_degree(p);
    report.expect(p.is_zero() || (g && *g == add(m1.grading(), m2.grading())),
                  "grading is not additive on " + monomial_to_string(m1) + " * " + monomial_to_string(m2));
  }
  return report;
}

}  // namespace qweyl
