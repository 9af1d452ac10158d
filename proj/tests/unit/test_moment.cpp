#include <gtest/gtest.h>

#include <random>

#include "qweyl/errors.hpp"
#include "qweyl/moment.hpp"

using namespace qweyl;

namespace {

const Field kQ = Field::rational_function();
Scalar q() { return Scalar::q(kQ); }
Scalar k(long v) { return Scalar::from_integer(kQ, v); }
AlgebraSpec spec(std::size_t n) { return AlgebraSpec::single_parameter(n, Normalization::Rescaled, kQ); }
Scalar eta_value() { return Scalar::q_power(kQ, 3) + k(2); }

ReducedElement constant(const AlgebraSpec& s, const Scalar& c) {
  ReducedElement r(s);
  CanonicalMonomial m{Exponents(s.rank(), 0), Exponents(s.rank(), 0), IntVector(s.rank(), 0)};
  r.add_term(m, c);
  return r;
}

}  // namespace

TEST(Hermite, ColumnForm) {
  auto h = hermite_normal_form({{1}, {1}});
  EXPECT_EQ(h.h, (IntMatrix{{1}, {1}}));
  EXPECT_EQ(h.pivot_rows, (std::vector<std::size_t>{1}));
  // H = A U with U unimodular.
  auto hf = hermite_normal_form({{2, 1}, {0, 3}, {1, 1}});
  const IntMatrix a{{2, 1}, {0, 3}, {1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      long v = 0;
      for (std::size_t t = 0; t < 2; ++t) v += a[i][t] * hf.u[t][j];
      EXPECT_EQ(v, hf.h[i][j]);
    }
  long det = hf.u[0][0] * hf.u[1][1] - hf.u[0][1] * hf.u[1][0];
  EXPECT_EQ(std::abs(det), 1);
  for (std::size_t j = 0; j < 2; ++j) {
    std::size_t p = hf.pivot_rows[j];
    EXPECT_GT(hf.h[p][j], 0);
    for (std::size_t i = p + 1; i < 3; ++i) EXPECT_EQ(hf.h[i][j], 0);
  }
}

TEST(Torus, RankValidated) {
  EXPECT_THROW(TorusData(IntMatrix{{1, 2}, {2, 4}}), ParameterError);
  EXPECT_THROW(TorusData(IntMatrix{{1, 1}}), ParameterError);
  EXPECT_EQ(TorusData::trivial(3).d(), 0u);
}

TEST(Torus, CosetRepresentativeIsCanonical) {
  TorusData t(IntMatrix{{1}, {1}});
  auto [r1, s1] = t.reduce_exponent({2, 1});
  auto [r2, s2] = t.reduce_exponent({1, 0});
  EXPECT_EQ(r1, r2);
  EXPECT_EQ(s1[0] - s2[0], 1);
}

TEST(Comoment, Values) {
  auto s = spec(2);
  EXPECT_TRUE(localized_equal(comoment_torus({1, 0}, s), LocalizedElement(PbwElement::euler(s, 0))));
  TorusData t(IntMatrix{{1}, {1}});
  EXPECT_TRUE(localized_equal(comoment_subtorus({1}, t, s),
                              LocalizedElement(PbwElement::euler(s, 0) * PbwElement::euler(s, 1))));
  EXPECT_TRUE(localized_equal(comoment_torus({-1, 0}, s), LocalizedElement(PbwElement::one(s), {1, 0})));
}

TEST(Comoment, MomentIdentity) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 3; ++t) {
      IntMatrix a(n, IntVector(1));
      for (auto& row : a) row[0] = static_cast<long>(rng() % 5) - 2;
      a[0][0] = 1;
      auto r = verify_moment_identity(TorusData(a), spec(n));
      EXPECT_TRUE(r.passed()) << r.summary();
    }
}

TEST(ClassicalMoment, Evaluation) {
  Field f = Field::rational();
  auto r = [&](long v) { return Scalar::from_integer(f, v); };
  auto [z, u] = classical_moment_eval({r(1), r(1)}, {r(1), r(2)}, TorusData(IntMatrix{{1}, {1}}));
  EXPECT_EQ(z, (std::vector<Scalar>{r(2), r(3)}));
  EXPECT_EQ(u, (std::vector<Scalar>{r(6)}));
  EXPECT_THROW(classical_moment_eval({r(1)}, {r(-1)}, TorusData(IntMatrix{{1}})), DomainError);
  auto [z2, u2] = classical_moment_eval({r(1)}, {r(1)}, TorusData(IntMatrix{{-2}}));
  EXPECT_EQ(u2[0], Scalar::from_rational(f, Rational(1, 4)));
}

TEST(IdealReduction, EulerValues) {
  auto s = spec(1);
  ReductionDatum dat(TorusData(IntMatrix{{1}}), {eta_value()});
  auto x = PbwElement::x(s, 0), d = PbwElement::d(s, 0);
  EXPECT_EQ(moment_ideal_reduce(LocalizedElement(x * d), dat), constant(s, eta_value() - k(1)));
  Scalar expected = q().inverse() * (eta_value() - k(1)) * (eta_value() - q());
  EXPECT_EQ(moment_ideal_reduce(LocalizedElement(x.pow(2) * d.pow(2)), dat), constant(s, expected));
  EXPECT_EQ(moment_ideal_reduce(LocalizedElement(PbwElement::one(s), {1}), dat), constant(s, eta_value().inverse()));
}

TEST(IdealReduction, CosetAlphaExponent) {
  auto s = spec(2);
  ReductionDatum dat(TorusData(IntMatrix{{1}, {1}}), {eta_value()});
  ReducedElement a(s);
  a.add_term(CanonicalMonomial{{0, 0}, {0, 0}, {2, 1}}, Scalar::one(kQ));
  auto red = moment_ideal_reduce(a, dat);
  ASSERT_EQ(red.terms().size(), 1u);
  const auto& [m, c] = *red.terms().begin();
  EXPECT_EQ(c, eta_value());
  EXPECT_EQ(m.c[0] - m.c[1], 1);
}

TEST(IdealReduction, IdempotentAndLinear) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 2; ++n) {
    auto s = spec(n);
    IntMatrix a(n, IntVector{1});
    ReductionDatum dat(TorusData(a), {eta_value()});
    auto inv = invariant_monomials(dat.torus, s, 3);
    ASSERT_FALSE(inv.empty());
    for (int t = 0; t < 30; ++t) {
      ReducedElement u(s), v(s);
      for (int j = 0; j < 3; ++j) {
        u.add_term(inv[rng() % inv.size()], k(static_cast<long>(rng() % 5) + 1));
        v.add_term(inv[rng() % inv.size()], q());
      }
      auto ru = moment_ideal_reduce(u, dat), rv = moment_ideal_reduce(v, dat);
      EXPECT_EQ(moment_ideal_reduce(ru, dat), ru);
      EXPECT_EQ(moment_ideal_reduce(u + v, dat), ru + rv);
      EXPECT_EQ(moment_ideal_reduce(q() * u, dat), q() * ru);
    }
  }
}

TEST(IdealReduction, EliminationOrderConfluent) {
  auto s = spec(2);
  ReductionDatum dat(TorusData(IntMatrix{{1}, {2}}), {eta_value()});
  for (const auto& m : invariant_monomials(dat.torus, s, 4)) {
    auto u = reduced_monomial(s, m);
    EXPECT_EQ(moment_ideal_reduce(u, dat, EliminationOrder::Ascending),
              moment_ideal_reduce(u, dat, EliminationOrder::Descending));
  }
}

TEST(IdealReduction, LeftIdealAbsorbed) {
  auto s = spec(2);
  TorusData t(IntMatrix{{1}, {1}});
  ReductionDatum dat(t, {eta_value()});
  auto phi = comoment_subtorus({1}, t, s);
  LocalizedElement gen = localized_add(phi, LocalizedElement(PbwElement::constant(s, -eta_value())));
  for (const auto& u : {PbwElement::x(s, 0) * PbwElement::d(s, 1), PbwElement::one(s),
                        PbwElement::x(s, 1, 2) * PbwElement::d(s, 0, 2)}) {
    auto prod = localized_multiply(LocalizedElement(u), gen);
    EXPECT_TRUE(moment_ideal_reduce(prod, dat).is_zero()) << to_string(u);
  }
}

TEST(Invariants, Enumeration) {
  auto s = spec(2);
  TorusData t(IntMatrix{{1}, {1}});
  auto inv = invariant_monomials(t, s, 2);
  for (const auto& m : inv) EXPECT_TRUE(is_invariant(m, t, s));
  EXPECT_TRUE(is_invariant(CanonicalMonomial{{1, 0}, {0, 1}, {0, 0}}, t, s));
  EXPECT_FALSE(is_invariant(CanonicalMonomial{{1, 0}, {0, 0}, {0, 0}}, t, s));
  EXPECT_TRUE(std::find(inv.begin(), inv.end(), CanonicalMonomial{{1, 0}, {0, 1}, {0, 0}}) != inv.end());
}

TEST(Invariants, CountIndependentOfEta) {
  auto s = spec(2);
  TorusData t(IntMatrix{{1}, {1}});
  auto inv = invariant_monomials(t, s, 3);
  std::size_t nonzero_a = 0, nonzero_b = 0;
  for (const auto& m : inv) {
    nonzero_a += moment_ideal_reduce(reduced_monomial(s, m), ReductionDatum(t, {eta_value()})).is_zero() ? 0 : 1;
    nonzero_b += moment_ideal_reduce(reduced_monomial(s, m), ReductionDatum(t, {k(5)})).is_zero() ? 0 : 1;
  }
  EXPECT_EQ(nonzero_a, nonzero_b);
}

TEST(ReducedProduct, UnitAndAssociativity) {
  std::mt19937_64 rng(29);
  auto s = spec(2);
  TorusData t(IntMatrix{{1}, {1}});
  ReductionDatum dat(t, {eta_value()});
  auto inv = invariant_monomials(t, s, 2);
  auto one = constant(s, Scalar::one(kQ));
  for (int trial = 0; trial < 25; ++trial) {
    auto u = moment_ideal_reduce(reduced_monomial(s, inv[rng() % inv.size()]), dat);
    auto v = moment_ideal_reduce(reduced_monomial(s, inv[rng() % inv.size()]), dat);
    auto w = moment_ideal_reduce(reduced_monomial(s, inv[rng() % inv.size()]), dat);
    EXPECT_EQ(reduced_product(u, one, dat), u);
    EXPECT_EQ(reduced_product(one, u, dat), u);
    EXPECT_EQ(reduced_product(reduced_product(u, v, dat), w, dat), reduced_product(u, reduced_product(v, w, dat), dat));
  }
}

TEST(ReducedProduct, RejectsNonInvariant) {
  auto s = spec(2);
  TorusData t(IntMatrix{{1}, {1}});
  ReductionDatum dat(t, {eta_value()});
  auto x = reduced_monomial(s, CanonicalMonomial{{1, 0}, {0, 0}, {0, 0}});
  EXPECT_THROW(reduced_product(x, x, dat), ParameterError);
}
