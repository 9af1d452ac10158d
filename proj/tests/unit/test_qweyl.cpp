#include <gtest/gtest.h>

#include <random>

#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/localized.hpp"
#include "qweyl/properties.hpp"
#include "rewriter.hpp"

using namespace qweyl;

namespace {

const Field kQ = Field::rational_function();

AlgebraSpec rescaled(std::size_t n) { return AlgebraSpec::single_parameter(n, Normalization::Rescaled, kQ); }
AlgebraSpec unscaled(std::size_t n) { return AlgebraSpec::single_parameter(n, Normalization::Unscaled, kQ); }

Scalar q() { return Scalar::q(kQ); }
Scalar k(long v) { return Scalar::from_integer(kQ, v); }

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> off(-2, 2), diag(1, 2);
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = (rng() % 2 ? 1 : -1) * diag(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = off(rng);
      m[j][i] = -m[i][j];
    }
  }
  return m;
}

oracle::Letters random_letters(std::size_t n, std::size_t len, std::mt19937_64& rng) {
  oracle::Letters w;
  for (std::size_t t = 0; t < len; ++t) w.push_back({rng() % 2 == 1, static_cast<std::size_t>(rng() % n)});
  return w;
}

Word to_word(const oracle::Letters& w) {
  Word out;
  for (const auto& l : w) out.push_back(l.is_d ? WordFactor::d(l.index) : WordFactor::x(l.index));
  return out;
}

}  // namespace

TEST(Relations, DiagonalRescaled) {
  auto s = rescaled(1);
  auto x = PbwElement::x(s, 0), d = PbwElement::d(s, 0);
  EXPECT_EQ(to_string(d * x), "q*x1*d1 + (q-1)");
  EXPECT_EQ(d * x, q() * (x * d) + PbwElement::constant(s, q() - k(1)));
  EXPECT_EQ(d * x * x, q() * q() * (x * x * d) + (q() * q() - k(1)) * x);
}

TEST(Relations, DiagonalUnscaled) {
  auto s = unscaled(1);
  auto x = PbwElement::x(s, 0), d = PbwElement::d(s, 0);
  EXPECT_EQ(d * x, q().inverse() * (x * d) + PbwElement::one(s));
}

TEST(Relations, EulerSquare) {
  auto s = rescaled(1);
  auto xd = PbwElement::x(s, 0) * PbwElement::d(s, 0);
  auto expected = q() * PbwElement::monomial(s, Monomial({2}, {2}), Scalar::one(kQ)) + (q() - k(1)) * xd;
  EXPECT_EQ(xd * xd, expected);
}

TEST(Relations, MixedIndices) {
  auto s = rescaled(2);
  auto x1 = PbwElement::x(s, 0), x2 = PbwElement::x(s, 1), d1 = PbwElement::d(s, 0), d2 = PbwElement::d(s, 1);
  EXPECT_EQ(x2 * x1, q() * (x1 * x2));
  EXPECT_EQ(d2 * d1, q() * (d1 * d2));
  EXPECT_EQ(d1 * x2, q() * (x2 * d1));
  EXPECT_EQ(d2 * x1, q().inverse() * (x1 * d2));
  EXPECT_EQ(x1 * x2, PbwElement::monomial(s, Monomial({1, 1}, {0, 0}), Scalar::one(kQ)));
}

TEST(Relations, UnitAndZero) {
  auto s = rescaled(2);
  auto u = PbwElement::x(s, 1) * PbwElement::d(s, 0) + PbwElement::constant(s, q());
  EXPECT_EQ(u * PbwElement::one(s), u);
  EXPECT_EQ(PbwElement::one(s) * u, u);
  EXPECT_TRUE((u * PbwElement::zero(s)).is_zero());
}

TEST(Relations, IndexOutOfRange) {
  EXPECT_THROW(normal_form({WordFactor::x(2)}, rescaled(2)), ParameterError);
  EXPECT_THROW(PbwElement::x(rescaled(1), 0) * PbwElement::x(rescaled(2), 0), ParameterError);
}

TEST(Specs, SkewSymmetryEnforced) {
  EXPECT_THROW(AlgebraSpec({{1, 2}, {2, 1}}, Normalization::Rescaled, kQ), ParameterError);
  EXPECT_THROW(AlgebraSpec({{1, 2}}, Normalization::Rescaled, kQ), ParameterError);
  EXPECT_NO_THROW(AlgebraSpec({{1, 2}, {-2, 3}}, Normalization::Rescaled, kQ));
}

TEST(Specs, SingleParameterExponents) {
  auto s = rescaled(3);
  EXPECT_TRUE(s.is_single_parameter());
  EXPECT_EQ(s.diagonal_exponent(0), 1);
  EXPECT_EQ(s.matrix()[0][0], -1);
  EXPECT_EQ(s.xx_exponent(0, 1), -1);
  EXPECT_EQ(unscaled(3).matrix()[0][0], 1);
}

TEST(Grading, HomogeneousAndNot) {
  auto s = rescaled(2);
  auto x1 = PbwElement::x(s, 0), d1 = PbwElement::d(s, 0), d2 = PbwElement::d(s, 1);
  EXPECT_EQ(grading_degree(x1 * d2), (IntVector{1, -1}));
  EXPECT_FALSE(grading_degree(x1 + d1).has_value());
  EXPECT_EQ(grading_degree(d1 * x1), (IntVector{0, 0}));
  EXPECT_EQ(grading_degree(PbwElement::zero(s)), (IntVector{0, 0}));
}

TEST(Oracle, RandomWordsSingleParameter) {
  std::mt19937_64 rng(11);
  for (auto norm : {Normalization::Rescaled, Normalization::Unscaled}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto s = AlgebraSpec::single_parameter(n, norm, kQ);
      for (int t = 0; t < 40; ++t) {
        auto w = random_letters(n, 1 + rng() % 6, rng);
        ASSERT_EQ(normal_form(to_word(w), s), oracle::rewrite(w, Scalar::one(kQ), s)) << s.describe();
      }
    }
  }
}

TEST(Oracle, RandomWordsRandomMatrices) {
  std::mt19937_64 rng(12);
  for (auto norm : {Normalization::Rescaled, Normalization::Unscaled}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::size_t n = 1 + rng() % 3;
      AlgebraSpec s(random_matrix(n, rng), norm, kQ);
      for (int t = 0; t < 30; ++t) {
        auto w = random_letters(n, 1 + rng() % 6, rng);
        ASSERT_EQ(normal_form(to_word(w), s), oracle::rewrite(w, Scalar::one(kQ), s)) << s.describe();
      }
    }
  }
}

TEST(Oracle, RootOfUnityField) {
  std::mt19937_64 rng(13);
  Field f = Field::cyclotomic(3);
  auto s = AlgebraSpec::single_parameter(2, Normalization::Rescaled, f);
  for (int t = 0; t < 60; ++t) {
    auto w = random_letters(2, 1 + rng() % 7, rng);
    ASSERT_EQ(normal_form(to_word(w), s), oracle::rewrite(w, Scalar::one(f), s));
  }
}

TEST(Properties, EngineRandomized) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = verify_engine_properties(rescaled(n), 60, 4, 100 + n);
    EXPECT_TRUE(r.passed()) << r.summary();
    auto u = verify_engine_properties(unscaled(n), 30, 3, 200 + n);
    EXPECT_TRUE(u.passed()) << u.summary();
  }
}

TEST(Properties, PowerIdentities) {
  auto r1 = verify_power_identities(rescaled(1), 6);
  EXPECT_TRUE(r1.passed()) << r1.summary();
  std::mt19937_64 rng(5);
  AlgebraSpec s(random_matrix(3, rng), Normalization::Rescaled, kQ);
  auto r3 = verify_power_identities(s, 4);
  EXPECT_TRUE(r3.passed()) << r3.summary();
  EXPECT_THROW(verify_power_identities(unscaled(1), 2), ParameterError);
}

TEST(Properties, FlatnessDimensionCount) {
  // Words in the generators of length <= D span exactly the PBW monomials of degree <= D.
  for (std::size_t n = 1; n <= 2; ++n) {
    auto s = rescaled(n);
    const unsigned D = 3;
    auto monos = exponent_vectors(2 * n, D);
    std::map<Monomial, std::size_t> index;
    for (const auto& e : monos) {
      std::vector<unsigned> a(e.begin(), e.begin() + static_cast<long>(n)), b(e.begin() + static_cast<long>(n), e.end());
      index.emplace(Monomial(a, b), index.size());
    }
    EchelonBasis span(index.size(), kQ);
    std::vector<oracle::Letters> frontier{{}};
    for (unsigned len = 0; len <= D; ++len) {
      std::vector<oracle::Letters> next;
      for (const auto& w : frontier) {
        auto v = normal_form(to_word(w), s);
        Vector dense(index.size(), Scalar::zero(kQ));
        for (const auto& [m, c] : v.terms()) dense.at(index.at(m)) = c;
        span.insert(dense);
        for (std::size_t g = 0; g < 2 * n; ++g) {
          auto nw = w;
          nw.push_back({g >= n, g % n});
          next.push_back(nw);
        }
      }
      frontier = std::move(next);
    }
    EXPECT_EQ(span.rank(), index.size()) << n;
  }
}

TEST(Euler, OperatorsCommute) {
  auto s = rescaled(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(PbwElement::euler(s, i) * PbwElement::euler(s, j), PbwElement::euler(s, j) * PbwElement::euler(s, i));
}

TEST(Euler, QCommutesWithGenerators) {
  auto s = rescaled(2);
  auto a1 = PbwElement::euler(s, 0);
  auto x1 = PbwElement::x(s, 0), x2 = PbwElement::x(s, 1), d1 = PbwElement::d(s, 0);
  EXPECT_EQ(a1 * x1, q() * (x1 * a1));
  EXPECT_EQ(a1 * d1, q().inverse() * (d1 * a1));
  EXPECT_EQ(a1 * x2, x2 * a1);
}

TEST(Localized, RightDenominators) {
  auto s = rescaled(1);
  auto x = PbwElement::x(s, 0), d = PbwElement::d(s, 0), one = PbwElement::one(s);
  LocalizedElement xa(x, {1}), da(d, {1}), ia(one, {1});
  EXPECT_TRUE(localized_equal(localized_multiply(xa, LocalizedElement(x)), LocalizedElement(q().inverse() * (x * x), {1})));
  EXPECT_TRUE(localized_equal(localized_multiply(da, ia), LocalizedElement(d, {2})));
  EXPECT_TRUE(localized_equal(localized_multiply(ia, da), LocalizedElement(q() * d, {2})));
}

TEST(Localized, EqualityCrossMultiplies) {
  auto s = rescaled(1);
  auto x = PbwElement::x(s, 0), a = PbwElement::euler(s, 0);
  EXPECT_TRUE(localized_equal(LocalizedElement(a * x, {1}), LocalizedElement(q() * x)));
  EXPECT_FALSE(localized_equal(LocalizedElement(a * x, {1}), LocalizedElement(x)));
  EXPECT_TRUE(localized_equal(LocalizedElement(a, {1}), LocalizedElement(PbwElement::one(s))));
  auto sum = localized_add(LocalizedElement(x, {1}), LocalizedElement(PbwElement::one(s)));
  EXPECT_TRUE(localized_equal(sum, LocalizedElement(x + a, {1})));
}

TEST(Localized, SigmaActsByGrading) {
  auto s = rescaled(2);
  auto v = PbwElement::x(s, 0, 2) * PbwElement::d(s, 1);
  EXPECT_EQ(sigma_power(v, {1, 0}), q() * q() * v);
  EXPECT_EQ(sigma_power(v, {0, 1}), q().inverse() * v);
}

TEST(Localized, RequiresRescaled) {
  EXPECT_THROW(LocalizedElement(PbwElement::x(unscaled(1), 0), {1}), ParameterError);
}
