#include <gtest/gtest.h>

#include <random>

#include "qweyl/errors.hpp"
#include "qweyl/expression.hpp"
#include "qweyl/properties.hpp"

using namespace qweyl;

namespace {
const Field kQ = Field::rational_function();
AlgebraSpec spec(std::size_t n) { return AlgebraSpec::single_parameter(n, Normalization::Rescaled, kQ); }

ParseError parse_failure(std::string_view text, const AlgebraSpec& s) {
  try {
    parse_localized(text, s);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError("none", 0, 0);
}
}  // namespace

TEST(Parse, CanonicalForms) {
  EXPECT_EQ(canonical_form("d1*x1", spec(1)), "q*x1*d1 + (q-1)");
  EXPECT_EQ(canonical_form("a1^-1*x1", spec(1)), "1/q*x1*a1^-1");
  EXPECT_EQ(canonical_form("x2 * x1", spec(2)), to_string(Scalar::q(kQ) * PbwElement::x(spec(2), 0) * PbwElement::x(spec(2), 1)));
  EXPECT_EQ(canonical_form("(x1 + 1)^2 - x1^2 - 2*x1", spec(1)), "1");
  EXPECT_EQ(canonical_form("x1/2 + x1/2", spec(1)), "x1");
}

TEST(Parse, EulerSymbolExpands) {
  auto s = spec(1);
  EXPECT_EQ(parse_expression("a1", s), PbwElement::euler(s, 0));
  EXPECT_EQ(parse_expression("a1^2 - a1*a1", s), PbwElement::zero(s));
  EXPECT_THROW(parse_expression("a1^-1", s), DomainError);
}

TEST(Parse, Scalars) {
  Field f = Field::cyclotomic(3);
  EXPECT_EQ(parse_scalar("(1+zeta)^2/2", f).to_string(), "1/2*zeta");
  EXPECT_EQ(parse_scalar("q^2-1", kQ), Scalar::q_power(kQ, 2) - Scalar::one(kQ));
  EXPECT_EQ(parse_scalar("3/2", Field::rational()), Scalar::from_rational(Field::rational(), Rational(3, 2)));
  EXPECT_THROW(parse_scalar("x1", kQ), ParseError);
  EXPECT_THROW(parse_scalar("1/(q-q)", kQ), ZeroDivisorError);
}

TEST(ParseErrors, Positions) {
  auto s = spec(2);
  auto e1 = parse_failure("x1^-1", s);
  EXPECT_EQ(e1.line(), 1);
  EXPECT_EQ(e1.column(), 3);
  auto e2 = parse_failure("x1 +\n  * d1", s);
  EXPECT_EQ(e2.line(), 2);
  EXPECT_EQ(e2.column(), 3);
  auto e3 = parse_failure("x3", s);
  EXPECT_NE(std::string(e3.what()).find("rank is 2"), std::string::npos);
  auto e4 = parse_failure("(x1 + d1", s);
  EXPECT_EQ(e4.line(), 1);
  EXPECT_THROW(parse_localized("x1 / d1", s), ParseError);
  EXPECT_THROW(parse_localized("x1 / 0", s), ZeroDivisorError);
  EXPECT_THROW(parse_localized("", s), ParseError);
  EXPECT_THROW(parse_localized("x1 $", s), ParseError);
}

TEST(ParseErrors, EulerNeedsRescaled) {
  auto u = AlgebraSpec::single_parameter(1, Normalization::Unscaled, kQ);
  EXPECT_NO_THROW(parse_expression("d1*x1", u));
  EXPECT_THROW(parse_localized("a1^-1", u), ParameterError);
}

TEST(RoundTrip, RandomElements) {
  Rng rng(61);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = spec(n);
    for (int t = 0; t < 40; ++t) {
      auto u = random_element(s, 4, 4, rng);
      auto printed = to_string(u);
      ASSERT_EQ(parse_expression(printed, s), u) << printed;
      ASSERT_EQ(canonical_form(printed, s), printed);
    }
  }
}

TEST(RoundTrip, CyclotomicCoefficients) {
  Rng rng(67);
  auto s = AlgebraSpec::single_parameter(2, Normalization::Rescaled, Field::cyclotomic(5));
  for (int t = 0; t < 30; ++t) {
    auto u = random_element(s, 3, 3, rng);
    ASSERT_EQ(parse_expression(to_string(u), s), u) << to_string(u);
  }
}
