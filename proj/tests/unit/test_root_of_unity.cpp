#include <gtest/gtest.h>

#include <random>

#include "qweyl/errors.hpp"
#include "qweyl/root_of_unity.hpp"

using namespace qweyl;

namespace {

std::vector<Scalar> ones(Field f, int l) { return std::vector<Scalar>(static_cast<std::size_t>(l), Scalar::one(f)); }

Scalar product(const std::vector<Scalar>& v, Field f) {
  Scalar p = Scalar::one(f);
  for (const auto& s : v) p *= s;
  return p;
}

}  // namespace

TEST(Center, PowersOfGenerators) {
  auto s = root_of_unity_spec(1, 3);
  EXPECT_TRUE(is_central(PbwElement::x(s, 0, 3)));
  EXPECT_TRUE(is_central(PbwElement::d(s, 0, 3)));
  EXPECT_FALSE(is_central(PbwElement::x(s, 0)));
  EXPECT_FALSE(is_central(PbwElement::euler(s, 0)));
  EXPECT_TRUE(is_central(PbwElement::euler(s, 0).pow(3)));
}

TEST(Center, CentralizerBases) {
  auto s1 = root_of_unity_spec(1, 3);
  EXPECT_EQ(centralizer_basis(s1, 2).size(), 1u);
  auto b4 = centralizer_basis(s1, 4);
  EXPECT_EQ(b4.size(), 4u);
  for (const auto& u : b4) EXPECT_TRUE(is_central(u)) << to_string(u);
  auto b2 = centralizer_basis(root_of_unity_spec(2, 3), 3);
  EXPECT_EQ(b2.size(), 16u);
}

TEST(Center, GenericQHasTrivialCenter) {
  auto s = AlgebraSpec::single_parameter(1, Normalization::Rescaled, Field::rational_function());
  auto basis = centralizer_basis(s, 3);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].size(), 1u);
  EXPECT_TRUE(basis[0].terms().begin()->first.is_one());
  EXPECT_THROW(verify_delta_power(s), ParameterError);
}

TEST(DeltaPower, SeveralOrders) {
  for (auto [n, l] : std::vector<std::pair<std::size_t, int>>{{1, 3}, {1, 5}, {1, 7}, {2, 3}}) {
    auto r = verify_delta_power(root_of_unity_spec(n, l));
    EXPECT_TRUE(r.passed()) << n << " " << l << " " << r.summary();
  }
}

TEST(RankOne, DiagonalModule) {
  Field f = Field::cyclotomic(3);
  Scalar two = Scalar::from_integer(f, 2);
  auto rep = build_irrep_rank1(two, {Scalar::one(f), two, Scalar::from_integer(f, 4)}, 3);
  EXPECT_EQ(rep.dim, 3u);
  EXPECT_EQ(rep.x[0](1, 1), two * Scalar::q(f));
  EXPECT_EQ(rep.y[0](0, 0), -two.inverse());
  EXPECT_EQ(rep.x[0].pow(3), Matrix::scalar(3, two.pow(3)));
  EXPECT_EQ(rep.character.a[0], two.pow(3));
  EXPECT_EQ(Scalar::one(f) + rep.character.a[0] * rep.character.omega[0], Scalar::from_integer(f, 64));
  EXPECT_TRUE(verify_relations(rep).passed());
  EXPECT_EQ(commutant_dimension(rep), 1u);
  EXPECT_EQ(generated_algebra_dimension(rep), 9u);
  EXPECT_TRUE(azumaya_membership(rep.character));
}

TEST(RankOne, NilpotentModule) {
  Field f = Field::cyclotomic(3);
  auto rep = build_irrep_nilpotent(3);
  Scalar q = Scalar::q(f);
  EXPECT_EQ(rep.y[0](0, 1), q - Scalar::one(f));
  EXPECT_EQ(rep.y[0](1, 2), q * q - Scalar::one(f));
  EXPECT_TRUE(rep.x[0].pow(3).is_zero());
  EXPECT_TRUE(rep.character.a[0].is_zero());
  EXPECT_TRUE(rep.character.omega[0].is_zero());
  EXPECT_TRUE(verify_relations(rep).passed());
  EXPECT_EQ(commutant_dimension(rep), 1u);
  EXPECT_TRUE(azumaya_membership(rep.character));
}

TEST(RankOne, SingleZeroWeightGivesReducibleIndecomposableModule) {
  Field f = Field::cyclotomic(3);
  auto b = ones(f, 3);
  b[0] = Scalar::zero(f);
  auto rep = build_irrep_rank1(Scalar::one(f), b, 3);
  EXPECT_TRUE(verify_relations(rep).passed());
  EXPECT_FALSE(azumaya_membership(rep.character));
  // Uniserial: a proper submodule exists, yet only scalars commute.
  EXPECT_EQ(generated_algebra_dimension(rep), 6u);
  EXPECT_EQ(commutant_dimension(rep), 1u);
}

TEST(RankOne, AllZeroWeightsSplit) {
  Field f = Field::cyclotomic(3);
  auto rep = build_irrep_rank1(Scalar::one(f), std::vector<Scalar>(3, Scalar::zero(f)), 3);
  EXPECT_EQ(commutant_dimension(rep), 3u);
  EXPECT_FALSE(azumaya_membership(rep.character));
}

TEST(RankOne, WrongWeightCount) {
  Field f = Field::cyclotomic(3);
  EXPECT_THROW(build_irrep_rank1(Scalar::one(f), ones(f, 2), 3), ParameterError);
}

TEST(RankOne, EulerCharacteristicPolynomial) {
  std::mt19937_64 rng(41);
  for (int l : {3, 5}) {
    Field f = Field::cyclotomic(l);
    for (int t = 0; t < 5; ++t) {
      Scalar lambda = Scalar::from_integer(f, 1 + static_cast<long>(rng() % 4));
      std::vector<Scalar> b;
      for (int i = 0; i < l; ++i) b.push_back(Scalar::from_integer(f, static_cast<long>(rng() % 5) - 2));
      auto rep = build_irrep_rank1(lambda, b, l);
      auto cp = charpoly(euler_matrix(rep, 0));
      ASSERT_EQ(cp.size(), static_cast<std::size_t>(l + 1));
      EXPECT_EQ(cp[0], -(lambda.pow(l) * product(b, f)));
      for (int i = 1; i < l; ++i) EXPECT_TRUE(cp[static_cast<std::size_t>(i)].is_zero());
      EXPECT_TRUE(cp[static_cast<std::size_t>(l)].is_one());
    }
  }
}

TEST(RankOne, RandomCharactersMatchAzumayaLocus) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    int l = t % 2 ? 5 : 3;
    Field f = Field::cyclotomic(l);
    Scalar lambda = Scalar::from_integer(f, 1 + static_cast<long>(rng() % 3)) * Scalar::q_power(f, static_cast<long>(rng() % 3));
    std::vector<Scalar> b;
    for (int i = 0; i < l; ++i) b.push_back(Scalar::from_integer(f, 1 + static_cast<long>(rng() % 3)));
    auto rep = build_irrep_rank1(lambda, b, l);
    Scalar expected = lambda.pow(l) * product(b, f);
    EXPECT_EQ(Scalar::one(f) + rep.character.a[0] * rep.character.omega[0], expected);
    EXPECT_TRUE(azumaya_membership(rep.character));
    EXPECT_EQ(commutant_dimension(rep), 1u);
  }
}

TEST(Azumaya, Characters) {
  Field f = Field::cyclotomic(3);
  auto s = [&](long v) { return Scalar::from_integer(f, v); };
  EXPECT_TRUE(azumaya_membership({{s(0)}, {s(5)}}));
  EXPECT_FALSE(azumaya_membership({{s(1)}, {s(-1)}}));
  EXPECT_FALSE(azumaya_membership({{s(2), s(1)}, {s(3), s(-1)}}));
  EXPECT_TRUE(azumaya_membership({{s(2), s(1)}, {s(3), s(1)}}));
}

TEST(Tensor, TwoNilpotentSlots) {
  Field f = Field::cyclotomic(3);
  auto rep = build_irrep({RankOneData::nilpotent(), RankOneData::nilpotent()}, 3);
  EXPECT_EQ(rep.dim, 9u);
  Scalar q = Scalar::q(f);
  EXPECT_EQ(rep.x[0] * rep.x[1], q.inverse() * (rep.x[1] * rep.x[0]));
  EXPECT_EQ(rep.y[0] * rep.x[1], q * (rep.x[1] * rep.y[0]));
  EXPECT_TRUE(verify_relations(rep).passed());
  EXPECT_EQ(commutant_dimension(rep), 1u);
  EXPECT_EQ(generated_algebra_dimension(rep), 81u);
}

TEST(Tensor, MixedSlots) {
  Field f = Field::cyclotomic(3);
  auto one = Scalar::one(f), zero = Scalar::zero(f);
  auto a = build_irrep({RankOneData::diagonal(Scalar::from_integer(f, 2), ones(f, 3)), RankOneData::nilpotent()}, 3);
  EXPECT_TRUE(verify_relations(a).passed());
  EXPECT_EQ(commutant_dimension(a), 1u);
  auto z = build_irrep({RankOneData::diagonal(one, {zero, one, one}), RankOneData::nilpotent()}, 3);
  EXPECT_TRUE(verify_relations(z).passed());
  EXPECT_FALSE(azumaya_membership(z.character));
}

TEST(Freeness, OverCenter) {
  auto r1 = verify_freeness(root_of_unity_spec(1, 3), 2);
  EXPECT_TRUE(r1.passed()) << r1.summary();
  auto r2 = verify_freeness(root_of_unity_spec(2, 3), 1);
  EXPECT_TRUE(r2.passed()) << r2.summary();
}
