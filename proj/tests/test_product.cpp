#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qtriple/product.hpp"

using namespace qtriple;

namespace {

oracle::Terms oracle_product(const ThetaProduct& p, std::int64_t hi) {
  const std::int64_t wide = hi + 200;
  oracle::Terms acc{{0, 1}};
  for (const auto& f : p.factors) acc = oracle::multiply(acc, oracle::theta(value(f.eps), f.a.units, f.b.units, wide), wide);
  acc = oracle::shift(acc, p.monomial_exp.units);
  for (auto& [e, c] : acc) c *= p.coeff;
  return oracle::truncate(acc, hi);
}

}  // namespace

TEST(Product, ExpansionMatchesOracle) {
  const char* cases[] = {"psi(q)^2*phi(q)", "3*q^2*X(q)*Y(q^2)", "-f(-q)^3", "f(q^-1,q^3)*phi(-q)", "q^-1/2*f(q^1/2,q^3/2)",
                         "2*f(-q,-q^5)*psi(q^3)*X(q^2)"};
  for (const char* text : cases) {
    const auto p = parse_theta_product(text);
    EXPECT_EQ(oracle::of(expand_product(p, HalfExp{120}), 120), oracle_product(p, 120)) << text;
  }
}

TEST(Product, VanishingFactorGivesZero) {
  const auto p = parse_theta_product("phi(q)*f(-1,-q^2)");
  EXPECT_TRUE(expand_product(p, HalfExp{40}).is_zero());
}

TEST(Product, HighValuationGivesZero) {
  const auto p = parse_theta_product("q^50*phi(q)");
  const auto s = expand_product(p, HalfExp{20});
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.hi(), HalfExp{20});
}

TEST(Product, NegativeValuationFactorsKeepBound) {
  // q^{-1} f(q, q) written as f(q^{-1}, q^3), times a factor starting at q^3
  const auto p = parse_theta_product("f(q^-1,q^3)*f(q^3,q^5)");
  const auto s = expand_product(p, HalfExp{60});
  EXPECT_GE(s.hi(), HalfExp{60});
  EXPECT_EQ(oracle::of(s, 60), oracle_product(p, 60));
}

TEST(Product, SumCombinesTerms) {
  const auto sum = parse_theta_sum("psi(q^2)*phi(q^2)^2 + 4*q*psi(q^2)*psi(q^4)^2");
  ASSERT_EQ(sum.size(), 2u);
  oracle::Terms want;
  for (const auto& t : sum) want = oracle::add(want, oracle_product(t, 100));
  EXPECT_EQ(oracle::of(expand_sum(sum, HalfExp{100}), 100), want);
}

TEST(Notation, NamedFunctions) {
  const auto p = parse_theta_product("phi(q^2)*psi(q)*f(-q^3)*X(q)*Y(q^4)");
  ASSERT_EQ(p.factors.size(), 5u);
  EXPECT_EQ(p.factors[0], theta_special(SpecialTheta::phi, 2));
  EXPECT_EQ(p.factors[1], theta_special(SpecialTheta::psi, 1));
  EXPECT_EQ(p.factors[2], theta_special(SpecialTheta::fneg, 3));
  EXPECT_EQ(p.factors[3], theta_special(SpecialTheta::X, 1));
  EXPECT_EQ(p.factors[4], theta_special(SpecialTheta::Y, 4));
}

TEST(Notation, SignedArguments) {
  const auto p = parse_theta_product("phi(-q)*psi(-q^2)*f(-q^1/2,-q^5/2)");
  EXPECT_EQ(p.factors[0].eps, Sign::minus);
  EXPECT_EQ(p.factors[1], (ThetaArg{Sign::minus, HalfExp{4}, HalfExp{12}}));
  EXPECT_EQ(p.factors[2], (ThetaArg{Sign::minus, HalfExp{1}, HalfExp{5}}));
}

TEST(Notation, CoefficientsAndMonomials) {
  const auto s = parse_theta_sum("-2*q^3*phi(q) + q - 5");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].coeff, -2);
  EXPECT_EQ(s[0].monomial_exp, HalfExp{6});
  EXPECT_EQ(s[1].monomial_exp, HalfExp{2});
  EXPECT_TRUE(s[1].factors.empty());
  EXPECT_EQ(s[2].coeff, -5);
}

TEST(Notation, Errors) {
  EXPECT_THROW(parse_theta_sum("phi(q"), NotationError);
  EXPECT_THROW(parse_theta_sum("chi(q)"), NotationError);
  EXPECT_THROW(parse_theta_sum("f(q,-q^2)"), NotationError);
  EXPECT_THROW(parse_theta_sum("X(-q)"), NotationError);
  EXPECT_THROW(parse_theta_sum("f(q)"), NotationError);
  EXPECT_THROW(parse_theta_sum("phi(q)^0"), NotationError);
  EXPECT_THROW(parse_theta_sum("phi(q) phi(q)"), NotationError);
  EXPECT_THROW(parse_theta_product("phi(q) + psi(q)"), NotationError);
}

TEST(Notation, GenericRendering) {
  EXPECT_EQ(to_string(parse_theta_product("2*q*phi(q)")), "2*q*f(q,q)");
  EXPECT_EQ(to_string(parse_theta_sum("phi(-q) - q^3/2*psi(q^2)")), "1*f(-q,-q) - 1*q^3/2*f(q^2,q^6)");
}
