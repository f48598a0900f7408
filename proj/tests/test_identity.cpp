#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qtriple/identity.hpp"

using namespace qtriple;

namespace {

constexpr std::int64_t hi = 300;  // q^150
const HalfExp through{hi};

oracle::Terms th(int eps, std::int64_t a, std::int64_t b) { return oracle::theta(eps, a, b, hi + 50); }
oracle::Terms mul(const oracle::Terms& x, const oracle::Terms& y) { return oracle::multiply(x, y, hi); }

}  // namespace

// f(a,b)f(c,d) + f(-a,-b)f(-c,-d) = 2 f(ac,bd) f(ad,bc) when ab = cd.
TEST(Properties, ProductPairing) {
  for (std::int64_t s = 1; s <= 16; ++s)
    for (std::int64_t a = 0; a <= s; ++a)
      for (std::int64_t c = 0; c <= s; ++c) {
        const std::int64_t b = s - a, d = s - c;
        const auto lhs = oracle::add(mul(th(1, a, b), th(1, c, d)), mul(th(-1, a, b), th(-1, c, d)));
        const ThetaProduct rhs{2, HalfExp{0}, {{Sign::plus, HalfExp{a + c}, HalfExp{b + d}}, {Sign::plus, HalfExp{a + d}, HalfExp{b + c}}}};
        EXPECT_EQ(oracle::of(expand_product(rhs, through), hi), lhs) << a << "," << b << "," << c << "," << d;
      }
}

// f(a, ab^2) f(b, a^2 b) = f(a, b) psi(ab)
TEST(Properties, PsiFactorisation) {
  for (std::int64_t x = 1; x <= 10; ++x)
    for (std::int64_t y = 1; y <= 10; ++y) {
      const auto lhs = mul(th(1, x, x + 2 * y), th(1, y, 2 * x + y));
      const ThetaProduct rhs{1, HalfExp{0}, {{Sign::plus, HalfExp{x}, HalfExp{y}}, {Sign::plus, HalfExp{x + y}, HalfExp{3 * (x + y)}}}};
      EXPECT_EQ(oracle::of(expand_product(rhs, through), hi), lhs) << x << "," << y;
    }
}

// f(a,b) f(-a,-b) = f(-a^2,-b^2) phi(-ab)
TEST(Properties, SignedSquare) {
  for (std::int64_t x = 0; x <= 12; ++x)
    for (std::int64_t y = 0; y <= 12; ++y) {
      if (x + y == 0) continue;
      const auto lhs = mul(th(1, x, y), th(-1, x, y));
      const ThetaProduct rhs{1, HalfExp{0}, {{Sign::minus, HalfExp{2 * x}, HalfExp{2 * y}}, {Sign::minus, HalfExp{x + y}, HalfExp{x + y}}}};
      EXPECT_EQ(oracle::of(expand_product(rhs, through), hi), lhs) << x << "," << y;
    }
}

TEST(Theorem1, ValidationNamesEveryViolation) {
  EXPECT_TRUE(thm1_validate({2, 1, 1, 0, 1, 0, 1, 1}).empty());
  const auto v = thm1_validate({3, 1, 1, 1, 1, 1, 0, 0});
  EXPECT_EQ(v, (std::vector<std::string>{"gcd(2k,k-r)=1", "S3>0", "2S1=r(k-r)S3"}));
  EXPECT_EQ(thm1_validate({1, 1, 1, 0, 1, 0, 1, 1}).front(), "k>r>0");
  EXPECT_EQ(thm1_validate({4, 2, 4, 0, 4, 0, 2, 0}).front(), "gcd(2k,k-r)=1");
  EXPECT_EQ(thm1_validate({2, 1, 1, 0, 0, 2, 1, 1}), (std::vector<std::string>{"S1=S2"}));
  EXPECT_EQ(thm1_validate({2, 1, 2, 0, 2, 0, 1, 1}), (std::vector<std::string>{"2S1=r(k-r)S3"}));
  EXPECT_TRUE(thm1_validate({3, 2, 5, 1, 5, 1, 4, 2}).empty());
  try {
    thm1_verify({3, 1, 1, 1, 1, 1, 0, 0}, through);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("gcd(2k,k-r)=1 violated"), std::string::npos);
  }
}

TEST(Theorem1, PsiSquaredPhiAgainstOracle) {
  // k=2, r=1, f(q,1) f(q,1) f(q,q) = 4 psi(q)^2 phi(q)
  const Thm1Params p{2, 1, 1, 0, 1, 0, 1, 1};
  const auto rhs = thm1_rhs(p);
  EXPECT_EQ(rhs.size(), 4u);
  const auto psi = th(1, 2, 6), phi = th(1, 2, 2);
  auto want = mul(mul(psi, psi), phi);
  for (auto& [e, c] : want) c *= 4;
  EXPECT_EQ(oracle::of(expand_sum(rhs, through), hi), want);
}

TEST(Theorem1, TermCountIsTwoK) {
  const std::pair<int, int> pairs[] = {{2, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 4}, {6, 1}, {6, 5}};
  for (auto [k, r] : pairs) {
    const std::int64_t R = r * (k - r);
    const Thm1Params p{k, r, R, 0, R, 0, 2, 0};
    EXPECT_EQ(thm1_rhs(p).size(), static_cast<std::size_t>(2 * k));
    const auto rep = thm1_verify(p, HalfExp{200});
    EXPECT_TRUE(rep.equal) << k << "," << r;
  }
}

TEST(Theorem1, SignedVariants) {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        const Thm1Params p{3, 2, 2, 1, 1, 2, 2, 1, sign_of(s1), sign_of(s2), sign_of(s3)};
        EXPECT_TRUE(thm1_verify(p, through).equal) << s1 << s2 << s3;
      }
}

TEST(Theorem1, CorruptedTermIsCaught) {
  const Thm1Params p{4, 1, 3, 0, 2, 1, 1, 1};
  auto rhs = thm1_rhs(p);
  rhs[1].coeff += 1;
  const auto rep = verify_identity({thm1_lhs(p)}, rhs, through);
  EXPECT_FALSE(rep.equal);
  ASSERT_TRUE(rep.mismatch.has_value());
}

TEST(Theorem2, GridAndTermCount) {
  const std::pair<int, int> pairs[] = {{2, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 4}};
  for (auto [k, r] : pairs) {
    const std::int64_t R = r * (k - r);
    for (int e : {1, -1}) {
      const Thm2Params p{k, r, R, R, 1, 1, sign_of(e)};
      EXPECT_EQ(thm2_rhs(p).size(), static_cast<std::size_t>(k));
      EXPECT_TRUE(thm2_verify(p, through).equal) << k << "," << r << "," << e;
    }
  }
  EXPECT_EQ(thm2_validate({2, 1, 1, 0, 1, 1}), (std::vector<std::string>{"S=r(k-r)S3"}));
}

TEST(Theorem2, PhiTimesShiftedTheta) {
  // k=2, r=1, s=2, t=0: f(q^2, 1) phi(q) = 2 psi(q^2) phi(q)
  const Thm2Params p{2, 1, 2, 0, 1, 1, Sign::plus};
  auto want = mul(th(1, 4, 12), th(1, 2, 2));
  for (auto& [e, c] : want) c *= 2;
  EXPECT_EQ(oracle::of(expand_sum(thm2_rhs(p), through), hi), want);
}

TEST(Corollaries, PrintedFormsHold) {
  const std::pair<int, int> pairs[] = {{2, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {6, 5}};
  for (auto c : {Corollary::cor1, Corollary::cor2, Corollary::cor3, Corollary::cor4})
    for (auto [k, r] : pairs) {
      const auto id = corollary_instantiate(c, k, r);
      EXPECT_TRUE(verify_identity(id.lhs, id.rhs, through).equal) << int(c) << " " << k << "," << r;
      EXPECT_TRUE(thm1_verify(corollary_thm1_params(c, k, r), through).equal);
    }
  EXPECT_THROW(corollary_instantiate(Corollary::cor1, 3, 1), DomainError);
}

TEST(Corollaries, TwoThetaStages) {
  for (int n = 1; n <= 8; ++n)
    for (std::int64_t m = 1; m <= 3; ++m) {
      const auto rep = clp2_verify(n, m, HalfExp{200});
      EXPECT_TRUE(rep.theorem.equal) << n << " m=" << m;
      EXPECT_TRUE(rep.entry30iv.equal) << n << " m=" << m;
      EXPECT_TRUE(rep.outer_factors_ok) << n << " m=" << m;
      EXPECT_TRUE(rep.reduced.equal) << n << " m=" << m;
      EXPECT_TRUE(rep.odd_powers_vanish) << n << " m=" << m;
      EXPECT_TRUE(rep.printed.equal) << n << " m=" << m;
    }
  EXPECT_THROW(clp2_row(9, 1), DomainError);
}

TEST(Corollaries, TwoThetaFourAtOne) {
  // 2 phi(-q) psi(q^2) against the printed decomposition, through q^100
  const auto id = clp2_instantiate(4, 1);
  const auto lhs = oracle::multiply(th(-1, 2, 2), th(1, 4, 12), 200);
  auto want = lhs;
  for (auto& [e, c] : want) c *= 2;
  EXPECT_EQ(oracle::of(expand_sum(id.lhs, HalfExp{200}), 200), want);
  EXPECT_TRUE(verify_identity(id.lhs, id.rhs, HalfExp{200}).equal);
}

TEST(Explicit, DissectionOfPsiCube) {
  // psi(q)^2 psi(q^2) = phi(q) phi(q^2) psi(q^4)
  const auto psi1 = th(1, 2, 6), psi2 = th(1, 4, 12), psi4 = th(1, 8, 24), phi1 = th(1, 2, 2), phi2 = th(1, 4, 4);
  EXPECT_EQ(mul(mul(psi1, psi1), psi2), mul(mul(phi1, phi2), psi4));
  EXPECT_TRUE(verify_identity(parse_theta_sum("psi(q)^2*psi(q^2)"), parse_theta_sum("phi(q)*phi(q^2)*psi(q^4)"), through).equal);
}

TEST(Explicit, NegativeExponentsAreReported) {
  const auto rep = verify_identity(parse_theta_sum("f(q^-1,q^3)"), parse_theta_sum("f(q^-1,q^3)"), HalfExp{20});
  EXPECT_FALSE(rep.equal);
  ASSERT_TRUE(rep.negative_exponent.has_value());
  EXPECT_EQ(*rep.negative_exponent, HalfExp{-2});
}

TEST(Explicit, MostlyEvenDissection) {
  // terms of psi(q)^2 psi(q^2) at q^{4N}, with q^4 -> q, give phi(q) psi(q) phi(q^2)
  const std::int64_t top = 400;  // q^200 before halving twice
  const auto psi1 = oracle::theta(1, 2, 6, top), psi2 = oracle::theta(1, 4, 12, top);
  const auto whole = oracle::multiply(oracle::multiply(psi1, psi1, top), psi2, top);
  oracle::Terms kept;
  for (const auto& [e, c] : whole)
    if (e % 8 == 0) kept[e / 4] = c;
  const auto lib = dissect(expand_sum(parse_theta_sum("psi(q)^2*psi(q^2)"), HalfExp{top}), 8, HalfExp{0}, true);
  EXPECT_EQ(oracle::of(lib, 100), oracle::truncate(kept, 100));
  const auto rhs = expand_sum(parse_theta_sum("phi(q)*psi(q)*phi(q^2)"), HalfExp{100});
  EXPECT_EQ(oracle::of(rhs, 100), oracle::truncate(kept, 100));
}

TEST(Theorem1, WorkedParameterSets) {
  // psi^2 phi decomposition: rhs sums to psi(q^2)phi(q^2)^2 + 4q psi(q^2)psi(q^4)^2, times the constant 4
  const Thm1Params a{2, 1, 1, 0, 1, 0, 1, 1};
  EXPECT_EQ(thm1_rhs(a).size(), 4u);
  auto want = expand_sum(parse_theta_sum("4*psi(q^2)*phi(q^2)^2 + 16*q*psi(q^2)*psi(q^4)^2"), HalfExp{200});
  EXPECT_TRUE(compare(expand_sum(thm1_rhs(a), HalfExp{200}), want, HalfExp{200}).equal);

  const Thm1Params b{3, 2, 5, 1, 5, 1, 4, 2};
  const auto rb = thm1_verify(b, HalfExp{200});
  EXPECT_TRUE(rb.equal);
  EXPECT_EQ(rb.rhs_term_count, 6u);

  EXPECT_TRUE(thm1_verify({2, 1, 1, 1, 1, 1, 4, 0}, HalfExp{200}).equal);
}

TEST(Theorem2, WorkedParameterSets) {
  EXPECT_EQ(thm2_rhs({2, 1, 2, 0, 1, 1, Sign::plus}).size(), 2u);
  EXPECT_TRUE(thm2_verify({2, 1, 1, 1, 2, 0, Sign::minus}, HalfExp{200}).equal);
}

TEST(Corollaries, WorkedInstances) {
  const auto c1 = corollary_instantiate(Corollary::cor1, 2, 1);
  EXPECT_TRUE(verify_identity(c1.lhs, c1.rhs, HalfExp{200}).equal);

  const auto first = clp2_instantiate(1, 1);
  EXPECT_EQ(first.rhs.size(), 2u);
  EXPECT_TRUE(verify_identity(first.lhs, first.rhs, HalfExp{200}).equal);

  // phi(-q^2) phi(q) = sum q^{a^2} f(-q^{2(3+2a)}, -q^{2(3-2a)}) f(-q^{3-2a}, -q^{3+2a})
  ThetaSum rhs;
  for (std::int64_t a = -1; a <= 1; ++a)
    rhs.push_back({1, HalfExp::whole(a * a),
                   {ThetaArg{Sign::minus, HalfExp::whole(2 * (3 + 2 * a)), HalfExp::whole(2 * (3 - 2 * a))},
                    ThetaArg{Sign::minus, HalfExp::whole(3 - 2 * a), HalfExp::whole(3 + 2 * a)}}});
  EXPECT_TRUE(verify_identity(parse_theta_sum("phi(-q^2)*phi(q)"), rhs, HalfExp{200}).equal);
  const auto second = clp2_instantiate(1, 2);
  EXPECT_TRUE(compare(expand_sum(second.rhs, HalfExp{200}), expand_sum(rhs, HalfExp{200}), HalfExp{200}).equal);
}
