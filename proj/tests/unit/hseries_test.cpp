#include <gtest/gtest.h>

#include <vector>

#include "gtbasis/harmonics.hpp"
#include "gtbasis/hseries.hpp"
#include "gtbasis/random.hpp"
#include "oracles.hpp"

namespace gtbasis {
namespace {

HIndex idx(std::initializer_list<int> ks) {
  HIndex k{};
  int i = 0;
  for (int v : ks) k[i++] = static_cast<std::uint8_t>(v);
  return k;
}

MPoly var(int m, Ring r, int j) { return MPoly::variable(m, r, j); }
MPoly cst(int m, Ring r, GaussianRational c) { return MPoly::constant(m, r, c); }

HSeries random_series(SplitMix64& rng, int m, Ring ring, int order) {
  HSeries s(m, ring, order);
  for (int t = 0; t < 6; ++t) {
    HIndex k{};
    int budget = static_cast<int>(rng.uniform_int(0, order));
    for (int i = 0; i < m - 1 && budget > 0; ++i) {
      const int a = static_cast<int>(rng.uniform_int(0, budget));
      k[i] = static_cast<std::uint8_t>(a);
      budget -= a;
    }
    MPoly p = cst(m, ring, make_rational(rng.uniform_int(-3, 3), rng.uniform_int(1, 3)));
    p += var(m, ring, static_cast<int>(rng.uniform_int(1, m))) * GaussianRational(rng.uniform_int(-2, 2));
    if (ring.is_clifford()) {
      p = p.left_mul(Multivector::basis(ring.cdim, Blade{static_cast<std::uint32_t>(rng.uniform_int(0, (1 << m) - 1))}));
    }
    s.add(k, p);
  }
  return s;
}

TEST(HSeries, ProductExamples) {
  const Ring g = Ring::gaussian();
  HSeries a(2, g, 2), b(2, g, 2);
  a.add(idx({0}), cst(2, g, 1));
  a.add(idx({1}), cst(2, g, 1));
  b.add(idx({0}), cst(2, g, 1));
  b.add(idx({1}), cst(2, g, -1));
  HSeries want(2, g, 2);
  want.add(idx({0}), cst(2, g, 1));
  want.add(idx({2}), cst(2, g, -1));
  EXPECT_EQ(series_mul(a, b), want);

  HSeries p(3, g, 3), q(3, g, 3);
  p.add(idx({1, 0}), var(3, g, 1));
  q.add(idx({0, 1}), var(3, g, 2));
  const HSeries pq = series_mul(p, q);
  EXPECT_EQ(pq.terms().size(), 1u);
  EXPECT_EQ(pq.coefficient(idx({1, 1})), var(3, g, 1) * var(3, g, 2));
}

TEST(HSeries, CliffordProductExample) {
  const Ring c = Ring::clifford(3);
  const Multivector e3 = Multivector::basis(3, blade_of({3}));
  const MPoly xv = MPoly::clifford_vector(3);
  HSeries a(3, c, 2), b(3, c, 2);
  a.add(idx({0, 0}), cst(3, c, 1));
  a.add(idx({0, 1}), xv.right_mul(e3));
  b.add(idx({0, 1}), MPoly::constant(3, c, e3));
  HSeries want(3, c, 2);
  want.add(idx({0, 1}), MPoly::constant(3, c, e3));
  want.add(idx({0, 2}), -xv);
  EXPECT_EQ(series_mul(a, b), want);
}

TEST(HSeries, BinomialExpandExamples) {
  const Ring g = Ring::gaussian();
  const HSeries trivial = binomial_expand(make_rational(-7, 3), MPoly(3, g), MPoly(3, g), 3, 5);
  EXPECT_EQ(trivial, HSeries::one(3, g, 5));

  const MPoly c1 = var(3, g, 3) * GaussianRational(-2);
  const MPoly c2 = MPoly::norm_squared(3, g);
  const HSeries half = binomial_expand(make_rational(-1, 2), c1, c2, 3, 6);
  EXPECT_EQ(half.coefficient(idx({0, 1})), var(3, g, 3));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(half.coefficient(idx({0, k})), embedding_F(3, 0, k)) << k;

  const HSeries three_halves = binomial_expand(make_rational(-3, 2), c1, c2, 3, 2);
  EXPECT_EQ(three_halves.coefficient(idx({0, 1})), var(3, g, 3) * GaussianRational(3));
}

TEST(HSeries, BinomialExpandMatchesTermwiseOracle) {
  const Ring g = Ring::gaussian();
  for (int m = 2; m <= 5; ++m) {
    const MPoly c1 = var(m, g, m) * GaussianRational(-2);
    const MPoly c2 = MPoly::norm_squared(m, g);
    for (const Rational a : {make_rational(1, 2), make_rational(1), make_rational(5, 2), make_rational(-3, 4)}) {
      const HSeries s = binomial_expand(-a, c1, c2, m, 7);
      for (int k = 0; k <= 7; ++k) {
        HIndex key{};
        key[m - 2] = static_cast<std::uint8_t>(k);
        ASSERT_EQ(s.coefficient(key), oracle::kernel_power_coefficient(m, g, a, k)) << "m " << m << " k " << k;
      }
    }
  }
}

TEST(HSeries, ExpSeriesExamples) {
  const Ring g = Ring::gaussian();
  EXPECT_EQ(exp_series(MPoly(2, g), 2, 4), HSeries::one(2, g, 4));

  const MPoly z = var(2, g, 1) + GaussianRational::i() * var(2, g, 2);
  const HSeries s = exp_series(z, 2, 5);
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(s.coefficient(idx({k})), z.pow(static_cast<unsigned>(k)) * GaussianRational(Rational(1 / factorial(k))));
  }

  const Ring c = Ring::clifford(2);
  const MPoly x1 = var(2, c, 1), x2 = var(2, c, 2);
  const Multivector e12 = Multivector::basis(2, blade_of({1, 2}));
  const HSeries ms = exp_series(x1 - x2.left_mul(e12), 2, 2);
  const MPoly want = (x1 * x1 - x2 * x2 - (x1 * x2).left_mul(e12) * GaussianRational(2)) * GaussianRational(make_rational(1, 2));
  EXPECT_EQ(ms.coefficient(idx({2})), want);
}

TEST(HSeries, LiftStepExample) {
  const Ring g = Ring::gaussian();
  const MPoly z = var(2, g, 1) + GaussianRational::i() * var(2, g, 2);
  const HSeries lifted = lift_step(exp_series(z, 2, 2), GfKind::harmonic, 2);
  const MPoly z3 = var(3, g, 1) + GaussianRational::i() * var(3, g, 2);
  EXPECT_EQ(lifted.coefficient(idx({1, 1})), var(3, g, 3) * z3 * GaussianRational(3));
}

TEST(HSeries, ErrorPaths) {
  const Ring g = Ring::gaussian();
  EXPECT_THROW(HSeries(1, g, 2), DomainError);
  EXPECT_THROW(HSeries(kMaxDim + 1, g, 2), DomainError);
  EXPECT_THROW(HSeries(3, g, -1), DomainError);
  EXPECT_THROW(HSeries::one(3, g, 2).truncated(3), DomainError);
  EXPECT_THROW(series_mul(HSeries::one(3, g, 2), HSeries::one(4, g, 2)), MismatchError);
  EXPECT_THROW(lift_step(HSeries::one(2, g, 2), GfKind::harmonic, 3), DomainError);
  EXPECT_THROW(lift_step(HSeries::one(2, g, 2), GfKind::monogenic, 2), MismatchError);

  std::vector<MPoly> bad_constant{cst(2, g, 2), var(2, g, 1)};
  EXPECT_THROW(power_expand(make_rational(1, 2), bad_constant, 2, 3), DomainError);
  const Ring c = Ring::clifford(2);
  std::vector<MPoly> non_scalar{cst(2, c, 1), MPoly::constant(2, c, Multivector::basis(2, blade_of({1})))};
  EXPECT_THROW(power_expand(make_rational(1, 2), non_scalar, 2, 3), DomainError);
  EXPECT_THROW(binomial_expand(1, var(3, g, 1), MPoly(3, g), 4, 2), DomainError);
}

TEST(HSeries, AddBeyondOrderIsDropped) {
  const Ring g = Ring::gaussian();
  HSeries s(3, g, 2);
  s.add(idx({2, 1}), var(3, g, 1));
  EXPECT_TRUE(s.terms().empty());
  EXPECT_TRUE(s.coefficient(idx({2, 1})).is_zero());
}

TEST(HSeriesProperty, TruncationCommutesWithProduct) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(2, 4));
    const Ring ring = trial % 2 ? Ring::clifford(m) : Ring::gaussian();
    const HSeries a = random_series(rng, m, ring, 5);
    const HSeries b = random_series(rng, m, ring, 5);
    const int n = static_cast<int>(rng.uniform_int(0, 5));
    ASSERT_EQ(series_mul(a, b).truncated(n), series_mul(a.truncated(n), b.truncated(n)));
  }
}

TEST(HSeriesProperty, CauchyProductIsAssociative) {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(2, 4));
    const Ring ring = trial % 2 ? Ring::clifford(m) : Ring::gaussian();
    const HSeries a = random_series(rng, m, ring, 4);
    const HSeries b = random_series(rng, m, ring, 4);
    const HSeries c = random_series(rng, m, ring, 4);
    ASSERT_EQ(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)));
  }
}

TEST(HSeriesProperty, PowersCompose) {
  const Ring g = Ring::gaussian();
  SplitMix64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(2, 4));
    const int v = static_cast<int>(rng.uniform_int(2, m));
    const MPoly c1 = var(m, g, static_cast<int>(rng.uniform_int(1, m))) * GaussianRational(rng.uniform_int(-3, 3));
    const MPoly c2 = MPoly::norm_squared(m, g) * GaussianRational(make_rational(rng.uniform_int(-2, 2), 2));
    const Rational a = make_rational(rng.uniform_int(-5, 5), 2);
    const Rational b = make_rational(rng.uniform_int(-5, 5), 3);
    const HSeries pa = binomial_expand(a, c1, c2, v, 6);
    const HSeries pb = binomial_expand(b, c1, c2, v, 6);
    ASSERT_EQ(series_mul(pa, pb), binomial_expand(a + b, c1, c2, v, 6));
  }
}

TEST(HSeriesProperty, GeometricSeriesInvertsOneMinusP) {
  const Ring g = Ring::gaussian();
  const MPoly p = var(3, g, 1) + GaussianRational::i() * var(3, g, 2);
  HSeries one_minus(3, g, 8);
  one_minus.add(idx({0, 0}), cst(3, g, 1));
  one_minus.add(idx({0, 1}), -p);
  EXPECT_EQ(series_mul(one_minus, geometric_series(p, 3, 8)), HSeries::one(3, g, 8));
}

TEST(HSeries, EvaluateMatchesHandSum) {
  const Ring g = Ring::gaussian();
  HSeries s(3, g, 3);
  s.add(idx({0, 0}), cst(3, g, 1));
  s.add(idx({1, 0}), var(3, g, 1));
  s.add(idx({1, 1}), var(3, g, 2) * var(3, g, 3));
  const std::vector<double> x{0.5, -0.25, 0.75};
  const std::vector<double> h{0.1, 0.2};
  const auto v = s.evaluate(x, h).scalar_part();
  EXPECT_NEAR(v.real(), 1.0 + 0.5 * 0.1 + (-0.25 * 0.75) * 0.1 * 0.2, 1e-15);
  EXPECT_EQ(v.imag(), 0.0);
}

}  // namespace
}  // namespace gtbasis
