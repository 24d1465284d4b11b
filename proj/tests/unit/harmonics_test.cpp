#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gtbasis/harmonics.hpp"
#include "gtbasis/random.hpp"

namespace gtbasis {
namespace {

const Ring kG = Ring::gaussian();

MPoly var(int m, int j) { return MPoly::variable(m, kG, j); }
MPoly z_plus(int m) { return var(m, 1) + GaussianRational::i() * var(m, 2); }

HIndex hidx(const std::vector<int>& k) {
  HIndex out{};
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = static_cast<std::uint8_t>(k[i]);
  return out;
}

TEST(EmbeddingF, Examples) {
  for (int m = 3; m <= 5; ++m)
    for (int j = 0; j <= 2; ++j) EXPECT_EQ(embedding_F(m, j, 0), MPoly::constant(m, kG, 1));
  EXPECT_EQ(embedding_F(3, 0, 1), var(3, 3));
  EXPECT_EQ(embedding_F(3, 1, 1), var(3, 3) * GaussianRational(3));
  EXPECT_TRUE(embedding_F(3, 0, -1).is_zero());
  EXPECT_EQ(embedding_F(3, 0, 2),
            (var(3, 3) * var(3, 3) * GaussianRational(3) - MPoly::norm_squared(3, kG)) * GaussianRational(make_rational(1, 2)));
  EXPECT_THROW(embedding_F(2, 0, 1), DomainError);
}

TEST(HarmBasis, Examples) {
  EXPECT_EQ(harm_basis({{2}, Sign::plus, Normalization::factorial}),
            z_plus(2) * z_plus(2) * GaussianRational(make_rational(1, 2)));
  EXPECT_EQ(harm_basis({{1, 1}, Sign::plus, Normalization::factorial}), var(3, 3) * z_plus(3) * GaussianRational(3));
  EXPECT_EQ(harm_basis({{0, 1}, Sign::plus, Normalization::factorial}), var(3, 3));
  EXPECT_EQ(harm_basis({{0, 1}, Sign::minus, Normalization::factorial}), var(3, 3));
  EXPECT_TRUE(is_homogeneous(harm_basis({{2, 1}, Sign::plus, Normalization::factorial}), 3));
}

TEST(HarmBasis, RejectsInvalidIndices) {
  EXPECT_THROW(harm_basis({{-1, 1}, Sign::plus, Normalization::factorial}), DomainError);
  EXPECT_THROW(harm_basis({{}, Sign::plus, Normalization::factorial}), DomainError);
  EXPECT_THROW(harm_basis({std::vector<int>(kMaxDim, 0), Sign::plus, Normalization::factorial}), DomainError);
}

TEST(RealBasis, Examples) {
  auto [re1, im1] = real_basis({{1}, Sign::plus, Normalization::factorial});
  EXPECT_EQ(re1, var(2, 1));
  EXPECT_EQ(im1, var(2, 2));
  auto [re2, im2] = real_basis({{2}, Sign::plus, Normalization::factorial});
  EXPECT_EQ(re2, (var(2, 1) * var(2, 1) - var(2, 2) * var(2, 2)) * GaussianRational(make_rational(1, 2)));
  EXPECT_EQ(im2, var(2, 1) * var(2, 2));
  auto [re3, im3] = real_basis({{0, 1}, Sign::plus, Normalization::factorial});
  EXPECT_EQ(re3, var(3, 3));
  EXPECT_TRUE(im3.is_zero());
}

TEST(HarmBasisProperty, HarmonicHomogeneousAndConjugateSymmetric) {
  for (int m = 2; m <= 5; ++m) {
    for (const auto& idx : enumerate_harm_indices(m, 4, Normalization::factorial)) {
      const MPoly p = harm_basis(idx);
      ASSERT_TRUE(laplacian(p).is_zero());
      ASSERT_TRUE(is_homogeneous(p, idx.degree()));
      ASSERT_FALSE(p.is_zero());
      BasisIndex other = idx;
      other.sign = idx.sign == Sign::plus ? Sign::minus : Sign::plus;
      ASSERT_EQ(harm_basis(other), p.conj_i());
      auto [re, im] = real_basis(idx);
      ASSERT_TRUE(laplacian(re).is_zero());
      ASSERT_TRUE(laplacian(im).is_zero());
    }
  }
}

TEST(HarmBasisProperty, PlainDiffersByFactorial) {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& idx : enumerate_harm_indices(m, 4, Normalization::plain)) {
      BasisIndex fact = idx;
      fact.norm = Normalization::factorial;
      ASSERT_EQ(harm_basis(idx), harm_basis(fact) * GaussianRational(factorial(static_cast<unsigned>(idx.k[0]))));
    }
  }
}

TEST(EnumerateHarm, CountsMatchDimensionFormula) {
  // dim of degree-n harmonics in R^m: C(n+m-1, m-1) - C(n+m-3, m-1).
  auto binom = [](int n, int k) {
    if (n < k || k < 0) return 0L;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int m = 2; m <= 5; ++m) {
    const auto all = enumerate_harm_indices(m, 5, Normalization::factorial);
    for (int n = 0; n <= 5; ++n) {
      long count = 0;
      for (const auto& idx : all) count += idx.degree() == n;
      EXPECT_EQ(count, binom(n + m - 1, m - 1) - binom(n + m - 3, m - 1)) << "m " << m << " n " << n;
    }
  }
}

TEST(GfHarmSeries, Examples) {
  const HSeries s2 = gf_harm_series(2, 3, Sign::plus, Normalization::factorial);
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(s2.coefficient(hidx({k})),
              z_plus(2).pow(static_cast<unsigned>(k)) * GaussianRational(Rational(1 / factorial(static_cast<unsigned>(k)))));
  }
  const HSeries s3 = gf_harm_series(3, 2, Sign::plus, Normalization::factorial);
  EXPECT_EQ(s3.coefficient(hidx({1, 1})), var(3, 3) * z_plus(3) * GaussianRational(3));
  EXPECT_EQ(s3.coefficient(hidx({0, 2})), embedding_F(3, 0, 2));
}

TEST(GfHarmSeries, ExtractionSmall) {
  for (int m = 2; m <= 3; ++m) {
    for (Normalization norm : {Normalization::factorial, Normalization::plain}) {
      for (Sign sign : {Sign::plus, Sign::minus}) {
        const HSeries s = gf_harm_series(m, 3, sign, norm);
        for (auto idx : enumerate_harm_indices(m, 3, norm)) {
          idx.sign = sign;
          ASSERT_EQ(s.coefficient(hidx(idx.k)), harm_basis(idx));
        }
      }
    }
  }
}

TEST(GfHarmClosed, Examples) {
  const std::vector<double> zero3{0, 0, 0};
  const std::vector<double> h3{0.3, -0.2};
  EXPECT_EQ(gf_harm_closed(3, zero3, h3, Sign::plus, Normalization::factorial), std::complex<double>(1.0, 0.0));

  const std::vector<double> x{0, 0, 0.5};
  const std::vector<double> h{0, 0.5};
  EXPECT_NEAR(gf_harm_closed(3, x, h, Sign::plus, Normalization::factorial).real(), 4.0 / 3.0, 1e-15);

  const std::vector<double> e1{1, 0, 0};
  for (double t : {-2.0, 0.7, 3.0}) {
    const std::vector<double> ht{t, 0};
    const auto v = gf_harm_closed(3, e1, ht, Sign::plus, Normalization::factorial);
    EXPECT_NEAR(v.real(), std::exp(t), 1e-13 * std::exp(t));
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  }

  const std::vector<double> zero2{0, 0};
  const std::vector<double> seven{7};
  EXPECT_EQ(gf_harm_closed(2, zero2, seven, Sign::plus, Normalization::factorial), std::complex<double>(1.0, 0.0));
}

TEST(GfHarmClosed, DomainErrors) {
  const std::vector<double> x{0, 0, 0.5};
  EXPECT_THROW(gf_harm_closed(3, x, std::vector<double>{0, 0.6}, Sign::plus, Normalization::factorial), DomainError);
  EXPECT_THROW(gf_harm_closed(3, std::vector<double>{1, 1, 0}, std::vector<double>{0, 0.1}, Sign::plus,
                              Normalization::factorial),
               DomainError);
  EXPECT_THROW(gf_harm_closed(3, std::vector<double>{0, 0, 1}, std::vector<double>{0, 1}, Sign::plus,
                              Normalization::factorial, DomainPolicy::unsafe),
               SingularDomainError);
  EXPECT_NO_THROW(gf_harm_closed(3, x, std::vector<double>{0, 0.6}, Sign::plus, Normalization::factorial,
                                 DomainPolicy::unsafe));
  EXPECT_THROW(gf_harm_closed(3, x, std::vector<double>{0}, Sign::plus, Normalization::factorial), std::exception);
}

TEST(DomainBox, Bounds) {
  const DomainBox f = DomainBox::conservative(4, Normalization::factorial);
  EXPECT_TRUE(std::isinf(f.bounds[0]));
  EXPECT_DOUBLE_EQ(f.bounds[1], 0.125);
  EXPECT_DOUBLE_EQ(f.bounds[2], 0.5);
  const DomainBox p = DomainBox::conservative(4, Normalization::plain);
  EXPECT_DOUBLE_EQ(p.bounds[0], 1.0 / 16.0);
  EXPECT_TRUE(p.contains(std::vector<double>{0.0625, -0.125, 0.5}));
  EXPECT_FALSE(p.contains(std::vector<double>{0.07, 0.0, 0.0}));
  EXPECT_FALSE(f.contains(std::vector<double>{0.0, 0.0, std::nan("")}));
}

TEST(GfHarmClosedProperty, ThreeDimensionalFormMatchesRecurrence) {
  SplitMix64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto x = rng.ball_point(3);
    const std::vector<double> h{rng.uniform(-2.0, 2.0), rng.uniform(-0.5, 0.5)};
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const auto a = harm3_closed_form(x, h, sign);
      const auto b = gf_harm_closed(3, x, h, sign, Normalization::factorial);
      ASSERT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST(GfHarmClosedProperty, ConjugateSignsAreConjugate) {
  SplitMix64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const int m = static_cast<int>(rng.uniform_int(2, 5));
    const auto x = rng.ball_point(m);
    const DomainBox box = DomainBox::conservative(m, Normalization::plain);
    std::vector<double> h;
    for (double b : box.bounds) h.push_back(rng.uniform(-0.5, 0.5) * b);
    for (Normalization norm : {Normalization::factorial, Normalization::plain}) {
      const auto p = gf_harm_closed(m, x, h, Sign::plus, norm);
      const auto q = gf_harm_closed(m, x, h, Sign::minus, norm);
      ASSERT_LE(std::abs(p - std::conj(q)), 1e-13 * std::max(1.0, std::abs(p)));
    }
  }
}

}  // namespace
}  // namespace gtbasis
