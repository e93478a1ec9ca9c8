#include "implcount/power_series.hpp"

#include <gtest/gtest.h>

#include <random>

#include "implcount/closed_forms.hpp"
#include "implcount/errors.hpp"
#include "oracles.hpp"

namespace implcount {
namespace {

PowerSeries random_series(std::mt19937_64& rng, int order) {
  std::vector<Coefficient> c;
  for (int i = 0; i <= order; ++i) c.push_back(oracle::random_rational(rng));
  return PowerSeries(std::move(c));
}

TEST(PowerSeriesTest, AdditiveIdentityAndShift) {
  const auto one = closed_form(SeriesName::I, 6);
  EXPECT_EQ(add(one, PowerSeries(6)), one);
  const auto x = shift(one);
  EXPECT_EQ(x.order(), 7);
  EXPECT_EQ(x[0], 0);
  EXPECT_EQ(x[1], 1);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(x[n], 0);
}

TEST(PowerSeriesTest, CoefficientBeyondOrderIsAnError) {
  const PowerSeries a{1, 2, 3};
  EXPECT_EQ(a.coefficient(2), 3);
  EXPECT_THROW(a.coefficient(3), RangeError);
  EXPECT_THROW(a.coefficient(-1), RangeError);
  EXPECT_THROW(PowerSeries(std::vector<Coefficient>{}), DomainError);
}

TEST(PowerSeriesTest, MixedOrdersTruncateToMinimum) {
  const PowerSeries a{1, 1, 1, 1, 1};
  const PowerSeries b{2, 3};
  EXPECT_EQ((a + b).order(), 1);
  EXPECT_EQ((a - b), (PowerSeries{-1, -2}));
  EXPECT_EQ((a * b), (PowerSeries{2, 5}));
  EXPECT_EQ(scale(a, 3).order(), 4);
  EXPECT_EQ(a.truncated(2), (PowerSeries{1, 1, 1}));
  EXPECT_THROW(a.truncated(5), RangeError);
}

TEST(PowerSeriesTest, MultiplicationExamples) {
  const auto r = closed_form(SeriesName::R, 4);
  EXPECT_EQ(mul(r, r)[4], 33);
  const auto t = closed_form(SeriesName::T, 4);
  const auto f = closed_form(SeriesName::F, 4);
  EXPECT_EQ(mul(t, f)[2], 1);
  EXPECT_EQ(mul(closed_form(SeriesName::I, 4), t), t);
}

TEST(PowerSeriesTest, MultiplicationWithRationals) {
  const PowerSeries a{Coefficient(1, 2), Coefficient(1, 3)};
  const PowerSeries b{Coefficient(2, 1), Coefficient(-3, 4)};
  EXPECT_EQ(a * b, (PowerSeries{1, Coefficient(7, 24)}));
}

TEST(PowerSeriesTest, MultiplicationIsCommutativeAndAssociative) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = static_cast<int>(rng() % 12);
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order + static_cast<int>(rng() % 3));
    const auto c = random_series(rng, order);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SqrtTest, BinomialOracleForOneMinusTwelveX) {
  const auto s = sqrt(PowerSeries::constant(1, 50) +
                      PowerSeries::monomial(-12, 1, 50));
  const auto expected = oracle::binomial_sqrt_linear(-12, 50);
  ASSERT_EQ(s.order(), 50);
  for (int n = 0; n <= 50; ++n) EXPECT_EQ(s[n], expected[n]) << n;
  EXPECT_EQ(s[1], -6);
  EXPECT_EQ(s[2], -18);
  EXPECT_EQ(s[3], -108);
}

TEST(SqrtTest, ConstantsAndNestedRadical) {
  EXPECT_EQ(sqrt(PowerSeries::constant(9, 3)), PowerSeries::constant(3, 3));
  EXPECT_EQ(sqrt(PowerSeries{Coefficient(4, 9)})[0], Coefficient(2, 3));
  const auto inner = sqrt(PowerSeries{1, -12, 0, 0, 0});
  const auto outer = sqrt(PowerSeries{5, 24, 0, 0, 0} + Coefficient(4) * inner);
  EXPECT_EQ(outer[0], 3);
  EXPECT_EQ(outer * outer, (PowerSeries{5, 24, 0, 0, 0} + Coefficient(4) * inner));
}

TEST(SqrtTest, RejectsNonSquareAndZeroConstant) {
  EXPECT_THROW(sqrt(PowerSeries{2, 1}), DomainError);
  EXPECT_THROW(sqrt(PowerSeries{-4, 1}), DomainError);
  EXPECT_THROW(sqrt(PowerSeries{Coefficient(1, 3), 1}), DomainError);
  EXPECT_THROW(sqrt(PowerSeries{0, 0, 1}), DomainError);
}

TEST(SqrtTest, SquareOfRootReproducesInput) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 15);
    auto a = random_series(rng, order);
    // Force a nonzero rational square constant term.
    Coefficient root = oracle::random_rational(rng, 6);
    if (sgn(root) == 0) root = 1;
    std::vector<Coefficient> c(a.coefficients().begin(), a.coefficients().end());
    c[0] = root * root;
    a = PowerSeries(std::move(c));
    const auto y = sqrt(a);
    EXPECT_EQ(y * y, a);
    EXPECT_GT(y[0], 0);
  }
}

}  // namespace
}  // namespace implcount
