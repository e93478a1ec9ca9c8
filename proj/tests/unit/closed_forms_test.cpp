#include "implcount/closed_forms.hpp"

#include <gtest/gtest.h>

#include "implcount/bracketing.hpp"
#include "implcount/counting.hpp"
#include "implcount/errors.hpp"
#include "oracles.hpp"

namespace implcount {
namespace {

void expect_prefix(const PowerSeries& s, const std::vector<long>& expected) {
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(s[static_cast<int>(n)], expected[n]) << "x^" << n;
  }
}

TEST(ClosedFormTest, SmallOrderExamples) {
  EXPECT_EQ(closed_form(SeriesName::G, 3), (PowerSeries{0, 3, 9, 54}));
  EXPECT_EQ(closed_form(SeriesName::U, 3), (PowerSeries{0, 1, 3, 18}));
  EXPECT_EQ(closed_form(SeriesName::F, 3), (PowerSeries{0, 1, 1, 6}));
  EXPECT_EQ(closed_form(SeriesName::S, 3), (PowerSeries{0, 1, 1, 4}));
  EXPECT_EQ(closed_form(SeriesName::I, 4), (PowerSeries{1, 0, 0, 0, 0}));
  EXPECT_EQ(closed_form(SeriesName::G, 5)[0], 0);
  EXPECT_EQ(closed_form(SeriesName::T, 3)[3], 30);
  EXPECT_EQ(closed_form(SeriesName::R, 4)[4], 61);  // g4 - s4 = 80 - 19
  EXPECT_THROW(closed_form(SeriesName::T, 0), DomainError);
}

TEST(ClosedFormTest, FrozenCoefficients) {
  expect_prefix(closed_form(SeriesName::T, 9), oracle::kT);
  expect_prefix(closed_form(SeriesName::F, 9), oracle::kF);
  expect_prefix(closed_form(SeriesName::U, 9), oracle::kU);
  expect_prefix(closed_form(SeriesName::G, 9), oracle::kG);
  expect_prefix(closed_form(SeriesName::S, 9), oracle::kS);
  expect_prefix(closed_form(SeriesName::R, 9), oracle::kR);
}

TEST(ClosedFormTest, CountSeriesAreIntegralToOrderFifty) {
  for (const auto s : {SeriesName::T, SeriesName::F, SeriesName::U,
                       SeriesName::G, SeriesName::R, SeriesName::S,
                       SeriesName::G2}) {
    const auto p = closed_form(s, 50);
    EXPECT_EQ(p.order(), 50);
    EXPECT_EQ(p[0], 0);
    EXPECT_TRUE(p.has_nonnegative_integer_coefficients()) << name(s);
  }
}

TEST(ClosedFormTest, PartitionIdentities) {
  const int order = 50;
  const auto t = closed_form(SeriesName::T, order);
  const auto f = closed_form(SeriesName::F, order);
  const auto u = closed_form(SeriesName::U, order);
  const auto g = closed_form(SeriesName::G, order);
  EXPECT_EQ(scale(u, 3), g);
  EXPECT_EQ(add(add(t, f), u), g);
  const auto g2 = closed_form(SeriesName::G2, order);
  EXPECT_EQ(closed_form(SeriesName::R, order) + closed_form(SeriesName::S, order),
            g2);
  mpz_class pow2 = 1;
  for (int n = 1; n <= order; ++n) {
    pow2 *= 2;
    EXPECT_EQ(g2[n], pow2 * catalan(n)) << n;
  }
}

TEST(ClosedFormTest, AgreesWithBruteForce) {
  for (const auto sem : {Semantics::Classical2, Semantics::Kleene3}) {
    const int n_max = sem == Semantics::Kleene3 ? 7 : 9;
    const auto t = closed_form(true_series(sem), n_max);
    const auto f = closed_form(false_series(sem), n_max);
    const auto g = closed_form(total_series(sem), n_max);
    for (int n = 1; n <= n_max; ++n) {
      const auto c = brute_counts(n, sem);
      EXPECT_EQ(t[n], c.t);
      EXPECT_EQ(f[n], c.f);
      EXPECT_EQ(g[n], c.g);
    }
  }
}

TEST(SeriesNameTest, ParseAndClassify) {
  EXPECT_EQ(parse_series_name("g2"), SeriesName::G2);
  EXPECT_EQ(parse_series_name("T"), SeriesName::T);
  EXPECT_EQ(parse_series_name("i"), SeriesName::I);
  EXPECT_FALSE(parse_series_name("x").has_value());
  EXPECT_FALSE(is_count_series(SeriesName::I));
  EXPECT_EQ(semantics_of(SeriesName::R), Semantics::Classical2);
  EXPECT_EQ(semantics_of(SeriesName::U), Semantics::Kleene3);
}

}  // namespace
}  // namespace implcount
