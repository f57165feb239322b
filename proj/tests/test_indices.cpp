#include "citebounds/enumerate.hpp"
#include "citebounds/indices.hpp"
#include "citebounds/rational.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace citebounds;

namespace {
const auto skewed = normalize({12, 1, 1, 1, 1});
const auto flat = normalize({10, 10, 10});
}  // namespace

TEST(HIndex, Examples) {
  EXPECT_EQ(h_index(normalize({0, 0, 0})), 0);
  EXPECT_EQ(h_index(flat), 3);
  EXPECT_EQ(h_index(skewed), 1);
}

TEST(GIndex, Examples) {
  EXPECT_EQ(g_index(flat, GConvention::capped), 3);
  EXPECT_EQ(g_index(flat, GConvention::padded), 5);  // 30 >= 25, 30 < 36
  EXPECT_EQ(g_index(skewed, GConvention::capped), 3);
  EXPECT_EQ(g_index(skewed, GConvention::padded), 3);
  EXPECT_EQ(g_index(normalize({0, 0}), GConvention::capped), 0);
  EXPECT_EQ(g_index(normalize({0, 0}), GConvention::padded), 0);
}

TEST(ESquared, Examples) {
  EXPECT_EQ(e_squared(normalize({0, 0})), 0);
  EXPECT_EQ(e_squared(flat), 21);
  EXPECT_EQ(e_squared(skewed), 11);
}

TEST(ImpactFactor, ExactAndRendered) {
  EXPECT_EQ(impact_factor(skewed), Rational(16, 5));
  EXPECT_EQ(to_fixed2(Rational(70, 17)), "4.12");
  EXPECT_EQ(to_fixed2(Rational(1009, 59)), "17.10");
  EXPECT_EQ(to_fixed2(impact_factor(normalize({0, 0, 0}))), "0.00");
}

TEST(Rendering, HalfAwayFromZero) {
  EXPECT_EQ(to_fixed2(Rational(1, 8)), "0.13");  // 0.125
  EXPECT_EQ(to_fixed2(Rational(-1, 8)), "-0.13");
  EXPECT_EQ(to_fixed2(Rational(1, 400)), "0.00");
  EXPECT_EQ(to_fixed2(Rational(-1, 400)), "0.00");
  EXPECT_EQ(to_fixed2(Rational(999, 100)), "9.99");
  EXPECT_EQ(to_fixed2(Rational(19999, 2000)), "10.00");
  EXPECT_EQ(to_fixed2(Rational(156, 30)), "5.20");
}

TEST(IntegerHelpers, FloorCeilTowardInfinity) {
  for (std::int64_t num = -40; num <= 40; ++num) {
    for (std::int64_t den = 1; den <= 9; ++den) {
      EXPECT_EQ(floor_div(num, den), oracle::floor_by_search(num, den)) << num << "/" << den;
      EXPECT_EQ(ceil_div(num, den), oracle::ceil_by_search(num, den)) << num << "/" << den;
      EXPECT_EQ(floor_div(num, -den), oracle::floor_by_search(-num, den));
    }
  }
  EXPECT_THROW(floor_div(1, 0), std::domain_error);
}

TEST(IntegerHelpers, SquareRoots) {
  for (std::int64_t n = 0; n <= 5000; ++n) {
    const auto r = isqrt(n);
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
    const auto c = ceil_sqrt(n);
    EXPECT_GE(c * c, n);
    EXPECT_TRUE(c == 0 || (c - 1) * (c - 1) < n);
  }
  EXPECT_EQ(isqrt(std::int64_t{1} << 62), std::int64_t{1} << 31);
  EXPECT_EQ(isqrt(9223372036854775807), 3037000499);
}

TEST(IndexReport, Examples) {
  const auto r = index_report(skewed);
  EXPECT_EQ(r.h, 1);
  EXPECT_EQ(r.g, 3);
  EXPECT_EQ(r.e_squared, 11);
  EXPECT_EQ(r.e_ceil, 4);
  EXPECT_EQ(r.total_citations, 16);
  EXPECT_EQ(r.papers, 5);
  EXPECT_EQ(r.impact_factor, Rational(16, 5));

  const auto zero = index_report(normalize({0, 0, 0, 0}));
  EXPECT_EQ(zero.h, 0);
  EXPECT_EQ(zero.g, 0);
  EXPECT_EQ(zero.e_squared, 0);
  EXPECT_EQ(zero.e_ceil, 0);
  EXPECT_EQ(zero.impact_factor, Rational(0));

  const auto a = index_report(normalize({27, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 2, 1, 1, 1, 0}));
  EXPECT_EQ(a.h, 4);
  EXPECT_EQ(a.g, 7);
  EXPECT_EQ(a.e_squared, 23);
  EXPECT_EQ(a.e_ceil, 5);
  EXPECT_EQ(a.total_citations, 70);
  EXPECT_EQ(a.papers, 17);
  EXPECT_EQ(a.impact_factor, Rational(70, 17));
}

TEST(IndexReport, ECeilReproducesPrintedEColumn) {
  const std::pair<Count, std::int64_t> rows[] = {{23, 5}, {35, 6}, {167, 13}, {198, 15}, {623, 25}, {750, 28}};
  for (auto [e2, e] : rows) EXPECT_EQ(ceil_sqrt(e2), e) << e2;
}

// Every profile with P <= 8 and counts <= 12 (203,489 profiles).
TEST(IndexProperties, ExhaustiveAgainstOracles) {
  std::int64_t checked = 0;
  for_each_profile(8, 12, [&](std::span<const Count> c) {
    const oracle::Counts v(c.begin(), c.end());
    const auto h = h_index(c);
    const auto g = g_index(c, GConvention::capped);
    const auto gp = g_index(c, GConvention::padded);
    ASSERT_EQ(h, oracle::h_binary(v));
    ASSERT_EQ(g, oracle::g_binary(v));
    ASSERT_EQ(gp, oracle::g_padded_scan(v));
    ASSERT_GE(g, h);
    ASSERT_GE(gp, g);
    ASSERT_LE(g, static_cast<std::int64_t>(v.size()));
    Count core = 0;
    for (std::int64_t i = 0; i < h; ++i) core += v[static_cast<std::size_t>(i)];
    const auto e2 = e_squared(c);
    ASSERT_GE(e2, 0);
    ASSERT_EQ(core, h * h + e2);
    ++checked;
  });
  EXPECT_EQ(checked, 203489);
}

TEST(IndexReport, FromAggregates) {
  const auto r = report_from_aggregates(4, 7, 23, 17, 70);
  EXPECT_EQ(r.e_ceil, 5);
  EXPECT_EQ(r.impact_factor, Rational(70, 17));
  EXPECT_THROW(report_from_aggregates(1, 1, 0, 0, 1), InputError);
  EXPECT_THROW(report_from_aggregates(1, 1, -1, 2, 1), InputError);
}

TEST(GConventionNames, RoundTrip) {
  EXPECT_EQ(parse_g_convention("capped"), GConvention::capped);
  EXPECT_EQ(parse_g_convention("padded"), GConvention::padded);
  EXPECT_THROW(parse_g_convention("open"), InputError);
}
