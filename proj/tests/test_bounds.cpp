#include "citebounds/bounds.hpp"
#include "citebounds/enumerate.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace citebounds;

namespace {

struct Row {
  const char* author;
  std::int64_t h, g;
  Count e2;
  std::int64_t P;
  Count C;
};

// T1 aggregates.
constexpr Row kRows[] = {
    {"A", 4, 7, 23, 17, 70},   {"B", 8, 11, 35, 30, 156},  {"C", 11, 18, 167, 30, 362},
    {"D", 12, 20, 198, 52, 484}, {"E", 14, 30, 623, 59, 1009}, {"F", 28, 43, 750, 181, 2546},
};

IndexReport report(const Row& r) { return report_from_aggregates(r.h, r.g, r.e2, r.P, r.C); }
IndexReport report(char author) { return report(kRows[author - 'A']); }

const auto author_a_witness = normalize({27, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 2, 1, 1, 1, 0});

}  // namespace

TEST(Thm1, AggregateExamples) {
  EXPECT_EQ(thm1_lower_h(report('B')), 4);
  EXPECT_EQ(thm1_lower_h(report('F')), 9);
  EXPECT_EQ(thm1_lower_h(report('A')), 2);  // floor(47/17); printed as 3
  EXPECT_EQ(thm1_lower_h(report('C')), 6);  // floor(195/30)
}

TEST(Thm2, AggregateExamples) {
  EXPECT_EQ(thm2_lower_h(report('A')), 3);
  EXPECT_EQ(thm2_lower_h(report('F')), 25);
  EXPECT_EQ(thm2_lower_h(index_report(normalize({0, 0, 0}))), 0);
}

TEST(Thm4, AggregateExamplesAndHeuristicFailure) {
  EXPECT_EQ(thm4_lower_h(report('A')), 2);
  EXPECT_EQ(thm4_lower_h(report('E')), 3);
  const auto r = index_report(normalize({12, 1, 1, 1, 1}));
  EXPECT_EQ(thm4_lower_h(r), 3);  // floor(7/2) > h = 1
  EXPECT_FALSE(bound_report(r).thm4_lower_h.holds);
  EXPECT_FALSE(thm4_lower_h(index_report(normalize({10, 10, 10}))).has_value());  // P = g
}

TEST(Thm4, NegativeNumeratorRoundsDown) {
  const auto r = report_from_aggregates(1, 3, 0, 5, 7);  // -2 / 2
  EXPECT_EQ(thm4_lower_h(r), -1);
  const auto r2 = report_from_aggregates(1, 3, 0, 6, 7);  // -2 / 3 -> -1, not 0
  EXPECT_EQ(thm4_lower_h(r2), -1);
}

TEST(Lemma1, AggregateExamples) {
  EXPECT_EQ(lemma1_upper_g(report('A')), 10);
  EXPECT_EQ(lemma1_upper_g(report('D')), 29);
  EXPECT_EQ(lemma1_upper_g(report('F')), 55);
  EXPECT_FALSE(lemma1_upper_g(index_report(normalize({0, 0}))).has_value());
}

TEST(Thm3, DisplayAndExactForm) {
  EXPECT_EQ(thm3_upper_g(report('A')).display, 9);
  EXPECT_EQ(thm3_upper_g(report('E')).display, 39);
  const auto t = thm3_upper_g(index_report(normalize({10, 10, 10})));
  EXPECT_TRUE(t.exact_holds);
  // g - h = 3 against e^2 = 8: 9 > 8 fails the exact form even though display (h + 3) still covers g.
  const auto tight = thm3_upper_g(report_from_aggregates(2, 5, 8, 10, 40));
  EXPECT_FALSE(tight.exact_holds);
  EXPECT_EQ(tight.display, 5);
}

TEST(Lemma2, Examples) {
  const auto a = bound_report(report('A'));
  EXPECT_EQ(a.lemma2_lower_g.value, Rational(70, 17));
  EXPECT_TRUE(a.lemma2_lower_g.holds);
  for (auto conv : {GConvention::capped, GConvention::padded}) {
    const auto b = bound_report(index_report(normalize({12, 1, 1, 1, 1}), conv));
    EXPECT_EQ(b.lemma2_lower_g.value, Rational(16, 5));
    EXPECT_FALSE(b.lemma2_lower_g.holds);
    EXPECT_EQ(b.lemma2_lower_g.slack, Rational(-1, 5));
  }
  EXPECT_TRUE(bound_report(index_report(normalize({0, 0, 0}))).lemma2_lower_g.holds);
}

TEST(PartialSums, AuthorAWitness) {
  const auto r = index_report(author_a_witness);
  const auto s = partial_sums(author_a_witness, r);
  EXPECT_EQ(s.s_h_to_g, 11);
  EXPECT_EQ(s.bound_gh_h, 12);
  EXPECT_EQ(s.bound_gh_g, 21);
  EXPECT_EQ(s.s_g_to_P, 20);
  EXPECT_EQ(s.bound_Pg_h, 40);
  EXPECT_EQ(s.g2_plus_tail, 69);
  EXPECT_EQ(s.s_h_to_P, 31);
  EXPECT_EQ(s.bound_Ph, 52);
  EXPECT_EQ(s.s_top, 39);
  EXPECT_EQ(s.bound_Pg_g, 70);
}

TEST(PartialSums, AllZero) {
  const auto p = normalize({0, 0, 0});
  EXPECT_EQ(partial_sums(p, index_report(p)), PartialSums{});
}

TEST(PartialSums, PaddedTailIsEmpty) {
  const auto p = normalize({10, 10, 10});
  const auto s = partial_sums(p, index_report(p, GConvention::padded));  // h = 3, g = 5 > P
  EXPECT_EQ(s.s_g_to_P, 0);
  EXPECT_EQ(s.bound_Pg_h, 0);
  EXPECT_EQ(s.s_h_to_g, 0);
  EXPECT_EQ(s.bound_gh_h, 6);
}

TEST(BoundReport, AuthorC) {
  const auto b = bound_report(report('C'));
  EXPECT_EQ(b.thm1_lower_h.value, 6);
  EXPECT_EQ(b.thm2_lower_h.value, 8);
  EXPECT_EQ(b.thm4_lower_h.value, 3);
  EXPECT_EQ(b.lemma1_upper_g.value, 27);
  EXPECT_EQ(b.thm3_upper_g_display.value, 24);
  EXPECT_EQ(b.thm1_lower_h.slack, 5);
  EXPECT_EQ(b.lemma1_upper_g.slack, 9);
}

TEST(BoundReport, AuthorD) {
  const auto b = bound_report(report('D'));
  EXPECT_EQ(b.thm2_lower_h.value, 10);
  EXPECT_EQ(b.thm4_lower_h.value, 2);
  EXPECT_EQ(b.lemma1_upper_g.value, 29);
  EXPECT_EQ(b.thm3_upper_g_display.value, 27);
}

TEST(BoundReport, AllZero) {
  const auto b = bound_report(index_report(normalize({0, 0, 0})));
  EXPECT_EQ(b.thm1_lower_h.value, 0);
  EXPECT_EQ(b.thm2_lower_h.value, 0);
  EXPECT_EQ(b.thm4_lower_h.value, 0);  // P = 3 > g = 0
  EXPECT_FALSE(b.lemma1_upper_g.value.has_value());
  EXPECT_TRUE(b.thm1_lower_h.holds && b.thm2_lower_h.holds && b.thm4_lower_h.holds && b.lemma1_upper_g.holds &&
              b.thm3_upper_g_display.holds && b.thm3_exact_holds && b.lemma2_lower_g.holds);
}

TEST(BoundReport, PrintedTableColumns) {
  const std::int64_t thm2[] = {3, 7, 8, 10, 9, 25};
  const std::int64_t thm4[] = {2, 1, 3, 2, 3, 5};
  const std::int64_t lemma1[] = {10, 13, 27, 29, 59, 55};
  const std::int64_t thm3[] = {9, 14, 24, 27, 39, 56};
  for (int i = 0; i < 6; ++i) {
    const auto b = bound_report(report(kRows[i]));
    EXPECT_EQ(b.thm2_lower_h.value, thm2[i]) << kRows[i].author;
    EXPECT_EQ(b.thm4_lower_h.value, thm4[i]) << kRows[i].author;
    EXPECT_EQ(b.lemma1_upper_g.value, lemma1[i]) << kRows[i].author;
    EXPECT_EQ(b.thm3_upper_g_display.value, thm3[i]) << kRows[i].author;
  }
}

// Bound values against stepping oracles, and aggregate-only evaluation against
// evaluation from the full profile.
TEST(BoundProperties, OracleAndAggregateAgreement) {
  for_each_profile(6, 8, [](std::span<const Count> c) {
    const auto r = index_report(c);
    const auto b = bound_report(r);
    const auto from_aggregates =
        bound_report(report_from_aggregates(r.h, r.g, r.e_squared, r.papers, r.total_citations));
    ASSERT_EQ(b, from_aggregates);
    ASSERT_EQ(b.thm1_lower_h.value, oracle::floor_by_search(r.total_citations - r.e_squared, r.papers));
    if (r.g > 0) {
      ASSERT_EQ(b.thm2_lower_h.value, oracle::floor_by_search(r.g * r.g - r.e_squared, r.g));
    }
    if (r.papers > r.g) {
      ASSERT_EQ(b.thm4_lower_h.value, oracle::floor_by_search(r.total_citations - r.g * r.g, r.papers - r.g));
    }
    if (r.h > 0) {
      ASSERT_EQ(b.lemma1_upper_g.value, oracle::ceil_by_search(r.h * r.h + r.e_squared, r.h));
    }
  });
}
