#include "hj/lines.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"

using hj::LineTemplate;
using hj::Word;

TEST(Substitute, Examples) {
  // Positions are 0-based: {2} in 1-based terms is {1}.
  const std::vector<std::size_t> middle{1};
  EXPECT_EQ(hj::substitute(Word::parse("111", 3), middle, 2).to_string(), "121");
  EXPECT_EQ(hj::substitute(Word::parse("11122133", 3), {}, 3).to_string(), "11122133");
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_EQ(hj::substitute(Word::parse("1313", 3), all, 2).to_string(), "2222");
}

TEST(Substitute, Errors) {
  const std::vector<std::size_t> beyond{3};
  EXPECT_THROW(hj::substitute(Word::parse("111", 3), beyond, 2), std::out_of_range);
  const std::vector<std::size_t> first{0};
  EXPECT_THROW(hj::substitute(Word::parse("111", 3), first, 4), std::invalid_argument);
  EXPECT_THROW(hj::substitute(Word::parse("111", 3), first, 0), std::invalid_argument);
}

TEST(LineTemplate, Parsing) {
  EXPECT_EQ(LineTemplate::parse("*1*", 3).to_string(), "*1*");
  EXPECT_THROW(LineTemplate::parse("111", 3), std::invalid_argument);
  EXPECT_THROW(LineTemplate::parse("", 3), std::invalid_argument);
  EXPECT_THROW(LineTemplate::parse("*4", 3), std::invalid_argument);
  EXPECT_THROW(LineTemplate::parse("*x", 3), std::invalid_argument);
  EXPECT_EQ(LineTemplate::parse("2**3*1", 3).wildcard_set(), (hj::PositionSet{1, 2, 4}));
}

TEST(LinePoints, Examples) {
  auto strings = [](const std::vector<Word>& ws) {
    std::vector<std::string> s;
    for (const auto& w : ws) s.push_back(w.to_string());
    return s;
  };
  EXPECT_EQ(strings(hj::line_points(LineTemplate::parse("*1*", 3))),
            (std::vector<std::string>{"111", "212", "313"}));
  EXPECT_EQ(strings(hj::line_points(LineTemplate::parse("1*", 2))),
            (std::vector<std::string>{"11", "12"}));
  EXPECT_EQ(strings(hj::line_points(LineTemplate::parse("**", 3))),
            (std::vector<std::string>{"11", "22", "33"}));
}

TEST(LinePoints, DistinctAndAgreeOffWildcards) {
  for (int m = 2; m <= 3; ++m) {
    hj::TemplateStream stream(m, 5);
    while (auto tpl = stream.next()) {
      const auto pts = hj::line_points(*tpl);
      ASSERT_EQ(pts.size(), static_cast<std::size_t>(m));
      const auto s = tpl->wildcard_set();
      for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
          ASSERT_NE(pts[a], pts[b]);
        }
        for (std::size_t j = 0; j < tpl->size(); ++j) {
          const bool star = std::binary_search(s.begin(), s.end(), j);
          ASSERT_EQ(pts[a][j], star ? a + 1 : pts[0][j]);
        }
      }
      EXPECT_EQ(tpl->base(), pts[0]);
    }
  }
}

TEST(IntervalCount, Examples) {
  // 1-based {2,3,4} -> 0-based {1,2,3}
  EXPECT_EQ(hj::interval_count(std::vector<std::size_t>{1, 2, 3}, 8), 1u);
  EXPECT_EQ(hj::interval_count(std::vector<std::size_t>{0, 1, 4, 5, 7}, 8), 3u);
  EXPECT_EQ(hj::interval_count(std::vector<std::size_t>{}, 8), 0u);
  EXPECT_EQ(hj::decompose_intervals(std::vector<std::size_t>{0, 1, 4, 5, 7}, 8).to_string(),
            "[1,2][5,6][8,8]");
  EXPECT_THROW(hj::interval_count(std::vector<std::size_t>{8}, 8), std::out_of_range);
}

TEST(IntervalCount, DecompositionInvariantsAndBound) {
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      hj::PositionSet s;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask >> j & 1) s.push_back(j);
      }
      const auto d = hj::decompose_intervals(s, n);
      hj::PositionSet covered;
      for (std::size_t k = 0; k < d.intervals.size(); ++k) {
        const auto& iv = d.intervals[k];
        ASSERT_LE(iv.first, iv.last);
        if (k > 0) {
          ASSERT_LT(d.intervals[k - 1].last + 1, iv.first);  // non-adjacent
        }
        for (std::size_t p = iv.first; p <= iv.last; ++p) covered.push_back(p);
      }
      ASSERT_EQ(covered, s);
      ASSERT_LE(d.count(), (n + 1) / 2);
      best = std::max(best, d.count());
    }
    EXPECT_EQ(best, (n + 1) / 2) << "alternating positions reach ceil(n/2)";
  }
}

TEST(IntervalCount, TemplateOverloadAgrees) {
  hj::TemplateStream stream(3, 6);
  while (auto tpl = stream.next()) {
    ASSERT_EQ(hj::interval_count(*tpl), hj::interval_count(tpl->wildcard_set(), tpl->size()));
    ASSERT_EQ(hj::interval_count(*tpl), hj::oracle::star_runs(tpl->to_string()));
  }
}

TEST(Enumeration, CountExamples) {
  // Oracle: list all symbol strings, drop the star-free ones.
  ASSERT_EQ(hj::oracle::all_templates(2, 2).size(), 5u);
  ASSERT_EQ(hj::oracle::all_templates(3, 4).size(), 175u);
  EXPECT_EQ(hj::template_count(2, 2), 5u);
  EXPECT_EQ(hj::template_count(3, 1), 1u);
  EXPECT_EQ(hj::template_count(3, 4), 175u);

  hj::TemplateStream one(3, 1);
  auto only = one.next();
  ASSERT_TRUE(only);
  EXPECT_EQ(only->to_string(), "*");
  EXPECT_FALSE(one.next());
}

TEST(Enumeration, MatchesBruteForceOrderExhaustively) {
  for (int m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto expected = hj::oracle::all_templates(m, n);
      std::vector<std::string> got;
      hj::TemplateStream stream(m, n);
      std::uint64_t prev_index = 0;
      while (auto tpl = stream.next()) {
        ASSERT_FALSE(tpl->wildcard_set().empty());
        if (!got.empty()) {
          ASSERT_GT(stream.index(), prev_index);
        }
        prev_index = stream.index();
        ASSERT_EQ(hj::template_index(*tpl), stream.index());
        ASSERT_EQ(hj::template_from_index(stream.index(), m, n), tpl);
        got.push_back(tpl->to_string());
      }
      ASSERT_EQ(got, expected) << "m=" << m << " n=" << n;
      EXPECT_EQ(got.size(), hj::template_count(m, n));
    }
  }
}

TEST(Enumeration, StarFreeIndicesAreNotTemplates) {
  EXPECT_FALSE(hj::template_from_index(0, 3, 4));  // 1111
  EXPECT_TRUE(hj::template_from_index(3, 3, 1));   // *
  EXPECT_THROW(hj::template_from_index(4, 3, 1), std::out_of_range);
}

TEST(Enumeration, ChunkedStreamsCoverTheSameMultiset) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const std::size_t n = 1 + rng() % 6;
    const std::uint64_t space = hj::template_index_space(m, n);
    const std::size_t parts = 1 + rng() % 17;

    std::multiset<std::string> whole;
    hj::TemplateStream all(m, n);
    while (auto tpl = all.next()) whole.insert(tpl->to_string());

    std::multiset<std::string> chunked;
    for (const auto& [b, e] : hj::split_range(space, parts)) {
      hj::TemplateStream s(m, n, b, e);
      while (auto tpl = s.next()) chunked.insert(tpl->to_string());
    }
    ASSERT_EQ(chunked, whole);
  }
}

TEST(Enumeration, SplitRange) {
  const auto r = hj::split_range(10, 3);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r.front().first, 0u);
  EXPECT_EQ(r.back().second, 10u);
  for (std::size_t k = 1; k < r.size(); ++k) EXPECT_EQ(r[k - 1].second, r[k].first);
  EXPECT_EQ(hj::split_range(2, 5).size(), 2u);
  EXPECT_TRUE(hj::split_range(0, 5).empty());
}
