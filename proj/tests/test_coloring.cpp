#include "hj/coloring.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"

using hj::LinearForm;
using hj::WeightVector;
using hj::Word;

namespace {

Word w3(const char* text) { return Word::parse(text, 3); }

const WeightVector kCanon5({2, -1, 2}, 5);

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::vector<hj::Letter> letters(rng() % (max_len + 1));
  for (auto& c : letters) c = static_cast<hj::Letter>(1 + rng() % 3);
  return Word(std::move(letters), 3);
}

WeightVector random_weights(std::mt19937_64& rng) {
  const int r = 2 + static_cast<int>(rng() % 30);
  return WeightVector({static_cast<std::int64_t>(rng() % 100) - 50,
                       static_cast<std::int64_t>(rng() % 100) - 50,
                       static_cast<std::int64_t>(rng() % 100) - 50},
                      r);
}

}  // namespace

TEST(WeightVector, ReducesIntoRange) {
  EXPECT_EQ(kCanon5.to_string(), "2,4,2");
  EXPECT_EQ(WeightVector({-7, 12, 0}, 5).to_string(), "3,2,0");
  EXPECT_THROW(WeightVector({1, 1, 1}, 1), std::invalid_argument);
  EXPECT_THROW(WeightVector({}, 5), std::invalid_argument);
}

TEST(WeightSum, Examples) {
  EXPECT_EQ(hj::symbolic_terms(w3("12131")), "t1+t2+t1+t3+t1");
  EXPECT_EQ(hj::symbolic_weight_sum(w3("12131")).to_string(), "3t1+t2+t3");
  EXPECT_EQ(hj::weight_sum(w3("12131"), kCanon5), 2u);
  EXPECT_EQ(hj::weight_sum(Word({}, 3), kCanon5), 0u);
  EXPECT_EQ(hj::symbolic_terms(Word({}, 3)), "0");
  EXPECT_THROW(hj::weight_sum(Word::parse("14", 4), kCanon5), std::invalid_argument);
}

TEST(WeightSum, AdditiveOverConcatenation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const WeightVector t = random_weights(rng);
    const Word u = random_word(rng, 15);
    const Word v = random_word(rng, 15);
    EXPECT_EQ(hj::weight_sum(u + v, t),
              (hj::weight_sum(u, t) + hj::weight_sum(v, t)) % static_cast<unsigned>(t.modulus()));
  }
}

TEST(ContractedSum, Examples) {
  EXPECT_EQ(hj::symbolic_weight_sum(hj::contract(w3("1111221331"))).to_string(), "3t1+t2+t3");
  EXPECT_EQ(hj::contracted_sum(w3("1111221331"), kCanon5), (6u + 4 + 2) % 5);
  EXPECT_EQ(hj::symbolic_weight_sum(hj::contract(w3("222"))).to_string(), "t2");
  EXPECT_EQ(hj::contracted_sum(w3("222"), kCanon5), 4u);
  EXPECT_EQ(hj::contracted_sum(Word({}, 3), kCanon5), 0u);
}

TEST(TPlus, Examples) {
  const Word w = w3("11122133");
  const Word bar = hj::contract(hj::plus_extend(w));
  EXPECT_EQ(hj::symbolic_terms(bar), "t1+t2+t1+t3+t1");
  EXPECT_EQ(hj::symbolic_terms(hj::contract(hj::plus_extend(Word({}, 3)))), "t1");
  // Oracle: string-level definition chain.
  const WeightVector t3({2, -1, 2}, 3);
  ASSERT_EQ(hj::oracle::tplus("222", {2, -1, 2}, 3), 0);
  EXPECT_EQ(hj::tplus(w3("222"), t3), 0u);
  EXPECT_EQ(hj::tplus(Word({}, 3), kCanon5), 2u);
}

TEST(TPlus, StreamingMatchesDefinitionChain) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20000; ++trial) {
    const WeightVector t = random_weights(rng);
    const Word w = random_word(rng, 30);
    const auto chain = hj::tplus(w, t);
    ASSERT_EQ(hj::tplus_streaming(w.letters(), t), chain);
    std::vector<long long> tv(t.weights().begin(), t.weights().end());
    ASSERT_EQ(static_cast<long long>(chain),
              hj::oracle::tplus(w.empty() ? "" : w.to_string(), tv, t.modulus()));
    ASSERT_LT(chain, static_cast<unsigned>(t.modulus()));
  }
}

TEST(TPlus, InvariantUnderLetterDuplication) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 5000; ++trial) {
    const WeightVector t = random_weights(rng);
    const Word w = random_word(rng, 20);
    std::vector<hj::Letter> dup;
    for (auto c : w) {
      const std::size_t copies = 1 + rng() % 3;
      dup.insert(dup.end(), copies, c);
    }
    const Word w2(std::move(dup), 3);
    ASSERT_EQ(hj::contract(hj::plus_extend(w)), hj::contract(hj::plus_extend(w2)));
    ASSERT_EQ(hj::tplus(w, t), hj::tplus(w2, t));
  }
}

TEST(CanonicalWeights, Examples) {
  EXPECT_EQ(hj::canonical_weights(3).to_string(), "2,2,2");
  EXPECT_EQ(hj::canonical_weights(5).to_string(), "2,4,2");
  EXPECT_EQ(hj::canonical_weights(7).to_string(), "2,6,2");
  EXPECT_THROW(hj::canonical_weights(4), std::invalid_argument);
  EXPECT_THROW(hj::canonical_weights(1), std::invalid_argument);
  EXPECT_THROW(hj::canonical_weights(2), std::invalid_argument);
}

TEST(EvenR, Examples) {
  const auto four = hj::even_r_coloring(4, 6);
  const auto& c4 = std::get<hj::TPlusColoring>(four.kind());
  EXPECT_EQ(c4.weights.modulus(), 3);
  EXPECT_EQ(c4.weights.to_string(), "2,2,2");
  EXPECT_EQ(four.colors(), 4);
  const auto six = hj::even_r_coloring(6, 6);
  const auto& c6 = std::get<hj::TPlusColoring>(six.kind());
  EXPECT_EQ(c6.weights.modulus(), 5);
  EXPECT_EQ(c6.weights.to_string(), "2,4,2");
  EXPECT_THROW(hj::even_r_coloring(2, 6), std::invalid_argument);
  EXPECT_THROW(hj::even_r_coloring(5, 6), std::invalid_argument);
}

TEST(LinearForm, Arithmetic) {
  const LinearForm a = LinearForm::term(3, 1) + LinearForm::term(3, 3, 2);
  const LinearForm b = 2 * LinearForm::term(3, 2);
  EXPECT_EQ((a - b).to_string(), "t1-2t2+2t3");
  EXPECT_EQ((a - a).to_string(), "0");
  EXPECT_EQ(LinearForm::term(3, 1, -1).to_string(), "-t1");
  EXPECT_EQ((a - b).evaluate(kCanon5), 3u);  // 2 - 8 + 4 = -2 mod 5
}

TEST(Evaluate, Examples) {
  const auto tplus = hj::ColoringSpec::tplus(8, kCanon5);
  EXPECT_EQ(tplus.evaluate(w3("11122133")), 2u);

  const auto file = hj::ColoringSpec::table(2, 2, 2, {0, 1, 0, 1});
  EXPECT_EQ(file.evaluate(Word::parse("12", 2)), 1u);

  const auto rnd = hj::ColoringSpec::random(3, 5, 7, 99);
  const Word w = w3("12312");
  EXPECT_EQ(rnd.evaluate(w), rnd.evaluate(w));
  EXPECT_EQ(rnd.evaluate(w), hj::ColoringSpec::random(3, 5, 7, 99).evaluate(w));
}

TEST(Evaluate, DimensionMismatch) {
  const auto tplus = hj::ColoringSpec::tplus(8, kCanon5);
  EXPECT_THROW(tplus.evaluate(w3("111")), std::invalid_argument);
  const auto file = hj::ColoringSpec::table(2, 2, 2, {0, 1, 0, 1});
  EXPECT_THROW(file.evaluate(w3("13")), std::invalid_argument);
  EXPECT_THROW(hj::ColoringSpec::table(2, 2, 2, {0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(hj::ColoringSpec::table(2, 2, 2, {0, 1, 0, 2}), std::invalid_argument);
}

TEST(Evaluate, AllOutputsInRange) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 10);
    const std::size_t n = 1 + rng() % 5;
    const auto spec = hj::ColoringSpec::random(3, n, r, rng());
    const auto tp = hj::ColoringSpec::tplus(n, WeightVector({1, 2, 3}, r));
    for (std::uint64_t idx = 0; idx < hj::checked_pow(3, n); ++idx) {
      const Word w = hj::word_from_index(idx, 3, n);
      ASSERT_LT(spec.evaluate(w), static_cast<unsigned>(r));
      ASSERT_LT(tp.evaluate(w), static_cast<unsigned>(r));
      ASSERT_EQ(tp.color_at_index(idx), tp.evaluate(w));
      ASSERT_EQ(spec.color_at_index(idx), spec.evaluate(w));
    }
  }
}

TEST(ColoringFile, RoundTrip) {
  const auto spec = hj::ColoringSpec::random(3, 4, 5, 2024);
  std::stringstream buf;
  hj::write_coloring(buf, spec);
  const std::string text = buf.str();
  EXPECT_EQ(text.rfind("hjcolor 1 m=3 n=4 r=5\n", 0), 0u);
  const auto back = hj::parse_coloring(buf, "buffer");
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    ASSERT_EQ(back.color_at_index(idx), spec.color_at_index(idx));
  }

  const auto path = std::filesystem::temp_directory_path() / "hj_test_coloring.txt";
  hj::write_coloring_file(path, spec);
  const auto loaded = hj::load_coloring_file(path);
  EXPECT_EQ(loaded.describe()["kind"], "file");
  EXPECT_EQ(loaded.color_at_index(17), spec.color_at_index(17));
  std::filesystem::remove(path);
}

TEST(ColoringFile, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return hj::parse_coloring(in, "inline");
  };
  EXPECT_NO_THROW(parse("hjcolor 1 m=2 n=2 r=2\n0 1 1 0\n"));
  EXPECT_THROW(parse(""), std::runtime_error);
  EXPECT_THROW(parse("hjcolor 2 m=2 n=2 r=2\n0 1 1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("color 1 m=2 n=2 r=2\n0 1 1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("hjcolor 1 n=2 m=2 r=2\n0 1 1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("hjcolor 1 m=2 n=2 r=2\n0 1 1\n"), std::runtime_error);
  EXPECT_THROW(parse("hjcolor 1 m=2 n=2 r=2\n0 1 1 0 1\n"), std::runtime_error);
  EXPECT_THROW(parse("hjcolor 1 m=2 n=2 r=2\n0 1 2 0\n"), std::runtime_error);
  EXPECT_THROW(parse("hjcolor 1 m=2 n=2 r=2\n0 1 -1 0\n"), std::runtime_error);
  EXPECT_THROW(parse("hjcolor 1 m=2 n=2 r=2\n0 1 x 0\n"), std::runtime_error);
  EXPECT_THROW(hj::load_coloring_file("/nonexistent/hj.txt"), std::runtime_error);
}
