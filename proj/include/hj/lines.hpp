#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hj/word.hpp"

namespace hj {

/// Sorted 0-based positions.
using PositionSet = std::vector<std::size_t>;

/// w(S, i): w with every position in S overwritten by i.
Word substitute(const Word& w, std::span<const std::size_t> positions, Letter i);

/// A combinatorial line written as a word over {1..m} plus a wildcard symbol.
class LineTemplate {
public:
  static constexpr Letter kStar = 0;

  LineTemplate(std::vector<Letter> symbols, int alphabet);

  /// ASCII form over '1'..'9' and '*'.
  static LineTemplate parse(std::string_view text, int alphabet);

  int alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const Letter> symbols() const noexcept { return symbols_; }
  bool is_star(std::size_t j) const noexcept { return symbols_[j] == kStar; }

  PositionSet wildcard_set() const;

  /// The representative x_1: stars replaced by letter 1.
  Word base() const { return point(1); }

  /// x_i = w(S, i).
  Word point(Letter i) const;

  std::string to_string() const;

  friend bool operator==(const LineTemplate&, const LineTemplate&) = default;

private:
  std::vector<Letter> symbols_;
  int alphabet_;
};

/// [x_1, ..., x_m]
std::vector<Word> line_points(const LineTemplate& tpl);

/// Closed interval of positions [first, last], 0-based.
struct Interval {
  std::size_t first;
  std::size_t last;

  std::size_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Maximal runs of S; sorted, disjoint and pairwise non-adjacent. This is the
/// minimum-size cover of S by intervals.
struct IntervalDecomposition {
  std::vector<Interval> intervals;

  std::size_t count() const noexcept { return intervals.size(); }
  std::string to_string() const;  // 1-based, e.g. "[2,3][5,5]"
};

IntervalDecomposition decompose_intervals(std::span<const std::size_t> positions,
                                          std::size_t length);

/// Number of maximal runs of consecutive positions in S (0 for empty S).
std::size_t interval_count(std::span<const std::size_t> positions, std::size_t length);
std::size_t interval_count(const LineTemplate& tpl);

// Canonical template order: the symbol sequence read as a base-(m+1) number,
// most significant symbol first, with digit d < m meaning letter d+1 and digit
// m meaning the wildcard. Indices of star-free sequences are not templates.

/// (m+1)^n, the size of the index space.
std::uint64_t template_index_space(int alphabet, std::size_t length);

/// (m+1)^n - m^n
std::uint64_t template_count(int alphabet, std::size_t length);

std::uint64_t template_index(const LineTemplate& tpl);

/// Empty when idx decodes to a star-free sequence. Throws std::out_of_range
/// when idx >= (m+1)^n.
std::optional<LineTemplate> template_from_index(std::uint64_t idx, int alphabet,
                                                std::size_t length);

/// Deterministic stream of templates whose canonical index lies in
/// [begin, end). Star-free indices are skipped.
class TemplateStream {
public:
  TemplateStream(int alphabet, std::size_t length);
  TemplateStream(int alphabet, std::size_t length, std::uint64_t begin,
                 std::uint64_t end);

  std::optional<LineTemplate> next();

  /// Canonical index of the template most recently returned by next().
  std::uint64_t index() const noexcept { return current_ - 1; }

private:
  int alphabet_;
  std::size_t length_;
  std::uint64_t current_;
  std::uint64_t end_;
  std::vector<Letter> digits_;  // base-(m+1) digits of current_
  std::size_t stars_ = 0;
};

/// Contiguous split of [0, total) into at most `parts` non-empty ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                 std::size_t parts);

}  // namespace hj
