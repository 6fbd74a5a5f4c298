#include "hj/lines.hpp"

#include <algorithm>
#include <stdexcept>

namespace hj {

Word substitute(const Word& w, std::span<const std::size_t> positions, Letter i) {
  if (i < 1 || i > w.alphabet()) {
    throw std::invalid_argument("substituted letter outside alphabet");
  }
  std::vector<Letter> letters(w.begin(), w.end());
  for (std::size_t p : positions) {
    if (p >= letters.size()) {
      throw std::out_of_range("substitution position " + std::to_string(p) +
                              " outside word of length " +
                              std::to_string(letters.size()));
    }
    letters[p] = i;
  }
  return Word(std::move(letters), w.alphabet());
}

LineTemplate::LineTemplate(std::vector<Letter> symbols, int alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (alphabet < 1) {
    throw std::invalid_argument("alphabet size must be at least 1");
  }
  bool any_star = false;
  for (Letter s : symbols_) {
    if (s == kStar) {
      any_star = true;
    } else if (s > alphabet) {
      throw std::invalid_argument("template symbol outside alphabet");
    }
  }
  if (!any_star) {
    throw std::invalid_argument("template has an empty wildcard set");
  }
}

LineTemplate LineTemplate::parse(std::string_view text, int alphabet) {
  if (alphabet > 9) {
    throw std::invalid_argument("text form supports alphabets up to 9");
  }
  std::vector<Letter> symbols;
  symbols.reserve(text.size());
  for (char ch : text) {
    if (ch == '*') {
      symbols.push_back(kStar);
    } else if (ch >= '1' && ch <= '0' + alphabet) {
      symbols.push_back(static_cast<Letter>(ch - '0'));
    } else {
      throw std::invalid_argument("malformed template '" + std::string(text) + "'");
    }
  }
  return LineTemplate(std::move(symbols), alphabet);
}

PositionSet LineTemplate::wildcard_set() const {
  PositionSet s;
  for (std::size_t j = 0; j < symbols_.size(); ++j) {
    if (symbols_[j] == kStar) {
      s.push_back(j);
    }
  }
  return s;
}

Word LineTemplate::point(Letter i) const {
  if (i < 1 || i > alphabet_) {
    throw std::invalid_argument("line point letter outside alphabet");
  }
  std::vector<Letter> letters(symbols_);
  for (Letter& s : letters) {
    if (s == kStar) {
      s = i;
    }
  }
  return Word(std::move(letters), alphabet_);
}

std::string LineTemplate::to_string() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Letter c : symbols_) {
    s.push_back(c == kStar ? '*' : static_cast<char>('0' + c));
  }
  return s;
}

std::vector<Word> line_points(const LineTemplate& tpl) {
  std::vector<Word> pts;
  pts.reserve(static_cast<std::size_t>(tpl.alphabet()));
  for (int i = 1; i <= tpl.alphabet(); ++i) {
    pts.push_back(tpl.point(static_cast<Letter>(i)));
  }
  return pts;
}

std::string IntervalDecomposition::to_string() const {
  std::string s;
  for (const Interval& iv : intervals) {
    s += "[" + std::to_string(iv.first + 1) + "," + std::to_string(iv.last + 1) + "]";
  }
  return s;
}

IntervalDecomposition decompose_intervals(std::span<const std::size_t> positions,
                                          std::size_t length) {
  PositionSet sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= length) {
    throw std::out_of_range("position outside [0, n)");
  }
  IntervalDecomposition d;
  for (std::size_t p : sorted) {
    if (!d.intervals.empty() && d.intervals.back().last + 1 == p) {
      d.intervals.back().last = p;
    } else {
      d.intervals.push_back({p, p});
    }
  }
  return d;
}

std::size_t interval_count(std::span<const std::size_t> positions, std::size_t length) {
  return decompose_intervals(positions, length).count();
}

std::size_t interval_count(const LineTemplate& tpl) {
  std::size_t q = 0;
  bool prev_star = false;
  for (Letter s : tpl.symbols()) {
    const bool star = s == LineTemplate::kStar;
    q += star && !prev_star;
    prev_star = star;
  }
  return q;
}

std::uint64_t template_index_space(int alphabet, std::size_t length) {
  return checked_pow(static_cast<std::uint64_t>(alphabet) + 1, length);
}

std::uint64_t template_count(int alphabet, std::size_t length) {
  return template_index_space(alphabet, length) -
         checked_pow(static_cast<std::uint64_t>(alphabet), length);
}

std::uint64_t template_index(const LineTemplate& tpl) {
  const auto base = static_cast<std::uint64_t>(tpl.alphabet()) + 1;
  (void)checked_pow(base, tpl.size());
  std::uint64_t idx = 0;
  for (Letter s : tpl.symbols()) {
    const std::uint64_t digit =
        s == LineTemplate::kStar ? static_cast<std::uint64_t>(tpl.alphabet()) : s - 1u;
    idx = idx * base + digit;
  }
  return idx;
}

std::optional<LineTemplate> template_from_index(std::uint64_t idx, int alphabet,
                                                std::size_t length) {
  if (idx >= template_index_space(alphabet, length)) {
    throw std::out_of_range("template index outside [0, (m+1)^n)");
  }
  const auto base = static_cast<std::uint64_t>(alphabet) + 1;
  std::vector<Letter> symbols(length);
  bool any_star = false;
  for (std::size_t j = length; j-- > 0;) {
    const auto digit = static_cast<int>(idx % base);
    idx /= base;
    if (digit == alphabet) {
      symbols[j] = LineTemplate::kStar;
      any_star = true;
    } else {
      symbols[j] = static_cast<Letter>(digit + 1);
    }
  }
  if (!any_star) {
    return std::nullopt;
  }
  return LineTemplate(std::move(symbols), alphabet);
}

TemplateStream::TemplateStream(int alphabet, std::size_t length)
    : TemplateStream(alphabet, length, 0, template_index_space(alphabet, length)) {}

TemplateStream::TemplateStream(int alphabet, std::size_t length, std::uint64_t begin,
                               std::uint64_t end)
    : alphabet_(alphabet), length_(length), current_(begin), end_(end),
      digits_(length) {
  if (alphabet < 1 || length < 1) {
    throw std::invalid_argument("template enumeration needs m >= 1 and n >= 1");
  }
  const std::uint64_t space = template_index_space(alphabet, length);
  if (begin > end || end > space) {
    throw std::out_of_range("template range outside [0, (m+1)^n)");
  }
  const auto base = static_cast<std::uint64_t>(alphabet) + 1;
  std::uint64_t idx = begin < space ? begin : 0;
  for (std::size_t j = length; j-- > 0;) {
    digits_[j] = static_cast<Letter>(idx % base);
    idx /= base;
    stars_ += digits_[j] == alphabet;
  }
}

std::optional<LineTemplate> TemplateStream::next() {
  while (current_ < end_) {
    std::optional<LineTemplate> out;
    if (stars_ > 0) {
      std::vector<Letter> symbols(length_);
      for (std::size_t j = 0; j < length_; ++j) {
        symbols[j] = digits_[j] == alphabet_ ? LineTemplate::kStar
                                             : static_cast<Letter>(digits_[j] + 1);
      }
      out.emplace(std::move(symbols), alphabet_);
    }
    ++current_;
    for (std::size_t j = length_; j-- > 0;) {
      if (digits_[j] == alphabet_) {
        digits_[j] = 0;
        --stars_;
      } else {
        ++digits_[j];
        stars_ += digits_[j] == alphabet_;
        break;
      }
    }
    if (out) {
      return out;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                 std::size_t parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  if (total == 0 || parts == 0) {
    return ranges;
  }
  const std::uint64_t k = std::min<std::uint64_t>(parts, total);
  const std::uint64_t step = total / k;
  const std::uint64_t extra = total % k;
  std::uint64_t begin = 0;
  for (std::uint64_t p = 0; p < k; ++p) {
    const std::uint64_t end = begin + step + (p < extra ? 1 : 0);
    ranges.emplace_back(begin, end);
    begin = end;
  }
  return ranges;
}

}  // namespace hj
