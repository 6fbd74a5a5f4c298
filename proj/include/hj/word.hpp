#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hj {

using Letter = std::uint8_t;

/// A word of [m]^n. Letters are 1-based (1..m); the empty word is legal.
class Word {
public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet);
  Word(std::initializer_list<Letter> letters, int alphabet);

  /// Parses the ASCII form ("1213", or "-" for the empty word). m <= 9.
  static Word parse(std::string_view text, int alphabet);

  int alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t j) const noexcept { return letters_[j]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Contiguous subword [first, first + count).
  Word subword(std::size_t first, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
  int alphabet_ = 1;
};

/// Concatenation; both words must share the alphabet.
Word operator+(const Word& lhs, const Word& rhs);

/// Collapses every maximal constant run to a single letter.
Word contract(const Word& w);

/// 1 · w · 1
Word plus_extend(const Word& w);

/// m^n, or throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent);

/// Lexicographic rank of w in [m]^n (letter 1 is the smallest digit, the
/// first letter is the most significant).
std::uint64_t word_index(const Word& w);

/// Inverse of word_index. Throws std::out_of_range when idx >= m^n.
Word word_from_index(std::uint64_t idx, int alphabet, std::size_t length);

/// Fixed-width encoding with 2 bits per letter, first letter in the most
/// significant occupied slot. Covers m <= 3 and n <= 30; the scan hot loop
/// works directly on this layout.
class PackedWord {
public:
  static constexpr std::size_t kMaxLength = 30;
  static constexpr int kMaxAlphabet = 3;

  PackedWord() = default;
  explicit PackedWord(const Word& w);
  PackedWord(std::uint64_t bits, std::size_t length);

  static bool fits(int alphabet, std::size_t length) noexcept {
    return alphabet <= kMaxAlphabet && length <= kMaxLength;
  }

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return length_; }

  Letter operator[](std::size_t j) const noexcept {
    return static_cast<Letter>((bits_ >> (2 * (length_ - 1 - j))) & 3u);
  }

  Word unpack(int alphabet = kMaxAlphabet) const;

  friend bool operator==(const PackedWord&, const PackedWord&) = default;

private:
  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

}  // namespace hj
