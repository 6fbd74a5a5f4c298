#include "hj/word.hpp"

#include <limits>
#include <stdexcept>

namespace hj {

namespace {

void check_alphabet(int alphabet) {
  if (alphabet < 1) {
    throw std::invalid_argument("alphabet size must be at least 1");
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters, int alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  check_alphabet(alphabet);
  for (Letter c : letters_) {
    if (c < 1 || c > alphabet) {
      throw std::invalid_argument("letter " + std::to_string(c) +
                                  " outside alphabet [1, " +
                                  std::to_string(alphabet) + "]");
    }
  }
}

Word::Word(std::initializer_list<Letter> letters, int alphabet)
    : Word(std::vector<Letter>(letters), alphabet) {}

Word Word::parse(std::string_view text, int alphabet) {
  check_alphabet(alphabet);
  if (alphabet > 9) {
    throw std::invalid_argument("text form supports alphabets up to 9");
  }
  if (text == "-") {
    return Word({}, alphabet);
  }
  if (text.empty()) {
    throw std::invalid_argument("empty word must be written as '-'");
  }
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch < '1' || ch > '0' + alphabet) {
      throw std::invalid_argument("malformed word '" + std::string(text) +
                                  "' for alphabet size " +
                                  std::to_string(alphabet));
    }
    letters.push_back(static_cast<Letter>(ch - '0'));
  }
  return Word(std::move(letters), alphabet);
}

Word Word::subword(std::size_t first, std::size_t count) const {
  if (first > size() || count > size() - first) {
    throw std::out_of_range("subword range outside word");
  }
  Word out;
  out.alphabet_ = alphabet_;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                      letters_.begin() +
                          static_cast<std::ptrdiff_t>(first + count));
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) {
    return "-";
  }
  std::string s;
  s.reserve(letters_.size());
  for (Letter c : letters_) {
    s.push_back(static_cast<char>('0' + c));
  }
  return s;
}

Word operator+(const Word& lhs, const Word& rhs) {
  if (lhs.alphabet() != rhs.alphabet()) {
    throw std::invalid_argument("concatenating words over different alphabets");
  }
  std::vector<Letter> letters(lhs.begin(), lhs.end());
  letters.insert(letters.end(), rhs.begin(), rhs.end());
  return Word(std::move(letters), lhs.alphabet());
}

Word contract(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter c : w) {
    if (out.empty() || out.back() != c) {
      out.push_back(c);
    }
  }
  return Word(std::move(out), w.alphabet());
}

Word plus_extend(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size() + 2);
  out.push_back(1);
  out.insert(out.end(), w.begin(), w.end());
  out.push_back(1);
  return Word(std::move(out), w.alphabet());
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("integer power exceeds 64 bits");
    }
    result *= base;
  }
  return result;
}

std::uint64_t word_index(const Word& w) {
  const auto m = static_cast<std::uint64_t>(w.alphabet());
  // Range check doubles as overflow guard.
  (void)checked_pow(m, w.size());
  std::uint64_t idx = 0;
  for (Letter c : w) {
    idx = idx * m + (c - 1u);
  }
  return idx;
}

Word word_from_index(std::uint64_t idx, int alphabet, std::size_t length) {
  check_alphabet(alphabet);
  const auto m = static_cast<std::uint64_t>(alphabet);
  if (idx >= checked_pow(m, length)) {
    throw std::out_of_range("word index " + std::to_string(idx) +
                            " outside [0, m^n)");
  }
  std::vector<Letter> letters(length);
  for (std::size_t j = length; j-- > 0;) {
    letters[j] = static_cast<Letter>(idx % m + 1);
    idx /= m;
  }
  return Word(std::move(letters), alphabet);
}

PackedWord::PackedWord(const Word& w) : length_(w.size()) {
  if (!fits(w.alphabet(), w.size())) {
    throw std::invalid_argument("word does not fit the packed encoding");
  }
  for (Letter c : w) {
    bits_ = (bits_ << 2) | c;
  }
}

PackedWord::PackedWord(std::uint64_t bits, std::size_t length)
    : bits_(bits), length_(length) {
  if (length > kMaxLength) {
    throw std::invalid_argument("packed word longer than 30 letters");
  }
  if (length < 32 && (bits >> (2 * length)) != 0) {
    throw std::invalid_argument("packed bits exceed declared length");
  }
  for (std::size_t j = 0; j < length; ++j) {
    if ((*this)[j] == 0) {
      throw std::invalid_argument("packed slot holds no letter");
    }
  }
}

Word PackedWord::unpack(int alphabet) const {
  std::vector<Letter> letters(length_);
  for (std::size_t j = 0; j < length_; ++j) {
    letters[j] = (*this)[j];
  }
  return Word(std::move(letters), alphabet);
}

}  // namespace hj
