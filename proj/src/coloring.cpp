#include "hj/coloring.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hj {

Residue reduce(std::int64_t value, int modulus) noexcept {
  const std::int64_t r = modulus;
  const std::int64_t v = value % r;
  return static_cast<Residue>(v < 0 ? v + r : v);
}

WeightVector::WeightVector(std::vector<std::int64_t> weights, int modulus)
    : modulus_(modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("modulus r must be at least 2");
  }
  if (weights.empty()) {
    throw std::invalid_argument("weight vector must cover at least one letter");
  }
  weights_.reserve(weights.size());
  for (std::int64_t w : weights) {
    weights_.push_back(reduce(w, modulus));
  }
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (k > 0) {
      s += ',';
    }
    s += std::to_string(weights_[k]);
  }
  return s;
}

WeightVector canonical_weights(int modulus) {
  if (modulus < 3 || modulus % 2 == 0) {
    throw std::invalid_argument("canonical weights need an odd modulus r >= 3, got " +
                                std::to_string(modulus));
  }
  return WeightVector({2, -1, 2}, modulus);
}

namespace {

void check_letters(const Word& w, const WeightVector& t) {
  for (Letter c : w) {
    if (c > t.alphabet()) {
      throw std::invalid_argument("letter " + std::to_string(c) +
                                  " has no weight in a vector of length " +
                                  std::to_string(t.alphabet()));
    }
  }
}

}  // namespace

Residue weight_sum(const Word& w, const WeightVector& t) {
  check_letters(w, t);
  std::uint64_t sum = 0;
  for (Letter c : w) {
    sum += t[c];
  }
  return static_cast<Residue>(sum % static_cast<std::uint64_t>(t.modulus()));
}

Residue contracted_sum(const Word& w, const WeightVector& t) {
  return weight_sum(contract(w), t);
}

Residue tplus(const Word& w, const WeightVector& t) {
  return contracted_sum(plus_extend(w), t);
}

Residue tplus_streaming(std::span<const Letter> letters, const WeightVector& t) noexcept {
  Letter prev = 1;
  std::uint64_t sum = t[1];
  for (Letter c : letters) {
    if (c != prev) {
      sum += t[c];
      prev = c;
    }
  }
  if (prev != 1) {
    sum += t[1];
  }
  return static_cast<Residue>(sum % static_cast<std::uint64_t>(t.modulus()));
}

LinearForm LinearForm::term(int alphabet, Letter c, std::int64_t coeff) {
  LinearForm f(alphabet);
  f.coeffs.at(c - 1u) = coeff;
  return f;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  if (other.coeffs.size() > coeffs.size()) {
    coeffs.resize(other.coeffs.size(), 0);
  }
  for (std::size_t k = 0; k < other.coeffs.size(); ++k) {
    coeffs[k] += other.coeffs[k];
  }
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  return *this += -1 * other;
}

LinearForm& LinearForm::operator*=(std::int64_t k) {
  for (std::int64_t& c : coeffs) {
    c *= k;
  }
  return *this;
}

Residue LinearForm::evaluate(const WeightVector& t) const {
  if (static_cast<int>(coeffs.size()) > t.alphabet()) {
    throw std::invalid_argument("linear form refers to letters beyond the weight vector");
  }
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    sum += reduce(coeffs[k], t.modulus()) *
           static_cast<std::int64_t>(t[static_cast<Letter>(k + 1)]);
    sum %= t.modulus();
  }
  return reduce(sum, t.modulus());
}

std::string LinearForm::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::int64_t c = coeffs[k];
    if (c == 0) {
      continue;
    }
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) {
      s += std::to_string(mag);
    }
    s += "t" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
LinearForm operator*(std::int64_t k, LinearForm a) { return a *= k; }

LinearForm symbolic_weight_sum(const Word& w) {
  LinearForm f(w.alphabet());
  for (Letter c : w) {
    ++f.coeffs[c - 1u];
  }
  return f;
}

std::string symbolic_terms(const Word& w) {
  if (w.empty()) {
    return "0";
  }
  std::string s;
  for (Letter c : w) {
    if (!s.empty()) {
      s += '+';
    }
    s += "t" + std::to_string(c);
  }
  return s;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_dims(int alphabet, std::size_t length, int colors) {
  if (alphabet < 1) {
    throw std::invalid_argument("alphabet size must be at least 1");
  }
  if (colors < 1) {
    throw std::invalid_argument("a coloring needs at least one color");
  }
  (void)checked_pow(static_cast<std::uint64_t>(alphabet), length);
}

}  // namespace

ColoringSpec::ColoringSpec(Variant v) : v_(std::move(v)) {
  std::visit(
      [this](const auto& c) {
        alphabet_ = c.alphabet;
        length_ = c.length;
        colors_ = c.colors;
      },
      v_);
  check_dims(alphabet_, length_, colors_);
  if (const auto* tp = std::get_if<TPlusColoring>(&v_)) {
    if (tp->weights.alphabet() != alphabet_) {
      throw std::invalid_argument("weight vector length differs from alphabet size");
    }
    if (tp->weights.modulus() > colors_) {
      throw std::invalid_argument("palette smaller than the weight modulus");
    }
  } else if (const auto* tc = std::get_if<TableColoring>(&v_)) {
    if (!tc->table ||
        tc->table->size() != checked_pow(static_cast<std::uint64_t>(alphabet_), length_)) {
      throw std::invalid_argument("coloring table missing or of wrong length");
    }
    for (Residue c : *tc->table) {
      if (c >= static_cast<Residue>(colors_)) {
        throw std::invalid_argument("coloring table entry outside [0, r)");
      }
    }
  }
}

ColoringSpec ColoringSpec::tplus(std::size_t length, WeightVector weights) {
  const int m = weights.alphabet();
  const int r = weights.modulus();
  return ColoringSpec(TPlusColoring{m, length, std::move(weights), r});
}

ColoringSpec ColoringSpec::table(int alphabet, std::size_t length, int colors,
                                 std::vector<Residue> table, std::string source) {
  return ColoringSpec(TableColoring{
      alphabet, length, colors,
      std::make_shared<const std::vector<Residue>>(std::move(table)), std::move(source)});
}

ColoringSpec ColoringSpec::random(int alphabet, std::size_t length, int colors,
                                  std::uint64_t seed) {
  return ColoringSpec(RandomColoring{alphabet, length, colors, seed});
}

Residue ColoringSpec::evaluate(const Word& w) const {
  if (w.alphabet() > alphabet_ || w.size() != length_) {
    throw std::invalid_argument("word " + w.to_string() + " is not in [" +
                                std::to_string(alphabet_) + "]^" +
                                std::to_string(length_));
  }
  if (const auto* tp = std::get_if<TPlusColoring>(&v_)) {
    return tplus_streaming(w.letters(), tp->weights);
  }
  return color_at_index(word_index(Word(std::vector<Letter>(w.begin(), w.end()), alphabet_)));
}

Residue ColoringSpec::color_at_index(std::uint64_t idx) const {
  return std::visit(
      [&](const auto& c) -> Residue {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, TPlusColoring>) {
          return tplus_streaming(word_from_index(idx, alphabet_, length_).letters(),
                                 c.weights);
        } else if constexpr (std::is_same_v<T, TableColoring>) {
          return (*c.table)[idx];
        } else {
          return static_cast<Residue>(splitmix64(splitmix64(c.seed) ^ idx) %
                                      static_cast<std::uint64_t>(c.colors));
        }
      },
      v_);
}

nlohmann::json ColoringSpec::describe() const {
  return std::visit(
      [&](const auto& c) -> nlohmann::json {
        using T = std::decay_t<decltype(c)>;
        nlohmann::json j;
        j["m"] = c.alphabet;
        j["n"] = c.length;
        j["r"] = c.colors;
        if constexpr (std::is_same_v<T, TPlusColoring>) {
          j["kind"] = "tplus";
          j["modulus"] = c.weights.modulus();
          j["t"] = std::vector<Residue>(c.weights.weights().begin(),
                                        c.weights.weights().end());
        } else if constexpr (std::is_same_v<T, TableColoring>) {
          j["kind"] = "file";
          j["path"] = c.source;
        } else {
          j["kind"] = "random";
          j["seed"] = c.seed;
        }
        return j;
      },
      v_);
}

ColoringSpec even_r_coloring(int colors, std::size_t length) {
  if (colors < 4 || colors % 2 != 0) {
    throw std::invalid_argument("even-r coloring needs an even r >= 4, got " +
                                std::to_string(colors));
  }
  return ColoringSpec(TPlusColoring{3, length, canonical_weights(colors - 1), colors});
}

namespace {

int parse_header_field(const std::string& token, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw std::runtime_error("coloring header: expected '" + prefix + "<int>', got '" +
                             token + "'");
  }
  int value = 0;
  const char* first = token.data() + prefix.size();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::runtime_error("coloring header: bad integer in '" + token + "'");
  }
  return value;
}

}  // namespace

ColoringSpec parse_coloring(std::istream& in, std::string source) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error("coloring file is empty");
  }
  std::istringstream hs(header);
  std::string magic, version, fm, fn, fr, extra;
  hs >> magic >> version >> fm >> fn >> fr;
  if (magic != "hjcolor" || version != "1" || fr.empty() || (hs >> extra)) {
    throw std::runtime_error("coloring header must be 'hjcolor 1 m=<m> n=<n> r=<r>'");
  }
  const int m = parse_header_field(fm, "m");
  const int n = parse_header_field(fn, "n");
  const int r = parse_header_field(fr, "r");
  if (m < 1 || m > 9 || n < 0 || r < 1) {
    throw std::runtime_error("coloring header has out-of-range dimensions");
  }
  const std::uint64_t cells = checked_pow(static_cast<std::uint64_t>(m),
                                          static_cast<std::size_t>(n));
  std::vector<Residue> table;
  table.reserve(cells);
  std::string token;
  while (in >> token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::runtime_error("coloring file: non-integer entry '" + token + "'");
    }
    if (value < 0 || value >= r) {
      throw std::runtime_error("coloring file: color " + token + " outside [0, " +
                               std::to_string(r) + ")");
    }
    if (table.size() == cells) {
      throw std::runtime_error("coloring file: more than m^n = " + std::to_string(cells) +
                               " entries");
    }
    table.push_back(static_cast<Residue>(value));
  }
  if (table.size() != cells) {
    throw std::runtime_error("coloring file: expected " + std::to_string(cells) +
                             " entries, found " + std::to_string(table.size()));
  }
  return ColoringSpec::table(m, static_cast<std::size_t>(n), r, std::move(table),
                             std::move(source));
}

ColoringSpec load_coloring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open coloring file " + path.string());
  }
  return parse_coloring(in, path.string());
}

void write_coloring(std::ostream& out, const ColoringSpec& spec) {
  out << "hjcolor 1 m=" << spec.alphabet() << " n=" << spec.length()
      << " r=" << spec.colors() << '\n';
  const std::uint64_t cells =
      checked_pow(static_cast<std::uint64_t>(spec.alphabet()), spec.length());
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    out << spec.color_at_index(idx) << ((idx + 1) % 32 == 0 || idx + 1 == cells ? '\n' : ' ');
  }
}

void write_coloring_file(const std::filesystem::path& path, const ColoringSpec& spec) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write coloring file " + path.string());
  }
  write_coloring(out, spec);
}

}  // namespace hj
