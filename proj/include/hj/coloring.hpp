#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hj/word.hpp"

namespace hj {

using Residue = std::uint32_t;

/// t in Z_r^m, stored as least non-negative residues.
class WeightVector {
public:
  WeightVector(std::vector<std::int64_t> weights, int modulus);

  int modulus() const noexcept { return modulus_; }
  int alphabet() const noexcept { return static_cast<int>(weights_.size()); }

  /// t_c for letter c in [1, m].
  Residue operator[](Letter c) const noexcept { return weights_[c - 1u]; }
  std::span<const Residue> weights() const noexcept { return weights_; }

  std::string to_string() const;  // "2,4,2"

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
  std::vector<Residue> weights_;
  int modulus_;
};

/// (2, -1, 2) over Z_r. Requires r odd and r >= 3.
WeightVector canonical_weights(int modulus);

/// Reduces any integer into [0, r).
Residue reduce(std::int64_t value, int modulus) noexcept;

/// T'(w) = sum of t_{w(j)} mod r.
Residue weight_sum(const Word& w, const WeightVector& t);

/// T(w) = T'(contract(w)).
Residue contracted_sum(const Word& w, const WeightVector& t);

/// T+(w) = T(1 w 1), by the definition chain.
Residue tplus(const Word& w, const WeightVector& t);

/// T+ in one pass with virtual leading and trailing 1s; no intermediate words.
Residue tplus_streaming(std::span<const Letter> letters, const WeightVector& t) noexcept;

/// An integer combination of the symbols t_1..t_m.
struct LinearForm {
  std::vector<std::int64_t> coeffs;

  explicit LinearForm(int alphabet) : coeffs(static_cast<std::size_t>(alphabet), 0) {}

  static LinearForm term(int alphabet, Letter c, std::int64_t coeff = 1);

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(std::int64_t k);

  Residue evaluate(const WeightVector& t) const;
  std::string to_string() const;  // collected, e.g. "3t1+t2+t3"; "0" when null

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

LinearForm operator+(LinearForm a, const LinearForm& b);
LinearForm operator-(LinearForm a, const LinearForm& b);
LinearForm operator*(std::int64_t k, LinearForm a);

/// T' with symbolic weights.
LinearForm symbolic_weight_sum(const Word& w);

/// The uncollected term sequence of T'(w), one term per letter, e.g.
/// "t1+t2+t1+t3+t1" for 12131. The empty word gives "0".
std::string symbolic_terms(const Word& w);

struct TPlusColoring {
  int alphabet;
  std::size_t length;
  WeightVector weights;
  int colors;  // declared palette size; >= weights.modulus()
};

struct TableColoring {
  int alphabet;
  std::size_t length;
  int colors;
  std::shared_ptr<const std::vector<Residue>> table;  // m^n entries, read-only
  std::string source;
};

struct RandomColoring {
  int alphabet;
  std::size_t length;
  int colors;
  std::uint64_t seed;
};

/// A total, deterministic coloring [m]^n -> [0, colors).
class ColoringSpec {
public:
  using Variant = std::variant<TPlusColoring, TableColoring, RandomColoring>;

  explicit ColoringSpec(Variant v);

  static ColoringSpec tplus(std::size_t length, WeightVector weights);
  static ColoringSpec table(int alphabet, std::size_t length, int colors,
                            std::vector<Residue> table, std::string source = "memory");
  static ColoringSpec random(int alphabet, std::size_t length, int colors,
                             std::uint64_t seed);

  int alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return length_; }
  int colors() const noexcept { return colors_; }
  const Variant& kind() const noexcept { return v_; }

  /// Throws std::invalid_argument on dimension mismatch.
  Residue evaluate(const Word& w) const;

  /// Color of word_from_index(idx, m, n); unchecked fast path for scans.
  Residue color_at_index(std::uint64_t idx) const;

  nlohmann::json describe() const;

private:
  Variant v_;
  int alphabet_;
  std::size_t length_;
  int colors_;
};

/// The T+ coloring mod r-1 with canonical weights, viewed as an r-coloring.
/// Requires r even and r >= 4.
ColoringSpec even_r_coloring(int colors, std::size_t length);

/// Reads the "hjcolor 1 m=<m> n=<n> r=<r>" format. Throws std::runtime_error
/// on a malformed header, a wrong entry count or an out-of-range color.
ColoringSpec load_coloring_file(const std::filesystem::path& path);
ColoringSpec parse_coloring(std::istream& in, std::string source);

void write_coloring_file(const std::filesystem::path& path, const ColoringSpec& spec);
void write_coloring(std::ostream& out, const ColoringSpec& spec);

}  // namespace hj
