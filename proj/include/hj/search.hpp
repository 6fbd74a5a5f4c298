#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "hj/coloring.hpp"
#include "hj/lines.hpp"

namespace hj {

/// Thrown instead of starting a computation larger than the configured cap.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ScanOptions {
  /// 0 selects std::thread::hardware_concurrency().
  std::size_t workers = 0;
  /// Upper bound on the template index space (m+1)^n.
  std::uint64_t max_index_space = std::uint64_t{1} << 32;
  /// Evaluate T+ lines through the boundary decomposition (m = 3 only).
  bool claim_fast_path = false;
  /// With claim_fast_path: re-evaluate every line directly and throw
  /// std::logic_error on disagreement.
  bool cross_check = true;
  /// Use the 2-bit packed loop for T+ colorings of [3]^n, n <= 30.
  bool packed = true;
  /// When > 0, record the first monochromatic line whose interval count is
  /// not a multiple of this value.
  int interval_multiple = 0;
};

struct SearchReport {
  int m = 0;
  std::size_t n = 0;
  nlohmann::json spec;
  std::uint64_t templates_scanned = 0;
  std::uint64_t monochromatic_count = 0;
  std::optional<std::size_t> min_q;
  std::optional<LineTemplate> witness;
  std::optional<std::uint64_t> witness_index;
  std::map<std::size_t, std::uint64_t> q_histogram;
  std::optional<LineTemplate> multiple_violation;
  double elapsed_ms = 0.0;
};

/// Keys: m, n, spec, templates_scanned, monochromatic_count, min_q, witness,
/// q_histogram, elapsed_ms.
nlohmann::json to_json(const SearchReport& report);

/// Exhaustively classifies every combinatorial line of [m]^n under `spec`.
/// The report does not depend on the worker count.
SearchReport scan(const ColoringSpec& spec, const ScanOptions& options = {});

struct TheoremVerdict {
  bool verified = false;
  int r = 0;
  std::size_t n = 0;
  std::optional<LineTemplate> counterexample;
  SearchReport report;
};

/// Scans T+ with canonical weights on [3]^n. Verified iff every monochromatic
/// line has q >= r and q = 0 mod r. Throws std::invalid_argument for even r.
TheoremVerdict verify_theorem(int r, std::size_t n, ScanOptions options = {});

nlohmann::json to_json(const TheoremVerdict& verdict);

/// Given colors[k] = color of 1^(n-k) 2^k for k = 0..n (so n + 1 entries),
/// returns the m = 2 line through the first repeated color. Its wildcard set is
/// a single interval. Requires n >= r and every color in [0, r).
LineTemplate pigeonhole_line(std::span<const Residue> colors, int r);

/// The threshold word 1^(n-k) 2^k.
Word threshold_word(std::size_t n, std::size_t k);

struct OracleResult {
  /// True iff every r-coloring of [m]^n has a monochromatic line.
  bool every_coloring_has_line = false;
  /// A line-free coloring (table in word_index order) when the answer is false.
  std::optional<std::vector<Residue>> witness;
  std::uint64_t nodes = 0;
};

/// Depth-first coloring of cells in word_index order, pruning as soon as a
/// completed line is monochromatic. Refuses when m^n > max_cells.
OracleResult decide_all_colorings(int m, std::size_t n, int r,
                                  std::uint64_t max_cells = 16);

struct MinNResult {
  std::size_t n = 0;
  std::size_t min_q = 0;
  LineTemplate witness;
};

/// Smallest n <= n_max for which canonical T+ over Z_r has any monochromatic
/// line. Requires r odd, r >= 3.
std::optional<MinNResult> min_n_with_mono_line(int r, std::size_t n_max,
                                               const ScanOptions& options = {});

}  // namespace hj
