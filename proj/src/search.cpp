#include "hj/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <thread>
#include <unordered_map>

#include "hj/claim.hpp"

namespace hj {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Per-chunk accumulator. Merging is associative and commutative.
struct Partial {
  std::uint64_t scanned = 0;
  std::uint64_t mono = 0;
  std::vector<std::uint64_t> hist;
  std::uint64_t best_q = kNone;
  std::uint64_t best_index = kNone;
  std::uint64_t violation_index = kNone;

  explicit Partial(std::size_t n) : hist(n + 1, 0) {}

  void record(std::uint64_t index, std::size_t q, int multiple) {
    ++mono;
    ++hist[q];
    if (q < best_q || (q == best_q && index < best_index)) {
      best_q = q;
      best_index = index;
    }
    if (multiple > 0 && q % static_cast<std::size_t>(multiple) != 0 &&
        index < violation_index) {
      violation_index = index;
    }
  }

  void merge(const Partial& o) {
    scanned += o.scanned;
    mono += o.mono;
    for (std::size_t q = 0; q < hist.size(); ++q) {
      hist[q] += o.hist[q];
    }
    if (o.best_q < best_q || (o.best_q == best_q && o.best_index < best_index)) {
      best_q = o.best_q;
      best_index = o.best_index;
    }
    violation_index = std::min(violation_index, o.violation_index);
  }
};

// T+ over [3]^n with the template index read directly as 2-bit symbols
// (0,1,2 -> letters 1,2,3; 3 -> wildcard).
void scan_packed_tplus(const TPlusColoring& c, std::uint64_t begin, std::uint64_t end,
                       int multiple, Partial& out) {
  const std::size_t n = c.length;
  const std::uint32_t r = static_cast<std::uint32_t>(c.weights.modulus());
  const std::uint32_t t[4] = {0, c.weights[1], c.weights[2], c.weights[3]};
  const std::uint64_t even_bits =
      n == 0 ? 0 : (0x5555555555555555ULL >> (64 - 2 * n));
  const int top = 2 * static_cast<int>(n) - 2;

  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const std::uint64_t stars = idx & (idx >> 1) & even_bits;
    if (stars == 0) {
      continue;
    }
    ++out.scanned;
    unsigned p1 = 1, p2 = 1, p3 = 1;
    std::uint32_t s1 = t[1], s2 = t[1], s3 = t[1];
    for (int shift = top; shift >= 0; shift -= 2) {
      const unsigned d = static_cast<unsigned>(idx >> shift) & 3u;
      if (d == 3) {
        if (p1 != 1) { s1 += t[1]; p1 = 1; }
        if (p2 != 2) { s2 += t[2]; p2 = 2; }
        if (p3 != 3) { s3 += t[3]; p3 = 3; }
      } else {
        const unsigned letter = d + 1;
        if (p1 != letter) { s1 += t[letter]; p1 = letter; }
        if (p2 != letter) { s2 += t[letter]; p2 = letter; }
        if (p3 != letter) { s3 += t[letter]; p3 = letter; }
      }
    }
    if (p1 != 1) s1 += t[1];
    if (p2 != 1) s2 += t[1];
    if (p3 != 1) s3 += t[1];
    s1 %= r;
    if (s1 == s2 % r && s1 == s3 % r) {
      const auto q = static_cast<std::size_t>(std::popcount(stars & ~(stars >> 2)));
      out.record(idx, q, multiple);
    }
  }
}

// Any coloring, any alphabet: base-(m+1) odometer over the template index.
void scan_generic(const ColoringSpec& spec, const ScanOptions& opt, std::uint64_t begin,
                  std::uint64_t end, Partial& out) {
  const int m = spec.alphabet();
  const std::size_t n = spec.length();
  const auto base = static_cast<std::uint64_t>(m) + 1;
  const auto* tp = std::get_if<TPlusColoring>(&spec.kind());
  const bool use_claim = opt.claim_fast_path && tp != nullptr && m == 3;

  std::vector<std::uint64_t> place(n);
  for (std::size_t j = n; j-- > 0;) {
    place[j] = j + 1 == n ? 1 : place[j + 1] * static_cast<std::uint64_t>(m);
  }
  std::vector<Letter> digits(n);
  {
    std::uint64_t x = begin;
    for (std::size_t j = n; j-- > 0;) {
      digits[j] = static_cast<Letter>(x % base);
      x /= base;
    }
  }
  std::vector<Letter> buf(n);
  std::vector<Residue> colors(static_cast<std::size_t>(m));

  auto direct_color = [&](int i, std::uint64_t base_index, std::uint64_t star_weight) {
    if (tp != nullptr) {
      for (std::size_t j = 0; j < n; ++j) {
        buf[j] = digits[j] == m ? static_cast<Letter>(i) : static_cast<Letter>(digits[j] + 1);
      }
      return tplus_streaming(buf, tp->weights);
    }
    return spec.color_at_index(base_index + static_cast<std::uint64_t>(i - 1) * star_weight);
  };

  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::uint64_t base_index = 0;
    std::uint64_t star_weight = 0;
    std::size_t q = 0;
    bool prev_star = false;
    for (std::size_t j = 0; j < n; ++j) {
      const bool star = digits[j] == m;
      if (star) {
        star_weight += place[j];
        q += !prev_star;
      } else {
        base_index += digits[j] * place[j];
      }
      prev_star = star;
    }

    if (q > 0) {
      ++out.scanned;
      bool mono = true;
      if (use_claim) {
        std::vector<Letter> symbols(n);
        for (std::size_t j = 0; j < n; ++j) {
          symbols[j] = digits[j] == m ? LineTemplate::kStar : static_cast<Letter>(digits[j] + 1);
        }
        const auto fast = claim_colors(LineTemplate(std::move(symbols), m), tp->weights);
        if (opt.cross_check) {
          for (int i = 1; i <= 3; ++i) {
            if (fast[static_cast<std::size_t>(i - 1)] != direct_color(i, base_index, star_weight)) {
              throw std::logic_error("boundary-decomposition color disagrees with direct T+");
            }
          }
        }
        mono = fast[0] == fast[1] && fast[0] == fast[2];
      } else {
        const Residue first = direct_color(1, base_index, star_weight);
        for (int i = 2; i <= m && mono; ++i) {
          mono = direct_color(i, base_index, star_weight) == first;
        }
      }
      if (mono) {
        out.record(idx, q, opt.interval_multiple);
      }
    }

    for (std::size_t j = n; j-- > 0;) {
      if (digits[j] == m) {
        digits[j] = 0;
      } else {
        ++digits[j];
        break;
      }
    }
  }
}

bool is_monochromatic(const ColoringSpec& spec, const LineTemplate& tpl) {
  const Residue first = spec.evaluate(tpl.point(1));
  for (int i = 2; i <= tpl.alphabet(); ++i) {
    if (spec.evaluate(tpl.point(static_cast<Letter>(i))) != first) {
      return false;
    }
  }
  return true;
}

}  // namespace

nlohmann::json to_json(const SearchReport& report) {
  nlohmann::json j;
  j["m"] = report.m;
  j["n"] = report.n;
  j["spec"] = report.spec;
  j["templates_scanned"] = report.templates_scanned;
  j["monochromatic_count"] = report.monochromatic_count;
  j["min_q"] = report.min_q ? nlohmann::json(*report.min_q) : nlohmann::json(nullptr);
  j["witness"] = report.witness ? nlohmann::json(report.witness->to_string())
                                : nlohmann::json(nullptr);
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [q, count] : report.q_histogram) {
    hist[std::to_string(q)] = count;
  }
  j["q_histogram"] = hist;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

SearchReport scan(const ColoringSpec& spec, const ScanOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int m = spec.alphabet();
  const std::size_t n = spec.length();
  if (n == 0) {
    throw std::invalid_argument("scan needs n >= 1");
  }

  std::uint64_t space = 0;
  try {
    space = template_index_space(m, n);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("(m+1)^n does not fit in 64 bits");
  }
  if (space > options.max_index_space) {
    throw BudgetExceeded("(m+1)^n = " + std::to_string(space) + " exceeds the cap of " +
                         std::to_string(options.max_index_space));
  }

  const auto* tp = std::get_if<TPlusColoring>(&spec.kind());
  const bool packed = options.packed && !options.claim_fast_path && tp != nullptr &&
                      m == 3 && n <= PackedWord::kMaxLength;

  std::size_t workers = options.workers;
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  const auto chunks = split_range(space, workers == 1 ? 1 : workers * 8);

  std::vector<Partial> partials(chunks.size(), Partial(n));
  auto run_chunk = [&](std::size_t k) {
    const auto [b, e] = chunks[k];
    if (packed) {
      scan_packed_tplus(*tp, b, e, options.interval_multiple, partials[k]);
    } else {
      scan_generic(spec, options, b, e, partials[k]);
    }
  };

  if (workers == 1 || chunks.size() <= 1) {
    for (std::size_t k = 0; k < chunks.size(); ++k) {
      run_chunk(k);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = next++; k < chunks.size(); k = next++) {
            run_chunk(k);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (const auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  Partial total(n);
  for (const Partial& p : partials) {
    total.merge(p);
  }

  SearchReport report;
  report.m = m;
  report.n = n;
  report.spec = spec.describe();
  report.templates_scanned = total.scanned;
  report.monochromatic_count = total.mono;
  for (std::size_t q = 0; q < total.hist.size(); ++q) {
    if (total.hist[q] > 0) {
      report.q_histogram[q] = total.hist[q];
    }
  }
  if (total.mono > 0) {
    report.min_q = static_cast<std::size_t>(total.best_q);
    report.witness_index = total.best_index;
    report.witness = template_from_index(total.best_index, m, n);
  }
  if (total.violation_index != kNone) {
    report.multiple_violation = template_from_index(total.violation_index, m, n);
  }

  if (report.templates_scanned != template_count(m, n)) {
    throw std::logic_error("scan visited " + std::to_string(report.templates_scanned) +
                           " templates, expected " + std::to_string(template_count(m, n)));
  }
  for (const auto& tpl : {report.witness, report.multiple_violation}) {
    if (tpl && !is_monochromatic(spec, *tpl)) {
      throw std::logic_error("reported line " + tpl->to_string() + " is not monochromatic");
    }
  }
  if (report.witness && interval_count(*report.witness) != *report.min_q) {
    throw std::logic_error("witness interval count differs from min_q");
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

TheoremVerdict verify_theorem(int r, std::size_t n, ScanOptions options) {
  if (r % 2 == 0) {
    throw std::invalid_argument("r = " + std::to_string(r) +
                                " is even; the bound applies to odd r (use the even-r "
                                "coloring and check q >= r - 1)");
  }
  options.interval_multiple = r;
  TheoremVerdict v;
  v.r = r;
  v.n = n;
  v.report = scan(ColoringSpec::tplus(n, canonical_weights(r)), options);
  v.counterexample = v.report.multiple_violation;
  v.verified = !v.counterexample &&
               (!v.report.min_q || *v.report.min_q >= static_cast<std::size_t>(r));
  if (!v.verified && !v.counterexample) {
    v.counterexample = v.report.witness;
  }
  return v;
}

nlohmann::json to_json(const TheoremVerdict& verdict) {
  nlohmann::json j;
  j["verdict"] = verdict.verified ? "verified" : "counterexample";
  j["r"] = verdict.r;
  j["n"] = verdict.n;
  j["counterexample"] = verdict.counterexample
                            ? nlohmann::json(verdict.counterexample->to_string())
                            : nlohmann::json(nullptr);
  j["report"] = to_json(verdict.report);
  return j;
}

Word threshold_word(std::size_t n, std::size_t k) {
  if (k > n) {
    throw std::out_of_range("threshold word index beyond n");
  }
  std::vector<Letter> letters(n, 1);
  std::fill(letters.begin() + static_cast<std::ptrdiff_t>(n - k), letters.end(), Letter{2});
  return Word(std::move(letters), 2);
}

LineTemplate pigeonhole_line(std::span<const Residue> colors, int r) {
  if (colors.empty()) {
    throw std::invalid_argument("pigeonhole needs the n + 1 threshold colors");
  }
  const std::size_t n = colors.size() - 1;
  if (r < 1 || n < static_cast<std::size_t>(r)) {
    throw std::invalid_argument("pigeonhole needs n >= r (n = " + std::to_string(n) +
                                ", r = " + std::to_string(r) + ")");
  }
  std::unordered_map<Residue, std::size_t> first_seen;
  for (std::size_t b = 0; b <= n; ++b) {
    if (colors[b] >= static_cast<Residue>(r)) {
      throw std::invalid_argument("threshold color outside [0, r)");
    }
    const auto [it, inserted] = first_seen.emplace(colors[b], b);
    if (!inserted) {
      // Positions a < b hold 1^(n-a)2^a and 1^(n-b)2^b; they differ on
      // (n-b, n-a], the 0-based positions n-b .. n-a-1.
      const std::size_t a = it->second;
      std::vector<Letter> symbols(n, 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j >= n - a) {
          symbols[j] = 2;
        } else if (j >= n - b) {
          symbols[j] = LineTemplate::kStar;
        }
      }
      return LineTemplate(std::move(symbols), 2);
    }
  }
  throw std::logic_error("no repeated color among more than r threshold words");
}

OracleResult decide_all_colorings(int m, std::size_t n, int r, std::uint64_t max_cells) {
  if (m < 1 || r < 1) {
    throw std::invalid_argument("oracle needs m >= 1 and r >= 1");
  }
  std::uint64_t cells = 0;
  try {
    cells = checked_pow(static_cast<std::uint64_t>(m), n);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("m^n does not fit in 64 bits");
  }
  if (cells > max_cells) {
    throw BudgetExceeded("m^n = " + std::to_string(cells) + " cells exceeds the cap of " +
                         std::to_string(max_cells));
  }

  // Lines grouped by their largest cell, which is the point x_m.
  std::vector<std::vector<std::vector<std::uint64_t>>> closing(cells);
  if (n > 0) {
    TemplateStream stream(m, n);
    while (auto tpl = stream.next()) {
      std::vector<std::uint64_t> pts;
      for (int i = 1; i < m; ++i) {
        pts.push_back(word_index(tpl->point(static_cast<Letter>(i))));
      }
      closing[word_index(tpl->point(static_cast<Letter>(m)))].push_back(std::move(pts));
    }
  }

  OracleResult result;
  std::vector<Residue> colors(cells, 0);

  // Colors are interchangeable, so cell k may use at most one color beyond
  // those already present in cells 0..k-1.
  auto dfs = [&](auto&& self, std::uint64_t cell, int max_used) -> bool {
    if (cell == cells) {
      result.witness = colors;
      return true;
    }
    const int limit = std::min(r - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      ++result.nodes;
      colors[cell] = static_cast<Residue>(c);
      bool closes_mono = false;
      for (const auto& pts : closing[cell]) {
        if (std::all_of(pts.begin(), pts.end(),
                        [&](std::uint64_t p) { return colors[p] == static_cast<Residue>(c); })) {
          closes_mono = true;
          break;
        }
      }
      if (!closes_mono && self(self, cell + 1, std::max(max_used, c))) {
        return true;
      }
    }
    return false;
  };

  result.every_coloring_has_line = !dfs(dfs, 0, -1);
  return result;
}

std::optional<MinNResult> min_n_with_mono_line(int r, std::size_t n_max,
                                               const ScanOptions& options) {
  const WeightVector t = canonical_weights(r);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const SearchReport report = scan(ColoringSpec::tplus(n, t), options);
    if (report.monochromatic_count > 0) {
      return MinNResult{n, *report.min_q, *report.witness};
    }
  }
  return std::nullopt;
}

}  // namespace hj
