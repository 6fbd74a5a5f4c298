#include "hj/cli.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hj/claim.hpp"
#include "hj/coloring.hpp"
#include "hj/lines.hpp"
#include "hj/search.hpp"
#include "hj/word.hpp"

namespace hj::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, comma - start);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string("malformed ") + what + " list '" + text + "'");
    }
    values.push_back(v);
    start = comma + 1;
  }
  return values;
}

WeightVector resolve_weights(int r, const std::string& t_text) {
  if (!t_text.empty()) {
    return WeightVector(parse_int_list(t_text, "--t"), r);
  }
  if (r % 2 == 0) {
    throw UsageError("--t omitted with even r = " + std::to_string(r) +
                     "; pass --t explicitly or use --even-r");
  }
  return canonical_weights(r);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Shared between subcommands.
struct ScanFlags {
  std::size_t workers = 0;
  std::uint64_t max_space = std::uint64_t{1} << 32;

  void attach(CLI::App* cmd) {
    cmd->add_option("--workers", workers, "worker threads (0 = all cores)");
    cmd->add_option("--max-space", max_space, "refuse scans with (m+1)^n above this");
  }
  ScanOptions options() const {
    ScanOptions o;
    o.workers = workers;
    o.max_index_space = max_space;
    return o;
  }
};

std::string symbolic_h(Letter i, Letter l, Letter f) {
  return h_symbolic(i, l, f).to_string();
}

constexpr std::array<std::pair<Letter, Letter>, 6> kTableColumns{
    {{1, 1}, {2, 2}, {3, 3}, {2, 3}, {3, 1}, {1, 2}}};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contraction-weight colorings of [3]^n and combinatorial-line search"};
  app.name("hj");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  bool as_json = false;

  // color
  auto* color = app.add_subcommand("color", "evaluate T+ on one word");
  int color_r = 0;
  int color_even_r = 0;
  std::string color_t;
  std::string color_word;
  bool explain = false;
  color->add_option("--r", color_r, "modulus r");
  color->add_option("--t", color_t, "weights a,b,c (negative allowed, reduced mod r)");
  color->add_option("--even-r", color_even_r, "use the even-r coloring (modulus r-1)");
  color->add_option("--word", color_word, "word over 1..m, '-' for empty")->required();
  color->add_flag("--explain", explain, "print the plus-extension and contraction");
  color->add_flag("--json", as_json);

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustively check the interval bound");
  int verify_r = 0;
  std::size_t verify_n = 0;
  ScanFlags verify_flags;
  verify->add_option("--r", verify_r, "odd modulus r >= 3")->required();
  verify->add_option("--n", verify_n, "word length")->required()->check(CLI::PositiveNumber);
  verify_flags.attach(verify);
  verify->add_flag("--json", as_json);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "classify every line under a coloring");
  std::string scan_coloring = "tplus";
  int scan_m = 3;
  std::size_t scan_n = 0;
  int scan_r = 0;
  int scan_even_r = 0;
  std::string scan_t;
  bool claim_fast_path = false;
  ScanFlags scan_flags;
  scan_cmd->add_option("--coloring", scan_coloring, "tplus | file:<path> | random:<seed>");
  scan_cmd->add_option("--m", scan_m, "alphabet size (random colorings)");
  scan_cmd->add_option("--n", scan_n, "word length");
  scan_cmd->add_option("--r", scan_r, "number of colors / modulus");
  scan_cmd->add_option("--even-r", scan_even_r, "scan the even-r coloring with r colors");
  scan_cmd->add_option("--t", scan_t, "weights for tplus");
  scan_cmd->add_flag("--claim-fast-path", claim_fast_path,
                     "evaluate lines through boundary decompositions (cross-checked)");
  scan_flags.attach(scan_cmd);
  scan_cmd->add_flag("--json", as_json);

  // claim-check
  auto* claim_cmd = app.add_subcommand("claim-check", "random checks of the boundary identity");
  std::uint64_t cases = 100000;
  std::uint64_t seed = 7;
  std::size_t claim_n_max = 30;
  claim_cmd->add_option("--cases", cases, "number of random templates");
  claim_cmd->add_option("--seed", seed, "generator seed");
  claim_cmd->add_option("--n-max", claim_n_max, "longest template")->check(CLI::PositiveNumber);
  claim_cmd->add_flag("--json", as_json);

  // table
  auto* table_cmd = app.add_subcommand("table", "print the h_i(l, f) correction table");
  int table_r = 0;
  std::string table_t;
  table_cmd->add_option("--r", table_r, "also print numeric entries mod r");
  table_cmd->add_option("--t", table_t, "weights for the numeric rows");
  table_cmd->add_flag("--json", as_json);

  // pigeonhole
  auto* pig = app.add_subcommand("pigeonhole",
                                 "single-interval line over [2]^n from threshold colors");
  int pig_r = 0;
  std::string pig_colors;
  pig->add_option("--r", pig_r, "number of colors")->required();
  pig->add_option("--colors", pig_colors, "colors of 1^n, 1^(n-1)2, ..., 2^n")->required();
  pig->add_flag("--json", as_json);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "decide whether every r-coloring of [m]^n has a line");
  int oracle_m = 0;
  std::size_t oracle_n = 0;
  int oracle_r = 0;
  std::uint64_t max_cells = 16;
  oracle->add_option("--m", oracle_m)->required();
  oracle->add_option("--n", oracle_n)->required();
  oracle->add_option("--r", oracle_r)->required();
  oracle->add_option("--max-cells", max_cells, "refuse when m^n exceeds this");
  oracle->add_flag("--json", as_json);

  // min-n
  auto* min_n = app.add_subcommand("min-n", "smallest n with a monochromatic T+ line");
  int min_r = 0;
  std::size_t n_max = 0;
  ScanFlags min_flags;
  min_n->add_option("--r", min_r, "odd modulus r >= 3")->required();
  min_n->add_option("--n-max", n_max, "largest n tried")->required();
  min_flags.attach(min_n);
  min_n->add_flag("--json", as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hj: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (color->parsed()) {
      if ((color_r == 0) == (color_even_r == 0)) {
        throw UsageError("color needs exactly one of --r and --even-r");
      }
      const WeightVector t =
          color_even_r != 0
              ? std::get<TPlusColoring>(even_r_coloring(color_even_r, 1).kind()).weights
              : resolve_weights(color_r, color_t);
      const Word w = Word::parse(color_word, t.alphabet());
      const Word plus = plus_extend(w);
      const Word bar = contract(plus);
      const Residue c = tplus_streaming(w.letters(), t);
      if (c != tplus(w, t)) {
        throw std::logic_error("streaming T+ disagrees with the definition chain");
      }
      if (as_json) {
        emit(out, json{{"word", w.to_string()},
                       {"plus", plus.to_string()},
                       {"contraction", bar.to_string()},
                       {"symbolic", symbolic_terms(bar)},
                       {"symbolic_collected", symbolic_weight_sum(bar).to_string()},
                       {"r", t.modulus()},
                       {"t", std::vector<Residue>(t.weights().begin(), t.weights().end())},
                       {"color", c}});
      } else if (explain) {
        out << "word        " << w.to_string() << '\n'
            << "plus        " << plus.to_string() << '\n'
            << "contraction " << bar.to_string() << '\n'
            << "T+          " << symbolic_terms(bar) << " = "
            << symbolic_weight_sum(bar).to_string() << '\n'
            << "t           (" << t.to_string() << ") mod " << t.modulus() << '\n'
            << "color       " << c << '\n';
      } else {
        out << c << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const TheoremVerdict v = verify_theorem(verify_r, verify_n, verify_flags.options());
      if (as_json) {
        emit(out, to_json(v));
      } else {
        const SearchReport& rep = v.report;
        out << (v.verified ? "verified" : "counterexample") << ": r=" << v.r << " n=" << v.n
            << " templates=" << rep.templates_scanned
            << " monochromatic=" << rep.monochromatic_count;
        if (rep.min_q) {
          out << " min_q=" << *rep.min_q;
        }
        if (v.counterexample) {
          out << " line=" << v.counterexample->to_string();
        }
        out << '\n';
      }
      return v.verified ? kExitOk : kExitFound;
    }

    if (scan_cmd->parsed()) {
      std::optional<ColoringSpec> spec;
      if (scan_coloring == "tplus") {
        if (scan_n == 0) {
          throw UsageError("scan --coloring tplus needs --n");
        }
        if (scan_even_r != 0) {
          spec = even_r_coloring(scan_even_r, scan_n);
        } else {
          spec = ColoringSpec::tplus(scan_n, resolve_weights(scan_r, scan_t));
        }
      } else if (scan_coloring.rfind("file:", 0) == 0) {
        spec = load_coloring_file(scan_coloring.substr(5));
      } else if (scan_coloring.rfind("random:", 0) == 0) {
        const auto seed_list = parse_int_list(scan_coloring.substr(7), "seed");
        if (seed_list.size() != 1 || scan_n == 0 || scan_r < 1) {
          throw UsageError("scan --coloring random:<seed> needs one seed, --n and --r");
        }
        spec = ColoringSpec::random(scan_m, scan_n, scan_r,
                                    static_cast<std::uint64_t>(seed_list.front()));
      } else {
        throw UsageError("unknown coloring '" + scan_coloring + "'");
      }
      ScanOptions opt = scan_flags.options();
      opt.claim_fast_path = claim_fast_path;
      const SearchReport rep = scan(*spec, opt);
      if (as_json) {
        emit(out, to_json(rep));
      } else {
        out << "spec        " << rep.spec.dump() << '\n'
            << "templates   " << rep.templates_scanned << '\n'
            << "monochrome  " << rep.monochromatic_count << '\n'
            << "min_q       " << (rep.min_q ? std::to_string(*rep.min_q) : "-") << '\n'
            << "witness     " << (rep.witness ? rep.witness->to_string() : "-") << '\n';
        for (const auto& [q, count] : rep.q_histogram) {
          out << "q=" << q << "         " << count << '\n';
        }
        out << "elapsed_ms  " << std::fixed << std::setprecision(1) << rep.elapsed_ms << '\n';
      }
      return kExitOk;
    }

    if (claim_cmd->parsed()) {
      const ClaimCheckSummary s = claim_check(cases, seed, claim_n_max);
      if (as_json) {
        json j{{"cases", s.cases}, {"mismatches", s.mismatches}, {"seed", seed}};
        j["first_mismatch"] = s.first_mismatch ? json(s.first_mismatch->to_string()) : json(nullptr);
        emit(out, j);
      } else {
        out << s.cases << " cases, " << s.mismatches << " mismatches";
        if (s.first_mismatch) {
          out << " (first: " << s.first_mismatch->to_string() << " t=("
              << s.first_mismatch_weights->to_string() << ") mod "
              << s.first_mismatch_weights->modulus() << ")";
        }
        out << '\n';
      }
      return s.mismatches == 0 ? kExitOk : kExitFound;
    }

    if (table_cmd->parsed()) {
      std::optional<WeightVector> t;
      if (table_r != 0) {
        t = resolve_weights(table_r, table_t);
        if (t->alphabet() != 3) {
          throw UsageError("the h-table needs three weights");
        }
      } else if (!table_t.empty()) {
        throw UsageError("--t needs --r");
      }
      if (as_json) {
        json cols = json::array();
        for (const auto& [l, f] : kTableColumns) {
          json col{{"l", l}, {"f", f}};
          for (Letter i = 1; i <= 3; ++i) {
            col["h" + std::to_string(i)] = symbolic_h(i, l, f);
            if (t) {
              col["h" + std::to_string(i) + "_value"] = h(i, l, f, *t);
            }
          }
          cols.push_back(col);
        }
        json j{{"columns", cols}};
        if (t) {
          j["r"] = t->modulus();
          j["t"] = std::vector<Residue>(t->weights().begin(), t->weights().end());
        }
        emit(out, j);
      } else {
        auto row = [&](const std::string& label, auto&& cell) {
          out << std::left << std::setw(8) << label << '|';
          for (const auto& [l, f] : kTableColumns) {
            out << std::right << std::setw(7) << cell(l, f);
          }
          out << '\n';
        };
        row("(l,f)", [](Letter l, Letter f) {
          return "(" + std::to_string(l) + "," + std::to_string(f) + ")";
        });
        out << std::string(8 + 1 + 7 * kTableColumns.size(), '-') << '\n';
        for (Letter i = 1; i <= 3; ++i) {
          row("h" + std::to_string(i), [i](Letter l, Letter f) { return symbolic_h(i, l, f); });
        }
        if (t) {
          out << "\nt = (" << t->to_string() << ") mod " << t->modulus() << '\n';
          for (Letter i = 1; i <= 3; ++i) {
            row("h" + std::to_string(i), [&, i](Letter l, Letter f) {
              return std::to_string(h(i, l, f, *t));
            });
          }
        }
      }
      return kExitOk;
    }

    if (pig->parsed()) {
      std::vector<Residue> colors;
      for (std::int64_t c : parse_int_list(pig_colors, "--colors")) {
        if (c < 0) {
          throw UsageError("colors must be non-negative");
        }
        colors.push_back(static_cast<Residue>(c));
      }
      const LineTemplate tpl = pigeonhole_line(colors, pig_r);
      const auto s = tpl.wildcard_set();
      const IntervalDecomposition d = decompose_intervals(s, tpl.size());
      if (as_json) {
        emit(out, json{{"template", tpl.to_string()},
                       {"points", {tpl.point(1).to_string(), tpl.point(2).to_string()}},
                       {"interval", d.to_string()}});
      } else {
        out << tpl.to_string() << "  {" << tpl.point(1).to_string() << ", "
            << tpl.point(2).to_string() << "}  wildcard " << d.to_string() << '\n';
      }
      return kExitOk;
    }

    if (oracle->parsed()) {
      const OracleResult res = decide_all_colorings(oracle_m, oracle_n, oracle_r, max_cells);
      if (as_json) {
        json j{{"m", oracle_m}, {"n", oracle_n}, {"r", oracle_r},
               {"every_coloring_has_line", res.every_coloring_has_line},
               {"nodes", res.nodes}};
        j["witness"] = res.witness ? json(*res.witness) : json(nullptr);
        emit(out, j);
      } else {
        out << (res.every_coloring_has_line ? "true" : "false") << '\n';
        if (res.witness) {
          out << "line-free coloring:";
          for (Residue c : *res.witness) {
            out << ' ' << c;
          }
          out << '\n';
        }
      }
      return res.every_coloring_has_line ? kExitOk : kExitFound;
    }

    if (min_n->parsed()) {
      const auto res = min_n_with_mono_line(min_r, n_max, min_flags.options());
      if (as_json) {
        json j{{"r", min_r}, {"n_max", n_max}};
        j["n"] = res ? json(res->n) : json(nullptr);
        j["min_q"] = res ? json(res->min_q) : json(nullptr);
        j["witness"] = res ? json(res->witness.to_string()) : json(nullptr);
        emit(out, j);
      } else if (res) {
        out << "n=" << res->n << " min_q=" << res->min_q << " witness=" << res->witness.to_string()
            << '\n';
      } else {
        out << "none up to n=" << n_max << '\n';
      }
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "hj: budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range land here as input errors.
    err << "hj: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hj: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hj::cli
