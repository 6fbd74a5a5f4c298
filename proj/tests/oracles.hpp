#pragma once

// Brute-force reference computations used only by tests. Everything here works
// on plain strings and explicit enumeration and shares no code path with the
// library beyond the types it returns.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hj::oracle {

/// All words of [m]^n as digit strings, generated in lexicographic order.
inline std::vector<std::string> all_words(int m, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& prefix : out) {
      for (int c = 1; c <= m; ++c) {
        next.push_back(prefix + static_cast<char>('0' + c));
      }
    }
    out.swap(next);
  }
  return out;
}

/// All symbol strings over 1..m and '*' (in the order 1 < ... < m < *), with
/// the star-free ones dropped.
inline std::vector<std::string> all_templates(int m, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& prefix : out) {
      for (int c = 1; c <= m; ++c) {
        next.push_back(prefix + static_cast<char>('0' + c));
      }
      next.push_back(prefix + '*');
    }
    out.swap(next);
  }
  std::vector<std::string> kept;
  for (auto& s : out) {
    if (s.find('*') != std::string::npos) {
      kept.push_back(std::move(s));
    }
  }
  return kept;
}

inline std::string fill(const std::string& tpl, int i) {
  std::string s = tpl;
  for (char& ch : s) {
    if (ch == '*') {
      ch = static_cast<char>('0' + i);
    }
  }
  return s;
}

inline std::string contract(const std::string& w) {
  std::string out;
  for (char ch : w) {
    if (out.empty() || out.back() != ch) {
      out.push_back(ch);
    }
  }
  return out;
}

/// T+ straight from the definition: contract "1" + w + "1", sum weights.
inline long long tplus(const std::string& w, const std::vector<long long>& t, long long r) {
  long long sum = 0;
  for (char ch : contract("1" + w + "1")) {
    sum += t[static_cast<std::size_t>(ch - '1')];
  }
  return ((sum % r) + r) % r;
}

/// Number of maximal star runs.
inline std::size_t star_runs(const std::string& tpl) {
  std::size_t q = 0;
  for (std::size_t j = 0; j < tpl.size(); ++j) {
    q += tpl[j] == '*' && (j == 0 || tpl[j - 1] != '*');
  }
  return q;
}

/// Decides "every r-coloring of [m]^n has a monochromatic line" by enumerating
/// all r^(m^n) colorings with no pruning or symmetry reduction.
inline bool every_coloring_has_line(int m, std::size_t n, int r) {
  const auto words = all_words(m, n);
  std::vector<std::vector<std::size_t>> lines;
  for (const auto& tpl : all_templates(m, n)) {
    std::vector<std::size_t> pts;
    for (int i = 1; i <= m; ++i) {
      const std::string p = fill(tpl, i);
      for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k] == p) {
          pts.push_back(k);
        }
      }
    }
    lines.push_back(pts);
  }
  std::vector<int> colors(words.size(), 0);
  while (true) {
    bool has_line = false;
    for (const auto& pts : lines) {
      bool mono = true;
      for (std::size_t p : pts) {
        mono = mono && colors[p] == colors[pts.front()];
      }
      if (mono) {
        has_line = true;
        break;
      }
    }
    if (!has_line) {
      return false;
    }
    std::size_t k = 0;
    while (k < colors.size() && colors[k] == r - 1) {
      colors[k++] = 0;
    }
    if (k == colors.size()) {
      return true;
    }
    ++colors[k];
  }
}

}  // namespace hj::oracle
