#include "hj/claim.hpp"

#include <random>
#include <stdexcept>

namespace hj {

namespace {

void check_ternary(Letter c) {
  if (c < 1 || c > 3) {
    throw std::invalid_argument("letter " + std::to_string(c) + " outside [1, 3]");
  }
}

}  // namespace

BoundaryDecomposition decompose(const LineTemplate& tpl) {
  if (tpl.alphabet() != 3) {
    throw std::invalid_argument("boundary decomposition is defined for m = 3");
  }
  const Word y = plus_extend(tpl.base());
  BoundaryDecomposition d;
  for (const Interval& iv : decompose_intervals(tpl.wildcard_set(), tpl.size()).intervals) {
    d.shifted_intervals.push_back({iv.first + 1, iv.last + 1});
  }
  std::size_t start = 0;
  for (const Interval& iv : d.shifted_intervals) {
    d.subwords.push_back(y.subword(start, iv.first - start));
    start = iv.last + 1;
  }
  d.subwords.push_back(y.subword(start, y.size() - start));
  for (std::size_t j = 1; j < d.subwords.size(); ++j) {
    d.boundary_pairs.emplace_back(d.subwords[j - 1].back(), d.subwords[j].front());
  }
  return d;
}

int h_coefficient(Letter i, Letter l, Letter f) {
  check_ternary(i);
  check_ternary(l);
  check_ternary(f);
  if (l == f) {
    return i == l ? -1 : 1;
  }
  return (i == l || i == f) ? 0 : 1;
}

Residue h(Letter i, Letter l, Letter f, const WeightVector& t) {
  return reduce(h_coefficient(i, l, f) * static_cast<std::int64_t>(t[i]), t.modulus());
}

LinearForm h_symbolic(Letter i, Letter l, Letter f) {
  return LinearForm::term(3, i, h_coefficient(i, l, f));
}

Residue claim_eval(const BoundaryDecomposition& d, Letter i, const WeightVector& t) {
  check_ternary(i);
  std::uint64_t sum = 0;
  for (const Word& w : d.subwords) {
    sum += contracted_sum(w, t);
  }
  for (const auto& [l, f] : d.boundary_pairs) {
    sum += h(i, l, f, t);
  }
  return static_cast<Residue>(sum % static_cast<std::uint64_t>(t.modulus()));
}

Residue claim_eval(const LineTemplate& tpl, Letter i, const WeightVector& t) {
  return claim_eval(decompose(tpl), i, t);
}

namespace {

// T(w_j i w_{j+1} ... i w_q) via the one-interval case applied to
// w_j . i . (rest), then induction on the rest.
Residue claim_tail(const BoundaryDecomposition& d, Letter i, const WeightVector& t,
                   std::size_t j) {
  const Residue head = contracted_sum(d.subwords[j], t);
  if (j == d.q()) {
    return head;
  }
  const auto [l, f] = d.boundary_pairs[j];
  return reduce(static_cast<std::int64_t>(head) + h(i, l, f, t) +
                    claim_tail(d, i, t, j + 1),
                t.modulus());
}

}  // namespace

Residue claim_eval_recursive(const BoundaryDecomposition& d, Letter i,
                             const WeightVector& t) {
  check_ternary(i);
  return claim_tail(d, i, t, 0);
}

Word claim_tail_word(const BoundaryDecomposition& d, Letter i, std::size_t j) {
  if (j >= d.subwords.size()) {
    throw std::out_of_range("tail index beyond q");
  }
  Word out = d.subwords[j];
  for (std::size_t k = j + 1; k < d.subwords.size(); ++k) {
    out = out + Word({i}, out.alphabet()) + d.subwords[k];
  }
  return out;
}

std::array<Residue, 3> claim_colors(const LineTemplate& tpl, const WeightVector& t) {
  const BoundaryDecomposition d = decompose(tpl);
  std::uint64_t base = 0;
  for (const Word& w : d.subwords) {
    base += contracted_sum(w, t);
  }
  std::array<Residue, 3> out{};
  for (Letter i = 1; i <= 3; ++i) {
    std::uint64_t sum = base;
    for (const auto& [l, f] : d.boundary_pairs) {
      sum += h(i, l, f, t);
    }
    out[i - 1u] = static_cast<Residue>(sum % static_cast<std::uint64_t>(t.modulus()));
  }
  return out;
}

Residue pair_delta(Letter l, Letter f, const WeightVector& t) {
  return reduce(static_cast<std::int64_t>(h(1, l, f, t)) + h(3, l, f, t) -
                    2 * static_cast<std::int64_t>(h(2, l, f, t)),
                t.modulus());
}

Residue line_color_delta(const LineTemplate& tpl, const WeightVector& t) {
  if (tpl.alphabet() != 3) {
    throw std::invalid_argument("line color delta is defined for m = 3");
  }
  const std::int64_t c1 = tplus(tpl.point(1), t);
  const std::int64_t c2 = tplus(tpl.point(2), t);
  const std::int64_t c3 = tplus(tpl.point(3), t);
  return reduce(c1 + c3 - 2 * c2, t.modulus());
}

ClaimCheckSummary claim_check(std::uint64_t cases, std::uint64_t seed,
                              std::size_t max_length) {
  if (max_length < 1) {
    throw std::invalid_argument("claim check needs max_length >= 1");
  }
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t k) { return rng() % k; };

  ClaimCheckSummary s;
  for (std::uint64_t c = 0; c < cases; ++c) {
    const std::size_t n = 1 + below(max_length);
    std::vector<Letter> symbols(n);
    bool any_star = false;
    for (Letter& sym : symbols) {
      sym = static_cast<Letter>(below(4));  // 0 is the wildcard
      any_star |= sym == LineTemplate::kStar;
    }
    if (!any_star) {
      symbols[below(n)] = LineTemplate::kStar;
    }
    const int r = 2 + static_cast<int>(below(30));
    const WeightVector t({static_cast<std::int64_t>(below(static_cast<std::uint64_t>(r))),
                          static_cast<std::int64_t>(below(static_cast<std::uint64_t>(r))),
                          static_cast<std::int64_t>(below(static_cast<std::uint64_t>(r)))},
                         r);
    const LineTemplate tpl(std::move(symbols), 3);
    const BoundaryDecomposition d = decompose(tpl);

    bool ok = true;
    for (Letter i = 1; i <= 3; ++i) {
      const Residue direct = tplus(tpl.point(i), t);
      ok = ok && claim_eval(d, i, t) == direct && claim_eval_recursive(d, i, t) == direct;
    }
    ++s.cases;
    if (!ok) {
      ++s.mismatches;
      if (!s.first_mismatch) {
        s.first_mismatch = tpl;
        s.first_mismatch_weights = t;
      }
    }
  }
  return s;
}

}  // namespace hj
