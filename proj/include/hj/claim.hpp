#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hj/coloring.hpp"
#include "hj/lines.hpp"
#include "hj/word.hpp"

namespace hj {

/// The pieces of x_1^+ that lie outside the wildcard intervals.
///
/// For a template with q wildcard intervals, x_1^+ = w_0 I_1 w_1 ... I_q w_q
/// where I_j is the j-th interval of S shifted by one (the inserted leading 1).
/// Every w_j is non-empty. The j-th boundary pair is (last letter of w_{j-1},
/// first letter of w_j).
struct BoundaryDecomposition {
  std::vector<Word> subwords;
  std::vector<std::pair<Letter, Letter>> boundary_pairs;
  std::vector<Interval> shifted_intervals;  // positions inside x_1^+

  std::size_t q() const noexcept { return boundary_pairs.size(); }
};

/// Requires m = 3.
BoundaryDecomposition decompose(const LineTemplate& tpl);

/// Coefficient c in {-1, 0, 1} with h_i(l, f) = c * t_i.
///
///   i = l = f          -> -1
///   l = f != i         -> +1
///   l != f, i in {l,f} ->  0
///   l != f, i notin    -> +1
int h_coefficient(Letter i, Letter l, Letter f);

/// h_i(l, f) under the weight vector t. Letters must lie in [1, 3].
Residue h(Letter i, Letter l, Letter f, const WeightVector& t);

/// h_i(l, f) as a symbolic combination of t_1, t_2, t_3.
LinearForm h_symbolic(Letter i, Letter l, Letter f);

/// sum_j T(w_j) + sum_j h_i(l_j, f_j), the right-hand side of the claim.
Residue claim_eval(const LineTemplate& tpl, Letter i, const WeightVector& t);
Residue claim_eval(const BoundaryDecomposition& d, Letter i, const WeightVector& t);

/// Same value obtained by peeling off the first interval and recursing on
/// the tail word w_1 i w_2 ... i w_q.
Residue claim_eval_recursive(const BoundaryDecomposition& d, Letter i,
                             const WeightVector& t);

/// w_j i w_{j+1} ... i w_q with every wildcard interval collapsed to one letter.
Word claim_tail_word(const BoundaryDecomposition& d, Letter i, std::size_t j);

/// Colors T+(x_1), T+(x_2), T+(x_3) from a single decomposition.
std::array<Residue, 3> claim_colors(const LineTemplate& tpl, const WeightVector& t);

/// h_1(l, f) + h_3(l, f) - 2 h_2(l, f) mod r.
Residue pair_delta(Letter l, Letter f, const WeightVector& t);

/// T+(x_1) + T+(x_3) - 2 T+(x_2) mod r, evaluated directly on the line points.
Residue line_color_delta(const LineTemplate& tpl, const WeightVector& t);

struct ClaimCheckSummary {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::optional<LineTemplate> first_mismatch;
  std::optional<WeightVector> first_mismatch_weights;
};

/// Random templates of [3]^n (1 <= n <= max_length), random r in [2, 31] and
/// random weights; compares the flat and recursive claim sums with direct T+
/// for i = 1, 2, 3. The case sequence is a function of the seed.
ClaimCheckSummary claim_check(std::uint64_t cases, std::uint64_t seed,
                              std::size_t max_length = 30);

}  // namespace hj
