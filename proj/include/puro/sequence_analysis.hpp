#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "puro/macaulay.hpp"

// Predicates and bounds on integer sequences: shape flags (unimodality,
// flawlessness, SI, the strict three-interval shape forced by the WLP),
// differentiability, the socle-degree-2 closed interval, the growth bound on
// first differences of pure sequences, Brown-Colbourn inequalities and the
// rank-2 matroid purity check.

namespace puro {

struct ShapeReport {
  bool is_unimodal = false;
  std::int64_t maxima_count = 0;   // maximal constant runs that are local maxima
  std::int64_t valleys_count = 0;  // interior runs below both neighbours
  bool is_flawless = false;
  bool is_nondecreasing = false;
  bool is_differentiable = false;  // longest non-decreasing prefix differentiates to an O-sequence
  bool is_si = false;
  bool strict_unimodal_wlp_shape = false;
};

namespace detail {

// Collapses equal neighbours into runs of (value, length).
inline std::vector<std::int64_t> run_values(const IntSeq& h) {
  std::vector<std::int64_t> runs;
  for (std::int64_t v : h)
    if (runs.empty() || runs.back() != v) runs.push_back(v);
  return runs;
}

inline std::size_t nondecreasing_prefix_end(const IntSeq& h) {
  std::size_t p = 0;
  while (p + 1 < h.size() && h[p + 1] >= h[p]) ++p;
  return p;  // last index of the prefix
}

}  // namespace detail

/// The global differentiability predicate: defined on non-decreasing
/// sequences only (false otherwise); true iff (1, h1-1, h2-h1, ...) is an
/// O-sequence.
inline bool is_differentiable_seq(const IntSeq& h) {
  if (h.empty() || h[0] != 1) return false;
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] < h[i - 1]) return false;
  return is_o_sequence(differentiate(h));
}

/// Differentiability of the first half (indices 0..floor(e/2)).
inline bool first_half_differentiable(const IntSeq& h) {
  IntSeq c = canonical(h);
  std::size_t half = (c.size() - 1) / 2;
  IntSeq prefix(c.begin(), c.begin() + half + 1);
  for (std::size_t i = 1; i < prefix.size(); ++i)
    if (prefix[i] < prefix[i - 1]) return false;
  return is_differentiable_seq(prefix);
}

inline ShapeReport shape(const IntSeq& input) {
  IntSeq h = canonical(input);
  const std::size_t e = h.size() - 1;
  ShapeReport report;

  report.is_nondecreasing = true;
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] < h[i - 1]) report.is_nondecreasing = false;

  report.is_flawless = true;
  for (std::size_t i = 0; 2 * i <= e; ++i)
    if (h[i] > h[e - i]) report.is_flawless = false;

  // unimodal: never increases after a strict decrease
  report.is_unimodal = true;
  {
    bool decreased = false;
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i] < h[i - 1]) decreased = true;
      if (h[i] > h[i - 1] && decreased) report.is_unimodal = false;
    }
  }

  // maxima/valleys over plateau-collapsed runs; boundary runs count as
  // maxima when their single neighbour is lower, valleys are interior only
  {
    auto runs = detail::run_values(h);
    const std::size_t k = runs.size();
    for (std::size_t i = 0; i < k; ++i) {
      bool left_lower = (i == 0) || runs[i - 1] < runs[i];
      bool right_lower = (i + 1 == k) || runs[i + 1] < runs[i];
      if (left_lower && right_lower) ++report.maxima_count;
      if (i > 0 && i + 1 < k && runs[i - 1] > runs[i] && runs[i + 1] > runs[i])
        ++report.valleys_count;
    }
  }

  // differentiable up to the last non-decreasing index
  {
    std::size_t p = detail::nondecreasing_prefix_end(h);
    IntSeq prefix(h.begin(), h.begin() + p + 1);
    report.is_differentiable = is_differentiable_seq(prefix);
  }

  // SI: symmetric with differentiable first half
  {
    bool symmetric = true;
    for (std::size_t i = 0; 2 * i <= e; ++i)
      if (h[i] != h[e - i]) symmetric = false;
    report.is_si = symmetric && first_half_differentiable(h);
  }

  // strict three-interval shape: strictly increasing (and differentiable)
  // first interval, constant second, non-increasing third
  {
    std::size_t p = 0;
    while (p + 1 < h.size() && h[p + 1] > h[p]) ++p;
    std::size_t q = p;
    while (q + 1 < h.size() && h[q + 1] == h[q]) ++q;
    bool ok = true;
    for (std::size_t i = q + 1; i < h.size(); ++i)
      if (h[i] > h[i - 1]) ok = false;
    if (ok) {
      IntSeq prefix(h.begin(), h.begin() + p + 1);
      ok = is_differentiable_seq(prefix);
    }
    report.strict_unimodal_wlp_shape = ok;
  }

  return report;
}

/// The level refinement of the three-interval shape: after the first strict
/// decrease the sequence must strictly decrease until it ends.
inline bool level_strict_shape(const IntSeq& input) {
  IntSeq h = canonical(input);
  if (!shape(h).strict_unimodal_wlp_shape) return false;
  bool decreased = false;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (decreased && h[i] >= h[i - 1]) return false;
    if (h[i] < h[i - 1]) decreased = true;
  }
  return true;
}

/// Growth bound on the first difference of a pure sequence:
/// h[i]-h[i-1] <= ((h2-h1)_(2))^{i-2}_{i-2} for 2 <= i <= e.  Returns the
/// first violating index, or nothing when the bound holds throughout.
inline std::optional<std::int64_t> growth_bound_check(const IntSeq& input) {
  IntSeq h = canonical(input);
  if (h.size() < 3) return std::nullopt;
  const std::int64_t base = h[2] - h[1];
  const BinomialExpansion exp2 = expand(std::max<std::int64_t>(base, 0), 2);
  for (std::size_t i = 3; i < h.size(); ++i) {
    BigInt bound = shift(exp2, static_cast<std::int64_t>(i) - 2,
                         static_cast<std::int64_t>(i) - 2);
    if (BigInt(h[i] - h[i - 1]) > bound) return static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

/// (1,r,h2) is pure iff ceil(r/2) <= h2 <= C(r+1,2); returns that interval.
inline std::pair<std::int64_t, std::int64_t> socle2_bounds(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("socle2_bounds: r >= 1");
  return {(r + 1) / 2, r * (r + 1) / 2};
}

struct AlphaOutOfRange : std::runtime_error {
  AlphaOutOfRange() : std::runtime_error("brown_colbourn: alpha must be >= 1") {}
};

/// Brown-Colbourn inequalities at a fixed rational alpha >= 1:
/// (-1)^j * sum_{i<=j} (-alpha)^i h_i >= 0 for every j, strict for alpha != 1.
/// Evaluated on the canonical form; trailing zeros only re-sign a partial
/// sum already checked.
inline bool brown_colbourn(const IntSeq& input, const BigRat& alpha) {
  if (alpha < 1) throw AlphaOutOfRange();
  IntSeq h = canonical(input);
  const bool strict = alpha != 1;
  BigRat sum = 0;
  BigRat power = 1;  // (-alpha)^i
  for (std::size_t j = 0; j < h.size(); ++j) {
    sum += power * h[j];
    power *= -alpha;
    BigRat signed_sum = (j % 2 == 0) ? sum : -sum;
    if (strict ? signed_sum <= 0 : signed_sum < 0) return false;
  }
  return true;
}

/// Verifier behind the rank-2 matroid statement: a BC-feasible (1,r,h2) with
/// h2 > 0 lies in the socle-2 purity interval; h2 = 0 is the trivial case.
inline bool rank2_matroid_pure(const IntSeq& input) {
  IntSeq h = input;
  h.resize(3, 0);
  if (h[0] != 1 || h[1] < 1 || h[2] < 0)
    throw std::invalid_argument("rank2_matroid_pure: expects (1,r,h2)");
  if (h[2] == 0) return true;
  if (!brown_colbourn(canonical(h), BigRat(1))) return false;
  auto [lo, hi] = socle2_bounds(h[1]);
  return lo <= h[2] && h[2] <= hi;
}

}  // namespace puro
