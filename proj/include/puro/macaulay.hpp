#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Exact binomial machinery: d-binomial expansions, the Macaulay / Gotzmann /
// Green shift operator, O-sequence tests, the difference/sum calculus on
// integer sequences, and partition counting.  Everything here is pure and
// exact; no floating point.

namespace puro {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Finite sequence of integers indexed from degree 0.  h-vectors, f-vectors
/// and Hilbert functions are all carried as IntSeq.  Entries are kept as
/// machine integers; bounds derived from them are computed in BigInt.
using IntSeq = std::vector<std::int64_t>;

/// C(n,k) with the convention that C(n,k) = 0 whenever k < 0 or n < k.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  // C(n,k) = C(n,n-k); pick the shorter product.
  if (n - k < k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// The d-binomial expansion n = C(k_d,d) + C(k_{d-1},d-1) + ... + C(k_δ,δ)
/// with k_d > k_{d-1} > ... > k_δ ≥ δ ≥ 1.  The expansion of n = 0 is empty.
struct BinomialExpansion {
  std::int64_t degree = 1;          // d
  std::vector<std::int64_t> tops;   // k_d, k_{d-1}, ...; tops[i] sits over d-i

  std::int64_t lower_index() const {
    return degree - static_cast<std::int64_t>(tops.size()) + 1;
  }

  BigInt value() const {
    BigInt n = 0;
    for (std::size_t i = 0; i < tops.size(); ++i)
      n += binomial(tops[i], degree - static_cast<std::int64_t>(i));
    return n;
  }
};

/// Greedy (unique) d-binomial expansion of n ≥ 0.  Rejects d < 1.
inline BinomialExpansion expand(std::int64_t n, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("expand: d must be positive");
  if (n < 0) throw std::invalid_argument("expand: n must be non-negative");
  BinomialExpansion exp;
  exp.degree = d;
  std::int64_t rest = n;
  std::int64_t i = d;
  while (rest > 0 && i >= 1) {
    // largest k with C(k,i) <= rest
    std::int64_t k = i - 1;  // C(i-1,i) = 0
    while (binomial(k + 1, i) <= rest) ++k;
    exp.tops.push_back(k);
    rest -= static_cast<std::int64_t>(binomial(k, i));
    --i;
  }
  return exp;
}

/// (n_(d))^b_a = Σ C(k_i + b, i + a), zero convention applied termwise.
/// a = b = 1 is Macaulay's bound, a = b = s is Gotzmann persistence,
/// a = 0, b = -1 is Green's bound.
inline BigInt shift(const BinomialExpansion& exp, std::int64_t a, std::int64_t b) {
  BigInt total = 0;
  for (std::size_t i = 0; i < exp.tops.size(); ++i) {
    std::int64_t lower = exp.degree - static_cast<std::int64_t>(i);
    total += binomial(exp.tops[i] + b, lower + a);
  }
  return total;
}

/// Macaulay's bound on the next entry: ((n)_(d))^1_1.
inline BigInt macaulay_bound(std::int64_t n, std::int64_t d) {
  return shift(expand(n, d), 1, 1);
}

/// Strips trailing zeros, keeping at least the degree-0 entry.
inline IntSeq canonical(IntSeq h) {
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

/// Last index with a positive entry, i.e. the socle degree of the canonical
/// form.  Requires a positive entry somewhere.
inline std::int64_t socle_degree(const IntSeq& h) {
  for (std::size_t i = h.size(); i-- > 0;)
    if (h[i] > 0) return static_cast<std::int64_t>(i);
  throw std::invalid_argument("socle_degree: no positive entry");
}

/// Macaulay's O-sequence test: h0 = 1, entries non-negative, and
/// h[d+1] <= ((h[d])_(d))^1_1 for every d >= 1.  The step from h0 to h1 is
/// unconstrained (any codimension is realizable), matching the standard
/// graded convention.  Zeros are allowed and propagate: the bound from 0 is 0.
inline bool is_o_sequence(const IntSeq& h) {
  if (h.empty() || h[0] != 1) return false;
  for (std::int64_t v : h)
    if (v < 0) return false;
  for (std::size_t d = 1; d + 1 < h.size(); ++d)
    if (BigInt(h[d + 1]) > macaulay_bound(h[d], static_cast<std::int64_t>(d)))
      return false;
  return true;
}

struct NegativeDifference : std::runtime_error {
  explicit NegativeDifference(const std::string& what) : std::runtime_error(what) {}
};

/// First difference (1, h1-h0, h2-h1, ...).  Signals NegativeDifference if
/// any step decreases; callers that want signed differences compute them
/// directly.
inline IntSeq differentiate(const IntSeq& h) {
  if (h.empty()) throw std::invalid_argument("differentiate: empty sequence");
  IntSeq g(h.size());
  g[0] = h[0];
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] < h[i - 1])
      throw NegativeDifference("differentiate: decreasing step at index " + std::to_string(i));
    g[i] = h[i] - h[i - 1];
  }
  return g;
}

/// Partial sums; the inverse of differentiate on non-decreasing input.
inline IntSeq integrate(const IntSeq& g) {
  if (g.empty()) throw std::invalid_argument("integrate: empty sequence");
  IntSeq h(g.size());
  std::int64_t run = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    run += g[i];
    h[i] = run;
  }
  return h;
}

/// Number of partitions of e into exactly r positive parts, exact count.
inline BigInt partitions_with_parts(std::int64_t e, std::int64_t r) {
  if (e < 1 || r < 1) throw std::invalid_argument("partitions_with_parts: e,r >= 1");
  if (r > e) return 0;
  // p(n,k) = p(n-1,k-1) + p(n-k,k)
  std::vector<std::vector<BigInt>> p(e + 1, std::vector<BigInt>(r + 1, 0));
  p[0][0] = 1;
  for (std::int64_t n = 1; n <= e; ++n)
    for (std::int64_t k = 1; k <= std::min(n, r); ++k) {
      p[n][k] = p[n - 1][k - 1];
      if (n - k >= 0) p[n][k] += p[n - k][k];
    }
  return p[e][r];
}

/// Parses "1,49,81,79,81" or space separated text.  Throws on junk.
inline IntSeq parse_intseq(const std::string& text) {
  IntSeq out;
  std::string token;
  std::istringstream in(text);
  std::string normalized;
  normalized.reserve(text.size());
  for (char c : text) normalized.push_back(c == ',' ? ' ' : c);
  std::istringstream words(normalized);
  while (words >> token) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_intseq: bad token '" + token + "'");
    }
    if (pos != token.size())
      throw std::invalid_argument("parse_intseq: bad token '" + token + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("parse_intseq: empty input");
  return out;
}

inline std::string format_intseq(const IntSeq& h, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(h[i]);
  }
  return out;
}

}  // namespace puro
