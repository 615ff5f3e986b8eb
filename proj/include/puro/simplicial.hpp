#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "puro/macaulay.hpp"
#include "puro/monomial.hpp"
#include "puro/order_ideal.hpp"

// Pure f-vectors, the squarefree face of pure O-sequences: the f <-> h
// transform, the Cohen-Macaulay interval check, the two-facet formulas and
// inequality strings, and the projective-plane / Steiner extremal sequences.

namespace puro {

/// Face counts (f_{-1}=1, f_0, ..., f_{d-1}) of a (d-1)-dimensional complex.
struct FVector {
  IntSeq entries;  // entries[0] = f_{-1} = 1

  int dimension() const { return static_cast<int>(entries.size()) - 2; }

  bool operator==(const FVector& rhs) const { return entries == rhs.entries; }
};

struct NotCM : std::runtime_error {
  explicit NotCM(const std::string& what) : std::runtime_error(what) {}
};

/// h from f via  sum h_i t^i = sum f_{i-1} t^i (1-t)^(d-i).  Entries may go
/// negative; that is data (the complex is not Cohen-Macaulay), not an error.
inline IntSeq f_to_h(const FVector& f) {
  if (f.entries.empty() || f.entries[0] != 1)
    throw std::invalid_argument("f_to_h: f_{-1} must be 1");
  const int d = static_cast<int>(f.entries.size()) - 1;
  IntSeq h(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    // f_{i-1} t^i (1-t)^{d-i} contributes f_{i-1} (-1)^k C(d-i,k) to h_{i+k}
    for (int k = 0; i + k <= d; ++k) {
      BigInt term = f.entries[i] * binomial(d - i, k);
      h[i + k] += ((k % 2 == 0) ? 1 : -1) * term.convert_to<std::int64_t>();
    }
  }
  return h;
}

/// Inverse transform: f_{i-1} = sum_j C(d-j, i-j) h_j.
inline FVector h_to_f(const IntSeq& h, int d) {
  if (static_cast<int>(h.size()) > d + 1)
    throw std::invalid_argument("h_to_f: h longer than d+1");
  FVector f;
  f.entries.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    BigInt total = 0;
    for (int j = 0; j < static_cast<int>(h.size()); ++j)
      total += h[j] * binomial(d - j, i - j);
    f.entries[i] = total.convert_to<std::int64_t>();
  }
  return f;
}

/// Stanley's numerical criterion: f is the f-vector of some Cohen-Macaulay
/// complex iff its h-transform is an O-sequence.
inline bool is_cm_f_vector(const FVector& f) {
  IntSeq h = f_to_h(f);
  for (std::int64_t v : h)
    if (v < 0) return false;
  return is_o_sequence(canonical(h));
}

/// Given two CM f-vectors differing in one slot, verifies that every
/// intermediate value gives a CM f-vector.  Returns the verified inclusive
/// interval of values at that slot.
inline std::pair<std::int64_t, std::int64_t> cm_interval_check(const FVector& f,
                                                               const FVector& g) {
  if (f.entries.size() != g.entries.size())
    throw std::invalid_argument("cm_interval_check: dimension mismatch");
  if (!is_cm_f_vector(f) || !is_cm_f_vector(g)) throw NotCM("cm_interval_check: inputs");
  int slot = -1;
  for (std::size_t i = 0; i < f.entries.size(); ++i)
    if (f.entries[i] != g.entries[i]) {
      if (slot >= 0) throw std::invalid_argument("cm_interval_check: more than one slot differs");
      slot = static_cast<int>(i);
    }
  if (slot < 0) return {f.entries[0], f.entries[0]};  // identical: trivially verified
  std::int64_t lo = std::min(f.entries[slot], g.entries[slot]);
  std::int64_t hi = std::max(f.entries[slot], g.entries[slot]);
  for (std::int64_t v = lo; v <= hi; ++v) {
    FVector mid = f;
    mid.entries[slot] = v;
    if (!is_cm_f_vector(mid)) throw NotCM("cm_interval_check: intermediate fails at " + std::to_string(v));
  }
  return {lo, hi};
}

/// f-vector of two e-element facets sharing h vertices:
/// f_i = 2 C(e, i+1) - C(h, i+1).
inline FVector pure_f_type2(int e, int h) {
  if (e < 1 || h < 0 || h > e - 1) throw std::invalid_argument("pure_f_type2: 0 <= h <= e-1");
  FVector f;
  for (int i = -1; i <= e - 1; ++i) {
    BigInt v = 2 * binomial(e, i + 1) - binomial(h, i + 1);
    f.entries.push_back(v.convert_to<std::int64_t>());
  }
  return f;
}

/// Squarefree realization of the same object: two degree-e monomials whose
/// supports overlap in h variables.
inline std::vector<Monomial> type2_facet_generators(int e, int h) {
  if (e < 1 || h < 0 || h > e - 1) throw std::invalid_argument("type2_facet_generators");
  const int n = 2 * e - h;
  std::vector<int> a(n, 0), b(n, 0);
  for (int i = 0; i < e; ++i) a[i] = 1;
  for (int i = e - h; i < 2 * e - h; ++i) b[i] = 1;
  return {Monomial(std::move(a)), Monomial(std::move(b))};
}

/// The full inequality string on a type-2 pure f-vector: the strict drops
/// f_{floor(e/2)-a-1} > f_{floor((e+1)/2)+a} interleaved with the flawless
/// inequalities, plus unimodality.
inline bool type2_inequality_check(const FVector& f) {
  const int e = static_cast<int>(f.entries.size()) - 1;
  auto fv = [&](int i) { return f.entries[i + 1]; };  // f_i, i from -1
  for (int a = 0; a <= e / 2 - 1; ++a) {
    int left = e / 2 - a - 1;
    int right = (e + 1) / 2 + a;
    if (left >= -1 && right <= e - 1 && !(fv(left) > fv(right))) return false;
    int hibi_left = e / 2 - a - 2;
    if (hibi_left >= -1 && right <= e - 1 && !(fv(right) >= fv(hibi_left))) return false;
  }
  // unimodality of (1, f_0, ..., f_{e-1})
  bool decreased = false;
  for (std::size_t i = 1; i < f.entries.size(); ++i) {
    if (f.entries[i] < f.entries[i - 1]) decreased = true;
    else if (decreased && f.entries[i] > f.entries[i - 1]) return false;
  }
  return true;
}

/// h-vector whose purity is equivalent to the existence of a projective
/// plane of order d: (1, q, q C(d+1,2), ..., q C(d+1,d+1)) with q = d^2+d+1.
inline IntSeq projective_plane_sequence(int d) {
  if (d < 2) throw std::invalid_argument("projective_plane_sequence: d >= 2");
  const std::int64_t q = static_cast<std::int64_t>(d) * d + d + 1;
  IntSeq h{1, q};
  for (int i = 2; i <= d + 1; ++i)
    h.push_back((q * binomial(d + 1, i)).convert_to<std::int64_t>());
  return h;
}

/// Lines of the projective plane over F_p (p prime), as squarefree monomials
/// of degree p+1 in p^2+p+1 point variables.  A purity witness for
/// projective_plane_sequence(p).
inline std::vector<Monomial> projective_plane_lines(int p) {
  if (p < 2) throw std::invalid_argument("projective_plane_lines: p >= 2");
  // points: nonzero triples over F_p up to scalar; canonical representative
  // has first nonzero coordinate 1
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < p && points.size() < 1000; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead != 1) continue;
        points.push_back({x, y, z});
      }
  const int q = static_cast<int>(points.size());
  // lines: same parameter space; incidence = orthogonality mod p
  std::vector<Monomial> lines;
  for (const auto& line : points) {
    std::vector<int> exps(q, 0);
    for (int i = 0; i < q; ++i) {
      int dot = line[0] * points[i][0] + line[1] * points[i][1] + line[2] * points[i][2];
      if (dot % p == 0) exps[i] = 1;
    }
    lines.push_back(Monomial(std::move(exps)));
  }
  return lines;
}

struct SteinerSequence {
  IntSeq h;                 // (1, r, C(r,2), C(r,2)/3) when integral
  bool integral = false;    // 3 divides C(r,2)
  bool admissible = false;  // r = 1 or 3 (mod 6): a triple system exists
};

/// Extremal socle-degree-3 sequence (1, r, C(r,2), C(r,2)/3); realizable by
/// a Steiner triple system exactly when r = 1,3 (mod 6).
inline SteinerSequence steiner_extremal(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("steiner_extremal: r >= 1");
  SteinerSequence out;
  const std::int64_t pairs = r * (r - 1) / 2;
  out.integral = pairs % 3 == 0;
  out.admissible = (r % 6 == 1 || r % 6 == 3);
  out.h = {1, r, pairs};
  if (out.integral) out.h.push_back(pairs / 3);
  return out;
}

/// The seven triples of the Fano plane; purity witness for (1,7,21,7).
inline std::vector<Monomial> fano_triples() {
  const int raw[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                         {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  std::vector<Monomial> gens;
  for (const auto& triple : raw) {
    std::vector<int> exps(7, 0);
    for (int v : triple) exps[v - 1] = 1;
    gens.push_back(Monomial(std::move(exps)));
  }
  return gens;
}

/// Facet-list files: one facet per line as "{1,2,4}"; shares the squarefree
/// encoding with the monomial loader.
inline std::vector<Monomial> parse_facets(std::istream& in) {
  std::vector<std::set<int>> facets;
  int max_vertex = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::set<int> facet;
    std::string token;
    for (char c : line) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token.push_back(c);
      } else {
        if (!token.empty()) facet.insert(std::stoi(token));
        token.clear();
      }
    }
    if (!token.empty()) facet.insert(std::stoi(token));
    if (facet.empty()) continue;
    if (*facet.begin() < 1) throw std::invalid_argument("parse_facets: vertices are 1-based");
    max_vertex = std::max(max_vertex, *facet.rbegin());
    facets.push_back(std::move(facet));
  }
  std::vector<Monomial> gens;
  for (const auto& facet : facets) {
    std::vector<int> exps(max_vertex, 0);
    for (int v : facet) exps[v - 1] = 1;
    gens.push_back(Monomial(std::move(exps)));
  }
  return gens;
}

}  // namespace puro
