#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "puro/intmatrix.hpp"
#include "puro/macaulay.hpp"
#include "puro/order_ideal.hpp"
#include "puro/random.hpp"
#include "puro/sequence_analysis.hpp"

// Monomial Artinian algebras presented by inverse systems: per-degree
// quotient bases, multiplication-by-linear-form matrices, WLP/SLP rank
// reports over any characteristic, complete-intersection Hilbert functions,
// basic double links, the type-2 formulas, and the named families of
// algebras failing the WLP or SLP.

namespace puro {

struct MixedDegrees : std::runtime_error {
  MixedDegrees() : std::runtime_error("from_inverse_system: generators of mixed degrees") {}
};

struct NotArtinian : std::runtime_error {
  NotArtinian() : std::runtime_error("from_monomial_ideal: ideal is not Artinian") {}
};

struct DegreeOutOfRange : std::runtime_error {
  DegreeOutOfRange() : std::runtime_error("mult_matrix: degree window outside the algebra") {}
};

/// A monomial Artinian algebra R/I carried by the downset dual to I: the
/// monomials of each degree not in I form the quotient basis.  Built either
/// from inverse-system generators (level by construction) or from the
/// generators of an Artinian monomial ideal.
class LevelAlgebra {
 public:
  static LevelAlgebra from_inverse_system(const std::vector<Monomial>& gens) {
    if (gens.empty()) throw EmptyGenerators();
    for (const Monomial& g : gens)
      if (g.degree() != gens[0].degree()) throw MixedDegrees();
    return LevelAlgebra(OrderIdeal::closure(gens));
  }

  /// Complement of an Artinian monomial ideal.  The ideal must contain a
  /// power of every variable, otherwise the quotient is infinite.
  static LevelAlgebra from_monomial_ideal(const std::vector<Monomial>& igens) {
    if (igens.empty()) throw std::invalid_argument("from_monomial_ideal: no generators");
    const int n = igens[0].ambient();
    std::vector<int> cap(n, -1);
    int degree_sum = 0;
    for (const Monomial& g : igens) {
      if (g.ambient() != n) throw std::invalid_argument("from_monomial_ideal: mixed ambients");
      int support = 0, var = -1;
      for (int i = 0; i < n; ++i)
        if (g.exp(i) > 0) { ++support; var = i; }
      if (support == 1 && (cap[var] < 0 || g.exp(var) < cap[var])) cap[var] = g.exp(var);
    }
    for (int i = 0; i < n; ++i) {
      if (cap[i] < 0) throw NotArtinian();
      degree_sum += cap[i] - 1;
    }

    auto in_ideal = [&](const Monomial& m) {
      for (const Monomial& g : igens)
        if (g.divides(m)) return true;
      return false;
    };

    // enumerate the complement degree by degree inside the variable box
    std::vector<Monomial> survivors;
    std::vector<Monomial> layer{Monomial::unit(n)};
    for (int d = 0; d <= degree_sum && !layer.empty(); ++d) {
      std::set<Monomial> next;
      for (const Monomial& m : layer) {
        survivors.push_back(m);
        for (int i = 0; i < n; ++i) {
          if (m.exp(i) + 1 >= cap[i] + 1) continue;  // beyond the pure-power cap
          std::vector<int> e(m.exps());
          ++e[i];
          Monomial up(std::move(e));
          if (!in_ideal(up)) next.insert(up);
        }
      }
      layer.assign(next.begin(), next.end());
    }
    if (!layer.empty()) throw NotArtinian();

    // the downset of the maximal survivors is the full complement
    std::vector<Monomial> maximal;
    std::set<Monomial> all(survivors.begin(), survivors.end());
    for (const Monomial& m : survivors) {
      bool is_max = true;
      for (int i = 0; i < n && is_max; ++i) {
        std::vector<int> e(m.exps());
        ++e[i];
        if (all.count(Monomial(std::move(e)))) is_max = false;
      }
      if (is_max) maximal.push_back(m);
    }
    return LevelAlgebra(OrderIdeal::closure(maximal));
  }

  const OrderIdeal& inverse_system() const { return downset_; }
  int ambient() const { return downset_.ambient(); }
  int socle_degree() const { return downset_.socle_degree(); }
  int type() const { return downset_.type(); }
  bool level() const { return downset_.pure(); }
  IntSeq hilbert() const { return downset_.h_vector(); }

  const std::vector<Monomial>& quotient_basis(int degree) const {
    return downset_.members(degree);
  }

 private:
  explicit LevelAlgebra(OrderIdeal downset) : downset_(std::move(downset)) {}
  OrderIdeal downset_;
};

namespace detail {
inline BigInt multinomial(const std::vector<int>& alpha) {
  int total = 0;
  BigInt result = 1;
  for (int a : alpha) {
    total += a;
    result *= binomial(total, a);
  }
  return result;
}
}  // namespace detail

/// Matrix of multiplication by (x_1 + ... + x_n)^s from the degree-d basis
/// to the degree-(d+s) basis.  Entries are the multinomial coefficients of
/// the exponent gaps, restricted to products that stay in the downset.
inline IntMat mult_matrix(const LevelAlgebra& algebra, int s, int d) {
  if (s < 1 || d < 0 || d + s > algebra.socle_degree()) throw DegreeOutOfRange();
  const auto& source = algebra.quotient_basis(d);
  const auto& target = algebra.quotient_basis(d + s);
  IntMat m(static_cast<int>(target.size()), static_cast<int>(source.size()));
  const int n = algebra.ambient();
  for (int col = 0; col < static_cast<int>(source.size()); ++col) {
    const Monomial& from = source[col];
    for (int row = 0; row < static_cast<int>(target.size()); ++row) {
      const Monomial& to = target[row];
      if (!from.divides(to)) continue;
      std::vector<int> gap(n);
      for (int i = 0; i < n; ++i) gap[i] = to.exp(i) - from.exp(i);
      m.at(row, col) = detail::multinomial(gap);
    }
  }
  return m;
}

struct RankEntry {
  int degree = 0;           // source degree d of x L^s : A_d -> A_{d+s}
  std::int64_t rank = 0;
  std::int64_t target = 0;  // min(h_d, h_{d+s})
};

enum class FailureMode { None, InjectivityFailure, SurjectivityFailure };

struct WlpReport {
  IntSeq hilbert;
  int power = 1;  // s
  std::vector<RankEntry> ranks;
  bool maximal_rank_char0 = true;            // every map has maximal rank over Q
  std::optional<int> first_failure_degree;   // in characteristic zero
  FailureMode mode = FailureMode::None;
  bool fails_all_characteristics = false;    // already deficient over Q
  std::vector<std::uint64_t> failing_primes; // primes where some rank drops below target
};

namespace detail {
inline std::vector<std::uint64_t> prime_factors(BigInt v) {
  std::vector<std::uint64_t> primes;
  if (v < 0) v = -v;
  for (std::uint64_t p = 2; BigInt(p) * p <= v; ++p)
    if (v % p == 0) {
      primes.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) primes.push_back(v.convert_to<std::uint64_t>());
  return primes;
}
}  // namespace detail

/// Rank profile of multiplication by L^s across all degrees, with the exact
/// set of positive characteristics where maximal rank is lost.  Candidate
/// primes are read off the elementary divisors of the maps that are full
/// rank over Q, then each candidate is confirmed by elimination mod p.
inline WlpReport rank_report(const LevelAlgebra& algebra, int s) {
  WlpReport report;
  report.hilbert = algebra.hilbert();
  report.power = s;
  const int e = algebra.socle_degree();

  std::set<std::uint64_t> candidates;
  std::vector<IntMat> maps;
  for (int d = 0; d + s <= e; ++d) {
    IntMat m = mult_matrix(algebra, s, d);
    RankEntry entry;
    entry.degree = d;
    entry.target = std::min<std::int64_t>(report.hilbert[d], report.hilbert[d + s]);
    entry.rank = rank_rational(m);
    if (entry.rank < entry.target && !report.first_failure_degree) {
      report.maximal_rank_char0 = false;
      report.first_failure_degree = d;
      report.mode = report.hilbert[d] <= report.hilbert[d + s]
                        ? FailureMode::InjectivityFailure
                        : FailureMode::SurjectivityFailure;
    }
    report.ranks.push_back(entry);
    maps.push_back(std::move(m));
  }

  if (!report.maximal_rank_char0) {
    report.fails_all_characteristics = true;  // rank over F_p never exceeds rank over Q
    return report;
  }

  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (report.ranks[i].target == 0) continue;
    auto divisors = elementary_divisors(maps[i]);
    if (!divisors.empty())
      for (std::uint64_t p : detail::prime_factors(divisors.back())) candidates.insert(p);
  }
  for (std::uint64_t p : candidates) {
    bool fails = false;
    for (std::size_t i = 0; i < maps.size() && !fails; ++i)
      if (rank_mod_p(maps[i], p) < report.ranks[i].target) fails = true;
    if (fails) report.failing_primes.push_back(p);
  }
  return report;
}

inline WlpReport wlp_report(const LevelAlgebra& algebra) { return rank_report(algebra, 1); }

/// One report per power s = 1..e.
inline std::vector<WlpReport> slp_report(const LevelAlgebra& algebra) {
  std::vector<WlpReport> reports;
  for (int s = 1; s <= algebra.socle_degree(); ++s)
    reports.push_back(rank_report(algebra, s));
  return reports;
}

/// Hilbert function of the Artinian monomial complete intersection with the
/// given generator degrees: coefficients of prod_i (1 + t + ... + t^(a_i-1)).
inline IntSeq ci_hilbert(const std::vector<std::int64_t>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("ci_hilbert: no degrees");
  IntSeq h{1};
  for (std::int64_t a : degrees) {
    if (a < 1) throw std::invalid_argument("ci_hilbert: degrees are positive");
    IntSeq next(h.size() + a - 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::int64_t j = 0; j < a; ++j) next[i + j] += h[i];
    h = std::move(next);
  }
  return canonical(h);
}

/// Eventually-constant or eventually-zero Hilbert function table.
struct HilbertTable {
  enum class Tail { Zero, Constant, Unknown };
  IntSeq values;
  Tail tail = Tail::Zero;

  static HilbertTable artinian(IntSeq h) { return {std::move(h), Tail::Zero}; }
  static HilbertTable depth_one(IntSeq h) { return {std::move(h), Tail::Constant}; }

  std::int64_t operator()(std::int64_t j) const {
    if (j < 0) return 0;
    if (j < static_cast<std::int64_t>(values.size())) return values[j];
    switch (tail) {
      case Tail::Zero: return 0;
      case Tail::Constant: return values.empty() ? 0 : values.back();
      default: throw std::out_of_range("HilbertTable: value requested beyond the table");
    }
  }
};

struct InsufficientTable : std::runtime_error {
  InsufficientTable() : std::runtime_error("basic_double_link_hf: table does not cover the needed degrees") {}
};

/// h(j) = hI(j - d) + hJ(j) - hJ(j - d), the Hilbert function of a basic
/// double link f*I + J with deg f = d.
inline IntSeq basic_double_link_hf(const HilbertTable& hI, const HilbertTable& hJ, int d,
                                   std::int64_t length) {
  if (d < 0) throw std::invalid_argument("basic_double_link_hf: negative shift");
  IntSeq out(length, 0);
  try {
    for (std::int64_t j = 0; j < length; ++j) out[j] = hI(j - d) + hJ(j) - hJ(j - d);
  } catch (const std::out_of_range&) {
    throw InsufficientTable();
  }
  return out;
}

struct DegreeMismatch : std::runtime_error {
  DegreeMismatch() : std::runtime_error("type2_hilbert: generators of different degrees") {}
};

/// Hilbert function of the type-2 algebra dual to {x^a, x^b}: the two
/// complete-intersection terms minus the one of the componentwise minimum.
inline IntSeq type2_hilbert(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("type2_hilbert: ambient mismatch");
  if (a.degree() != b.degree()) throw DegreeMismatch();
  auto plus_one = [](const Monomial& m) {
    std::vector<std::int64_t> degs;
    for (int i = 0; i < m.ambient(); ++i) degs.push_back(m.exp(i) + 1);
    return degs;
  };
  std::vector<int> c(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) c[i] = std::min(a.exp(i), b.exp(i));
  IntSeq ha = ci_hilbert(plus_one(a));
  IntSeq hb = ci_hilbert(plus_one(b));
  IntSeq hc = ci_hilbert(plus_one(Monomial(std::move(c))));
  IntSeq out(std::max(ha.size(), hb.size()), 0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    auto get = [&](const IntSeq& h) {
      return j < h.size() ? h[j] : 0;
    };
    out[j] = get(ha) + get(hb) - get(hc);
  }
  return canonical(out);
}

/// Structure classification of type-2 level monomial ideals in 3 variables.
/// Case A: the two dual monomials agree in one exponent; 4 generators
/// (x^a, y^b, z^c, y^beta z^gamma) with b - beta = c - gamma (variables
/// permuted so the shared exponent sits on x).  Case B: all exponents
/// differ; 5 generators (x^a, y^b, z^c, x^alpha y^beta, x^alpha z^gamma)
/// with a - alpha = (b - beta) + (c - gamma).
struct Type2Class {
  enum class Kind { Type1, A, B } kind = Kind::Type1;
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t alpha = 0, beta = 0, gamma = 0;
  std::vector<int> permutation;  // applied to the input variables
};

inline Type2Class classify_type2_3vars(const Monomial& first, const Monomial& second) {
  if (first.ambient() != 3 || second.ambient() != 3)
    throw std::invalid_argument("classify_type2_3vars: ambient must be 3");
  if (first.degree() != second.degree()) throw DegreeMismatch();
  Type2Class out;
  if (first == second) return out;

  std::vector<int> equal_positions;
  for (int i = 0; i < 3; ++i)
    if (first.exp(i) == second.exp(i)) equal_positions.push_back(i);

  if (!equal_positions.empty()) {
    // Case A: shared exponent goes to x; orient so the y-exponent grows
    int x = equal_positions[0];
    int y = (x + 1) % 3, z = (x + 2) % 3;
    if (first.exp(y) > second.exp(y)) std::swap(y, z);
    out.kind = Type2Class::Kind::A;
    out.permutation = {x, y, z};
    out.a = first.exp(x) + 1;
    out.b = second.exp(y) + 1;
    out.c = first.exp(z) + 1;
    out.beta = first.exp(y) + 1;
    out.gamma = second.exp(z) + 1;
    return out;
  }

  // Case B: orient so `lo` dominates in y and z and sits below in x
  const Monomial* lo = &first;
  const Monomial* hi = &second;
  int below = 0;
  for (int i = 0; i < 3; ++i)
    if (first.exp(i) < second.exp(i)) ++below;
  if (below == 2) std::swap(lo, hi);
  int x = -1;
  for (int i = 0; i < 3; ++i)
    if (lo->exp(i) < hi->exp(i)) x = i;
  int y = (x + 1) % 3, z = (x + 2) % 3;
  out.kind = Type2Class::Kind::B;
  out.permutation = {x, y, z};
  out.a = hi->exp(x) + 1;
  out.b = lo->exp(y) + 1;
  out.c = lo->exp(z) + 1;
  out.alpha = lo->exp(x) + 1;
  out.beta = hi->exp(y) + 1;
  out.gamma = hi->exp(z) + 1;
  return out;
}

// ---------------------------------------------------------------------------
// Families failing the WLP / SLP
// ---------------------------------------------------------------------------

struct ParameterOutOfRange : std::runtime_error {
  explicit ParameterOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Type 2 in r >= 4 variables; surjectivity fails from degree r to r+1.
/// Dual to {x1 x2^2...x_{r-1}^2 x_r^3, x1^3 x2^2...x_{r-1}^2 x_r}.
inline LevelAlgebra surjectivity_failure_family(int r) {
  if (r < 4) throw ParameterOutOfRange("surjectivity family: r >= 4");
  std::vector<int> m1(r, 2), m2(r, 2);
  m1[0] = 1; m1[r - 1] = 3;
  m2[0] = 3; m2[r - 1] = 1;
  return LevelAlgebra::from_inverse_system({Monomial(std::move(m1)), Monomial(std::move(m2))});
}

/// Type 2 in even r >= 4 with N >= 5; injectivity fails from degree
/// r(N-2)/2 to the next.  Dual to {x1^{N-3} x2^{N-1} rest^{N-2},
/// x1^{N-1} x2^{N-3} rest^{N-2}}.
inline LevelAlgebra injectivity_failure_family(int r, int N) {
  if (r < 4 || r % 2 != 0) throw ParameterOutOfRange("injectivity family: r even, >= 4");
  if (N < 5) throw ParameterOutOfRange("injectivity family: N >= 5");
  std::vector<int> m1(r, N - 2), m2(r, N - 2);
  m1[0] = N - 3; m1[1] = N - 1;
  m2[0] = N - 1; m2[1] = N - 3;
  return LevelAlgebra::from_inverse_system({Monomial(std::move(m1)), Monomial(std::move(m2))});
}

/// Type d >= 3 in 3 variables failing the WLP.  d = 3 is the almost complete
/// intersection (x^3, y^3, z^3, xyz); d = 4 a fixed 7-generator ideal; for
/// d >= 5 a basic double link of (x^{2n+1}, y^{2n+1}, z^{2n+1}, xyz)
/// truncated in degree 4n+1, with the codimension-2 part chosen so the
/// socle picks up d-3 extra generators.
inline LevelAlgebra type_d_3vars_failure(int d) {
  if (d < 3) throw ParameterOutOfRange("type_d_3vars_failure: d >= 3");
  auto mono = [](int a, int b, int c) { return Monomial({a, b, c}); };
  if (d == 3)
    return LevelAlgebra::from_monomial_ideal({mono(3, 0, 0), mono(0, 3, 0), mono(0, 0, 3), mono(1, 1, 1)});
  if (d == 4)
    return LevelAlgebra::from_monomial_ideal({mono(0, 0, 2), mono(0, 3, 1), mono(3, 0, 1),
                                              mono(5, 0, 0), mono(3, 2, 0), mono(0, 5, 0),
                                              mono(2, 4, 0)});
  for (int n = 1;; ++n) {
    if (4 * n + 5 < d) continue;
    // CI(a,b) h-vector value at 4n+1 must be d-3, non-decreasing at 2n+1
    for (int a = 2 * n + 1; a <= 4 * n + 2; ++a) {
      for (int b = a; b <= 8 * n + 6; ++b) {
        IntSeq h = ci_hilbert({a, b});
        auto at = [&](int j) { return j < static_cast<int>(h.size()) ? h[j] : 0; };
        if (at(4 * n + 1) != d - 3) continue;
        if (at(2 * n + 1) > at(2 * n + 2)) continue;
        std::vector<Monomial> ideal;
        // x * (x^{1+2n}, y^{1+2n}, z^{1+2n}, xyz)
        ideal.push_back(mono(2 + 2 * n, 0, 0));
        ideal.push_back(mono(1, 1 + 2 * n, 0));
        ideal.push_back(mono(1, 0, 1 + 2 * n));
        ideal.push_back(mono(2, 1, 1));
        ideal.push_back(mono(0, a, 0));
        ideal.push_back(mono(0, 0, b));
        // truncation in degree 4n+1
        for (int i = 0; i <= 4 * n + 2; ++i)
          for (int j = 0; i + j <= 4 * n + 2; ++j)
            ideal.push_back(mono(i, j, 4 * n + 2 - i - j));
        return LevelAlgebra::from_monomial_ideal(ideal);
      }
    }
  }
}

/// Socle-degree-6 type 2 in 4 variables failing the WLP, with Hilbert
/// function (1,4,10,16,15,8,2).  Dual to {x1^2 x2^2 x3 x4, x1 x2 x3^2 x4^2}.
inline LevelAlgebra type2_min_4vars() {
  return LevelAlgebra::from_inverse_system({Monomial({2, 2, 1, 1}), Monomial({1, 1, 2, 2})});
}

/// Type 3 in 4 variables, Hilbert (1,4,10,18,25,26,20,10,3); injectivity
/// fails from degree 4 to 5.
inline LevelAlgebra type3_4vars() {
  return LevelAlgebra::from_inverse_system(
      {Monomial({1, 2, 2, 3}), Monomial({3, 2, 2, 1}), Monomial({2, 2, 2, 2})});
}

/// Adds a pure power of a fresh variable to the inverse system: type grows
/// by one, codimension by one, socle degree unchanged, and WLP failure is
/// preserved degree by degree.
inline LevelAlgebra lift_failure(const LevelAlgebra& algebra) {
  const int n = algebra.ambient();
  std::vector<Monomial> gens;
  for (const Monomial& g : algebra.inverse_system().generators()) gens.push_back(g.widened(n + 1));
  gens.push_back(Monomial::power(n + 1, n, algebra.socle_degree()));
  return LevelAlgebra::from_inverse_system(gens);
}

/// The SLP counterexample of type 2 in 3 variables: ideal
/// (x^7, y^4, z^4, x^3 y^2, x^3 z^2), Hilbert (1,3,6,10,13,13,10,6,2);
/// multiplication by L^3 from degree 3 to 6 drops rank.
inline LevelAlgebra slp_counterexample_3vars() {
  return LevelAlgebra::from_monomial_ideal({Monomial({7, 0, 0}), Monomial({0, 4, 0}),
                                            Monomial({0, 0, 4}), Monomial({3, 2, 0}),
                                            Monomial({3, 0, 2})});
}

/// The characteristic showcase: I = (x^10, y^7, z^7, x^4 y^3, x^4 z^5),
/// level of type 2, WLP over F_p failing exactly at p in {2,5,7}.
inline LevelAlgebra characteristic_example() {
  return LevelAlgebra::from_monomial_ideal({Monomial({10, 0, 0}), Monomial({0, 7, 0}),
                                            Monomial({0, 0, 7}), Monomial({4, 3, 0}),
                                            Monomial({4, 0, 5})});
}

// ---------------------------------------------------------------------------
// Linkage determinant for surjectivity checks in 3 variables
// ---------------------------------------------------------------------------

namespace detail {
// dense bivariate polynomial of one degree: coefficient of x^i y^(deg-i)
using BivarLayer = std::vector<BigInt>;

inline BivarLayer substitute_z(const Monomial& g) {
  // x^a y^b z^c with z -> x + y, as a degree-(a+b+c) layer
  const int a = g.exp(0), b = g.exp(1), c = g.exp(2);
  BivarLayer layer(g.degree() + 1, 0);
  for (int k = 0; k <= c; ++k) layer[a + c - k] += binomial(c, k);  // x^(a+c-k) y^(b+k)
  return layer;
}
}  // namespace detail

/// Restriction of an Artinian monomial ideal in 3 variables modulo the
/// linear form: conditions for a degree-`check` form F of k[x,y] to lie in
/// (x^p, y^q) : J, where J is generated by the z -> x+y images of `igens`
/// and (x^p, y^q) are its pure-power members.  Returns the square matrix of
/// the resulting linear system; the primes dividing its determinant are the
/// characteristics where the original surjectivity check degenerates.
inline IntMat linkage_membership_matrix(const std::vector<Monomial>& igens, int check_degree) {
  int p = -1, q = -1;
  std::vector<Monomial> rest;
  for (const Monomial& g : igens) {
    if (g.exp(0) == g.degree() && g.exp(0) > 0 && (p < 0 || g.degree() < p)) p = g.degree();
    else if (g.exp(1) == g.degree() && g.exp(1) > 0 && (q < 0 || g.degree() < q)) q = g.degree();
    else rest.push_back(g);
  }
  if (p < 0 || q < 0)
    throw std::invalid_argument("linkage_membership_matrix: needs pure powers of x and y");

  // F = sum a_j x^(check-j) y^j; F*g reduced modulo (x^p, y^q) must vanish
  std::vector<std::vector<BigInt>> equations;
  for (const Monomial& g : rest) {
    detail::BivarLayer gl = detail::substitute_z(g);
    const int product_degree = check_degree + g.degree();
    // surviving monomials x^(product_degree - t) y^t with exponents below both caps
    for (int t = 0; t <= product_degree; ++t) {
      if (product_degree - t >= p || t >= q) continue;
      std::vector<BigInt> row(check_degree + 1, 0);
      bool nonzero = false;
      for (int j = 0; j <= check_degree; ++j) {
        // x^(check-j) y^j * x^(gdeg - s) y^s contributes when j + s = t
        int s = t - j;
        if (s < 0 || s > g.degree()) continue;
        const BigInt& coeff = gl[g.degree() - s];
        if (coeff != 0) nonzero = true;
        row[j] = coeff;
      }
      if (nonzero) equations.push_back(std::move(row));
    }
  }
  IntMat m(static_cast<int>(equations.size()), check_degree + 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = equations[r][c];
  return m;
}

// ---------------------------------------------------------------------------
// The WLP/SLP classification grid
// ---------------------------------------------------------------------------

struct AnswerndEvidence {
  int r = 0, d = 0;
  bool wlp_always = false;          // (r,d) lies in the always-WLP region
  bool slp_always = false;
  int samples_checked = 0;          // random instances verified when in-region
  std::optional<IntSeq> witness_hilbert;   // Hilbert function of a failing witness
  std::optional<WlpReport> witness_report;
  std::vector<Monomial> witness_inverse_system;
};

inline bool wlp_region(int r, int d) { return r <= 2 || d == 1 || (r == 3 && d == 2); }
inline bool slp_region(int r, int d) { return r <= 2 || d == 1; }

/// A concrete monomial level algebra in r variables of type d failing the
/// WLP; only defined outside the always-WLP region.
inline LevelAlgebra wlp_failure_witness(int r, int d) {
  if (wlp_region(r, d)) throw ParameterOutOfRange("wlp_failure_witness: region always has WLP");
  if (r == 3) return type_d_3vars_failure(d);
  if (d == 2) {
    if (r == 4) return type2_min_4vars();
    return surjectivity_failure_family(r);
  }
  if (r == 4 && d == 3) return type3_4vars();
  return lift_failure(wlp_failure_witness(r - 1, d - 1));
}

/// Checks the classification at one grid point: random sampling inside the
/// always-WLP region, a verified failing witness outside.
inline AnswerndEvidence answernd_check(int r, int d, int samples, std::uint64_t seed,
                                       int max_exponent = 6) {
  if (r < 1 || d < 1) throw ParameterOutOfRange("answernd_check: r,d >= 1");
  AnswerndEvidence ev;
  ev.r = r;
  ev.d = d;
  ev.wlp_always = wlp_region(r, d);
  ev.slp_always = slp_region(r, d);

  if (ev.wlp_always) {
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
      int degree = static_cast<int>(rng.between(2, std::max(2, max_exponent)));
      auto gens = random_degree_monomials(rng, r, degree, d);
      if (static_cast<int>(gens.size()) < d) continue;
      LevelAlgebra algebra = LevelAlgebra::from_inverse_system(gens);
      WlpReport report = wlp_report(algebra);
      if (!report.maximal_rank_char0)
        throw std::runtime_error("answernd_check: unexpected WLP failure inside the region");
      ++ev.samples_checked;
    }
    return ev;
  }

  LevelAlgebra witness = wlp_failure_witness(r, d);
  ev.witness_hilbert = witness.hilbert();
  ev.witness_report = wlp_report(witness);
  ev.witness_inverse_system = witness.inverse_system().generators();
  if (ev.witness_report->maximal_rank_char0)
    throw std::runtime_error("answernd_check: witness unexpectedly has the WLP");
  return ev;
}

}  // namespace puro
