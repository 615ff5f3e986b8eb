#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "puro/monomial.hpp"

// Seed-deterministic randomness for the sampled suites.  The generator and
// the bounded-draw routine are pinned here so identical seeds give identical
// streams on every platform.

namespace puro {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  // splitmix64
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// A random monomial of the given degree.
inline Monomial random_monomial(Rng& rng, int ambient, int degree) {
  std::vector<int> exps(ambient, 0);
  for (int i = 0; i < degree; ++i) ++exps[rng.below(ambient)];
  return Monomial(std::move(exps));
}

/// `count` distinct random monomials of one degree; fewer when the degree
/// layer is too small to supply them.
inline std::vector<Monomial> random_degree_monomials(Rng& rng, int ambient, int degree,
                                                     int count) {
  std::set<Monomial> out;
  for (int attempt = 0; attempt < 64 * count && static_cast<int>(out.size()) < count; ++attempt)
    out.insert(random_monomial(rng, ambient, degree));
  return {out.begin(), out.end()};
}

}  // namespace puro
