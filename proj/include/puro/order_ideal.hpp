#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "puro/macaulay.hpp"
#include "puro/monomial.hpp"

namespace puro {

struct EmptyGenerators : std::runtime_error {
  EmptyGenerators() : std::runtime_error("closure: empty generator set") {}
};

/// Finite downward-closed set of monomials, stored degree by degree in
/// sorted order.  Immutable once built; the distinguished generators are the
/// maximal elements under divisibility.
class OrderIdeal {
 public:
  /// Downset of the given monomials.  Generators with mismatched ambient are
  /// rejected; the stored generator list is reduced to the divisibility
  /// antichain of maximal elements.
  static OrderIdeal closure(const std::vector<Monomial>& gens) {
    if (gens.empty()) throw EmptyGenerators();
    const int n = gens[0].ambient();
    int top = 0;
    for (const Monomial& g : gens) {
      if (g.ambient() != n) throw std::invalid_argument("closure: mixed ambients");
      top = std::max(top, g.degree());
    }

    OrderIdeal ideal;
    ideal.ambient_ = n;
    ideal.members_.assign(top + 1, {});
    std::vector<std::set<Monomial>> layers(top + 1);
    for (const Monomial& g : gens) layers[g.degree()].insert(g);
    for (int d = top; d >= 1; --d)
      for (const Monomial& m : layers[d])
        for (int i = 0; i < n; ++i)
          if (auto down = contract(m, i)) layers[d - 1].insert(*down);
    if (top >= 0 && layers[0].empty()) layers[0].insert(Monomial::unit(n));

    for (int d = 0; d <= top; ++d)
      ideal.members_[d].assign(layers[d].begin(), layers[d].end());

    // maximal elements: members none of whose variable bumps stay inside
    for (int d = 0; d <= top; ++d)
      for (const Monomial& m : ideal.members_[d]) {
        bool maximal = true;
        for (int i = 0; i < n && maximal; ++i) {
          std::vector<int> e(m.exps());
          ++e[i];
          if (ideal.contains(Monomial(std::move(e)))) maximal = false;
        }
        if (maximal) ideal.generators_.push_back(m);
      }
    return ideal;
  }

  int ambient() const { return ambient_; }
  int socle_degree() const { return static_cast<int>(members_.size()) - 1; }

  const std::vector<Monomial>& generators() const { return generators_; }

  const std::vector<Monomial>& members(int degree) const {
    static const std::vector<Monomial> kEmpty;
    if (degree < 0 || degree >= static_cast<int>(members_.size())) return kEmpty;
    return members_[degree];
  }

  bool contains(const Monomial& m) const {
    if (m.ambient() != ambient_) return false;
    int d = m.degree();
    if (d >= static_cast<int>(members_.size())) return false;
    return std::binary_search(members_[d].begin(), members_[d].end(), m);
  }

  /// All generators share one degree.
  bool pure() const {
    for (const Monomial& g : generators_)
      if (g.degree() != generators_.front().degree()) return false;
    return true;
  }

  /// Count of maximal elements.
  int type() const { return static_cast<int>(generators_.size()); }

  IntSeq h_vector() const {
    IntSeq h(members_.size());
    for (std::size_t d = 0; d < members_.size(); ++d)
      h[d] = static_cast<std::int64_t>(members_[d].size());
    return h;
  }

  std::int64_t total_members() const {
    std::int64_t total = 0;
    for (const auto& layer : members_) total += static_cast<std::int64_t>(layer.size());
    return total;
  }

  /// Number of variables appearing in some member.
  int codimension() const {
    std::vector<char> used(ambient_, 0);
    for (const Monomial& g : generators_)
      for (int i = 0; i < ambient_; ++i)
        if (g.exp(i) > 0) used[i] = 1;
    return static_cast<int>(std::count(used.begin(), used.end(), 1));
  }

 private:
  int ambient_ = 0;
  std::vector<Monomial> generators_;
  std::vector<std::vector<Monomial>> members_;
};

/// All pairwise products with the two factors placed on disjoint variable
/// blocks; the downset h-vector of the result is the convolution of the two
/// factor h-vectors.
inline std::vector<Monomial> tensor_generators(const std::vector<Monomial>& a,
                                               const std::vector<Monomial>& b) {
  if (a.empty() || b.empty()) throw EmptyGenerators();
  const int na = a[0].ambient();
  const int nb = b[0].ambient();
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const Monomial& ma : a)
    for (const Monomial& mb : b)
      out.push_back(ma.widened(na + nb) * mb.shifted(na + nb, na));
  return out;
}

/// Set union of generators in a common ambient.
inline std::vector<Monomial> union_generators(const std::vector<Monomial>& a,
                                              const std::vector<Monomial>& b) {
  std::set<Monomial> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return std::vector<Monomial>(s.begin(), s.end());
}

/// Generator files: one monomial per line ("x1^2*x3" or "[2,0,1]"),
/// '#' starts a comment, blank lines ignored.  All monomials are widened to
/// the largest ambient seen.
inline std::vector<Monomial> load_generators(std::istream& in) {
  std::vector<Monomial> gens;
  std::string line;
  int ambient = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    Monomial m = parse_monomial(line);
    ambient = std::max(ambient, m.ambient());
    gens.push_back(std::move(m));
  }
  for (Monomial& m : gens) m = m.widened(ambient);
  return gens;
}

inline void save_generators(std::ostream& out, const std::vector<Monomial>& gens,
                            bool bracket_form = true) {
  for (const Monomial& g : gens)
    out << (bracket_form ? format_monomial_bracket(g) : format_monomial(g)) << "\n";
}

}  // namespace puro
