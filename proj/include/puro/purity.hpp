#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "puro/level_algebra.hpp"
#include "puro/macaulay.hpp"
#include "puro/order_ideal.hpp"
#include "puro/sequence_analysis.hpp"

// The membership problem "is this sequence the h-vector of a pure order
// ideal?", answered by backtracking over canonical generator sets, plus the
// enumeration, scanning and construction machinery built on top of it.
//
// The searcher enumerates labeled representatives with variables introduced
// in index order: each generator's fresh variables form a contiguous block
// with non-increasing exponents, and generators descend in the evolving
// labeling.  Every generator set has at least one such representative, so
// exhausted searches are genuine refutations.

namespace puro {

struct MalformedSequence : std::runtime_error {
  explicit MalformedSequence(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;
  double max_seconds = 60.0;
  int max_ambient_vars = 64;
};

enum class Purity { Pure, NotPure, Unknown };

inline const char* to_string(Purity p) {
  switch (p) {
    case Purity::Pure: return "pure";
    case Purity::NotPure: return "not-pure";
    default: return "unknown";
  }
}

struct PurityVerdict {
  Purity status = Purity::Unknown;
  std::optional<std::vector<Monomial>> witness;  // present iff Pure
  std::uint64_t nodes_explored = 0;
  bool budget_hit = false;
};

struct SearchOptions {
  bool use_fast_paths = true;        // closed forms and constructive shortcuts
  bool use_symmetry = true;          // canonical-representative generation
  bool use_admissible_bounds = true; // remaining-supply pruning
  std::string checkpoint_path;       // empty: no checkpointing
  std::uint64_t checkpoint_interval = 1'000'000;  // nodes between snapshots
  std::uint64_t resume_nodes = 0;    // filled in by checkpoint loading
};

namespace detail {

inline void validate_candidate(const IntSeq& h) {
  if (h.empty() || h[0] != 1)
    throw MalformedSequence("purity: sequence must start with h0 = 1");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0) throw MalformedSequence("purity: negative entry");
  }
  IntSeq c = canonical(h);
  for (std::int64_t v : c)
    if (v == 0) throw MalformedSequence("purity: zero entry before the socle degree");
}

/// All degree-e monomials in n variables, lex-descending on exponents.
inline std::vector<Monomial> degree_pool(int n, int e) {
  std::vector<Monomial> pool;
  std::vector<int> exps(n, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      exps[var] = left;
      pool.push_back(Monomial(exps));
      exps[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      exps[var] = k;
      rec(var + 1, left - k);
    }
    exps[var] = 0;
  };
  if (n == 0) {
    if (e == 0) pool.push_back(Monomial(std::vector<int>{}));
    return pool;
  }
  rec(0, e);
  return pool;
}

struct MonomialKey {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t hash = 1469598103934665603ull;
    for (int x : v) {
      hash ^= static_cast<std::size_t>(x) + 0x9e3779b9;
      hash *= 1099511628211ull;
    }
    return hash;
  }
};

/// Incremental downset state with per-generator undo.
class DownsetTracker {
 public:
  DownsetTracker(int n, int e) : n_(n), counts_(e + 1, 0) {}

  const IntSeq& counts() const { return counts_; }

  /// Adds the downset of `g`; returns the number of new members and pushes
  /// them onto the undo log.  Aborts early (and undoes) only by the caller's
  /// explicit pop.
  int add_generator(const Monomial& g) {
    int added = 0;
    std::vector<std::vector<int>> stack{g.exps()};
    while (!stack.empty()) {
      std::vector<int> m = std::move(stack.back());
      stack.pop_back();
      if (members_.count(m)) continue;
      int degree = 0;
      for (int x : m) degree += x;
      members_.insert(m);
      undo_.push_back(m);
      ++counts_[degree];
      ++added;
      for (int i = 0; i < n_; ++i)
        if (m[i] > 0) {
          std::vector<int> down(m);
          --down[i];
          if (!members_.count(down)) stack.push_back(std::move(down));
        }
    }
    return added;
  }

  std::size_t mark() const { return undo_.size(); }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      const std::vector<int>& m = undo_.back();
      int degree = 0;
      for (int x : m) degree += x;
      --counts_[degree];
      members_.erase(m);
      undo_.pop_back();
    }
  }

 private:
  int n_;
  IntSeq counts_;
  std::unordered_set<std::vector<int>, MonomialKey> members_;
  std::vector<std::vector<int>> undo_;
};

struct Deadline {
  std::chrono::steady_clock::time_point until;
  bool expired() const { return std::chrono::steady_clock::now() > until; }
};

/// Core backtracking over generator sets.
///
/// target == nullptr: enumerate all sets of exactly `size` generators whose
/// downset uses all n variables, invoking `sink` with each full h-vector.
/// target != nullptr: stop at the first set whose downset counts equal
/// *target exactly and report it.
class GeneratorSearch {
 public:
  GeneratorSearch(int n, int e, std::int64_t size, const IntSeq* target,
                  const SearchBudget& budget, const SearchOptions& opts)
      : n_(n), e_(e), size_(size), target_(target), budget_(budget), opts_(opts),
        pool_(degree_pool(n, e)), tracker_(n, e),
        deadline_{std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.max_seconds))} {
    max_gain_.assign(e_ + 1, 0);
    for (int d = 0; d <= e_; ++d) max_gain_[d] = binomial(e_, d).convert_to<std::int64_t>();
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }
  const std::vector<int>& chosen() const { return chosen_; }

  const std::vector<Monomial>& pool() const { return pool_; }

  /// Runs to completion, first witness, or budget.  Returns true when the
  /// whole tree was covered.
  bool run(const std::function<bool(const std::vector<Monomial>&, const IntSeq&)>& sink) {
    struct Frame {
      int next;               // next pool index to try at this slot
      std::size_t undo_mark;  // tracker mark before this slot's placement
      int used_before;
    };
    std::vector<Frame> frames;
    frames.push_back({0, tracker_.mark(), 0});
    // The scan state is determined by the chosen prefix: every frame above a
    // placement continues from that placement's index + 1.
    for (int c : resume_chosen_) {
      int fresh = 0;
      candidate_ok(pool_[c], used_, fresh);
      std::size_t mark = tracker_.mark();
      tracker_.add_generator(pool_[c]);
      chosen_.push_back(c);
      frames.back().next = c + 1;
      int used_before = used_;
      used_ += fresh;
      frames.push_back({c + 1, mark, used_before});
    }
    nodes_ += opts_.resume_nodes;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      const int slot = static_cast<int>(chosen_.size());
      bool descended = false;
      for (int c = frame.next; c < static_cast<int>(pool_.size()); ++c) {
        if (++nodes_ % 2048 == 0 && deadline_.expired()) budget_hit_ = true;
        if (nodes_ > budget_.max_nodes) budget_hit_ = true;
        if (budget_hit_) return false;

        int fresh = 0;
        if (!candidate_ok(pool_[c], used_, fresh)) continue;
        // remaining candidates must fill the remaining slots
        if (static_cast<int>(pool_.size()) - c < static_cast<int>(size_ - slot)) break;

        std::size_t mark = tracker_.mark();
        tracker_.add_generator(pool_[c]);
        if (!counts_ok(slot + 1)) {
          tracker_.rollback(mark);
          continue;
        }
        if (slot + 1 == size_) {
          const IntSeq& counts = tracker_.counts();
          bool complete_ok = target_ ? counts == *target_ : (e_ < 1 || counts[1] == n_);
          if (complete_ok) {
            std::vector<Monomial> gens;
            for (int idx : chosen_) gens.push_back(pool_[idx]);
            gens.push_back(pool_[c]);
            if (sink(gens, counts)) return false;
          }
          tracker_.rollback(mark);
          continue;
        }
        // descend
        chosen_.push_back(c);
        frame.next = c + 1;
        int used_before = used_;
        used_ += fresh;
        frames.push_back({c + 1, mark, used_before});
        descended = true;
        maybe_checkpoint();
        break;
      }
      if (descended) continue;
      // slot exhausted: pop and undo the placement that created this frame
      Frame dead = frames.back();
      frames.pop_back();
      if (!chosen_.empty()) {
        tracker_.rollback(dead.undo_mark);
        used_ = dead.used_before;
        chosen_.pop_back();
      }
    }
    return true;
  }

  void set_resume(std::vector<int> chosen) { resume_chosen_ = std::move(chosen); }

 private:
  bool candidate_ok(const Monomial& m, int used, int& fresh) const {
    int top = -1;
    for (int i = n_ - 1; i >= 0; --i)
      if (m.exp(i) > 0) { top = i; break; }
    fresh = std::max(0, top - used + 1);
    if (!opts_.use_symmetry || top < used) return true;
    for (int i = used; i <= top; ++i) {
      if (m.exp(i) == 0) return false;                    // contiguous fresh block
      if (i > used && m.exp(i) > m.exp(i - 1)) return false;  // non-increasing inside it
    }
    return true;
  }

  bool counts_ok(int placed) const {
    const IntSeq& counts = tracker_.counts();
    if (target_) {
      for (int d = 0; d <= e_; ++d)
        if (counts[d] > (*target_)[d]) return false;
    }
    if (!opts_.use_admissible_bounds) return true;
    const std::int64_t remaining = size_ - placed;
    if (target_) {
      for (int d = 1; d <= e_; ++d)
        if (counts[d] + remaining * max_gain_[d] < (*target_)[d]) return false;
    }
    if (e_ >= 1 && counts[1] + remaining * e_ < n_) return false;  // variables left uncovered
    return true;
  }

  void maybe_checkpoint() {
    if (opts_.checkpoint_path.empty()) return;
    if (nodes_ < last_checkpoint_ + opts_.checkpoint_interval) return;
    last_checkpoint_ = nodes_;
    write_snapshot();
  }

  void write_snapshot() const;

  int n_, e_;
  std::int64_t size_;
  const IntSeq* target_;
  SearchBudget budget_;
  SearchOptions opts_;
  std::vector<Monomial> pool_;
  DownsetTracker tracker_;
  Deadline deadline_;
  std::vector<std::int64_t> max_gain_;
  std::vector<int> chosen_;
  int used_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t last_checkpoint_ = 0;
  bool budget_hit_ = false;
  std::vector<int> resume_chosen_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Checkpoint files: magic PURO1, version, length-prefixed records
// ---------------------------------------------------------------------------

namespace checkpoint {

constexpr char kMagic[5] = {'P', 'U', 'R', 'O', '1'};

struct Snapshot {
  IntSeq target;
  std::vector<int> chosen;  // canonical partial generator set as pool indices
  std::uint64_t nodes = 0;
};

namespace io {
inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline std::uint32_t get_u32(const std::string& in, std::size_t& at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in.at(at++))) << (8 * i);
  return v;
}
inline std::uint64_t get_u64(const std::string& in, std::size_t& at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in.at(at++))) << (8 * i);
  return v;
}
}  // namespace io

inline void save(const std::string& path, const Snapshot& snap) {
  std::string body;
  io::put_u32(body, 1);  // version
  std::string record;
  io::put_u32(record, static_cast<std::uint32_t>(snap.target.size()));
  for (std::int64_t v : snap.target) io::put_u64(record, static_cast<std::uint64_t>(v));
  io::put_u32(record, static_cast<std::uint32_t>(snap.chosen.size()));
  for (int c : snap.chosen) io::put_u32(record, static_cast<std::uint32_t>(c));
  io::put_u64(record, snap.nodes);
  io::put_u32(body, static_cast<std::uint32_t>(record.size()));
  body += record;

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(kMagic, sizeof kMagic);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
}

inline std::optional<Snapshot> load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() < sizeof kMagic || std::memcmp(data.data(), kMagic, sizeof kMagic) != 0)
    throw std::runtime_error("checkpoint: bad magic");
  std::size_t at = sizeof kMagic;
  std::uint32_t version = io::get_u32(data, at);
  if (version != 1) throw std::runtime_error("checkpoint: unknown version");
  std::uint32_t length = io::get_u32(data, at);
  (void)length;
  Snapshot snap;
  std::uint32_t hn = io::get_u32(data, at);
  for (std::uint32_t i = 0; i < hn; ++i) snap.target.push_back(static_cast<std::int64_t>(io::get_u64(data, at)));
  std::uint32_t cn = io::get_u32(data, at);
  for (std::uint32_t i = 0; i < cn; ++i) snap.chosen.push_back(static_cast<int>(io::get_u32(data, at)));
  snap.nodes = io::get_u64(data, at);
  return snap;
}

}  // namespace checkpoint

namespace detail {
inline void GeneratorSearch::write_snapshot() const {
  checkpoint::Snapshot snap;
  if (target_) snap.target = *target_;
  snap.chosen = chosen_;
  snap.nodes = nodes_;
  checkpoint::save(opts_.checkpoint_path, snap);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Constructive witnesses
// ---------------------------------------------------------------------------

/// Order ideal in `vars` variables realizing the O-sequence g degreewise by
/// lex-last segments (the complement of the lex-segment ideal).
inline std::vector<std::vector<Monomial>> lex_realization(const IntSeq& g, int vars) {
  std::vector<std::vector<Monomial>> layers(g.size());
  for (std::size_t d = 0; d < g.size(); ++d) {
    if (g[d] == 0) continue;
    auto pool = detail::degree_pool(vars, static_cast<int>(d));  // lex descending
    if (static_cast<std::int64_t>(pool.size()) < g[d])
      throw std::invalid_argument("lex_realization: layer too small");
    layers[d].assign(pool.end() - g[d], pool.end());
  }
  return layers;
}

/// Pure witness for a non-decreasing differentiable sequence: a lex
/// realization of the first difference in h1-1 variables, swept into degree
/// e by powers of one extra variable.
inline std::vector<Monomial> differentiable_witness(const IntSeq& h) {
  IntSeq g = differentiate(h);
  const int e = static_cast<int>(h.size()) - 1;
  const int m = static_cast<int>(h.size()) > 1 ? static_cast<int>(h[1]) - 1 : 0;
  auto layers = lex_realization(g, m);
  std::vector<Monomial> gens;
  for (int d = 0; d <= e; ++d)
    for (const Monomial& inner : layers[d]) {
      std::vector<int> exps(m + 1, 0);
      exps[0] = e - d;
      for (int i = 0; i < m; ++i) exps[1 + i] = inner.exp(i);
      gens.push_back(Monomial(std::move(exps)));
    }
  return gens;
}

/// Witness for a socle-degree-2 sequence inside the closed interval: a
/// perfect matching covering all r variables plus arbitrary further
/// degree-2 monomials.
inline std::vector<Monomial> socle2_witness(std::int64_t r, std::int64_t h2) {
  std::vector<Monomial> gens;
  const int n = static_cast<int>(r);
  for (int i = 0; i + 1 < n; i += 2) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    e[i + 1] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  if (n % 2 == 1) {
    std::vector<int> e(n, 0);
    e[n - 1] = 2;
    gens.push_back(Monomial(std::move(e)));
  }
  std::set<Monomial> have(gens.begin(), gens.end());
  for (const Monomial& m : detail::degree_pool(n, 2)) {
    if (static_cast<std::int64_t>(have.size()) >= h2) break;
    if (have.insert(m).second) gens.push_back(m);
  }
  return gens;
}

namespace detail {

/// Union-of-blocks heuristic: peel copies of single-monomial blocks (one
/// block per partition of e, on fresh variables) so that the remainder is a
/// non-decreasing differentiable sequence realized by differentiable_witness.
/// Returns generators on success.
inline std::optional<std::vector<Monomial>> block_decomposition_witness(const IntSeq& h) {
  const int e = static_cast<int>(h.size()) - 1;
  if (e < 1) return std::nullopt;

  // partitions of e as exponent shapes, larger blocks first
  std::vector<std::vector<int>> shapes;
  std::vector<int> current;
  std::function<void(int, int)> gen = [&](int left, int max_part) {
    if (left == 0) {
      shapes.push_back(current);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      current.push_back(p);
      gen(left - p, p);
      current.pop_back();
    }
  };
  gen(e, e);

  std::vector<IntSeq> block_h;
  for (const auto& shape : shapes) {
    std::vector<std::int64_t> degrees;
    for (int p : shape) degrees.push_back(p + 1);
    block_h.push_back(ci_hilbert(degrees));
  }

  IntSeq remainder(h);
  std::vector<int> multiplicity(shapes.size(), 0);
  std::uint64_t steps = 0;
  const std::uint64_t step_limit = 200'000;

  std::function<bool(std::size_t)> solve = [&](std::size_t idx) -> bool {
    if (++steps > step_limit) return false;
    // accept when the remainder (in degrees >= 1) is empty or differentiable
    bool all_zero = true;
    for (int d = 1; d <= e; ++d)
      if (remainder[d] != 0) all_zero = false;
    if (all_zero) return true;
    bool positive = true;
    for (int d = 1; d <= e; ++d)
      if (remainder[d] <= 0) positive = false;
    if (positive) {
      IntSeq rest(remainder);
      rest[0] = 1;
      bool nondecr = true;
      for (std::size_t i = 1; i < rest.size(); ++i)
        if (rest[i] < rest[i - 1]) nondecr = false;
      if (nondecr && is_differentiable_seq(rest)) return true;
    }
    if (idx == shapes.size()) return false;

    std::int64_t cap = remainder[e];  // each block consumes one socle slot
    for (int d = 1; d <= e; ++d)
      if (block_h[idx][d] > 0) cap = std::min(cap, remainder[d] / block_h[idx][d]);
    for (std::int64_t k = cap; k >= 0; --k) {
      for (int d = 1; d <= e; ++d) remainder[d] -= k * block_h[idx][d];
      multiplicity[idx] = static_cast<int>(k);
      if (solve(idx + 1)) return true;
      for (int d = 1; d <= e; ++d) remainder[d] += k * block_h[idx][d];
      multiplicity[idx] = 0;
    }
    return false;
  };

  if (!solve(0)) return std::nullopt;

  // assemble: blocks on fresh variable ranges, the remainder via lex sweep
  std::vector<Monomial> gens;
  int offset = 0;
  IntSeq rest(remainder);
  for (std::size_t idx = 0; idx < shapes.size(); ++idx)
    for (int copy = 0; copy < multiplicity[idx]; ++copy)
      offset += static_cast<int>(shapes[idx].size());
  bool has_rest = false;
  for (int d = 1; d <= e; ++d)
    if (rest[d] != 0) has_rest = true;
  int rest_vars = has_rest ? static_cast<int>(rest[1]) : 0;
  const int total_vars = offset + rest_vars;

  int at = 0;
  for (std::size_t idx = 0; idx < shapes.size(); ++idx)
    for (int copy = 0; copy < multiplicity[idx]; ++copy) {
      std::vector<int> exps(total_vars, 0);
      for (std::size_t i = 0; i < shapes[idx].size(); ++i) exps[at + i] = shapes[idx][i];
      at += static_cast<int>(shapes[idx].size());
      gens.push_back(Monomial(std::move(exps)));
    }
  if (has_rest) {
    rest[0] = 1;
    for (const Monomial& g : differentiable_witness(rest))
      gens.push_back(g.shifted(total_vars, at));
  }
  return gens;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// decide_pure
// ---------------------------------------------------------------------------

namespace detail {
inline bool witness_matches(const std::vector<Monomial>& gens, const IntSeq& h) {
  OrderIdeal X = OrderIdeal::closure(gens);
  return X.pure() && X.h_vector() == h &&
         (h.size() < 2 || X.codimension() == h[1]);
}

inline PurityVerdict pure_verdict(std::vector<Monomial> gens, const IntSeq& h,
                                  std::uint64_t nodes) {
  if (!witness_matches(gens, h))
    throw std::logic_error("purity: constructed witness failed verification");
  PurityVerdict v;
  v.status = Purity::Pure;
  v.witness = std::move(gens);
  v.nodes_explored = nodes;
  return v;
}

inline PurityVerdict simple_verdict(Purity status, std::uint64_t nodes, bool budget_hit = false) {
  PurityVerdict v;
  v.status = status;
  v.nodes_explored = nodes;
  v.budget_hit = budget_hit;
  return v;
}
}  // namespace detail

inline PurityVerdict decide_pure(const IntSeq& input, const SearchBudget& budget = {},
                                 const SearchOptions& opts = {}) {
  detail::validate_candidate(input);
  IntSeq h = canonical(input);
  const int e = static_cast<int>(h.size()) - 1;

  if (e == 0) return detail::pure_verdict({Monomial(std::vector<int>{})}, h, 0);
  const std::int64_t r = h[1];

  if (opts.use_fast_paths) {
    if (e == 1) {
      std::vector<Monomial> gens;
      for (int i = 0; i < r; ++i) gens.push_back(Monomial::power(static_cast<int>(r), i, 1));
      return detail::pure_verdict(std::move(gens), h, 0);
    }
    if (e == 2) {
      auto [lo, hi] = socle2_bounds(r);
      if (h[2] < lo || h[2] > hi) return detail::simple_verdict(Purity::NotPure, 0);
      return detail::pure_verdict(socle2_witness(r, h[2]), h, 0);
    }
    // exact refutations
    if (!is_o_sequence(h)) return detail::simple_verdict(Purity::NotPure, 0);
    for (int i = 0; i <= e; ++i)
      for (int j = i; j <= e - i; ++j)
        if (h[i] > h[j]) return detail::simple_verdict(Purity::NotPure, 0);
    {
      // differentiability through the first half
      const int half = (e + 1) / 2;
      IntSeq prefix(h.begin(), h.begin() + half + 1);
      IntSeq diff = differentiate(prefix);  // non-decreasing there by the previous check
      if (!is_o_sequence(diff)) return detail::simple_verdict(Purity::NotPure, 0);
    }
    if (growth_bound_check(h)) return detail::simple_verdict(Purity::NotPure, 0);
    if (r > h[e] * static_cast<std::int64_t>(e))
      return detail::simple_verdict(Purity::NotPure, 0);

    bool nondecreasing = true;
    for (std::size_t i = 1; i < h.size(); ++i)
      if (h[i] < h[i - 1]) nondecreasing = false;
    if (nondecreasing) {
      if (is_differentiable_seq(h)) return detail::pure_verdict(differentiable_witness(h), h, 0);
      if (e == 3) return detail::simple_verdict(Purity::NotPure, 0);
    }
    if (auto blocks = detail::block_decomposition_witness(h)) {
      if (detail::witness_matches(*blocks, h)) {
        PurityVerdict v;
        v.status = Purity::Pure;
        v.witness = std::move(*blocks);
        return v;
      }
    }
  }

  if (r > budget.max_ambient_vars) return detail::simple_verdict(Purity::Unknown, 0, true);
  if (binomial(r + e - 1, e) > 2'000'000) return detail::simple_verdict(Purity::Unknown, 0, true);

  SearchOptions run_opts = opts;
  std::vector<int> resume;
  if (!opts.checkpoint_path.empty()) {
    if (auto snap = checkpoint::load(opts.checkpoint_path); snap && snap->target == h) {
      resume = snap->chosen;
      run_opts.resume_nodes = snap->nodes;
    }
  }
  detail::GeneratorSearch search(static_cast<int>(r), e, h[e], &h, budget, run_opts);
  if (!resume.empty()) search.set_resume(resume);
  std::vector<Monomial> found;
  bool covered = search.run([&](const std::vector<Monomial>& gens, const IntSeq&) {
    found = gens;
    return true;  // stop at the first witness
  });
  if (!found.empty()) {
    PurityVerdict v = detail::pure_verdict(std::move(found), h, search.nodes());
    return v;
  }
  if (!covered) return detail::simple_verdict(Purity::Unknown, search.nodes(), true);
  return detail::simple_verdict(Purity::NotPure, search.nodes());
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct EnumerationResult {
  std::vector<IntSeq> sequences;  // sorted, distinct
  bool complete = true;
  std::uint64_t nodes = 0;
};

namespace detail {
inline void partitions_into_parts(int e, int r, std::vector<int>& current,
                                  const std::function<void(const std::vector<int>&)>& f) {
  if (r == 0) {
    if (e == 0) f(current);
    return;
  }
  int max_part = current.empty() ? e : std::min(e, current.back());
  for (int p = max_part; p >= 1; --p) {
    if (e - p < r - 1) continue;  // each remaining part needs at least 1
    current.push_back(p);
    partitions_into_parts(e - p, r - 1, current, f);
    current.pop_back();
  }
}

/// Recursively walks all candidate O-sequences (1, r, ...) of socle degree e
/// bounded by Macaulay growth, invoking f on each complete candidate.
inline void walk_candidate_box(IntSeq& h, int depth, int e,
                               const std::function<void(const IntSeq&)>& f) {
  if (depth > e) {
    f(h);
    return;
  }
  BigInt bound = macaulay_bound(h[depth - 1], depth - 1);
  std::int64_t cap = bound > 1'000'000'000 ? 1'000'000'000 : bound.convert_to<std::int64_t>();
  for (std::int64_t v = 1; v <= cap; ++v) {
    h[depth] = v;
    walk_candidate_box(h, depth + 1, e, f);
  }
  h[depth] = 0;
}
}  // namespace detail

/// Exact enumeration of pure h-vectors with codimension exactly r and socle
/// degree e; with `t` fixed the search runs over generator sets of size t,
/// without it over the Macaulay-bounded candidate box.
inline EnumerationResult enumerate_pure(int r, int e, std::optional<int> t,
                                        const SearchBudget& budget = {},
                                        const SearchOptions& opts = {}) {
  if (r < 1 || e < 1) throw std::invalid_argument("enumerate_pure: r, e >= 1");
  EnumerationResult result;
  std::set<IntSeq> found;

  if (t) {
    if (*t < 1) throw std::invalid_argument("enumerate_pure: t >= 1");
    if (static_cast<std::int64_t>(r) > static_cast<std::int64_t>(*t) * e) {
      return result;  // no monomial set of type t covers r variables
    }
    if (*t == 1) {
      // socle monomials are partitions of e with exactly r parts
      std::vector<int> parts;
      detail::partitions_into_parts(e, r, parts, [&](const std::vector<int>& shape) {
        std::vector<std::int64_t> degrees;
        for (int p : shape) degrees.push_back(p + 1);
        found.insert(ci_hilbert(degrees));
      });
      result.sequences.assign(found.begin(), found.end());
      return result;
    }
    detail::GeneratorSearch search(r, e, *t, nullptr, budget, opts);
    bool covered = search.run([&](const std::vector<Monomial>&, const IntSeq& counts) {
      found.insert(counts);
      return false;  // keep enumerating
    });
    result.nodes = search.nodes();
    result.complete = covered;
    result.sequences.assign(found.begin(), found.end());
    return result;
  }

  IntSeq h(e + 1, 0);
  h[0] = 1;
  h[1] = r;
  std::uint64_t nodes = 0;
  bool complete = true;
  detail::walk_candidate_box(h, 2, e, [&](const IntSeq& candidate) {
    PurityVerdict v = decide_pure(candidate, budget, opts);
    nodes += v.nodes_explored;
    if (v.status == Purity::Pure) found.insert(canonical(candidate));
    if (v.status == Purity::Unknown) complete = false;
  });
  result.nodes = nodes;
  result.complete = complete;
  result.sequences.assign(found.begin(), found.end());
  return result;
}

// ---------------------------------------------------------------------------
// Interval scans
// ---------------------------------------------------------------------------

struct IcpSlice {
  IntSeq values;        // template sequence; entry at free_index ignored
  int free_index = 0;   // coordinate being swept
  std::int64_t lo = 1, hi = 1;
};

struct IcpPoint {
  std::int64_t value = 0;
  Purity status = Purity::Unknown;
};

struct IcpScanResult {
  std::vector<IcpPoint> points;
  std::vector<std::pair<std::int64_t, std::int64_t>> gaps;  // inclusive NotPure runs inside Pure territory
  std::vector<std::int64_t> unresolved;
};

inline IcpScanResult icp_scan(const IcpSlice& slice, const SearchBudget& budget = {},
                              const SearchOptions& opts = {}) {
  if (slice.free_index <= 0 || slice.free_index >= static_cast<int>(slice.values.size()))
    throw std::invalid_argument("icp_scan: free coordinate out of range");
  IcpScanResult result;
  for (std::int64_t v = slice.lo; v <= slice.hi; ++v) {
    IntSeq h = slice.values;
    h[slice.free_index] = v;
    IcpPoint point{v, Purity::Unknown};
    try {
      point.status = decide_pure(h, budget, opts).status;
    } catch (const MalformedSequence&) {
      point.status = Purity::NotPure;
    }
    if (point.status == Purity::Unknown) result.unresolved.push_back(v);
    result.points.push_back(point);
  }
  // NotPure runs with Pure on both sides are interval violations
  std::int64_t first_pure = -1, last_pure = -1;
  for (const IcpPoint& p : result.points)
    if (p.status == Purity::Pure) {
      if (first_pure < 0) first_pure = p.value;
      last_pure = p.value;
    }
  if (first_pure >= 0) {
    std::optional<std::int64_t> run_start;
    for (const IcpPoint& p : result.points) {
      if (p.status == Purity::NotPure && p.value > first_pure && p.value < last_pure) {
        if (!run_start) run_start = p.value;
      } else if (run_start) {
        result.gaps.emplace_back(*run_start, p.value - 1);
        run_start.reset();
      }
    }
    if (run_start) result.gaps.emplace_back(*run_start, result.points.back().value);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Non-decreasing pure generators whose h-vector is not differentiable;
/// socle degrees 4 and 5 are fixed unions, degree a >= 6 combines the
/// truncated  x1^3-free  ring in three variables with one far-from-squarefree
/// monomial in three fresh variables.
inline std::vector<Monomial> construct_nondifferentiable(int e) {
  if (e <= 3) throw ParameterOutOfRange("construct_nondifferentiable: e >= 4");
  std::vector<Monomial> gens;
  if (e == 4) {
    for (const Monomial& m : detail::degree_pool(4, 4)) gens.push_back(m.widened(8));
    gens.push_back(Monomial({0, 0, 0, 0, 1, 1, 1, 1}));
    return gens;
  }
  if (e == 5) {
    for (const Monomial& m : detail::degree_pool(3, 5)) gens.push_back(m.widened(6));
    gens.push_back(Monomial({0, 0, 0, 1, 2, 2}));
    return gens;
  }
  for (const Monomial& m : detail::degree_pool(3, e))
    if (m.exp(0) <= 2) gens.push_back(m.widened(6));
  gens.push_back(Monomial({0, 0, 0, e - 4, 2, 2}));
  return gens;
}

/// The fourteen socle generators of the non-unimodal codimension-3 family
/// with socle degree 4n; n = 2m (m >= 11) or n = 2m+1 (m >= 14).
inline std::vector<Monomial> construct_type14(std::int64_t n) {
  auto mono = [](std::int64_t a, std::int64_t b, std::int64_t c) {
    return Monomial({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
  };
  std::vector<Monomial> gens;
  if (n % 2 == 0) {
    const std::int64_t m = n / 2;
    if (m < 11) throw ParameterOutOfRange("construct_type14: even n needs n >= 22");
    gens.push_back(mono(2 * m, 2 * m, 4 * m));
    for (std::int64_t i = 0; i <= 6; ++i)
      gens.push_back(mono((i + 1) * (m - 1) - 1, (6 - i) * m + i + 3, m - 1));
    for (std::int64_t i = 0; i <= 5; ++i)
      gens.push_back(mono((i + 1) * (m - 1) - 1, (5 - i) * m + i + 3, 2 * m - 1));
  } else {
    const std::int64_t m = (n - 1) / 2;
    if (m < 14) throw ParameterOutOfRange("construct_type14: odd n needs n >= 29");
    gens.push_back(mono(2 * m + 1, 2 * m + 1, 4 * m + 2));
    for (std::int64_t i = 0; i <= 6; ++i)
      gens.push_back(mono((i + 1) * (m - 1) - 1, (6 - i) * m + i + 6, m));
    for (std::int64_t i = 0; i <= 5; ++i)
      gens.push_back(mono((i + 1) * m - 1, (5 - i) * m + 5, 2 * m));
  }
  return gens;
}

/// (1,t,3t,t) witness for t >= 7: the circulant triples y_i y_{i+1} y_{i+3}.
inline std::vector<Monomial> circulant_witness(int t) {
  if (t < 7) throw ParameterOutOfRange("circulant_witness: t >= 7");
  std::vector<Monomial> gens;
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(t, 0);
    e[i % t] += 1;
    e[(i + 1) % t] += 1;
    e[(i + 3) % t] += 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return gens;
}

/// (1,r,r,t) witness for t <= r <= 3t: t variable-disjoint cubes, squares
/// and squarefree triples chosen as a weak 3-composition of t.
inline std::vector<Monomial> weak_composition_witness(int r, int t) {
  if (t < 1 || r < t || r > 3 * t)
    throw ParameterOutOfRange("weak_composition_witness: t <= r <= 3t");
  int triples, doubles, cubes;
  if (r <= 2 * t) {
    triples = 0;
    doubles = r - t;
    cubes = t - doubles;
  } else {
    triples = r - 2 * t;
    doubles = t - triples;
    cubes = 0;
  }
  std::vector<Monomial> gens;
  int at = 0;
  auto add = [&](std::initializer_list<int> shape) {
    std::vector<int> e(r, 0);
    int i = at;
    for (int p : shape) e[i++] = p;
    at = i;
    gens.push_back(Monomial(std::move(e)));
  };
  for (int i = 0; i < triples; ++i) add({1, 1, 1});
  for (int i = 0; i < doubles; ++i) add({1, 2});
  for (int i = 0; i < cubes; ++i) add({3});
  return gens;
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

struct CountChain {
  BigInt o_prev;   // O-sequences of codimension r-1 and socle degree e
  BigInt d_count;  // differentiable O-sequences of codimension r
  BigInt p_count;  // pure O-sequences of codimension r
  BigInt o_count;  // O-sequences of codimension r
  BigRat c_e;      // leading asymptotic constant
  bool complete = true;
};

namespace detail {
inline BigInt count_o_sequences(std::int64_t first, int e, bool allow_zero) {
  // counts extensions (h_1 = first fixed) to socle degree e
  std::function<BigInt(std::int64_t, int)> rec = [&](std::int64_t prev, int depth) -> BigInt {
    if (depth > e) return 1;
    BigInt total = 0;
    BigInt bound = prev == 0 ? 0 : macaulay_bound(prev, depth - 1);
    if (allow_zero) {
      // zeros allowed; a zero forces zeros onwards, contributing one branch
      total += 1;
    }
    for (std::int64_t v = 1; BigInt(v) <= bound; ++v) total += rec(v, depth + 1);
    return total;
  };
  if (first == 0) return allow_zero ? 1 : (e >= 1 ? 0 : 1);
  return rec(first, 2);
}
}  // namespace detail

inline BigRat asymptotic_constant(int e) {
  BigInt numerator = 1;
  std::int64_t big = binomial(e + 1, 2).convert_to<std::int64_t>();
  for (int i = 0; i <= e - 2; ++i)
    numerator *= binomial(big - binomial(i + 1, 2).convert_to<std::int64_t>() - 1, i);
  BigInt denominator = 1;
  for (std::int64_t i = 2; i <= big - 1; ++i) denominator *= i;
  return BigRat(numerator, denominator);
}

/// Exact cardinalities behind the inequality chain
/// #O(r-1,e) <= #D(r,e) <= #P(r,e) <= #O(r,e).
inline CountChain count_chain(int r, int e, const SearchBudget& budget = {}) {
  if (r < 1 || e < 1) throw std::invalid_argument("count_chain: r, e >= 1");
  CountChain chain;
  chain.o_count = detail::count_o_sequences(r, e, false);
  chain.o_prev = r >= 2 ? detail::count_o_sequences(r - 1, e, false) : 0;
  chain.d_count = detail::count_o_sequences(r - 1, e, true);
  auto enumeration = enumerate_pure(r, e, std::nullopt, budget);
  chain.p_count = static_cast<std::int64_t>(enumeration.sequences.size());
  chain.complete = enumeration.complete;
  chain.c_e = asymptotic_constant(e);
  return chain;
}

// ---------------------------------------------------------------------------
// Socle degree 3 census by type
// ---------------------------------------------------------------------------

struct Socle3Census {
  int t = 0;
  std::int64_t region1 = 0, region2 = 0, region3 = 0;
  std::int64_t total = 0;
  bool exhaustive = false;   // true when every region was searched
  std::vector<IntSeq> sequences;  // filled in exhaustive mode
};

/// t <= 5: full search over all candidates (1,r,a,t).  t >= 7: the region-I
/// count from the closed form 2t^2+3t+1, optionally re-verified pointwise by
/// search.  t = 6 sits outside both regimes.
inline Socle3Census socle3_region_census(int t, const SearchBudget& budget = {},
                                         bool verify_region1 = false) {
  if (t < 1) throw std::invalid_argument("socle3_region_census: t >= 1");
  Socle3Census census;
  census.t = t;
  if (t <= 5) {
    census.exhaustive = true;
    for (int r = 1; r <= 3 * t; ++r) {
      std::int64_t amax = std::min<std::int64_t>(3 * t, static_cast<std::int64_t>(r) * (r + 1) / 2);
      for (std::int64_t a = r; a <= amax; ++a) {
        IntSeq h{1, r, a, t};
        PurityVerdict v = decide_pure(h, budget);
        if (v.status == Purity::Unknown)
          throw BudgetExceeded("socle3_region_census: undecided point");
        if (v.status != Purity::Pure) continue;
        census.sequences.push_back(h);
        ++census.total;
        if (r >= t) ++census.region1;
        else if (a >= t) ++census.region2;
        else ++census.region3;
      }
    }
    return census;
  }
  if (t == 6)
    throw BudgetExceeded("socle3_region_census: t = 6 has neither closed form nor desk-scale search");
  census.region1 = 2ll * t * t + 3 * t + 1;
  census.total = census.region1;  // regions II/III not computed here
  if (verify_region1) {
    std::int64_t confirmed = 0;
    for (int r = t; r <= 3 * t; ++r)
      for (int a = r; a <= 3 * t; ++a) {
        PurityVerdict v = decide_pure({1, r, a, t}, budget);
        if (v.status != Purity::Pure)
          throw BudgetExceeded("socle3_region_census: region-I point not confirmed");
        ++confirmed;
      }
    if (confirmed != census.region1)
      throw std::logic_error("socle3_region_census: closed form mismatch");
    census.exhaustive = false;
  }
  return census;
}


}  // namespace puro
