#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "puro/level_algebra.hpp"
#include "puro/purity.hpp"
#include "puro/random.hpp"
#include "puro/simplicial.hpp"

// Command surface: check, decide, enumerate, icp, wlp, slp, type2, fvector,
// census, reproduce.  Every command builds one JSON value; --format picks
// the rendering.  Identical configuration and seed give byte-identical
// output.

namespace puro::cli {

using nlohmann::json;

struct GlobalConfig {
  std::string format = "pretty";
  std::uint64_t budget_nodes = 50'000'000;
  double budget_seconds = 120.0;
  int threads = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
  std::string chars = "auto";

  SearchBudget budget() const {
    SearchBudget b;
    b.max_nodes = budget_nodes;
    b.max_seconds = budget_seconds;
    return b;
  }
  int worker_count() const {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }
};

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

inline void render_tsv(const json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it)
      render_tsv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (value.is_array()) {
    bool scalar = true;
    for (const auto& item : value)
      if (item.is_object() || item.is_array()) scalar = false;
    if (scalar) {
      out << prefix << "\t";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? "," : "") << value[i].dump();
      out << "\n";
    } else {
      for (std::size_t i = 0; i < value.size(); ++i)
        render_tsv(value[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << "\t" << value.dump() << "\n";
  }
}

inline void emit(const json& value, const GlobalConfig& config, std::ostream& out = std::cout) {
  if (config.format == "json") {
    out << value.dump() << "\n";
  } else if (config.format == "tsv") {
    render_tsv(value, "", out);
  } else {
    out << value.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------------------
// json helpers
// ---------------------------------------------------------------------------

inline json to_json(const IntSeq& h) { return json(h); }

inline json monomials_json(const std::vector<Monomial>& gens) {
  json out = json::array();
  for (const Monomial& g : gens) out.push_back(format_monomial_bracket(g));
  return out;
}

inline json shape_json(const ShapeReport& r) {
  return json{{"is_unimodal", r.is_unimodal},
              {"maxima_count", r.maxima_count},
              {"valleys_count", r.valleys_count},
              {"is_flawless", r.is_flawless},
              {"is_nondecreasing", r.is_nondecreasing},
              {"is_differentiable", r.is_differentiable},
              {"is_si", r.is_si},
              {"strict_unimodal_wlp_shape", r.strict_unimodal_wlp_shape}};
}

inline json verdict_json(const PurityVerdict& v) {
  json out{{"status", to_string(v.status)},
           {"nodes", v.nodes_explored},
           {"budget_hit", v.budget_hit}};
  out["witness"] = v.witness ? monomials_json(*v.witness) : json::array();
  return out;
}

inline const char* mode_string(FailureMode mode) {
  switch (mode) {
    case FailureMode::InjectivityFailure: return "injectivity_failure";
    case FailureMode::SurjectivityFailure: return "surjectivity_failure";
    default: return "none";
  }
}

inline json wlp_json(const WlpReport& report) {
  json ranks = json::array();
  for (const RankEntry& entry : report.ranks)
    ranks.push_back(json{{"d", entry.degree}, {"rank", entry.rank},
                         {"full_rank_target", entry.target}});
  json out{{"hilbert", report.hilbert},
           {"power", report.power},
           {"ranks", ranks},
           {"wlp_char0", report.maximal_rank_char0},
           {"failing_primes", report.failing_primes},
           {"mode", mode_string(report.mode)},
           {"fails_all_characteristics", report.fails_all_characteristics}};
  if (report.first_failure_degree) out["first_failure_degree"] = *report.first_failure_degree;
  else out["first_failure_degree"] = nullptr;
  return out;
}

// ---------------------------------------------------------------------------
// shared input plumbing
// ---------------------------------------------------------------------------

struct GeneratorInput {
  std::vector<std::string> inline_gens;
  std::string file;
  bool as_ideal = false;
  bool as_inverse_system = false;

  std::vector<Monomial> load() const {
    std::vector<Monomial> gens;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open generator file: " + file);
      gens = load_generators(in);
    }
    int ambient = 0;
    std::vector<Monomial> extra;
    for (const std::string& text : inline_gens) {
      Monomial m = parse_monomial(text);
      ambient = std::max(ambient, m.ambient());
      extra.push_back(std::move(m));
    }
    for (const Monomial& g : gens) ambient = std::max(ambient, g.ambient());
    for (Monomial& m : extra) m = m.widened(ambient);
    for (Monomial& m : gens) m = m.widened(ambient);
    gens.insert(gens.end(), extra.begin(), extra.end());
    if (gens.empty()) throw std::runtime_error("no generators given (use --gen or --file)");
    return gens;
  }

  LevelAlgebra algebra() const {
    auto gens = load();
    return as_ideal ? LevelAlgebra::from_monomial_ideal(gens)
                    : LevelAlgebra::from_inverse_system(gens);
  }
};

inline void attach_generator_flags(CLI::App* cmd, GeneratorInput& input) {
  cmd->add_option("--gen", input.inline_gens, "generator monomial (repeatable)");
  cmd->add_option("--file", input.file, "generator file, one monomial per line");
  auto* ideal = cmd->add_flag("--ideal", input.as_ideal, "interpret generators as a monomial ideal");
  auto* inv = cmd->add_flag("--inverse-system", input.as_inverse_system,
                            "interpret generators as inverse-system socle monomials");
  ideal->excludes(inv);
}

inline std::vector<std::uint64_t> parse_char_list(const std::string& text) {
  std::vector<std::uint64_t> primes;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ','))
    if (!token.empty()) primes.push_back(std::stoull(token));
  return primes;
}

template <typename Fn>
inline void parallel_for(std::size_t count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto runner = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(runner);
  runner();
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

inline json cmd_check(const std::string& seq_text) {
  IntSeq h = parse_intseq(seq_text);
  json out;
  out["sequence"] = h;
  out["shape"] = shape_json(shape(h));
  out["is_o_sequence"] = is_o_sequence(canonical(h));
  out["is_differentiable_seq"] = is_differentiable_seq(canonical(h));
  out["first_half_differentiable"] = first_half_differentiable(h);
  if (canonical(h).size() == 3 && h[0] == 1 && h[1] >= 1) {
    auto [lo, hi] = socle2_bounds(h[1]);
    out["socle2_interval"] = json{{"min_h2", lo}, {"max_h2", hi}};
  }
  return out;
}

inline json cmd_decide(const std::string& seq_text, const GlobalConfig& config,
                       bool no_fast_paths, const std::string& checkpoint,
                       std::uint64_t checkpoint_interval) {
  IntSeq h = parse_intseq(seq_text);
  SearchOptions opts;
  opts.use_fast_paths = !no_fast_paths;
  opts.checkpoint_path = checkpoint;
  if (checkpoint_interval) opts.checkpoint_interval = checkpoint_interval;
  PurityVerdict v = decide_pure(h, config.budget(), opts);
  json out = verdict_json(v);
  out["sequence"] = canonical(h);
  return out;
}

inline json cmd_enumerate(int r, int e, int t, bool up_to_codim, const GlobalConfig& config) {
  json out;
  out["r"] = r;
  out["e"] = e;
  out["codimension_convention"] = up_to_codim ? "at_most_r" : "exactly_r";
  std::set<IntSeq> sequences;
  bool complete = true;
  std::uint64_t nodes = 0;
  for (int codim = up_to_codim ? 1 : r; codim <= r; ++codim) {
    auto result = enumerate_pure(codim, e, t > 0 ? std::optional<int>(t) : std::nullopt,
                                 config.budget());
    sequences.insert(result.sequences.begin(), result.sequences.end());
    complete = complete && result.complete;
    nodes += result.nodes;
  }
  if (t > 0) out["t"] = t;
  out["count"] = sequences.size();
  out["complete"] = complete;
  out["nodes"] = nodes;
  json list = json::array();
  for (const IntSeq& h : sequences) list.push_back(h);
  out["sequences"] = list;
  return out;
}

inline json cmd_icp(const std::string& slice_text, std::int64_t lo, std::int64_t hi,
                    const GlobalConfig& config) {
  // slice syntax: "1,3,*,2" with exactly one free coordinate
  IcpSlice slice;
  slice.lo = lo;
  slice.hi = hi;
  {
    std::stringstream in(slice_text);
    std::string token;
    int index = 0;
    int free_at = -1;
    while (std::getline(in, token, ',')) {
      if (token == "*") {
        if (free_at >= 0) throw std::runtime_error("icp: more than one '*' in slice");
        free_at = index;
        slice.values.push_back(0);
      } else {
        slice.values.push_back(std::stoll(token));
      }
      ++index;
    }
    if (free_at < 0) throw std::runtime_error("icp: slice needs one '*' coordinate");
    slice.free_index = free_at;
  }

  // decide the points in parallel, then fold them through the library
  std::vector<std::int64_t> values;
  for (std::int64_t v = slice.lo; v <= slice.hi; ++v) values.push_back(v);
  std::vector<Purity> statuses(values.size(), Purity::Unknown);
  parallel_for(values.size(), config.worker_count(), [&](std::size_t i) {
    IntSeq h = slice.values;
    h[slice.free_index] = values[i];
    try {
      statuses[i] = decide_pure(h, config.budget()).status;
    } catch (const MalformedSequence&) {
      statuses[i] = Purity::NotPure;
    }
  });

  json points = json::array();
  std::int64_t first_pure = -1, last_pure = -1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    points.push_back(json{{"value", values[i]}, {"status", to_string(statuses[i])}});
    if (statuses[i] == Purity::Pure) {
      if (first_pure < 0) first_pure = values[i];
      last_pure = values[i];
    }
  }
  json gaps = json::array();
  json unresolved = json::array();
  std::optional<std::int64_t> run_start;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (statuses[i] == Purity::Unknown) unresolved.push_back(values[i]);
    bool in_gap = statuses[i] == Purity::NotPure && first_pure >= 0 &&
                  values[i] > first_pure && values[i] < last_pure;
    if (in_gap && !run_start) run_start = values[i];
    if (!in_gap && run_start) {
      gaps.push_back(json{{"from", *run_start}, {"to", values[i] - 1}});
      run_start.reset();
    }
  }
  if (run_start) gaps.push_back(json{{"from", *run_start}, {"to", values.back()}});

  json out;
  out["slice"] = slice_text;
  out["free_index"] = slice.free_index;
  out["points"] = points;
  out["gaps"] = gaps;
  out["unresolved"] = unresolved;
  return out;
}

inline json wlp_with_chars(const LevelAlgebra& algebra, const std::string& chars, int power) {
  WlpReport report = rank_report(algebra, power);
  json out = wlp_json(report);
  if (chars == "auto" || chars.empty()) return out;
  json per_char = json::array();
  for (std::uint64_t p : parse_char_list(chars)) {
    if (p == 0) {
      per_char.push_back(json{{"char", 0}, {"maximal_rank", report.maximal_rank_char0}});
      continue;
    }
    bool ok = true;
    int first_failure = -1;
    for (const RankEntry& entry : report.ranks) {
      IntMat m = mult_matrix(algebra, power, entry.degree);
      if (rank_mod_p(m, p) < entry.target) {
        ok = false;
        first_failure = entry.degree;
        break;
      }
    }
    json row{{"char", p}, {"maximal_rank", ok}};
    if (!ok) row["first_failure_degree"] = first_failure;
    per_char.push_back(row);
  }
  out["per_characteristic"] = per_char;
  return out;
}

inline json cmd_wlp(const GeneratorInput& input, const GlobalConfig& config) {
  return wlp_with_chars(input.algebra(), config.chars, 1);
}

/// Conjecture hunt: random type-2 inverse systems in three variables,
/// looking for a failure of maximal rank of x L^2 in characteristic zero.
inline json cmd_wlp_hunt_l2(int samples, int max_exponent, const GlobalConfig& config) {
  Rng rng(config.seed);
  json out;
  out["samples"] = samples;
  out["seed"] = config.seed;
  json counterexamples = json::array();
  for (int i = 0; i < samples; ++i) {
    int degree = static_cast<int>(rng.between(2, std::max(2, max_exponent)));
    auto gens = random_degree_monomials(rng, 3, degree, 2);
    if (gens.size() < 2) continue;
    LevelAlgebra algebra = LevelAlgebra::from_inverse_system(gens);
    if (algebra.socle_degree() < 2) continue;
    WlpReport report = rank_report(algebra, 2);
    if (!report.maximal_rank_char0)
      counterexamples.push_back(json{{"generators", monomials_json(gens)},
                                     {"hilbert", report.hilbert}});
  }
  out["counterexamples"] = counterexamples;
  return out;
}

inline json cmd_slp(const GeneratorInput& input, const GlobalConfig& config) {
  LevelAlgebra algebra = input.algebra();
  json out;
  out["hilbert"] = algebra.hilbert();
  json reports = json::array();
  bool slp = true;
  for (const WlpReport& report : slp_report(algebra)) {
    json r = config.chars == "auto" ? wlp_json(report)
                                    : wlp_with_chars(algebra, config.chars, report.power);
    reports.push_back(r);
    if (!report.maximal_rank_char0) slp = false;
  }
  out["powers"] = reports;
  out["slp_char0"] = slp;
  return out;
}

inline json cmd_type2(const std::string& a_text, const std::string& b_text) {
  Monomial a = parse_monomial(a_text);
  Monomial b = parse_monomial(b_text);
  int ambient = std::max(a.ambient(), b.ambient());
  a = a.widened(ambient);
  b = b.widened(ambient);
  json out;
  out["a"] = format_monomial_bracket(a);
  out["b"] = format_monomial_bracket(b);
  out["hilbert"] = type2_hilbert(a, b);
  if (ambient == 3) {
    Type2Class klass = classify_type2_3vars(a, b);
    const char* kind = klass.kind == Type2Class::Kind::A   ? "A"
                       : klass.kind == Type2Class::Kind::B ? "B"
                                                           : "type1";
    json c{{"case", kind}};
    if (klass.kind != Type2Class::Kind::Type1) {
      c["a"] = klass.a;
      c["b"] = klass.b;
      c["c"] = klass.c;
      c["beta"] = klass.beta;
      c["gamma"] = klass.gamma;
      if (klass.kind == Type2Class::Kind::B) c["alpha"] = klass.alpha;
    }
    out["classification"] = c;
  }
  return out;
}

inline json cmd_fvector_f2h(const std::string& text) {
  FVector f{parse_intseq(text)};
  IntSeq h = f_to_h(f);
  return json{{"f", f.entries}, {"h", h}, {"is_cm", is_cm_f_vector(f)}};
}

inline json cmd_fvector_h2f(const std::string& text, int d) {
  IntSeq h = parse_intseq(text);
  FVector f = h_to_f(h, d);
  return json{{"h", h}, {"d", d}, {"f", f.entries}};
}

inline json cmd_fvector_type2(int e, int h) {
  FVector f = pure_f_type2(e, h);
  return json{{"e", e}, {"h", h}, {"f", f.entries},
              {"inequality_string_holds", type2_inequality_check(f)},
              {"is_cm", is_cm_f_vector(f)}};
}

inline json cmd_fvector_plane(int d) {
  json out{{"d", d}, {"sequence", projective_plane_sequence(d)}};
  if (d == 2 || d == 3) {
    auto lines = projective_plane_lines(d);
    auto X = OrderIdeal::closure(lines);
    out["witness_lines"] = monomials_json(lines);
    out["witness_matches"] = X.h_vector() == projective_plane_sequence(d);
  } else {
    out["note"] = "sequence only; no incidence witness generated for this order";
  }
  return out;
}

inline json cmd_fvector_steiner(std::int64_t r) {
  SteinerSequence s = steiner_extremal(r);
  json out{{"r", r}, {"sequence", s.h}, {"integral", s.integral}, {"admissible", s.admissible}};
  if (!s.integral) out["note"] = "pair count not divisible by 3; no extremal h3";
  else if (!s.admissible) out["note"] = "h3 integral but r is not 1 or 3 mod 6; no triple system";
  if (r == 7) {
    auto X = OrderIdeal::closure(fano_triples());
    out["witness_matches"] = X.h_vector() == s.h;
  }
  return out;
}

/// Open-ended scan: does the set of pure f-vectors of a given dimension and
/// vertex budget show any one-coordinate gaps?  Reports findings only.
inline json cmd_fvector_interval_scan(int facet_size, int max_vertices,
                                      const GlobalConfig& config) {
  if (facet_size < 2 || max_vertices < facet_size)
    throw std::runtime_error("interval-scan: need facet size >= 2 and enough vertices");
  // collect f-vectors of pure complexes given by all facet subsets at small scale
  std::vector<int> vertices(max_vertices);
  std::vector<Monomial> all_facets;
  std::vector<int> exps(max_vertices, 0);
  std::function<void(int, int)> pick = [&](int from, int left) {
    if (left == 0) {
      all_facets.push_back(Monomial(exps));
      return;
    }
    for (int v = from; v <= max_vertices - left; ++v) {
      exps[v] = 1;
      pick(v + 1, left - 1);
      exps[v] = 0;
    }
  };
  pick(0, facet_size);
  std::set<IntSeq> fvectors;
  const std::size_t facet_count = all_facets.size();
  if (facet_count > 22) throw std::runtime_error("interval-scan: parameter box too large");
  for (std::uint64_t mask = 1; mask < (1ull << facet_count); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < facet_count; ++i)
      if (mask & (1ull << i)) gens.push_back(all_facets[i]);
    fvectors.insert(canonical(OrderIdeal::closure(gens).h_vector()));
  }
  // look for one-coordinate gaps inside the collected set
  json gaps = json::array();
  for (const IntSeq& f : fvectors) {
    for (std::size_t slot = 1; slot < f.size(); ++slot) {
      IntSeq probe = f;
      probe[slot] += 2;
      IntSeq middle = f;
      middle[slot] += 1;
      if (fvectors.count(probe) && !fvectors.count(middle))
        gaps.push_back(json{{"low", f}, {"missing", middle}, {"high", probe}});
    }
  }
  return json{{"facet_size", facet_size},
              {"max_vertices", max_vertices},
              {"distinct_f_vectors", fvectors.size()},
              {"gaps", gaps}};
}

inline json cmd_census_socle3(int t, bool verify, const GlobalConfig& config) {
  Socle3Census census = socle3_region_census(t, config.budget(), verify);
  json out{{"t", t},
           {"region1", census.region1},
           {"region2", census.region2},
           {"region3", census.region3},
           {"total", census.total},
           {"exhaustive", census.exhaustive}};
  if (census.exhaustive) {
    json list = json::array();
    for (const IntSeq& h : census.sequences) list.push_back(h);
    out["sequences"] = list;
  } else {
    out["note"] = "regions II/III not enumerated; region I from the closed count";
  }
  if (verify) out["region1_verified_by_search"] = true;
  return out;
}

inline json cmd_census_chain(int r, int e, const GlobalConfig& config) {
  CountChain chain = count_chain(r, e, config.budget());
  json out{{"r", r},
           {"e", e},
           {"o_prev", chain.o_prev.convert_to<std::string>()},
           {"d_count", chain.d_count.convert_to<std::string>()},
           {"p_count", chain.p_count.convert_to<std::string>()},
           {"o_count", chain.o_count.convert_to<std::string>()},
           {"chain_holds", chain.o_prev <= chain.d_count && chain.d_count <= chain.p_count &&
                               chain.p_count <= chain.o_count},
           {"complete", chain.complete}};
  std::ostringstream ce;
  ce << chain.c_e;
  out["c_e"] = ce.str();
  return out;
}

// ---------------------------------------------------------------------------
// reproduce: named fixtures
// ---------------------------------------------------------------------------

inline std::string fixture_directory() {
  if (const char* env = std::getenv("PURO_FIXTURES")) return env;
#ifdef PURO_FIXTURE_DIR
  return PURO_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

struct Fixture {
  std::string id;
  std::string description;
  std::function<json(const GlobalConfig&)> generate;
};

inline json reproduce_type14(std::int64_t n) {
  auto gens = construct_type14(n);
  auto X = OrderIdeal::closure(gens);
  ShapeReport r = shape(X.h_vector());
  return json{{"n", n},
              {"generators", monomials_json(gens)},
              {"hilbert", X.h_vector()},
              {"pure", X.pure()},
              {"codimension", X.codimension()},
              {"socle_degree", X.socle_degree()},
              {"unimodal", r.is_unimodal}};
}

inline json reproduce_soc4(const GlobalConfig& config) {
  // one degree-4 truncation block of codimension 5 plus eleven squarefree blocks
  std::vector<Monomial> gens = detail::degree_pool(5, 4);
  std::vector<Monomial> acc;
  for (const Monomial& g : gens) acc.push_back(g.widened(49));
  for (int copy = 0; copy < 11; ++copy) {
    std::vector<int> exps(49, 0);
    for (int i = 0; i < 4; ++i) exps[5 + 4 * copy + i] = 1;
    acc.push_back(Monomial(std::move(exps)));
  }
  auto X = OrderIdeal::closure(acc);
  PurityVerdict v = decide_pure(X.h_vector(), config.budget());
  ShapeReport r = shape(X.h_vector());
  return json{{"hilbert", X.h_vector()},
              {"tensor_construction_pure", X.pure()},
              {"decide_status", to_string(v.status)},
              {"maxima_count", r.maxima_count},
              {"unimodal", r.is_unimodal}};
}

inline json reproduce_char257(const GlobalConfig&) {
  LevelAlgebra algebra = characteristic_example();
  WlpReport report = wlp_report(algebra);
  IntMat m = linkage_membership_matrix(
      {Monomial({10, 0, 0}), Monomial({0, 7, 0}), Monomial({0, 0, 7}), Monomial({4, 3, 0}),
       Monomial({4, 0, 5})},
      6);
  BigInt det = determinant(m);
  return json{{"hilbert", report.hilbert},
              {"wlp_char0", report.maximal_rank_char0},
              {"failing_primes", report.failing_primes},
              {"linkage_determinant", abs(det).convert_to<std::int64_t>()}};
}

inline json reproduce_icp3(const GlobalConfig& config) {
  auto result = enumerate_pure(3, 3, std::nullopt, config.budget());
  json list = json::array();
  for (const IntSeq& h : result.sequences) list.push_back(h);
  // sweep every coordinate slice with entries bounded by 12
  bool gap_free = true;
  for (int free_index = 1; free_index <= 3 && gap_free; ++free_index) {
    std::vector<IntSeq> templates;
    if (free_index == 1) {
      for (std::int64_t a = 1; a <= 12; ++a)
        for (std::int64_t b = 1; b <= 12; ++b) templates.push_back({1, 0, a, b});
    } else if (free_index == 2) {
      for (std::int64_t b = 1; b <= 12; ++b) templates.push_back({1, 3, 0, b});
    } else {
      for (std::int64_t a = 1; a <= 12; ++a) templates.push_back({1, 3, a, 0});
    }
    std::vector<char> gap_flags(templates.size(), 0);
    parallel_for(templates.size(), config.worker_count(), [&](std::size_t i) {
      IcpSlice slice{templates[i], free_index, 1, 12};
      auto scan = icp_scan(slice, config.budget());
      if (!scan.gaps.empty() || !scan.unresolved.empty()) gap_flags[i] = 1;
    });
    for (char flag : gap_flags)
      if (flag) gap_free = false;
  }
  return json{{"count", result.sequences.size()},
              {"sequences", list},
              {"complete", result.complete},
              {"slices_gap_free", gap_free}};
}

inline json reproduce_answernd(const GlobalConfig& config) {
  json grid = json::array();
  for (int r = 1; r <= 5; ++r)
    for (int d = 1; d <= 4; ++d) {
      AnswerndEvidence ev = answernd_check(r, d, wlp_region(r, d) ? 25 : 0, config.seed);
      json row{{"r", r}, {"d", d}, {"wlp_always", ev.wlp_always}, {"slp_always", ev.slp_always}};
      if (ev.wlp_always) {
        row["samples_checked"] = ev.samples_checked;
      } else {
        row["witness_hilbert"] = *ev.witness_hilbert;
        row["witness_first_failure"] = *ev.witness_report->first_failure_degree;
        row["witness_mode"] = mode_string(ev.witness_report->mode);
      }
      grid.push_back(row);
    }
  // the SLP side of the classification at (3,2)
  LevelAlgebra slp_witness = slp_counterexample_3vars();
  IntMat cube = mult_matrix(slp_witness, 3, 3);
  json slp{{"hilbert", slp_witness.hilbert()},
           {"l3_rank_3_to_6", rank_rational(cube)},
           {"l3_full_rank_target", std::min(slp_witness.hilbert()[3], slp_witness.hilbert()[6])}};
  return json{{"grid", grid}, {"slp_counterexample", slp}};
}

inline json reproduce_nondiff(const GlobalConfig&) {
  json rows = json::array();
  for (int e = 4; e <= 6; ++e) {
    auto X = OrderIdeal::closure(construct_nondifferentiable(e));
    rows.push_back(json{{"e", e},
                        {"hilbert", X.h_vector()},
                        {"pure", X.pure()},
                        {"differentiable", is_differentiable_seq(X.h_vector())}});
  }
  return json{{"family", rows}};
}

inline json reproduce_wlpnotslp(const GlobalConfig&) {
  LevelAlgebra algebra = slp_counterexample_3vars();
  WlpReport wlp = wlp_report(algebra);
  IntMat cube = mult_matrix(algebra, 3, 3);
  return json{{"hilbert", algebra.hilbert()},
              {"wlp_char0", wlp.maximal_rank_char0},
              {"l3_rank_3_to_6", rank_rational(cube)},
              {"l3_full_rank_target", std::min(algebra.hilbert()[3], algebra.hilbert()[6])}};
}

inline json reproduce_matroid_rrr(const GlobalConfig& config) {
  // documentation fixture: matroid h-vectors lack the interval property,
  // pure O-sequences (conjecturally) do not
  json rows = json::array();
  for (const IntSeq& h : {IntSeq{1, 4, 4}, IntSeq{1, 4, 5}, IntSeq{1, 4, 6}}) {
    PurityVerdict v = decide_pure(h, config.budget());
    rows.push_back(json{{"sequence", h},
                        {"pure", v.status == Purity::Pure},
                        {"matroid_h_vector", h != IntSeq{1, 4, 5}}});
  }
  return json{{"points", rows}};
}

inline json reproduce_steiner7(const GlobalConfig& config) {
  SteinerSequence s = steiner_extremal(7);
  auto X = OrderIdeal::closure(fano_triples());
  PurityVerdict v = decide_pure(s.h, config.budget());
  return json{{"sequence", s.h},
              {"witness_matches", X.h_vector() == s.h},
              {"decide_status", to_string(v.status)},
              {"circulant_matches", OrderIdeal::closure(circulant_witness(7)).h_vector() == s.h}};
}

inline json reproduce_level_13(const GlobalConfig& config) {
  SearchBudget big = config.budget();
  big.max_nodes = std::max<std::uint64_t>(big.max_nodes, 200'000'000);
  big.max_seconds = std::max(big.max_seconds, 600.0);
  PurityVerdict v = decide_pure({1, 13, 13, 14}, big);
  json out{{"sequence", IntSeq{1, 13, 13, 14}}, {"status", to_string(v.status)}};
  out["nodes"] = v.nodes_explored;
  return out;
}

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = {
      {"type14-n22", "type-14 non-unimodal family at n = 22",
       [](const GlobalConfig&) { return reproduce_type14(22); }},
      {"type14-n29", "type-14 non-unimodal family at n = 29",
       [](const GlobalConfig&) { return reproduce_type14(29); }},
      {"soc4-nonunimodal", "socle degree 4 non-unimodal sequence (1,49,81,79,81)",
       reproduce_soc4},
      {"char257", "type-2 algebra whose WLP fails exactly in characteristics 2, 5, 7",
       reproduce_char257},
      {"icp3-r3-table", "the twenty pure length-4 sequences of codimension 3, with gap-free slices",
       reproduce_icp3},
      {"answernd-grid", "WLP/SLP classification grid for r <= 5, d <= 4",
       reproduce_answernd},
      {"nondiff-family", "non-decreasing pure sequences that are not differentiable, e = 4,5,6",
       reproduce_nondiff},
      {"wlpnotslp", "type-2 three-variable algebra with WLP but without SLP",
       reproduce_wlpnotslp},
      {"matroid-rrr", "matroid h-vectors lack the interval property; these points are all pure",
       reproduce_matroid_rrr},
      {"steiner-r7", "extremal socle-degree-3 sequence at r = 7 with its two witnesses",
       reproduce_steiner7},
      {"level-1-13-13-14", "decider regression for the level sequence (1,13,13,14)",
       reproduce_level_13},
  };
  return table;
}

inline std::string fixture_path(const std::string& id) {
  return fixture_directory() + "/" + id + ".txt";
}

inline std::string render_fixture(const Fixture& fixture, const json& value) {
  std::string out = "# " + fixture.description + "\n";
  out += value.dump(2);
  out += "\n";
  return out;
}

inline std::optional<std::string> read_fixture_file(const std::string& id) {
  std::ifstream in(fixture_path(id));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline int cmd_reproduce(const std::string& id, bool all, bool write, bool list,
                         const GlobalConfig& config) {
  if (list) {
    json out = json::array();
    for (const Fixture& f : fixtures()) out.push_back(json{{"id", f.id}, {"description", f.description}});
    emit(out, config);
    return 0;
  }
  std::vector<const Fixture*> selected;
  if (all) {
    for (const Fixture& f : fixtures()) selected.push_back(&f);
  } else {
    for (const Fixture& f : fixtures())
      if (f.id == id) selected.push_back(&f);
    if (selected.empty()) {
      json err{{"error", "unknown example id"}, {"id", id}};
      json known = json::array();
      for (const Fixture& f : fixtures()) known.push_back(f.id);
      err["available"] = known;
      emit(err, config, std::cerr);
      return 2;
    }
  }

  int failures = 0;
  json results = json::array();
  for (const Fixture* fixture : selected) {
    json value = fixture->generate(config);
    std::string rendered = render_fixture(*fixture, value);
    if (write) {
      std::ofstream out(fixture_path(fixture->id), std::ios::trunc);
      out << rendered;
      results.push_back(json{{"id", fixture->id}, {"written", true}});
      continue;
    }
    auto stored = read_fixture_file(fixture->id);
    bool match = stored && *stored == rendered;
    if (!match) ++failures;
    json row{{"id", fixture->id}, {"match", match}};
    if (!stored) row["error"] = "fixture file missing";
    results.push_back(row);
  }
  emit(json{{"results", results}, {"failures", failures}}, config);
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

inline int run(int argc, char** argv) {
  CLI::App app{"exact computations on pure O-sequences and monomial level algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalConfig config;
  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}))
      ->capture_default_str();
  app.add_option("--budget-nodes", config.budget_nodes, "search node budget")->capture_default_str();
  app.add_option("--budget-seconds", config.budget_seconds, "search time budget")->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--seed", config.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--chars", config.chars, "characteristics: auto, or list like 0,2,5,7")
      ->capture_default_str();

  // check
  std::string seq_text;
  auto* check = app.add_subcommand("check", "shape and O-sequence report for a sequence");
  check->add_option("sequence", seq_text, "comma or space separated")->required();

  // decide
  std::string decide_seq, checkpoint_file;
  std::uint64_t checkpoint_interval = 0;
  bool no_fast_paths = false;
  auto* decide = app.add_subcommand("decide", "decide whether a sequence is a pure O-sequence");
  decide->add_option("sequence", decide_seq)->required();
  decide->add_flag("--no-fast-paths", no_fast_paths, "skip closed forms; force the search");
  decide->add_option("--checkpoint", checkpoint_file, "checkpoint file for resumable search");
  decide->add_option("--checkpoint-interval", checkpoint_interval, "nodes between snapshots");

  // enumerate
  int en_r = 0, en_e = 0, en_t = 0;
  bool up_to_codim = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate pure O-sequences");
  enumerate->add_option("-r", en_r, "codimension")->required();
  enumerate->add_option("-e", en_e, "socle degree")->required();
  enumerate->add_option("-t", en_t, "socle type (omit for all types)");
  enumerate->add_flag("--up-to-codim", up_to_codim, "count codimension <= r instead of exactly r");

  // icp
  std::string slice_text;
  std::int64_t icp_lo = 1, icp_hi = 1;
  auto* icp = app.add_subcommand("icp", "interval scan over one free coordinate");
  icp->add_option("--slice", slice_text, "e.g. 1,3,*,2")->required();
  icp->add_option("--lo", icp_lo)->required();
  icp->add_option("--hi", icp_hi)->required();

  // wlp
  GeneratorInput wlp_input;
  int hunt_samples = 0, hunt_max_exponent = 6;
  auto* wlp = app.add_subcommand("wlp", "weak Lefschetz rank report");
  attach_generator_flags(wlp, wlp_input);
  wlp->add_option("--hunt-l2", hunt_samples,
                  "sample random type-2 three-variable algebras for xL^2 rank drops");
  wlp->add_option("--hunt-max-exponent", hunt_max_exponent, "socle degree cap for --hunt-l2");

  // slp
  GeneratorInput slp_input;
  auto* slp = app.add_subcommand("slp", "strong Lefschetz rank reports, all powers");
  attach_generator_flags(slp, slp_input);

  // type2
  std::string t2_a, t2_b;
  auto* type2 = app.add_subcommand("type2", "type-2 Hilbert function and classification");
  type2->add_option("--a", t2_a)->required();
  type2->add_option("--b", t2_b)->required();

  // fvector
  auto* fvector = app.add_subcommand("fvector", "pure f-vector toolkit");
  std::string f2h_text, h2f_text;
  int h2f_dim = 0, ft2_e = 0, ft2_h = -1, plane_d = 0, scan_facet = 0, scan_vertices = 0;
  std::int64_t steiner_r = 0;
  fvector->add_option("--f2h", f2h_text, "f-vector to h-vector, with the CM test");
  fvector->add_option("--h2f", h2f_text, "h-vector to f-vector (needs --dim)");
  fvector->add_option("--dim", h2f_dim, "d for --h2f");
  fvector->add_option("--type2-e", ft2_e, "facet size for the two-facet formula");
  fvector->add_option("--type2-h", ft2_h, "shared vertices for the two-facet formula");
  fvector->add_option("--plane", plane_d, "projective plane sequence of order d");
  fvector->add_option("--steiner", steiner_r, "Steiner extremal sequence at r");
  fvector->add_option("--interval-scan-facet", scan_facet, "facet size for the open interval scan");
  fvector->add_option("--interval-scan-vertices", scan_vertices, "vertex budget for the scan");

  // census
  auto* census = app.add_subcommand("census", "counting: socle-degree-3 by type, or count chains");
  int census_t = 0, chain_r = 0, chain_e = 0;
  bool census_verify = false;
  census->add_option("--socle3", census_t, "census of pure (1,r,a,t) for this type");
  census->add_flag("--verify", census_verify, "re-verify the region-I closed count by search");
  census->add_option("--chain-r", chain_r, "codimension for the count chain");
  census->add_option("--chain-e", chain_e, "socle degree for the count chain");

  // reproduce
  std::string repro_id;
  bool repro_all = false, repro_write = false, repro_list = false;
  auto* reproduce = app.add_subcommand("reproduce", "regenerate a named example and diff its fixture");
  reproduce->add_option("id", repro_id, "example id");
  reproduce->add_flag("--all", repro_all, "run every fixture");
  reproduce->add_flag("--write", repro_write, "rewrite fixture files from current output");
  reproduce->add_flag("--list", repro_list, "list available ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (check->parsed()) {
      emit(cmd_check(seq_text), config);
      return 0;
    }
    if (decide->parsed()) {
      emit(cmd_decide(decide_seq, config, no_fast_paths, checkpoint_file, checkpoint_interval),
           config);
      return 0;
    }
    if (enumerate->parsed()) {
      emit(cmd_enumerate(en_r, en_e, en_t, up_to_codim, config), config);
      return 0;
    }
    if (icp->parsed()) {
      emit(cmd_icp(slice_text, icp_lo, icp_hi, config), config);
      return 0;
    }
    if (wlp->parsed()) {
      if (hunt_samples > 0)
        emit(cmd_wlp_hunt_l2(hunt_samples, hunt_max_exponent, config), config);
      else
        emit(cmd_wlp(wlp_input, config), config);
      return 0;
    }
    if (slp->parsed()) {
      emit(cmd_slp(slp_input, config), config);
      return 0;
    }
    if (type2->parsed()) {
      emit(cmd_type2(t2_a, t2_b), config);
      return 0;
    }
    if (fvector->parsed()) {
      if (!f2h_text.empty()) emit(cmd_fvector_f2h(f2h_text), config);
      else if (!h2f_text.empty()) emit(cmd_fvector_h2f(h2f_text, h2f_dim), config);
      else if (ft2_e > 0 && ft2_h >= 0) emit(cmd_fvector_type2(ft2_e, ft2_h), config);
      else if (plane_d > 0) emit(cmd_fvector_plane(plane_d), config);
      else if (steiner_r > 0) emit(cmd_fvector_steiner(steiner_r), config);
      else if (scan_facet > 0) emit(cmd_fvector_interval_scan(scan_facet, scan_vertices, config), config);
      else throw std::runtime_error("fvector: pick one of --f2h/--h2f/--type2-e/--plane/--steiner/--interval-scan-facet");
      return 0;
    }
    if (census->parsed()) {
      if (census_t > 0) emit(cmd_census_socle3(census_t, census_verify, config), config);
      else if (chain_r > 0 && chain_e > 0) emit(cmd_census_chain(chain_r, chain_e, config), config);
      else throw std::runtime_error("census: pick --socle3 T or --chain-r R --chain-e E");
      return 0;
    }
    if (reproduce->parsed()) {
      if (!repro_all && !repro_list && repro_id.empty())
        throw std::runtime_error("reproduce: give an id, --all, or --list");
      return cmd_reproduce(repro_id, repro_all, repro_write, repro_list, config);
    }
  } catch (const std::exception& e) {
    json err{{"error", e.what()}};
    emit(err, config, std::cerr);
    return 1;
  }
  return 0;
}

}  // namespace puro::cli
