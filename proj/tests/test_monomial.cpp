#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "puro/order_ideal.hpp"

using namespace puro;

namespace {
Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

std::vector<Monomial> random_gens(Catch::SimplePcg32& rng, int n, int e, int count) {
  std::set<Monomial> gens;
  for (int attempt = 0; attempt < 40 * count && static_cast<int>(gens.size()) < count; ++attempt) {
    std::vector<int> exps(n, 0);
    for (int d = 0; d < e; ++d) ++exps[rng() % n];
    gens.insert(Monomial(std::move(exps)));
  }
  return {gens.begin(), gens.end()};
}
}  // namespace

TEST_CASE("monomial basics") {
  Monomial a = m({2, 1, 0});
  CHECK(a.degree() == 3);
  CHECK(a == m({2, 1, 0}));
  CHECK(a != m({2, 0, 1}));
  CHECK(m({1, 1}) < m({2, 1}));          // degree first
  CHECK(m({0, 2, 1}) < m({1, 1, 1}));    // then lex
  CHECK_THROWS_AS(m({-1, 0}), std::invalid_argument);
}

TEST_CASE("contraction") {
  CHECK(*contract(m({2, 1}), 0) == m({1, 1}));
  CHECK_FALSE(contract(m({2, 1, 0}), 2).has_value());
  CHECK(*contract(m({1}), 0) == Monomial::unit(1));
  CHECK_THROWS_AS(contract(m({1, 0}), 5), std::out_of_range);
}

TEST_CASE("monomial text formats") {
  CHECK(format_monomial(m({2, 0, 1})) == "x1^2*x3");
  CHECK(format_monomial_bracket(m({2, 0, 1})) == "[2,0,1]");
  CHECK(format_monomial(Monomial::unit(3)) == "1");
  CHECK(parse_monomial("x1^2*x3") == m({2, 0, 1}));
  CHECK(parse_monomial("[2,0,1]") == m({2, 0, 1}));
  CHECK(parse_monomial("[2,0,1,0]") == m({2, 0, 1, 0}));
  CHECK(parse_monomial("1", 2) == Monomial::unit(2));
  CHECK_THROWS_AS(parse_monomial("x0^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("[1,-2]"), std::invalid_argument);

  SECTION("bit-exact round trip on random monomials") {
    auto& rng = Catch::sharedRng();
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> exps(1 + rng() % 6);
      for (auto& e : exps) e = rng() % 5;
      Monomial mm(std::move(exps));
      CHECK(parse_monomial(format_monomial_bracket(mm)) == mm);
      CHECK(parse_monomial(format_monomial(mm), mm.ambient()) == mm);
      std::string s = format_monomial_bracket(mm);
      CHECK(format_monomial_bracket(parse_monomial(s)) == s);
    }
  }
}

TEST_CASE("closure h-vectors from named constructions") {
  // single squarefree degree-4 monomial
  auto X = OrderIdeal::closure({m({1, 1, 1, 1})});
  CHECK(X.h_vector() == IntSeq{1, 4, 6, 4, 1});
  CHECK(X.pure());
  CHECK(X.type() == 1);
  CHECK(X.codimension() == 4);

  // unit monomial
  auto U = OrderIdeal::closure({Monomial::unit(3)});
  CHECK(U.h_vector() == IntSeq{1});

  // x*y^2*z^2
  auto Y = OrderIdeal::closure({m({1, 2, 2})});
  CHECK(Y.h_vector() == IntSeq{1, 3, 5, 5, 3, 1});

  // chain x^e in one variable
  auto C = OrderIdeal::closure({m({4})});
  CHECK(C.h_vector() == IntSeq{1, 1, 1, 1, 1});

  // two mixed generators
  auto Z = OrderIdeal::closure({m({1, 2}), m({2, 1})});
  CHECK(Z.h_vector() == IntSeq{1, 2, 3, 2});

  // full degree-4 truncation of the polynomial ring in 4 variables
  std::vector<Monomial> all4;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        all4.push_back(m({a, b, c, 4 - a - b - c}));
  auto T = OrderIdeal::closure(all4);
  CHECK(T.h_vector() == IntSeq{1, 4, 10, 20, 35});

  CHECK_THROWS_AS(OrderIdeal::closure({}), EmptyGenerators);
}

TEST_CASE("generators reduce to the maximal antichain") {
  auto X = OrderIdeal::closure({m({1, 0}), m({2, 1}), m({1, 1})});
  REQUIRE(X.generators().size() == 1);
  CHECK(X.generators()[0] == m({2, 1}));
  auto Mixed = OrderIdeal::closure({m({3, 0}), m({1, 1})});
  CHECK(Mixed.pure() == false);
  CHECK(Mixed.type() == 2);
}

TEST_CASE("closure is idempotent and downward closed") {
  auto& rng = Catch::sharedRng();
  Catch::SimplePcg32 pcg(rng());
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + pcg() % 4;
    int e = 1 + pcg() % 5;
    auto gens = random_gens(pcg, n, e, 1 + pcg() % 4);
    auto X = OrderIdeal::closure(gens);
    auto Y = OrderIdeal::closure(X.generators());
    REQUIRE(X.h_vector() == Y.h_vector());
    REQUIRE(X.generators() == Y.generators());
    // every contraction of a member is a member
    for (int d = 1; d <= X.socle_degree(); ++d)
      for (const Monomial& mem : X.members(d))
        for (int i = 0; i < n; ++i)
          if (auto down = contract(mem, i)) REQUIRE(X.contains(*down));
  }
}

TEST_CASE("union constructions") {
  // 35 quartics in vars 1..4 plus abcd in vars 5..8
  std::vector<Monomial> trunc;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c) {
        std::vector<int> e{a, b, c, 4 - a - b - c};
        e.resize(8, 0);
        trunc.push_back(Monomial(std::move(e)));
      }
  std::vector<Monomial> cube{m({0, 0, 0, 0, 1, 1, 1, 1})};
  auto merged = union_generators(trunc, cube);
  CHECK(merged.size() == 36);
  auto X = OrderIdeal::closure(merged);
  CHECK(X.h_vector() == IntSeq{1, 8, 16, 24, 36});
  CHECK(X.pure());

  auto idem = union_generators(cube, cube);
  CHECK(OrderIdeal::closure(idem).h_vector() == IntSeq{1, 4, 6, 4, 1});
}

TEST_CASE("tensor products convolve h-vectors") {
  SECTION("identity element") {
    auto gens = tensor_generators({m({1, 2})}, {Monomial::unit(0)});
    CHECK(OrderIdeal::closure(gens).h_vector() == OrderIdeal::closure({m({1, 2})}).h_vector());
  }
  SECTION("named instance") {
    // the (1,2,3,4,2)-downset tensored with a length-3 chain
    auto gens = tensor_generators({m({3, 1}), m({1, 3})}, {m({2})});
    CHECK(OrderIdeal::closure(gens).h_vector() == IntSeq{1, 3, 6, 9, 9, 6, 2});
  }
  SECTION("random convolution identity") {
    auto& rng = Catch::sharedRng();
    Catch::SimplePcg32 pcg(rng());
    for (int trial = 0; trial < 40; ++trial) {
      int na = 1 + pcg() % 3, nb = 1 + pcg() % 3;
      auto A = random_gens(pcg, na, 1 + pcg() % 4, 1 + pcg() % 3);
      auto B = random_gens(pcg, nb, 1 + pcg() % 4, 1 + pcg() % 3);
      auto ha = OrderIdeal::closure(A).h_vector();
      auto hb = OrderIdeal::closure(B).h_vector();
      IntSeq conv(ha.size() + hb.size() - 1, 0);
      for (std::size_t i = 0; i < ha.size(); ++i)
        for (std::size_t j = 0; j < hb.size(); ++j) conv[i + j] += ha[i] * hb[j];
      REQUIRE(OrderIdeal::closure(tensor_generators(A, B)).h_vector() == conv);
    }
  }
}

TEST_CASE("every order-ideal h-vector satisfies Macaulay growth") {
  auto& rng = Catch::sharedRng();
  Catch::SimplePcg32 pcg(rng());
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + pcg() % 5;
    int e = 1 + pcg() % 6;
    auto X = OrderIdeal::closure(random_gens(pcg, n, e, 1 + pcg() % 5));
    REQUIRE(is_o_sequence(X.h_vector()));
  }
}

TEST_CASE("generator file round trip") {
  std::string text =
      "# sample generator file\n"
      "[2,0,1]\n"
      "x2^3\n"
      "\n"
      "x1*x3^2   # inline comment\n";
  std::istringstream in(text);
  auto gens = load_generators(in);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == m({2, 0, 1}));
  CHECK(gens[1] == m({0, 3, 0}));
  CHECK(gens[2] == m({1, 0, 2}));

  std::ostringstream out;
  save_generators(out, gens);
  std::istringstream back(out.str());
  auto reload = load_generators(back);
  CHECK(reload == gens);
  std::ostringstream out2;
  save_generators(out2, reload);
  CHECK(out2.str() == out.str());
}
