#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "puro/purity.hpp"
#include "puro/simplicial.hpp"

using namespace puro;

TEST_CASE("f to h and back") {
  SECTION("boundary of the simplex has h = (1,...,1)") {
    // boundary of the (d-1)-simplex on d+1 vertices: f_i = C(d+1, i+1), i < d
    for (int d = 2; d <= 6; ++d) {
      FVector f;
      for (int i = -1; i <= d - 1; ++i)
        f.entries.push_back(binomial(d + 1, i + 1).convert_to<std::int64_t>());
      IntSeq h = f_to_h(f);
      REQUIRE(h == IntSeq(d + 1, 1));
      REQUIRE(h_to_f(h, d) == f);
    }
  }
  SECTION("round trip on random data") {
    auto& rng = Catch::sharedRng();
    for (int trial = 0; trial < 300; ++trial) {
      int d = 1 + rng() % 6;
      IntSeq h{1};
      for (int i = 0; i < d; ++i) h.push_back(static_cast<std::int64_t>(rng() % 50));
      FVector f = h_to_f(h, d);
      REQUIRE(f_to_h(f) == h);
      FVector f2;
      f2.entries.push_back(1);
      for (int i = 0; i < d; ++i) f2.entries.push_back(1 + rng() % 50);
      IntSeq h2 = f_to_h(f2);
      REQUIRE(h_to_f(h2, d) == f2);
    }
  }
  SECTION("negative h entries flag non-CM input as data") {
    FVector f;
    f.entries = {1, 4, 2};  // four vertices, two disjoint edges
    IntSeq h = f_to_h(f);
    REQUIRE(h == IntSeq{1, 2, -1});
    CHECK_FALSE(is_cm_f_vector(f));
  }
}

TEST_CASE("CM test via the h-transform") {
  // two facets sharing h = e-1 vertices are CM; disjoint facets are not
  CHECK(is_cm_f_vector(pure_f_type2(3, 2)));
  CHECK_FALSE(is_cm_f_vector(pure_f_type2(3, 0)));
  // a cone over anything CM stays CM: simplex itself
  FVector simplex;
  for (int i = -1; i <= 2; ++i) simplex.entries.push_back(binomial(3, i + 1).convert_to<std::int64_t>());
  CHECK(is_cm_f_vector(simplex));
}

TEST_CASE("CM interval property") {
  SECTION("random CM pairs differing in one slot") {
    auto& rng = Catch::sharedRng();
    int verified = 0;
    for (int trial = 0; trial < 400 && verified < 40; ++trial) {
      int d = 2 + rng() % 3;
      IntSeq h1{1}, h2{1};
      for (int i = 0; i < d; ++i) h1.push_back(static_cast<std::int64_t>(rng() % 6));
      h2 = h1;
      int slot = 1 + rng() % d;
      h2[slot] += rng() % 4;
      FVector f = h_to_f(h1, d), g = h_to_f(h2, d);
      if (!is_cm_f_vector(f) || !is_cm_f_vector(g)) continue;
      if (f.entries == g.entries) continue;
      int diff_slots = 0;
      for (std::size_t i = 0; i < f.entries.size(); ++i)
        if (f.entries[i] != g.entries[i]) ++diff_slots;
      if (diff_slots != 1) continue;  // the transform can spread a change
      auto interval = cm_interval_check(f, g);
      REQUIRE(interval.first <= interval.second);
      ++verified;
    }
    REQUIRE(verified >= 10);
  }
  SECTION("identical inputs verify trivially") {
    FVector f = pure_f_type2(4, 3);
    auto interval = cm_interval_check(f, f);
    CHECK(interval.first == interval.second);
  }
  SECTION("non-CM inputs are rejected") {
    CHECK_THROWS_AS(cm_interval_check(pure_f_type2(3, 0), pure_f_type2(3, 0)), NotCM);
  }
}

TEST_CASE("type-2 pure f-vectors") {
  CHECK(pure_f_type2(2, 0).entries == IntSeq{1, 4, 2});
  SECTION("formula matches the squarefree downset count") {
    for (int e = 1; e <= 10; ++e)
      for (int h = 0; h <= e - 1; ++h) {
        FVector f = pure_f_type2(e, h);
        REQUIRE(f.entries.back() == 2);
        REQUIRE(f.entries[1] == 2 * e - h);
        auto X = OrderIdeal::closure(type2_facet_generators(e, h));
        REQUIRE(X.pure());
        REQUIRE(X.h_vector() == f.entries);
      }
  }
  SECTION("the inequality string holds for all small parameters") {
    for (int e = 2; e <= 12; ++e)
      for (int h = 0; h <= e - 1; ++h) REQUIRE(type2_inequality_check(pure_f_type2(e, h)));
  }
  SECTION("the string fails for general type-2 pure O-sequences") {
    FVector a{IntSeq{1, 2, 3, 4, 4, 2}};
    FVector b{IntSeq{1, 3, 5, 7, 6, 2}};
    CHECK_FALSE(type2_inequality_check(a));
    CHECK_FALSE(type2_inequality_check(b));
    // both nevertheless are pure O-sequences
    CHECK(decide_pure(a.entries).status == Purity::Pure);
    CHECK(decide_pure(b.entries).status == Purity::Pure);
  }
  SECTION("degenerate e = 2") {
    CHECK(type2_inequality_check(pure_f_type2(2, 1)));
  }
}

TEST_CASE("projective plane sequences") {
  CHECK(projective_plane_sequence(2) == IntSeq{1, 7, 21, 7});
  CHECK(projective_plane_sequence(3) == IntSeq{1, 13, 78, 52, 13});
  CHECK(projective_plane_sequence(6)[1] == 43);

  SECTION("Fano plane witnesses the order-2 sequence") {
    auto X = OrderIdeal::closure(fano_triples());
    CHECK(X.pure());
    CHECK(X.h_vector() == projective_plane_sequence(2));
    CHECK(X.codimension() == 7);
  }
  SECTION("generated lines match for small prime orders") {
    for (int p : {2, 3}) {
      auto lines = projective_plane_lines(p);
      REQUIRE(static_cast<int>(lines.size()) == p * p + p + 1);
      auto X = OrderIdeal::closure(lines);
      REQUIRE(X.pure());
      REQUIRE(X.h_vector() == projective_plane_sequence(p));
    }
  }
}

TEST_CASE("Steiner extremal sequences") {
  auto s7 = steiner_extremal(7);
  CHECK(s7.h == IntSeq{1, 7, 21, 7});
  CHECK(s7.integral);
  CHECK(s7.admissible);
  CHECK(decide_pure(s7.h).status == Purity::Pure);

  auto s9 = steiner_extremal(9);
  CHECK(s9.h == IntSeq{1, 9, 36, 12});
  CHECK(s9.admissible);

  auto s4 = steiner_extremal(4);
  CHECK(s4.integral);       // C(4,2)/3 = 2 is integral
  CHECK_FALSE(s4.admissible);  // even r fails the matching condition

  auto s5 = steiner_extremal(5);
  CHECK_FALSE(s5.integral);
  CHECK(s5.h == IntSeq{1, 5, 10});
}

TEST_CASE("facet files share the squarefree encoding") {
  std::istringstream in("{1,2,4}\n{2,3,4}  # adjacent\n");
  auto gens = parse_facets(in);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == Monomial({1, 1, 0, 1}));
  CHECK(gens[1] == Monomial({0, 1, 1, 1}));
  auto X = OrderIdeal::closure(gens);
  // two triangles glued along an edge: the face counts are the type-2 formula
  CHECK(X.h_vector() == pure_f_type2(3, 2).entries);
}
