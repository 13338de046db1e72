#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "segal/polygon.hpp"

using namespace segal;

TEST_CASE("triangulation counts follow the Catalan numbers") {
  CHECK(enumerate_triangulations(2).size() == 1);
  CHECK(enumerate_triangulations(3).size() == 2);
  CHECK(enumerate_triangulations(4).size() == 5);
  CHECK(enumerate_triangulations(5).size() == 14);
  CHECK(enumerate_triangulations(6).size() == 42);
}

TEST_CASE("subdivision counts follow the little Schroeder numbers") {
  CHECK(enumerate_subdivisions(2).size() == 1);
  CHECK(enumerate_subdivisions(3).size() == 3);
  CHECK(enumerate_subdivisions(4).size() == 11);
  CHECK(enumerate_subdivisions(5).size() == 45);
}

TEST_CASE("crossing predicate") {
  CHECK(chords_cross({0, 2}, {1, 3}));
  CHECK_FALSE(chords_cross({0, 2}, {2, 4}));
  CHECK_FALSE(chords_cross({0, 2}, {0, 3}));
  CHECK(chords_cross({1, 3}, {0, 2}));
}

TEST_CASE("faces from diagonals") {
  auto fan = subdivision_from_diagonals(4, {{0, 2}, {0, 3}});
  REQUIRE(fan.members.size() == 3);
  CHECK(fan.members[0] == std::vector<int>{0, 1, 2});
  CHECK(fan.members[1] == std::vector<int>{0, 2, 3});
  CHECK(fan.members[2] == std::vector<int>{0, 3, 4});
  CHECK(diagonals_of(fan) == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}});

  auto trivial = subdivision_from_diagonals(4, {});
  REQUIRE(trivial.members.size() == 1);
  CHECK(trivial.members[0] == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(subdivision_from_diagonals(4, {{0, 2}, {1, 3}}), InputError);
  CHECK_THROWS_AS(subdivision_from_diagonals(4, {{0, 4}}), InputError);
}

TEST_CASE("triangulations are among the subdivisions") {
  for (int n = 2; n <= 5; ++n) {
    auto subs = enumerate_subdivisions(n);
    for (const auto& t : enumerate_triangulations(n))
      CHECK(std::find(subs.begin(), subs.end(), t) != subs.end());
  }
}

TEST_CASE("triangulations of P_n have n-1 faces and n-2 diagonals") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      CHECK(static_cast<int>(t.members.size()) == n - 1);
      CHECK(static_cast<int>(diagonals_of(t).size()) == n - 2);
    }
}

TEST_CASE("every triangulation has a strictly consecutive triangle") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      int j = find_consecutive_triangle(t);
      CHECK(j >= 1);
      CHECK(j + 1 <= n);
      std::vector<int> tri{j - 1, j, j + 1};
      CHECK(std::find(t.members.begin(), t.members.end(), tri) != t.members.end());
    }
}

TEST_CASE("valency is at least 2 and detects the modular consecutive triangle") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_triangulations(n))
      for (int v = 0; v <= n; ++v) {
        int val = vertex_valency(t, v);
        CHECK(val >= 2);
        std::vector<int> tri{(v + n) % (n + 1), v, (v + 1) % (n + 1)};
        std::sort(tri.begin(), tri.end());
        bool member =
            std::find(t.members.begin(), t.members.end(), tri) != t.members.end();
        CHECK((val == 2) == member);
      }
}

TEST_CASE("fan valencies in P_4") {
  auto fan = subdivision_from_diagonals(4, {{0, 2}, {0, 3}});
  CHECK(vertex_valency(fan, 0) == 4);
  CHECK(vertex_valency(fan, 1) == 2);
  CHECK(vertex_valency(fan, 2) == 3);
}

TEST_CASE("left and right classification") {
  auto fan0 = subdivision_from_diagonals(4, {{0, 2}, {0, 3}});
  auto fan4 = subdivision_from_diagonals(4, {{1, 4}, {2, 4}});
  CHECK(classify_subdivision(fan0) == SubdivisionClass::left);
  CHECK(classify_subdivision(fan4) == SubdivisionClass::right);
  auto mixed = subdivision_from_diagonals(4, {{1, 3}, {1, 4}});
  CHECK(classify_subdivision(mixed) == SubdivisionClass::neither);
  auto tri = subdivision_from_diagonals(2, {});
  CHECK(classify_subdivision(tri) == SubdivisionClass::both);

  for (int n = 2; n <= 6; ++n) {
    int left = 0, right = 0;
    for (const auto& t : enumerate_triangulations(n)) {
      auto c = classify_subdivision(t);
      if (c == SubdivisionClass::left || c == SubdivisionClass::both) ++left;
      if (c == SubdivisionClass::right || c == SubdivisionClass::both) ++right;
    }
    CHECK(left == 1);
    CHECK(right == 1);
  }
}

TEST_CASE("enumeration order is deterministic") {
  auto a = enumerate_subdivisions(4);
  auto b = enumerate_subdivisions(4);
  CHECK(a == b);
  std::set<std::vector<std::vector<int>>> uniq;
  for (const auto& s : a) uniq.insert(s.members);
  CHECK(uniq.size() == a.size());
}
