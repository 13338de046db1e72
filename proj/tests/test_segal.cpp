#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "segal/fixtures.hpp"
#include "segal/sconstr.hpp"
#include "segal/segal_maps.hpp"

using namespace segal;

namespace {

TruncatedSimplicialSet ps2_iso(int N) {
  static auto ps2 = fixture_PS(2);
  return iso_s_dot(ps2, N).x;
}

bool all_ok(const std::vector<VerdictEntry>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const VerdictEntry& e) { return !e.defined || e.ok; });
}

// all levels singletons except X_3, which has two elements with identical
// faces; simplicially valid but visibly not 2-Segal
TruncatedSimplicialSet doubled_top() {
  TruncatedSimplicialSet x;
  x.N = 3;
  x.level_sizes = {1, 1, 1, 2};
  x.faces.assign(4, {});
  x.degen.assign(4, {});
  for (int n = 1; n <= 3; ++n) {
    int sz = x.level_sizes[n];
    x.faces[n].assign(n + 1, std::vector<int>(sz, 0));
  }
  for (int n = 0; n < 3; ++n)
    x.degen[n].assign(n + 1, std::vector<int>(x.level_sizes[n], 0));
  return x;
}

}  // namespace

TEST_CASE("trivial subdivision gives the identity comparison") {
  auto x = ps2_iso(3);
  auto r = two_segal_map(x, subdivision_from_diagonals(3, {}));
  CHECK(r.domain_size == x.level_sizes[3]);
  CHECK(r.limit_size == x.level_sizes[3]);
  CHECK(r.bijective());
}

TEST_CASE("all singleton levels pass everything") {
  auto z = iso_s_dot(fixture_Z(), 4).x;
  CHECK(all_ok(check_left(z)));
  CHECK(all_ok(check_right(z)));
  CHECK(all_ok(check_lower(z)));
  CHECK(all_ok(check_upper(z)));
  for (const auto& t : enumerate_triangulations(3))
    CHECK(check_projection_surjective(z, t));
}

TEST_CASE("P_3 fan limit size matches the level above") {
  auto x = ps2_iso(3);
  auto fan = subdivision_from_diagonals(3, {{0, 2}});
  REQUIRE(fan.members == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 3}});
  auto lim = limit_over_subdivision(x, fan);
  CHECK(lim.size() == 10);
  auto r = two_segal_map(x, fan);
  CHECK(r.bijective());
}

TEST_CASE("every subdivision map is a bijection on PS(2) classes up to level 4") {
  auto x = ps2_iso(4);
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : enumerate_subdivisions(n)) {
      auto r = two_segal_map(x, p);
      INFO("n=", n, " members=", p.members.size());
      CHECK(r.bijective());
    }
}

TEST_CASE("left and right verdict tables are all true on PS(2)") {
  auto x = ps2_iso(4);
  CHECK(all_ok(check_left(x)));
  CHECK(all_ok(check_right(x)));
}

TEST_CASE("upper and lower tables agree with the left and right families") {
  auto x = ps2_iso(4);
  bool lower = all_ok(check_lower(x));
  bool upper = all_ok(check_upper(x));
  bool left = all_ok(check_left(x));
  bool right = all_ok(check_right(x));
  CHECK(lower == left);
  CHECK(upper == right);
  CHECK(lower);
  // the reversed set swaps the two families
  auto rx = reverse_simplicial(x);
  CHECK(all_ok(check_left(rx)) == right);
  CHECK(all_ok(check_upper(rx)) == lower);
}

TEST_CASE("projection surjectivity on PS(2) across P_3 and P_4 triangulations") {
  auto x = ps2_iso(4);
  for (int n = 3; n <= 4; ++n)
    for (const auto& t : enumerate_triangulations(n))
      CHECK(check_projection_surjective(x, t));
}

TEST_CASE("parallel and serial limit enumeration agree") {
  auto x = ps2_iso(4);
  for (const auto& p : enumerate_subdivisions(4)) {
    auto a = limit_over_subdivision(x, p, false);
    auto b = limit_over_subdivision(x, p, true);
    CHECK(a == b);
  }
}

TEST_CASE("a collapsed top level is caught with a collision witness") {
  auto x = doubled_top();
  CHECK(validate_simplicial(x).ok());
  auto t = subdivision_from_diagonals(3, {{0, 2}});
  auto r = two_segal_map(x, t);
  CHECK_FALSE(r.injective);
  REQUIRE(r.collision.has_value());
  CHECK(r.collision->first != r.collision->second);
  CHECK(r.surjective);
  // verdict tables flag it too
  bool left_all = all_ok(check_left(x));
  CHECK_FALSE(left_all);
}

TEST_CASE("stepwise factorization matches the fan map on PS(2)") {
  // peeling one triangle at a time off the fan at 0 composes to the same
  // function as the full fan comparison
  auto x = ps2_iso(4);
  int n = 4;
  auto fan = subdivision_from_diagonals(4, {{0, 2}, {0, 3}});
  auto full = two_segal_map(x, fan);
  CHECK(full.bijective());
  // stepwise: X_4 -> lim over {{0,1,2},{0,2,3,4}} -> lim over fan
  auto half = subdivision_from_diagonals(4, {{0, 2}});
  auto rhalf = two_segal_map(x, half);
  CHECK(rhalf.bijective());
  // composing the two bijections pointwise reproduces the fan images
  for (int z = 0; z < x.level_sizes[n]; ++z) {
    LimitTuple direct;
    for (const auto& m : fan.members) direct.push_back(restrict_element(x, n, m, z));
    // via the half step: restrict to {0,2,3,4} then split {0,2,3},{0,3,4}
    int big = restrict_element(x, n, {0, 2, 3, 4}, z);
    LimitTuple via{restrict_element(x, n, {0, 1, 2}, z),
                   restrict_element(x, 3, {0, 1, 2}, big),
                   restrict_element(x, 3, {0, 2, 3}, big)};
    CHECK(direct == via);
  }
}
