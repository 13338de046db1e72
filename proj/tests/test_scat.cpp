#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/fixtures.hpp"
#include "segal/scat.hpp"

using namespace segal;

namespace {

// Orbit count of the (groupoid) category: objects up to isomorphism.
int iso_class_count(const FinCategory& c) {
  std::vector<int> cls(c.n_objects(), -1);
  int next = 0;
  for (Obj x = 0; x < c.n_objects(); ++x) {
    if (cls[x] != -1) continue;
    cls[x] = next;
    for (Obj y = 0; y < c.n_objects(); ++y) {
      if (cls[y] != -1) continue;
      for (Mor m : c.hom(x, y))
        if (is_isomorphism(c, m)) {
          cls[y] = next;
          break;
        }
    }
    ++next;
  }
  return next;
}

}  // namespace

TEST_CASE("staircase enumeration is exhaustive and valid") {
  auto s = fixture_PS(2);
  std::vector<int> expected{1, 3, 9, 30};
  for (int n = 0; n <= 3; ++n) {
    auto sh = ar_shape(n);
    auto objs = enumerate_sobjects(s, sh);
    CHECK(static_cast<int>(objs.size()) == expected[n]);
    for (const auto& d : objs) CHECK(validate_sobject(s, sh, d).ok());
  }
  // Every canonical chain fill is among the enumerated staircases.
  auto sh = ar_shape(3);
  PushoutOracle po(s.base);
  auto all = enumerate_sobjects(s, sh);
  for (const auto& ch : enumerate_chains(s, 3)) {
    auto d = chain_to_sobject(s, sh, po, ch);
    bool found = false;
    for (const auto& e : all)
      if (e.fun.omap == d.fun.omap && e.fun.mmap == d.fun.mmap) found = true;
    CHECK(found);
  }
}

TEST_CASE("level-1 staircase category is the base category") {
  auto s = fixture_PS(2);
  auto sc = build_sn_category(s, 1);
  CHECK(sc.cat->n_objects() == 3);
  CHECK(sc.cat->n_morphisms() == 23);
  CHECK(validate_category(*sc.cat).ok());
}

TEST_CASE("materialized staircase categories at level 2 and 3") {
  auto s = fixture_PS(2);
  auto s2 = build_sn_category(s, 2);
  CHECK(s2.cat->n_objects() == 9);
  CHECK(s2.cat->n_morphisms() == 328);
  CHECK(validate_category(*s2.cat).ok());
  auto i3 = build_isn_category(s, 3);
  CHECK(i3.cat->n_objects() == 30);
  CHECK(i3.cat->n_morphisms() == 232);
  CHECK(is_groupoid(*i3.cat));
}

TEST_CASE("staircase isomorphism classes match the chain classes") {
  auto s = fixture_PS(2);
  auto sd = iso_s_dot(s, 3);
  for (int n = 0; n <= 3; ++n) {
    auto isn = build_isn_category(s, n);
    CHECK(iso_class_count(*isn.cat) == sd.x.level_sizes[n]);
  }
}

TEST_CASE("top-row readoff is an equivalence onto the chain groupoid") {
  auto s = fixture_PS(2);
  for (int n = 0; n <= 3; ++n) {
    auto isn = build_isn_category(s, n);
    auto mn = build_mn_category(s, n);
    CHECK(is_groupoid(*mn.cat));
    auto f = mu_functor(s, isn, mn);
    REQUIRE(validate_functor(f).ok());
    CHECK(check_equivalence(f).ok());
  }
  // The equivalence is not an isomorphism of categories: distinct
  // staircases share a top row.
  auto i3 = build_isn_category(s, 3);
  auto m3 = build_mn_category(s, 3);
  CHECK(i3.cat->n_objects() == 30);
  CHECK(m3.cat->n_objects() == 19);
  CHECK(m3.cat->n_morphisms() == 70);
}

TEST_CASE("edge restrictions are isofibrations") {
  auto s = fixture_PS(2);
  auto s1 = build_sn_category(s, 1);
  auto s2 = build_sn_category(s, 2);
  auto s3 = build_sn_category(s, 3);
  for (auto verts : {std::vector<int>{0, 1}, std::vector<int>{0, 2}}) {
    auto r = restriction_functor(s2, s1, verts);
    REQUIRE(validate_functor(r).ok());
    CHECK(check_isofibration(r));
  }
  CHECK(check_isofibration(restriction_functor(s3, s1, {0, 3})));
  CHECK(check_isofibration(restriction_functor(s3, s2, {0, 1, 3})));

  auto i2 = build_isn_category(s, 2);
  auto i1 = build_isn_category(s, 1);
  CHECK(check_isofibration(restriction_functor(i2, i1, {0, 2})));
}

TEST_CASE("categorical comparisons hold for every variant on PS(2)") {
  auto s = fixture_PS(2);
  for (const char* variant : {"iso-set", "groupoid", "category", "w-category"}) {
    auto vs = check_categorical_2segal(s, 3, variant);
    CHECK(!vs.empty());
    for (const auto& v : vs) {
      CAPTURE(variant);
      CAPTURE(v.n);
      CAPTURE(v.j);
      CHECK(v.ok());
    }
  }
}

TEST_CASE("w-category with a supplied weak equivalence class") {
  auto s = fixture_PS(2);
  auto w = with_iso_weq(s);
  auto vs = check_categorical_2segal(s, 2, "w-category", &w);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].ok());
}

TEST_CASE("oversized materializations fail cleanly") {
  auto s = fixture_PS(3);
  // The level-2 isomorphism categories are fine, but the 2-fiber product's
  // composition table would not fit; the guard must throw, not allocate.
  CHECK(static_cast<int>(enumerate_sobjects(s, ar_shape(2)).size()) == 33);
  CHECK_THROWS_AS(check_categorical_2segal(s, 2, "groupoid"), InputError);
}

TEST_CASE("unknown variants are rejected") {
  auto s = fixture_PS(2);
  CHECK_THROWS_AS(check_categorical_2segal(s, 2, "simplicial"), InputError);
}
