#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/fixtures.hpp"
#include "segal/search.hpp"

using namespace segal;

TEST_CASE("fixture names resolve and bogus ones do not") {
  for (const char* name : {"Z", "PS2", "PS3", "PS2xPS2"}) {
    CofStructure s = fixture_by_name(name);
    CHECK(validate_cof(s, true).ok());
  }
  CHECK_THROWS_AS(fixture_by_name("PS4"), InputError);
  CHECK_THROWS_AS(fixture_by_name(""), InputError);
}

TEST_CASE("random closures are valid, bounded, and seed-determined") {
  CofStructure ambient = fixture_by_name("PS2xPS2");
  for (std::uint64_t t = 0; t < 6; ++t) {
    std::vector<Obj> seed_a, seed_b;
    CofStructure a = random_closure(ambient, t, 12, &seed_a);
    CofStructure b = random_closure(ambient, t, 12, &seed_b);
    CHECK(validate_cof(a, true).ok());
    CHECK(a.base->n_objects() <= 12);
    CHECK(seed_a == seed_b);
    CHECK(a.base->n_objects() == b.base->n_objects());
    CHECK(a.base->n_morphisms() == b.base->n_morphisms());
  }
}

TEST_CASE("fixture-only search finds nothing and counts its work") {
  SearchConfig cfg;
  cfg.fixtures = {"Z", "PS2"};
  SearchReport rep = counterexample_search(cfg);
  CHECK(rep.counterexamples == 0);
  REQUIRE(rep.trials.size() == 2);
  CHECK(rep.trials[0].source == "fixture:Z");
  CHECK(rep.trials[1].source == "fixture:PS2");
  // P_2 and P_3 triangulations all touch vertex 0 or vertex n; at the
  // default max_level only the three middle triangulations of P_4 are
  // neither-classified.
  for (const SearchTrial& t : rep.trials) {
    CHECK(t.triangulations_checked == 3);
    CHECK_FALSE(t.counterexample);
    CHECK(t.detail.empty());
  }
  CHECK(rep.trials[1].level_sizes == std::vector<int>{1, 3, 6, 10, 15});
}

TEST_CASE("random trials replay bit-for-bit from the master seed") {
  SearchConfig cfg;
  cfg.seed = 7;
  cfg.random_trials = 5;
  cfg.max_level = 3;
  SearchReport a = counterexample_search(cfg);
  SearchReport b = counterexample_search(cfg);
  CHECK(a.counterexamples == 0);
  REQUIRE(a.trials.size() == 5);
  REQUIRE(b.trials.size() == 5);
  for (size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].trial_seed == b.trials[i].trial_seed);
    CHECK(a.trials[i].seed_objects == b.trials[i].seed_objects);
    CHECK(a.trials[i].n_objects == b.trials[i].n_objects);
    CHECK(a.trials[i].n_morphisms == b.trials[i].n_morphisms);
    CHECK(a.trials[i].level_sizes == b.trials[i].level_sizes);
    CHECK(a.trials[i].detail == b.trials[i].detail);
  }

  // a different master seed draws different trial seeds
  cfg.seed = 8;
  SearchReport c = counterexample_search(cfg);
  bool any_diff = false;
  for (size_t i = 0; i < c.trials.size(); ++i)
    any_diff = any_diff || c.trials[i].trial_seed != a.trials[i].trial_seed;
  CHECK(any_diff);
}
