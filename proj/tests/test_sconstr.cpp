#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/fixtures.hpp"
#include "segal/sconstr.hpp"

using namespace segal;

TEST_CASE("staircase shape is a valid poset category") {
  for (int n = 0; n <= 4; ++n) {
    auto sh = ar_shape(n);
    CHECK(sh.cat->n_objects() == (n + 1) * (n + 2) / 2);
    CHECK(validate_category(*sh.cat).ok());
  }
  auto sh = ar_shape(3);
  CHECK(sh.arrow(0, 1, 0, 3) != kNone);
  CHECK(sh.arrow(0, 3, 0, 1) == kNone);
  CHECK(sh.arrow(1, 2, 2, 3) != kNone);
}

TEST_CASE("chain enumeration counts on PS(2)") {
  auto ps2 = fixture_PS(2);
  CHECK(enumerate_chains(ps2, 0).size() == 1);
  CHECK(enumerate_chains(ps2, 1).size() == 3);
  // paths through the injection multigraph on sizes {0,1,2}
  CHECK(enumerate_chains(ps2, 3).size() == 19);
}

TEST_CASE("chain isomorphism identifies based injections with the same shape") {
  auto ps2 = fixture_PS(2);
  const FinCategory& c = *ps2.base;
  CofChain a{2, {1, 2}, {ps_morphism(c, 1, 2, {1})}};
  CofChain b{2, {1, 2}, {ps_morphism(c, 1, 2, {2})}};
  CHECK(chain_isomorphic(ps2, a, b));
  CofChain d{2, {1, 1}, {c.identity(1)}};
  CHECK_FALSE(chain_isomorphic(ps2, a, d));
}

TEST_CASE("staircase fill and read-back round trip") {
  auto ps3 = fixture_PS(3);
  const FinCategory& c = *ps3.base;
  auto sh = ar_shape(3);
  PushoutOracle po(ps3.base);
  CofChain ch{3,
              {1, 2, 3},
              {ps_morphism(c, 1, 2, {1}), ps_morphism(c, 2, 3, {1, 2})}};
  auto a = chain_to_sobject(ps3, sh, po, ch);
  CHECK(validate_sobject(ps3, sh, a).ok());
  CHECK(mu(sh, a) == ch);
  // quotient sizes on the staircase: A_{1,2} has size 1, A_{1,3} size 2,
  // A_{2,3} size 1 (object ids are sizes in PS(3))
  CHECK(a.fun.omap[sh.index(1, 2)] == 1);
  CHECK(a.fun.omap[sh.index(1, 3)] == 2);
  CHECK(a.fun.omap[sh.index(2, 3)] == 1);
}

TEST_CASE("zero chain fills to the zero staircase") {
  auto ps2 = fixture_PS(2);
  auto sh = ar_shape(2);
  PushoutOracle po(ps2.base);
  CofChain zch{2, {0, 0}, {ps2.base->identity(0)}};
  auto a = chain_to_sobject(ps2, sh, po, zch);
  for (Obj o : a.fun.omap) CHECK(o == ps2.zero);
}

TEST_CASE("face and degeneracy chain operations") {
  auto ps3 = fixture_PS(3);
  const FinCategory& c = *ps3.base;
  PushoutOracle po(ps3.base);
  CofChain ch{3,
              {1, 2, 3},
              {ps_morphism(c, 1, 2, {1}), ps_morphism(c, 2, 3, {1, 2})}};
  auto d1 = chain_face(ps3, po, ch, 1);
  CHECK(d1.objects == std::vector<Obj>{2, 3});
  auto d2 = chain_face(ps3, po, ch, 2);
  CHECK(d2.objects == std::vector<Obj>{1, 3});
  CHECK(d2.maps == std::vector<Mor>{c.compose(ch.maps[1], ch.maps[0])});
  auto d3 = chain_face(ps3, po, ch, 3);
  CHECK(d3.objects == std::vector<Obj>{1, 2});
  CHECK(d3.maps == std::vector<Mor>{ch.maps[0]});
  auto d0 = chain_face(ps3, po, ch, 0);
  CHECK(d0.objects == std::vector<Obj>{1, 2});  // quotient sizes

  auto s0 = chain_degeneracy(ps3, ch, 0);
  CHECK(s0.objects == std::vector<Obj>{0, 1, 2, 3});
  auto s2 = chain_degeneracy(ps3, ch, 2);
  CHECK(s2.objects == std::vector<Obj>{1, 2, 2, 3});
  CHECK(s2.maps[1] == c.identity(2));
  auto s3 = chain_degeneracy(ps3, ch, 3);
  CHECK(s3.objects == std::vector<Obj>{1, 2, 3, 3});
  CHECK(s3.maps.back() == c.identity(3));
}

TEST_CASE("iso class levels for the trivial fixture") {
  auto z = fixture_Z();
  auto sd = iso_s_dot(z, 4, true);
  for (int n = 0; n <= 4; ++n) CHECK(sd.x.level_sizes[n] == 1);
  CHECK(validate_simplicial(sd.x).ok());
}

TEST_CASE("iso class levels for PS(2) match the closed form") {
  auto ps2 = fixture_PS(2);
  auto sd = iso_s_dot(ps2, 4, true);
  // nondecreasing n-tuples from {0,1,2}: C(n+2, 2)
  CHECK(sd.x.level_sizes == std::vector<int>{1, 3, 6, 10, 15});
  CHECK(validate_simplicial(sd.x).ok());
}

TEST_CASE("iso class levels for PS(3)") {
  auto ps3 = fixture_PS(3);
  auto sd = iso_s_dot(ps3, 3, true);
  // nondecreasing n-tuples from {0,1,2,3}: C(n+3, 3)
  CHECK(sd.x.level_sizes == std::vector<int>{1, 4, 10, 20});
  CHECK(validate_simplicial(sd.x).ok());
}

TEST_CASE("chain classes equal independently counted staircase classes") {
  // fill every chain to a staircase and quotient the staircases by natural
  // isomorphism; counts must agree with the chain classes at each level
  auto ps2 = fixture_PS(2);
  PushoutOracle po(ps2.base);
  for (int n = 1; n <= 3; ++n) {
    auto sh = ar_shape(n);
    auto chains = enumerate_chains(ps2, n);
    std::vector<SObjectDiagram> reps;
    for (const auto& ch : chains) {
      auto a = chain_to_sobject(ps2, sh, po, ch);
      bool fresh = true;
      for (const auto& r : reps)
        if (diagram_isomorphic(r.fun, a.fun)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(a);
    }
    auto sd = iso_s_dot(ps2, n);
    CHECK(static_cast<int>(reps.size()) == sd.x.level_sizes[n]);
  }
}

TEST_CASE("two face routes agree: compose-then-fill equals fill-then-restrict") {
  // chain route: d_i on the chain, then fill; staircase route: fill, then
  // precompose with the coface inclusion of vertex sets
  auto ps2 = fixture_PS(2);
  const FinCategory& c = *ps2.base;
  PushoutOracle po(ps2.base);
  int n = 3;
  auto shn = ar_shape(n);
  auto shm = ar_shape(n - 1);
  for (const auto& ch : enumerate_chains(ps2, n)) {
    auto big = chain_to_sobject(ps2, shn, po, ch);
    for (int i = 0; i <= n; ++i) {
      auto small = chain_to_sobject(ps2, shm, po, chain_face(ps2, po, ch, i));
      // restrict the filled staircase to the vertices without i
      std::vector<int> keep;
      for (int v = 0; v <= n; ++v)
        if (v != i) keep.push_back(v);
      FinFunctor restr;
      restr.src = shm.cat;
      restr.tgt = ps2.base;
      restr.omap.resize(shm.pairs.size());
      restr.mmap.resize(shm.cat->n_morphisms());
      for (size_t p = 0; p < shm.pairs.size(); ++p) {
        auto [a, b] = shm.pairs[p];
        restr.omap[p] = big.fun.omap[shn.index(keep[a], keep[b])];
      }
      for (size_t p = 0; p < shm.pairs.size(); ++p)
        for (size_t q = 0; q < shm.pairs.size(); ++q) {
          auto [a, b] = shm.pairs[p];
          auto [d, e] = shm.pairs[q];
          Mor arr = shm.arrow(a, b, d, e);
          if (arr != kNone)
            restr.mmap[arr] =
                big.fun.mmap[shn.arrow(keep[a], keep[b], keep[d], keep[e])];
        }
      CHECK(diagram_isomorphic(small.fun, restr));
    }
  }
}
