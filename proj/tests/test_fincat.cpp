#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/fincat.hpp"

using namespace segal;

namespace {

// Walking arrow: two objects, one non-identity morphism between them.
FinCategory arrow_category() {
  FinCategoryBuilder b;
  Obj a = b.add_object("a");
  Obj x = b.add_object("x");
  Mor ida = b.add_morphism(a, a, "id_a");
  Mor idx = b.add_morphism(x, x, "id_x");
  Mor f = b.add_morphism(a, x, "f");
  b.set_identity(a, ida);
  b.set_identity(x, idx);
  b.set_compose(ida, ida, ida);
  b.set_compose(idx, idx, idx);
  b.set_compose(f, ida, f);
  b.set_compose(idx, f, f);
  return std::move(b).build();
}

// Commutative square poset: 0 -> {1, 2} -> 3 with both composites equal.
// Identities are morphisms 0..3; top=4, left=5, right=6, bottom=7, diag=8.
FinCategory square_poset() {
  FinCategoryBuilder b;
  for (int i = 0; i < 4; ++i) b.add_object();
  Mor id[4];
  for (int i = 0; i < 4; ++i) {
    id[i] = b.add_morphism(i, i);
    b.set_identity(i, id[i]);
    b.set_compose(id[i], id[i], id[i]);
  }
  Mor top = b.add_morphism(0, 1);
  Mor left = b.add_morphism(0, 2);
  Mor right = b.add_morphism(1, 3);
  Mor bottom = b.add_morphism(2, 3);
  Mor diag = b.add_morphism(0, 3);
  b.set_compose(right, top, diag);
  b.set_compose(bottom, left, diag);
  struct Edge { Mor m; Obj s, t; };
  for (Edge e : {Edge{top, 0, 1}, Edge{left, 0, 2}, Edge{right, 1, 3},
                 Edge{bottom, 2, 3}, Edge{diag, 0, 3}}) {
    b.set_compose(e.m, id[e.s], e.m);
    b.set_compose(id[e.t], e.m, e.m);
  }
  return std::move(b).build();
}

}  // namespace

TEST_CASE("one object category validates") {
  FinCategoryBuilder b;
  Obj z = b.add_object("0");
  Mor id = b.add_morphism(z, z, "id");
  b.set_identity(z, id);
  b.set_compose(id, id, id);
  FinCategory c = std::move(b).build();
  CHECK(validate_category(c).ok());
  CHECK(is_zero_object(c, z));
  CHECK(is_isomorphism(c, id));
}

TEST_CASE("missing identity and composition gaps are reported") {
  FinCategoryBuilder b;
  Obj a = b.add_object("a");
  Obj x = b.add_object("x");
  Mor idx = b.add_morphism(x, x, "id_x");
  b.set_identity(x, idx);
  b.set_compose(idx, idx, idx);
  b.add_morphism(a, x, "f");
  FinCategory c = std::move(b).build();
  auto rep = validate_category(c);
  CHECK_FALSE(rep.ok());
  bool saw_identity = false, saw_gap = false;
  for (const auto& v : rep.violations) {
    if (v.find("no identity") != std::string::npos) saw_identity = true;
    if (v.find("undefined") != std::string::npos) saw_gap = true;
  }
  CHECK(saw_identity);
  CHECK(saw_gap);
}

TEST_CASE("walking arrow basics") {
  FinCategory c = arrow_category();
  CHECK(validate_category(c).ok());
  Mor f = 2;  // the non-identity arrow
  CHECK_FALSE(is_isomorphism(c, f));
  CHECK_FALSE(is_zero_object(c, 0));
  FinCategory op = opposite(c);
  CHECK(validate_category(op).ok());
  CHECK(op.src(f) == c.tgt(f));
  FinCategory opop = opposite(op);
  CHECK(opop.src(f) == c.src(f));
  CHECK(opop.compose(f, 0) == c.compose(f, 0));
}

TEST_CASE("pushout of identity span is the common object") {
  FinCategory c = arrow_category();
  Mor ida = c.identity(0);
  auto po = find_pushout(c, ida, ida);
  REQUIRE(po.has_value());
  CHECK(po->apex == 0);
  CHECK(po->from_b == ida);
  CHECK(po->from_c == ida);
  CHECK(is_pushout(c, ida, ida, po->apex, po->from_b, po->from_c));
}

TEST_CASE("square poset pushout and pullback") {
  FinCategory c = square_poset();
  CHECK(validate_category(c).ok());
  // span 1 <- 0 -> 2 has apex 3
  Mor top = 4, left = 5, right = 6, bottom = 7;
  auto po = find_pushout(c, top, left);
  REQUIRE(po.has_value());
  CHECK(po->apex == 3);
  CHECK(po->from_b == right);
  CHECK(po->from_c == bottom);
  // cospan 1 -> 3 <- 2 pulls back to 0
  auto pb = find_pullback(c, right, bottom);
  REQUIRE(pb.has_value());
  CHECK(pb->apex == 0);
  CHECK(pb->to_b == top);
  CHECK(pb->to_c == left);
  CHECK(is_pullback(c, right, bottom, 0, top, left));
  CHECK_FALSE(is_pushout(c, top, left, 3, bottom, right));
}

TEST_CASE("functor validation catches a broken composition image") {
  auto c = std::make_shared<FinCategory>(arrow_category());
  FinFunctor f = identity_functor(c);
  CHECK(validate_functor(f).ok());
  f.mmap[2] = 0;  // send the arrow to id_a: endpoints break
  CHECK_FALSE(validate_functor(f).ok());
}

TEST_CASE("natural transformations between constant diagrams") {
  auto shape = std::make_shared<FinCategory>(arrow_category());
  auto c = std::make_shared<FinCategory>(arrow_category());
  FinFunctor d1 = identity_functor(c);
  d1.src = shape;
  // identity diagram vs itself: transformations are commuting squares over f
  auto nats = natural_transformations(d1, d1);
  // components (id_a, id_x) only: hom(a,a) = {id}, hom(x,x) = {id}
  REQUIRE(nats.size() == 1);
  CHECK(nats[0][0] == c->identity(0));
  CHECK(nats[0][1] == c->identity(1));
  CHECK(diagram_isomorphic(d1, d1));
}

TEST_CASE("diagram isomorphism distinguishes different vertices") {
  auto shape = std::make_shared<FinCategory>([] {
    FinCategoryBuilder b;
    Obj p = b.add_object("p");
    Mor id = b.add_morphism(p, p);
    b.set_identity(p, id);
    b.set_compose(id, id, id);
    return std::move(b).build();
  }());
  auto c = std::make_shared<FinCategory>(arrow_category());
  FinFunctor at_a{shape, c, {0}, {c->identity(0)}};
  FinFunctor at_x{shape, c, {1}, {c->identity(1)}};
  CHECK(diagram_isomorphic(at_a, at_a));
  CHECK_FALSE(diagram_isomorphic(at_a, at_x));
}
