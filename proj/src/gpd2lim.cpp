#include "segal/gpd2lim.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

namespace segal {

namespace {

// Generous caps: materialized limit categories are tuple-indexed and grow
// quickly, but hom indices are quadratic in objects, so stay bounded.
const Limits kLimitCatLimits{2000, 500000};

struct ArrowInfo {
  Mor u = kNone;
  Obj a = kNone;
  Obj b = kNone;
};

// Composition tables are quadratic in hom-set sizes; refuse to materialize
// ones that would dwarf memory instead of letting the allocator die.
void guard_composition_pairs(const std::vector<std::pair<int, int>>& ends,
                             const std::vector<std::vector<Mor>>& outgoing) {
  long long pairs = 0;
  for (const auto& [src, tgt] : ends) pairs += static_cast<long long>(outgoing[tgt].size());
  if (pairs > 20000000)
    throw InputError("materialized category too large: " + std::to_string(pairs) +
                     " composition pairs");
}

}  // namespace

ValidationReport validate_cat_diagram(const CatDiagram& d) {
  ValidationReport rep;
  const FinCategory& sh = *d.shape;
  if (static_cast<int>(d.cats.size()) != sh.n_objects())
    rep.violations.push_back("diagram: one category per shape object required");
  if (static_cast<int>(d.functors.size()) != sh.n_morphisms())
    rep.violations.push_back("diagram: one functor per shape morphism required");
  if (!rep.ok()) return rep;

  for (Mor u = 0; u < sh.n_morphisms(); ++u) {
    const FinFunctor& fu = d.functors[u];
    if (fu.src.get() != d.cats[sh.src(u)].get() ||
        fu.tgt.get() != d.cats[sh.tgt(u)].get()) {
      rep.violations.push_back("diagram: functor " + std::to_string(u) +
                               " endpoints disagree with the shape");
      continue;
    }
    auto fr = validate_functor(fu);
    for (const auto& v : fr.violations)
      rep.violations.push_back("diagram functor " + std::to_string(u) + ": " + v);
    if (sh.is_identity(u)) {
      for (Obj x = 0; x < fu.src->n_objects(); ++x)
        if (fu.omap[x] != x) {
          rep.violations.push_back("diagram: identity arrow " + std::to_string(u) +
                                   " does not act as the identity functor");
          break;
        }
      for (Mor m = 0; m < fu.src->n_morphisms(); ++m)
        if (fu.mmap[m] != m) {
          rep.violations.push_back("diagram: identity arrow " + std::to_string(u) +
                                   " does not act as the identity functor");
          break;
        }
    }
  }
  // Strict functoriality: composite arrows act as composite functors.
  for (Mor u = 0; u < sh.n_morphisms(); ++u)
    for (Mor v = 0; v < sh.n_morphisms(); ++v) {
      if (!sh.composable(v, u)) continue;
      Mor w = sh.compose(v, u);
      if (w == kNone) continue;  // validate_category reports table gaps
      for (Obj x = 0; x < d.functors[u].src->n_objects(); ++x)
        if (d.functors[w].omap[x] != d.functors[v].omap[d.functors[u].omap[x]]) {
          rep.violations.push_back("diagram: arrows " + std::to_string(v) + "*" +
                                   std::to_string(u) + " do not compose strictly");
          goto next_pair;
        }
      for (Mor m = 0; m < d.functors[u].src->n_morphisms(); ++m)
        if (d.functors[w].mmap[m] != d.functors[v].mmap[d.functors[u].mmap[m]]) {
          rep.violations.push_back("diagram: arrows " + std::to_string(v) + "*" +
                                   std::to_string(u) + " do not compose strictly");
          goto next_pair;
        }
    next_pair:;
    }
  return rep;
}

Materialized projective_2_limit(const CatDiagram& d) {
  auto rep = validate_cat_diagram(d);
  if (!rep.ok()) throw InputError("projective_2_limit: " + rep.violations.front());
  const FinCategory& sh = *d.shape;
  const int nv = sh.n_objects();

  std::vector<ArrowInfo> arrows;
  std::vector<int> arrow_index(sh.n_morphisms(), -1);
  for (Mor u = 0; u < sh.n_morphisms(); ++u)
    if (!sh.is_identity(u)) {
      arrow_index[u] = static_cast<int>(arrows.size());
      arrows.push_back({u, sh.src(u), sh.tgt(u)});
    }
  const int na = static_cast<int>(arrows.size());

  struct CPair {
    int iu = -1, iv = -1;  // v after u
    Mor w = kNone;
  };
  std::vector<CPair> cocycle;
  for (int iu = 0; iu < na; ++iu)
    for (int iv = 0; iv < na; ++iv)
      if (arrows[iu].b == arrows[iv].a)
        cocycle.push_back({iu, iv, sh.compose(arrows[iv].u, arrows[iu].u)});

  Materialized out;
  std::vector<Obj> parts(nv);
  std::vector<Mor> coh(na, kNone);

  auto coherence_ok = [&]() {
    for (const auto& p : cocycle) {
      const FinCategory& cc = *d.cats[arrows[p.iv].b];
      Mor lhs = cc.compose(coh[p.iv], d.functors[arrows[p.iv].u].on_mor(coh[p.iu]));
      Mor rhs = sh.is_identity(p.w) ? cc.identity(parts[arrows[p.iu].a])
                                    : coh[arrow_index[p.w]];
      if (lhs != rhs) return false;
    }
    return true;
  };

  std::function<void(int)> pick_coh = [&](int i) {
    if (i == na) {
      if (!coherence_ok()) return;
      out.obj_parts.push_back(parts);
      out.obj_coh.push_back(coh);
      return;
    }
    const FinCategory& cb = *d.cats[arrows[i].b];
    Obj img = d.functors[arrows[i].u].on_obj(parts[arrows[i].a]);
    for (Mor y : cb.hom(img, parts[arrows[i].b]))
      if (is_isomorphism(cb, y)) {
        coh[i] = y;
        pick_coh(i + 1);
      }
    coh[i] = kNone;
  };
  std::function<void(int)> pick_obj = [&](int v) {
    if (v == nv) {
      pick_coh(0);
      return;
    }
    for (Obj x = 0; x < d.cats[v]->n_objects(); ++x) {
      parts[v] = x;
      pick_obj(v + 1);
    }
  };
  pick_obj(0);

  const int nobj = static_cast<int>(out.obj_parts.size());
  FinCategoryBuilder bb(kLimitCatLimits);
  for (int o = 0; o < nobj; ++o) bb.add_object();

  // Per-vertex transformation components, constrained by the coherences.
  std::map<std::tuple<Obj, Obj, std::vector<Mor>>, Mor> mor_ids;
  std::vector<std::pair<int, int>> mor_ends;
  for (int o1 = 0; o1 < nobj; ++o1)
    for (int o2 = 0; o2 < nobj; ++o2) {
      std::vector<Mor> comps(nv, kNone);
      std::function<void(int)> pick = [&](int v) {
        if (v == nv) {
          Mor id = bb.add_morphism(o1, o2);
          mor_ids.emplace(std::make_tuple(o1, o2, comps), id);
          mor_ends.push_back({o1, o2});
          out.mor_parts.push_back(comps);
          return;
        }
        for (Mor x : d.cats[v]->hom(out.obj_parts[o1][v], out.obj_parts[o2][v])) {
          comps[v] = x;
          bool ok = true;
          for (int i = 0; i < na && ok; ++i) {
            Obj a = arrows[i].a, b = arrows[i].b;
            if (a > v || b > v) continue;
            const FinCategory& cb = *d.cats[b];
            ok = cb.compose(comps[b], out.obj_coh[o1][i]) ==
                 cb.compose(out.obj_coh[o2][i],
                            d.functors[arrows[i].u].on_mor(comps[a]));
          }
          if (ok) pick(v + 1);
        }
        comps[v] = kNone;
      };
      pick(0);
    }

  for (int o = 0; o < nobj; ++o) {
    std::vector<Mor> idc(nv);
    for (int v = 0; v < nv; ++v) idc[v] = d.cats[v]->identity(out.obj_parts[o][v]);
    auto it = mor_ids.find(std::make_tuple(o, o, idc));
    if (it == mor_ids.end()) throw InputError("projective_2_limit: identity lost");
    bb.set_identity(o, it->second);
  }
  const int nmor = static_cast<int>(mor_ends.size());
  std::vector<std::vector<Mor>> outgoing(nobj);
  for (Mor m = 0; m < nmor; ++m) outgoing[mor_ends[m].first].push_back(m);
  guard_composition_pairs(mor_ends, outgoing);
  for (Mor f = 0; f < nmor; ++f)
    for (Mor g : outgoing[mor_ends[f].second]) {
      std::vector<Mor> comps(nv);
      for (int v = 0; v < nv; ++v)
        comps[v] = d.cats[v]->compose(out.mor_parts[g][v], out.mor_parts[f][v]);
      auto it = mor_ids.find(
          std::make_tuple(mor_ends[f].first, mor_ends[g].second, comps));
      if (it == mor_ids.end()) throw InputError("projective_2_limit: not closed");
      bb.set_compose(g, f, it->second);
    }
  out.cat = std::make_shared<FinCategory>(std::move(bb).build());
  return out;
}

namespace {

// Walking cospan 0 -> 1 <- 2 with arrow ids: identities 0,1,2 then u=3, v=4.
std::shared_ptr<const FinCategory> cospan_shape() {
  FinCategoryBuilder b;
  for (int i = 0; i < 3; ++i) b.add_object();
  Mor id0 = b.add_morphism(0, 0), id1 = b.add_morphism(1, 1),
      id2 = b.add_morphism(2, 2);
  Mor u = b.add_morphism(0, 1), v = b.add_morphism(2, 1);
  b.set_identity(0, id0);
  b.set_identity(1, id1);
  b.set_identity(2, id2);
  b.set_compose(id0, id0, id0);
  b.set_compose(id1, id1, id1);
  b.set_compose(id2, id2, id2);
  b.set_compose(u, id0, u);
  b.set_compose(id1, u, u);
  b.set_compose(v, id2, v);
  b.set_compose(id1, v, v);
  return std::make_shared<FinCategory>(std::move(b).build());
}

}  // namespace

Materialized two_fiber_product(const FinFunctor& F, const FinFunctor& G) {
  if (F.tgt.get() != G.tgt.get())
    throw InputError("two_fiber_product: cospan legs must share a target");
  CatDiagram d;
  d.shape = cospan_shape();
  d.cats = {F.src, F.tgt, G.src};
  d.functors = {identity_functor(F.src), identity_functor(F.tgt),
                identity_functor(G.src), F, G};
  return projective_2_limit(d);
}

Materialized homotopy_pullback_category(const FinFunctor& F, const FinFunctor& G) {
  return two_fiber_product(F, G);
}

Materialized strict_pullback(const FinFunctor& F, const FinFunctor& G) {
  if (F.tgt.get() != G.tgt.get())
    throw InputError("strict_pullback: cospan legs must share a target");
  const FinCategory& A = *F.src;
  const FinCategory& C = *G.src;
  Materialized out;
  for (Obj a = 0; a < A.n_objects(); ++a)
    for (Obj c = 0; c < C.n_objects(); ++c)
      if (F.on_obj(a) == G.on_obj(c)) out.obj_parts.push_back({a, c});
  const int nobj = static_cast<int>(out.obj_parts.size());
  std::map<std::vector<Obj>, int> obj_ids;
  for (int o = 0; o < nobj; ++o) obj_ids.emplace(out.obj_parts[o], o);

  FinCategoryBuilder bb(kLimitCatLimits);
  for (int o = 0; o < nobj; ++o) bb.add_object();
  std::map<std::tuple<Obj, Obj, std::vector<Mor>>, Mor> mor_ids;
  std::vector<std::pair<int, int>> mor_ends;
  for (int o1 = 0; o1 < nobj; ++o1)
    for (int o2 = 0; o2 < nobj; ++o2)
      for (Mor al : A.hom(out.obj_parts[o1][0], out.obj_parts[o2][0]))
        for (Mor ga : C.hom(out.obj_parts[o1][1], out.obj_parts[o2][1]))
          if (F.on_mor(al) == G.on_mor(ga)) {
            Mor id = bb.add_morphism(o1, o2);
            mor_ids.emplace(std::make_tuple(o1, o2, std::vector<Mor>{al, ga}), id);
            mor_ends.push_back({o1, o2});
            out.mor_parts.push_back({al, ga});
          }
  for (int o = 0; o < nobj; ++o) {
    std::vector<Mor> idc{A.identity(out.obj_parts[o][0]),
                         C.identity(out.obj_parts[o][1])};
    bb.set_identity(o, mor_ids.at(std::make_tuple(o, o, idc)));
  }
  const int nmor = static_cast<int>(mor_ends.size());
  std::vector<std::vector<Mor>> outgoing(nobj);
  for (Mor m = 0; m < nmor; ++m) outgoing[mor_ends[m].first].push_back(m);
  guard_composition_pairs(mor_ends, outgoing);
  for (Mor f = 0; f < nmor; ++f)
    for (Mor g : outgoing[mor_ends[f].second]) {
      std::vector<Mor> comps{A.compose(out.mor_parts[g][0], out.mor_parts[f][0]),
                             C.compose(out.mor_parts[g][1], out.mor_parts[f][1])};
      bb.set_compose(g, f, mor_ids.at(std::make_tuple(
                               mor_ends[f].first, mor_ends[g].second, comps)));
    }
  out.cat = std::make_shared<FinCategory>(std::move(bb).build());
  return out;
}

FinFunctor hpb_comparison(const Materialized& pb, const Materialized& hpb,
                          const FinFunctor& F, const FinFunctor& G) {
  const FinCategory& B = *F.tgt;
  std::map<std::pair<std::vector<Obj>, std::vector<Mor>>, Obj> hobj;
  for (int o = 0; o < static_cast<int>(hpb.obj_parts.size()); ++o)
    hobj.emplace(std::make_pair(hpb.obj_parts[o], hpb.obj_coh[o]), o);
  std::map<std::tuple<Obj, Obj, std::vector<Mor>>, Mor> hmor;
  for (int m = 0; m < static_cast<int>(hpb.mor_parts.size()); ++m)
    hmor.emplace(std::make_tuple(hpb.cat->src(m), hpb.cat->tgt(m),
                                 hpb.mor_parts[m]),
                 m);

  FinFunctor H;
  H.src = pb.cat;
  H.tgt = hpb.cat;
  for (const auto& p : pb.obj_parts) {
    Obj b = F.on_obj(p[0]);
    std::vector<Obj> parts{p[0], b, p[1]};
    std::vector<Mor> coh{B.identity(b), B.identity(b)};
    H.omap.push_back(hobj.at(std::make_pair(parts, coh)));
  }
  for (int m = 0; m < static_cast<int>(pb.mor_parts.size()); ++m) {
    const auto& p = pb.mor_parts[m];
    std::vector<Mor> comps{p[0], F.on_mor(p[0]), p[1]};
    H.mmap.push_back(hmor.at(std::make_tuple(H.omap[pb.cat->src(m)],
                                             H.omap[pb.cat->tgt(m)], comps)));
  }
  return H;
}

bool check_isofibration(const FinFunctor& F) {
  const FinCategory& A = *F.src;
  const FinCategory& B = *F.tgt;
  for (Obj a = 0; a < A.n_objects(); ++a) {
    Obj fa = F.on_obj(a);
    for (Obj b2 = 0; b2 < B.n_objects(); ++b2)
      for (Mor f : B.hom(fa, b2)) {
        if (!is_isomorphism(B, f)) continue;
        bool lifted = false;
        for (Obj a2 = 0; a2 < A.n_objects() && !lifted; ++a2)
          for (Mor g : A.hom(a, a2))
            if (F.on_mor(g) == f && is_isomorphism(A, g)) {
              lifted = true;
              break;
            }
        if (!lifted) return false;
      }
  }
  return true;
}

EquivalenceVerdict check_equivalence(const FinFunctor& F) {
  const FinCategory& A = *F.src;
  const FinCategory& B = *F.tgt;
  EquivalenceVerdict v;
  v.ess_surj = true;
  for (Obj b = 0; b < B.n_objects() && v.ess_surj; ++b) {
    bool hit = false;
    for (Obj a = 0; a < A.n_objects() && !hit; ++a)
      for (Mor f : B.hom(F.on_obj(a), b))
        if (is_isomorphism(B, f)) {
          hit = true;
          break;
        }
    v.ess_surj = hit;
  }
  v.full = true;
  v.faithful = true;
  for (Obj a1 = 0; a1 < A.n_objects(); ++a1)
    for (Obj a2 = 0; a2 < A.n_objects(); ++a2) {
      const auto& dom = A.hom(a1, a2);
      for (Mor g : B.hom(F.on_obj(a1), F.on_obj(a2))) {
        int preimages = 0;
        for (Mor f : dom)
          if (F.on_mor(f) == g) ++preimages;
        if (preimages == 0) v.full = false;
        if (preimages > 1) v.faithful = false;
      }
    }
  return v;
}

bool check_slice_initial(const FinFunctor& H, Obj x) {
  const FinCategory& A = *H.src;
  const FinCategory& T = *H.tgt;
  T.check_obj(x);
  std::vector<std::pair<Obj, Mor>> slice;
  for (Obj a = 0; a < A.n_objects(); ++a)
    for (Mor f : T.hom(H.on_obj(a), x)) slice.push_back({a, f});
  for (const auto& [a0, f0] : slice) {
    bool initial = true;
    for (const auto& [a, f] : slice) {
      int arrows = 0;
      for (Mor g : A.hom(a0, a))
        if (T.compose(f, H.on_mor(g)) == f0) ++arrows;
      if (arrows != 1) {
        initial = false;
        break;
      }
    }
    if (initial) return true;
  }
  return false;
}

bool is_groupoid(const FinCategory& c) {
  for (Mor m = 0; m < c.n_morphisms(); ++m)
    if (!is_isomorphism(c, m)) return false;
  return true;
}

std::shared_ptr<const FinCategory> cyclic_groupoid(
    const std::vector<std::pair<int, int>>& classes) {
  FinCategoryBuilder b(Limits{64, 8192});
  std::vector<int> base;
  for (const auto& [no, order] : classes) {
    if (no <= 0 || order <= 0) throw InputError("cyclic_groupoid: bad class");
    base.push_back(b.n_objects());
    for (int i = 0; i < no; ++i) b.add_object();
  }
  // Morphism (x, y, t): the t-th translation x -> y inside one class.
  std::map<std::tuple<Obj, Obj, int>, Mor> ids;
  for (size_t c = 0; c < classes.size(); ++c) {
    auto [no, order] = classes[c];
    for (int x = 0; x < no; ++x)
      for (int y = 0; y < no; ++y)
        for (int t = 0; t < order; ++t) {
          Mor m = b.add_morphism(base[c] + x, base[c] + y,
                                 "t" + std::to_string(t));
          ids.emplace(std::make_tuple(base[c] + x, base[c] + y, t), m);
        }
    for (int x = 0; x < no; ++x)
      b.set_identity(base[c] + x, ids.at(std::make_tuple(base[c] + x, base[c] + x, 0)));
    for (int x = 0; x < no; ++x)
      for (int y = 0; y < no; ++y)
        for (int z = 0; z < no; ++z)
          for (int t1 = 0; t1 < order; ++t1)
            for (int t2 = 0; t2 < order; ++t2)
              b.set_compose(ids.at(std::make_tuple(base[c] + y, base[c] + z, t2)),
                            ids.at(std::make_tuple(base[c] + x, base[c] + y, t1)),
                            ids.at(std::make_tuple(base[c] + x, base[c] + z,
                                                   (t1 + t2) % order)));
  }
  return std::make_shared<FinCategory>(std::move(b).build());
}

std::shared_ptr<const FinCategory> pair_groupoid(int k) {
  return cyclic_groupoid({{k, 1}});
}

std::shared_ptr<const FinCategory> product_category(
    std::shared_ptr<const FinCategory> a, std::shared_ptr<const FinCategory> b) {
  const FinCategory& A = *a;
  const FinCategory& B = *b;
  FinCategoryBuilder bb(Limits{512, 100000});
  for (Obj x = 0; x < A.n_objects(); ++x)
    for (Obj y = 0; y < B.n_objects(); ++y) bb.add_object();
  const int nbm = B.n_morphisms();
  for (Mor f = 0; f < A.n_morphisms(); ++f)
    for (Mor g = 0; g < nbm; ++g)
      bb.add_morphism(A.src(f) * B.n_objects() + B.src(g),
                      A.tgt(f) * B.n_objects() + B.tgt(g));
  for (Obj x = 0; x < A.n_objects(); ++x)
    for (Obj y = 0; y < B.n_objects(); ++y)
      bb.set_identity(x * B.n_objects() + y, A.identity(x) * nbm + B.identity(y));
  for (Mor f1 = 0; f1 < A.n_morphisms(); ++f1)
    for (Mor f2 = 0; f2 < A.n_morphisms(); ++f2) {
      if (!A.composable(f2, f1)) continue;
      Mor fc = A.compose(f2, f1);
      if (fc == kNone) continue;
      for (Mor g1 = 0; g1 < nbm; ++g1)
        for (Mor g2 = 0; g2 < nbm; ++g2) {
          if (!B.composable(g2, g1)) continue;
          Mor gc = B.compose(g2, g1);
          if (gc == kNone) continue;
          bb.set_compose(f2 * nbm + g2, f1 * nbm + g1, fc * nbm + gc);
        }
    }
  return std::make_shared<FinCategory>(std::move(bb).build());
}

FinFunctor product_projection(std::shared_ptr<const FinCategory> a,
                              std::shared_ptr<const FinCategory> b,
                              std::shared_ptr<const FinCategory> prod,
                              int which) {
  if (which != 0 && which != 1) throw InputError("product_projection: which?");
  FinFunctor p;
  p.src = prod;
  p.tgt = which == 0 ? a : b;
  const int nbo = b->n_objects(), nbm = b->n_morphisms();
  for (Obj x = 0; x < prod->n_objects(); ++x)
    p.omap.push_back(which == 0 ? x / nbo : x % nbo);
  for (Mor m = 0; m < prod->n_morphisms(); ++m)
    p.mmap.push_back(which == 0 ? m / nbm : m % nbm);
  return p;
}

FinFunctor full_subcategory_inclusion(std::shared_ptr<const FinCategory> c,
                                      const std::vector<Obj>& objects) {
  const FinCategory& C = *c;
  std::vector<int> pos(C.n_objects(), -1);
  for (size_t i = 0; i < objects.size(); ++i) {
    C.check_obj(objects[i]);
    if (i > 0 && objects[i] <= objects[i - 1])
      throw InputError("full_subcategory_inclusion: objects must be sorted");
    pos[objects[i]] = static_cast<int>(i);
  }
  FinCategoryBuilder bb(Limits{64, 8192});
  FinFunctor inc;
  inc.tgt = c;
  for (Obj x : objects) {
    bb.add_object(C.object_name(x));
    inc.omap.push_back(x);
  }
  std::vector<Mor> back(C.n_morphisms(), kNone);
  for (Mor m = 0; m < C.n_morphisms(); ++m)
    if (pos[C.src(m)] >= 0 && pos[C.tgt(m)] >= 0) {
      back[m] = bb.add_morphism(pos[C.src(m)], pos[C.tgt(m)], C.morphism_name(m));
      inc.mmap.push_back(m);
    }
  for (size_t i = 0; i < objects.size(); ++i) {
    Mor id = C.identity(objects[i]);
    if (id != kNone) bb.set_identity(static_cast<Obj>(i), back[id]);
  }
  for (Mor f = 0; f < C.n_morphisms(); ++f)
    for (Mor g = 0; g < C.n_morphisms(); ++g) {
      if (back[f] == kNone || back[g] == kNone || !C.composable(g, f)) continue;
      Mor gf = C.compose(g, f);
      if (gf != kNone && back[gf] != kNone)
        bb.set_compose(back[g], back[f], back[gf]);
    }
  inc.src = std::make_shared<FinCategory>(std::move(bb).build());
  return inc;
}

GroupoidCospan random_groupoid_cospan(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<std::pair<int, int>> classes;
  int nclasses = pick(1, 2);
  for (int i = 0; i < nclasses; ++i) classes.push_back({pick(1, 2), pick(1, 3)});
  auto B = cyclic_groupoid(classes);
  auto E = pair_groupoid(pick(1, 2));
  auto A = product_category(B, E);

  GroupoidCospan out;
  out.F = product_projection(B, E, A, 0);
  std::vector<Obj> sub;
  for (Obj x = 0; x < B->n_objects(); ++x)
    if (rng() % 2 == 0) sub.push_back(x);
  if (sub.empty()) sub.push_back(static_cast<Obj>(rng() % B->n_objects()));
  out.G = full_subcategory_inclusion(B, sub);
  return out;
}

}  // namespace segal
