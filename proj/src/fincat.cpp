#include "segal/fincat.hpp"

#include <algorithm>

namespace segal {

Obj FinCategoryBuilder::add_object(std::string name) {
  if (n_objects() >= limits_.max_objects)
    throw InputError("object cap exceeded (" + std::to_string(limits_.max_objects) + ")");
  Obj x = n_objects();
  if (name.empty()) name = "x" + std::to_string(x);
  cat_.object_names_.push_back(std::move(name));
  cat_.identities_.push_back(kNone);
  return x;
}

Mor FinCategoryBuilder::add_morphism(Obj src, Obj tgt, std::string name) {
  if (n_morphisms() >= limits_.max_morphisms)
    throw InputError("morphism cap exceeded (" + std::to_string(limits_.max_morphisms) + ")");
  if (src < 0 || src >= n_objects() || tgt < 0 || tgt >= n_objects())
    throw InputError("morphism endpoints must be declared objects");
  Mor m = n_morphisms();
  if (name.empty()) name = "m" + std::to_string(m);
  cat_.mors_.push_back({std::move(name), src, tgt});
  return m;
}

void FinCategoryBuilder::set_identity(Obj x, Mor m) {
  if (x < 0 || x >= n_objects() || m < 0 || m >= n_morphisms())
    throw InputError("identity references undeclared ids");
  if (cat_.mors_[m].src != x || cat_.mors_[m].tgt != x)
    throw InputError("identity of an object must be an endomorphism of it");
  cat_.identities_[x] = m;
}

void FinCategoryBuilder::set_compose(Mor g, Mor f, Mor gf) {
  if (g < 0 || g >= n_morphisms() || f < 0 || f >= n_morphisms() || gf < 0 ||
      gf >= n_morphisms())
    throw InputError("compose entry references undeclared morphisms");
  if (cat_.mors_[f].tgt != cat_.mors_[g].src)
    throw InputError("compose entry for a non-composable pair");
  if (cat_.mors_[gf].src != cat_.mors_[f].src || cat_.mors_[gf].tgt != cat_.mors_[g].tgt)
    throw InputError("composite endpoints do not match");
  cat_.table_[FinCategory::key(g, f)] = gf;
}

FinCategory FinCategoryBuilder::build() && {
  int n = n_objects();
  cat_.hom_.assign(static_cast<size_t>(n) * n, {});
  for (Mor m = 0; m < n_morphisms(); ++m)
    cat_.hom_[cat_.mors_[m].src * n + cat_.mors_[m].tgt].push_back(m);
  return std::move(cat_);
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport rep;
  auto mname = [&](Mor m) { return c.morphism_name(m); };
  for (Obj x = 0; x < c.n_objects(); ++x)
    if (c.identity(x) == kNone)
      rep.violations.push_back("no identity declared for object " + c.object_name(x));
  for (Mor f = 0; f < c.n_morphisms(); ++f) {
    Mor idt = c.identity(c.tgt(f));
    Mor ids = c.identity(c.src(f));
    if (idt != kNone && c.compose(idt, f) != f)
      rep.violations.push_back("left identity at " + mname(f));
    if (ids != kNone && c.compose(f, ids) != f)
      rep.violations.push_back("right identity at " + mname(f));
  }
  for (Mor f = 0; f < c.n_morphisms(); ++f) {
    for (Obj z = 0; z < c.n_objects(); ++z) {
      for (Mor g : c.hom(c.tgt(f), z)) {
        if (c.compose(g, f) == kNone)
          rep.violations.push_back("composition undefined for (" + mname(g) + ", " +
                                   mname(f) + ")");
      }
    }
  }
  // Associativity over all composable triples.
  for (Mor f = 0; f < c.n_morphisms(); ++f) {
    for (Obj z = 0; z < c.n_objects(); ++z) {
      for (Mor g : c.hom(c.tgt(f), z)) {
        Mor gf = c.compose(g, f);
        if (gf == kNone) continue;
        for (Obj w = 0; w < c.n_objects(); ++w) {
          for (Mor h : c.hom(z, w)) {
            Mor hg = c.compose(h, g);
            if (hg == kNone) continue;
            if (c.compose(h, gf) != c.compose(hg, f))
              rep.violations.push_back("associativity fails at (" + mname(h) + ", " +
                                       mname(g) + ", " + mname(f) + ")");
          }
        }
      }
    }
  }
  return rep;
}

std::optional<Mor> inverse_of(const FinCategory& c, Mor f) {
  c.check_mor(f);
  for (Mor g : c.hom(c.tgt(f), c.src(f)))
    if (c.compose(g, f) == c.identity(c.src(f)) &&
        c.compose(f, g) == c.identity(c.tgt(f)))
      return g;
  return std::nullopt;
}

bool is_isomorphism(const FinCategory& c, Mor f) { return inverse_of(c, f).has_value(); }

bool is_zero_object(const FinCategory& c, Obj x) {
  c.check_obj(x);
  for (Obj y = 0; y < c.n_objects(); ++y)
    if (c.hom(x, y).size() != 1 || c.hom(y, x).size() != 1) return false;
  return true;
}

FinCategory opposite(const FinCategory& c) {
  FinCategoryBuilder b(Limits{c.n_objects(), c.n_morphisms()});
  for (Obj x = 0; x < c.n_objects(); ++x) b.add_object(c.object_name(x));
  for (Mor m = 0; m < c.n_morphisms(); ++m)
    b.add_morphism(c.tgt(m), c.src(m), c.morphism_name(m));
  for (Obj x = 0; x < c.n_objects(); ++x)
    if (c.identity(x) != kNone) b.set_identity(x, c.identity(x));
  for (Mor f = 0; f < c.n_morphisms(); ++f)
    for (Obj z = 0; z < c.n_objects(); ++z)
      for (Mor g : c.hom(c.tgt(f), z))
        if (Mor gf = c.compose(g, f); gf != kNone) b.set_compose(f, g, gf);
  return std::move(b).build();
}

namespace {

bool cocone_commutes(const FinCategory& c, Mor f, Mor g, Mor u, Mor v) {
  Mor uf = c.compose(u, f);
  return uf != kNone && uf == c.compose(v, g);
}

bool pushout_universal(const FinCategory& c, Mor f, Mor g, Obj apex, Mor p, Mor q) {
  for (Obj x = 0; x < c.n_objects(); ++x) {
    for (Mor u : c.hom(c.tgt(f), x)) {
      for (Mor v : c.hom(c.tgt(g), x)) {
        if (!cocone_commutes(c, f, g, u, v)) continue;
        int mediators = 0;
        for (Mor w : c.hom(apex, x))
          if (c.compose(w, p) == u && c.compose(w, q) == v) ++mediators;
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_pushout(const FinCategory& c, Mor f, Mor g, Obj apex, Mor p, Mor q) {
  if (c.src(f) != c.src(g)) throw InputError("pushout span legs must share a source");
  if (!cocone_commutes(c, f, g, p, q)) return false;
  return pushout_universal(c, f, g, apex, p, q);
}

std::optional<PushoutSquare> find_pushout(const FinCategory& c, Mor f, Mor g) {
  if (c.src(f) != c.src(g)) throw InputError("pushout span legs must share a source");
  Obj bo = c.tgt(f), co = c.tgt(g);
  for (Obj p = 0; p < c.n_objects(); ++p) {
    for (Mor ib : c.hom(bo, p)) {
      for (Mor ic : c.hom(co, p)) {
        if (!cocone_commutes(c, f, g, ib, ic)) continue;
        if (pushout_universal(c, f, g, p, ib, ic)) return PushoutSquare{p, ib, ic};
      }
    }
  }
  return std::nullopt;
}

bool is_pullback(const FinCategory& c, Mor f, Mor g, Obj q_apex, Mor p, Mor q) {
  if (c.tgt(f) != c.tgt(g)) throw InputError("pullback cospan legs must share a target");
  Mor fp = c.compose(f, p);
  if (fp == kNone || fp != c.compose(g, q)) return false;
  for (Obj x = 0; x < c.n_objects(); ++x) {
    for (Mor u : c.hom(x, c.src(f))) {
      for (Mor v : c.hom(x, c.src(g))) {
        Mor fu = c.compose(f, u);
        if (fu == kNone || fu != c.compose(g, v)) continue;
        int mediators = 0;
        for (Mor w : c.hom(x, q_apex))
          if (c.compose(p, w) == u && c.compose(q, w) == v) ++mediators;
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

std::optional<PullbackSquare> find_pullback(const FinCategory& c, Mor f, Mor g) {
  if (c.tgt(f) != c.tgt(g)) throw InputError("pullback cospan legs must share a target");
  for (Obj q = 0; q < c.n_objects(); ++q)
    for (Mor pb : c.hom(q, c.src(f)))
      for (Mor pc : c.hom(q, c.src(g)))
        if (is_pullback(c, f, g, q, pb, pc)) return PullbackSquare{q, pb, pc};
  return std::nullopt;
}

ValidationReport validate_functor(const FinFunctor& fn) {
  ValidationReport rep;
  const FinCategory& a = *fn.src;
  const FinCategory& b = *fn.tgt;
  if (static_cast<int>(fn.omap.size()) != a.n_objects() ||
      static_cast<int>(fn.mmap.size()) != a.n_morphisms())
    throw InputError("functor maps have wrong arity");
  for (Mor m = 0; m < a.n_morphisms(); ++m) {
    Mor im = fn.mmap[m];
    b.check_mor(im);
    if (b.src(im) != fn.omap[a.src(m)] || b.tgt(im) != fn.omap[a.tgt(m)])
      rep.violations.push_back("endpoints not preserved at " + a.morphism_name(m));
  }
  for (Obj x = 0; x < a.n_objects(); ++x)
    if (a.identity(x) != kNone && fn.mmap[a.identity(x)] != b.identity(fn.omap[x]))
      rep.violations.push_back("identity not preserved at " + a.object_name(x));
  for (Mor f = 0; f < a.n_morphisms(); ++f)
    for (Obj z = 0; z < a.n_objects(); ++z)
      for (Mor g : a.hom(a.tgt(f), z)) {
        Mor gf = a.compose(g, f);
        if (gf == kNone) continue;
        if (b.compose(fn.mmap[g], fn.mmap[f]) != fn.mmap[gf])
          rep.violations.push_back("composition not preserved at (" + a.morphism_name(g) +
                                   ", " + a.morphism_name(f) + ")");
      }
  return rep;
}

FinFunctor identity_functor(std::shared_ptr<const FinCategory> c) {
  FinFunctor f;
  f.src = c;
  f.tgt = c;
  f.omap.resize(c->n_objects());
  f.mmap.resize(c->n_morphisms());
  for (Obj x = 0; x < c->n_objects(); ++x) f.omap[x] = x;
  for (Mor m = 0; m < c->n_morphisms(); ++m) f.mmap[m] = m;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.tgt.get() != g.src.get()) throw InputError("functor composition mismatch");
  FinFunctor h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.omap.resize(f.omap.size());
  h.mmap.resize(f.mmap.size());
  for (size_t i = 0; i < f.omap.size(); ++i) h.omap[i] = g.omap[f.omap[i]];
  for (size_t i = 0; i < f.mmap.size(); ++i) h.mmap[i] = g.mmap[f.mmap[i]];
  return h;
}

namespace {

// Backtracking enumeration of component systems.  `want_first` stops at the
// first complete assignment.
void enumerate_nats(const FinFunctor& d1, const FinFunctor& d2,
                    const std::function<bool(Mor)>& component_ok, bool want_first,
                    std::vector<std::vector<Mor>>& out) {
  const FinCategory& shape = *d1.src;
  const FinCategory& c = *d1.tgt;
  int n = shape.n_objects();
  std::vector<Mor> comp(n, kNone);

  // shape morphisms grouped by the max endpoint so naturality is checked as
  // soon as both components exist
  std::function<bool(int)> go = [&](int at) -> bool {
    if (at == n) {
      out.push_back(comp);
      return want_first;
    }
    for (Mor cand : c.hom(d1.omap[at], d2.omap[at])) {
      if (component_ok && !component_ok(cand)) continue;
      comp[at] = cand;
      bool ok = true;
      for (Mor u = 0; u < shape.n_morphisms() && ok; ++u) {
        Obj s = shape.src(u), t = shape.tgt(u);
        if (std::max(s, t) != at || std::min(s, t) > at) continue;
        if (comp[s] == kNone || comp[t] == kNone) continue;
        if (c.compose(comp[t], d1.mmap[u]) != c.compose(d2.mmap[u], comp[s])) ok = false;
      }
      if (ok && go(at + 1)) return true;
    }
    comp[at] = kNone;
    return false;
  };
  go(0);
}

}  // namespace

std::vector<std::vector<Mor>> natural_transformations(
    const FinFunctor& d1, const FinFunctor& d2,
    const std::function<bool(Mor)>& component_ok) {
  if (d1.src->n_objects() != d2.src->n_objects() || d1.tgt.get() != d2.tgt.get())
    throw InputError("natural transformations need a common shape and target");
  std::vector<std::vector<Mor>> out;
  enumerate_nats(d1, d2, component_ok, false, out);
  return out;
}

std::optional<std::vector<Mor>> find_natural_iso(const FinFunctor& d1,
                                                 const FinFunctor& d2) {
  if (d1.src->n_objects() != d2.src->n_objects() || d1.tgt.get() != d2.tgt.get())
    throw InputError("diagram comparison needs a common shape and target");
  const FinCategory& c = *d1.tgt;
  std::vector<std::vector<Mor>> out;
  enumerate_nats(d1, d2, [&](Mor m) { return is_isomorphism(c, m); }, true, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

bool diagram_isomorphic(const FinFunctor& d1, const FinFunctor& d2) {
  return find_natural_iso(d1, d2).has_value();
}

}  // namespace segal
