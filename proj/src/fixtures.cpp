#include "segal/fixtures.hpp"

#include <algorithm>
#include <map>

namespace segal {

CofStructure fixture_Z() {
  FinCategoryBuilder b;
  Obj z = b.add_object("0");
  Mor id = b.add_morphism(z, z, "id");
  b.set_identity(z, id);
  b.set_compose(id, id, id);
  CofStructure s;
  s.base = std::make_shared<FinCategory>(std::move(b).build());
  s.zero = z;
  s.cofibrations = {id};
  return s;
}

namespace {

std::string values_name(Obj src, Obj tgt, const std::vector<int>& v) {
  std::string s = std::to_string(src) + "->" + std::to_string(tgt) + "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

CofStructure fixture_PS(int k) {
  if (k < 0) throw InputError("PS(k) needs k >= 0");
  // Generous caps: PS(3) has 144 morphisms, products of PS(2) fit too.
  FinCategoryBuilder b(Limits{64, 8192});
  for (int m = 0; m <= k; ++m) b.add_object(std::to_string(m));

  // maps m -> p as value tuples (v_1..v_m), each in 0..p, lex order
  std::map<std::tuple<int, int, std::vector<int>>, Mor> index;
  for (int m = 0; m <= k; ++m) {
    for (int p = 0; p <= k; ++p) {
      std::vector<int> v(m, 0);
      while (true) {
        index[{m, p, v}] = b.add_morphism(m, p, values_name(m, p, v));
        int i = m - 1;
        while (i >= 0 && v[i] == p) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
      }
    }
  }
  for (int m = 0; m <= k; ++m) {
    std::vector<int> ident(m);
    for (int i = 0; i < m; ++i) ident[i] = i + 1;
    b.set_identity(m, index.at({m, m, ident}));
  }
  for (const auto& [fk, f] : index) {
    const auto& [m, p, fv] = fk;
    for (const auto& [gk, g] : index) {
      const auto& [p2, q, gv] = gk;
      if (p2 != p) continue;
      std::vector<int> hv(m);
      for (int i = 0; i < m; ++i) hv[i] = fv[i] == 0 ? 0 : gv[fv[i] - 1];
      b.set_compose(g, f, index.at({m, q, hv}));
    }
  }
  CofStructure s;
  s.base = std::make_shared<FinCategory>(std::move(b).build());
  s.zero = 0;
  for (const auto& [fk, f] : index) {
    const auto& [m, p, fv] = fk;
    bool inj = true;
    for (int i = 0; i < m && inj; ++i) {
      if (fv[i] == 0) inj = false;
      for (int j = i + 1; j < m && inj; ++j)
        if (fv[i] == fv[j]) inj = false;
    }
    if (inj) s.cofibrations.insert(f);
  }
  return s;
}

Mor ps_morphism(const FinCategory& c, Obj src, Obj tgt, const std::vector<int>& values) {
  std::string want = values_name(src, tgt, values);
  for (Mor m : c.hom(src, tgt))
    if (c.morphism_name(m) == want) return m;
  throw InputError("no such based map: " + want);
}

std::vector<int> ps_values(const FinCategory& c, Mor m) {
  const std::string& name = c.morphism_name(m);
  auto lb = name.find('[');
  if (lb == std::string::npos) throw InputError("not a based-map morphism name");
  std::vector<int> out;
  int cur = -1;
  for (size_t i = lb + 1; i < name.size() && name[i] != ']'; ++i) {
    if (name[i] == ',') {
      out.push_back(cur);
      cur = -1;
    } else {
      cur = (cur < 0 ? 0 : cur * 10) + (name[i] - '0');
    }
  }
  if (cur >= 0) out.push_back(cur);
  return out;
}

CofStructure fixture_product(const CofStructure& a, const CofStructure& b) {
  const FinCategory& A = *a.base;
  const FinCategory& B = *b.base;
  int na = A.n_objects(), nb = B.n_objects();
  FinCategoryBuilder bld(Limits{na * nb, A.n_morphisms() * B.n_morphisms()});
  for (Obj x = 0; x < na; ++x)
    for (Obj y = 0; y < nb; ++y)
      bld.add_object("(" + A.object_name(x) + "," + B.object_name(y) + ")");
  auto obj = [&](Obj x, Obj y) { return x * nb + y; };
  auto mor = [&](Mor f, Mor g) { return f * B.n_morphisms() + g; };
  for (Mor f = 0; f < A.n_morphisms(); ++f)
    for (Mor g = 0; g < B.n_morphisms(); ++g)
      bld.add_morphism(obj(A.src(f), B.src(g)), obj(A.tgt(f), B.tgt(g)),
                       "(" + A.morphism_name(f) + "," + B.morphism_name(g) + ")");
  for (Obj x = 0; x < na; ++x)
    for (Obj y = 0; y < nb; ++y)
      bld.set_identity(obj(x, y), mor(A.identity(x), B.identity(y)));
  for (Mor f = 0; f < A.n_morphisms(); ++f)
    for (Mor f2 = 0; f2 < A.n_morphisms(); ++f2) {
      Mor ff = A.compose(f2, f);
      if (ff == kNone) continue;
      for (Mor g = 0; g < B.n_morphisms(); ++g)
        for (Mor g2 = 0; g2 < B.n_morphisms(); ++g2) {
          Mor gg = B.compose(g2, g);
          if (gg == kNone) continue;
          bld.set_compose(mor(f2, g2), mor(f, g), mor(ff, gg));
        }
    }
  CofStructure s;
  s.base = std::make_shared<FinCategory>(std::move(bld).build());
  s.zero = obj(a.zero, b.zero);
  for (Mor f : a.cofibrations)
    for (Mor g : b.cofibrations) s.cofibrations.insert(mor(f, g));
  return s;
}

}  // namespace segal
