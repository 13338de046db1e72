#include "segal/sconstr.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace segal {

int ArShape::index(int i, int j) const {
  if (i < 0 || j > n || i > j) throw InputError("staircase index out of range");
  return index_[i * (n + 1) + j];
}

Mor ArShape::arrow(int i, int j, int k, int l) const {
  if (i > k || j > l) return kNone;
  return arrows_[index(i, j) * static_cast<int>(pairs.size()) + index(k, l)];
}

ArShape ar_shape(int n) {
  ArShape sh;
  sh.n = n;
  sh.index_.assign((n + 1) * (n + 1), kNone);
  FinCategoryBuilder b(Limits{(n + 1) * (n + 2) / 2, 4096});
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      sh.index_[i * (n + 1) + j] =
          b.add_object("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      sh.pairs.emplace_back(i, j);
    }
  int P = static_cast<int>(sh.pairs.size());
  sh.arrows_.assign(P * P, kNone);
  for (int p = 0; p < P; ++p)
    for (int q = 0; q < P; ++q) {
      auto [i, j] = sh.pairs[p];
      auto [k, l] = sh.pairs[q];
      if (i <= k && j <= l) sh.arrows_[p * P + q] = b.add_morphism(p, q);
    }
  for (int p = 0; p < P; ++p) b.set_identity(p, sh.arrows_[p * P + p]);
  for (int p = 0; p < P; ++p)
    for (int q = 0; q < P; ++q) {
      if (sh.arrows_[p * P + q] == kNone) continue;
      for (int r = 0; r < P; ++r)
        if (sh.arrows_[q * P + r] != kNone)
          b.set_compose(sh.arrows_[q * P + r], sh.arrows_[p * P + q],
                        sh.arrows_[p * P + r]);
    }
  sh.cat = std::make_shared<FinCategory>(std::move(b).build());
  return sh;
}

std::vector<CofChain> enumerate_chains(const CofStructure& s, int n) {
  std::vector<CofChain> out;
  if (n == 0) {
    out.push_back(CofChain{0, {}, {}});
    return out;
  }
  const FinCategory& c = *s.base;
  CofChain cur;
  cur.n = n;
  std::function<void()> go = [&] {
    if (static_cast<int>(cur.objects.size()) == n) {
      out.push_back(cur);
      return;
    }
    if (cur.objects.empty()) {
      for (Obj x = 0; x < c.n_objects(); ++x) {
        cur.objects.push_back(x);
        go();
        cur.objects.pop_back();
      }
      return;
    }
    Obj last = cur.objects.back();
    for (Obj y = 0; y < c.n_objects(); ++y)
      for (Mor m : c.hom(last, y)) {
        if (!s.is_cof(m)) continue;
        cur.objects.push_back(y);
        cur.maps.push_back(m);
        go();
        cur.maps.pop_back();
        cur.objects.pop_back();
      }
  };
  go();
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Mor> isos_between(const FinCategory& c, Obj a, Obj b) {
  std::vector<Mor> out;
  for (Mor m : c.hom(a, b))
    if (is_isomorphism(c, m)) out.push_back(m);
  return out;
}

}  // namespace

bool chain_isomorphic(const CofStructure& s, const CofChain& a, const CofChain& b) {
  if (a.n != b.n) return false;
  if (a.n == 0) return true;
  const FinCategory& c = *s.base;
  int n = a.n;
  std::vector<Mor> phi(n, kNone);
  std::function<bool(int)> go = [&](int k) -> bool {
    if (k == n) return true;
    for (Mor f : isos_between(c, a.objects[k], b.objects[k])) {
      if (k > 0 && c.compose(f, a.maps[k - 1]) != c.compose(b.maps[k - 1], phi[k - 1]))
        continue;
      phi[k] = f;
      if (go(k + 1)) return true;
    }
    phi[k] = kNone;
    return false;
  };
  return go(0);
}

const std::optional<PushoutSquare>& PushoutOracle::get(Mor f, Mor g) {
  auto key = std::make_pair(f, g);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(key, find_pushout(*c_, f, g)).first->second;
}

namespace {

// Unique mediating morphism out of a pushout apex; the universal property
// guarantees existence, so absence is a hard logic error.
Mor mediate(const FinCategory& c, const PushoutSquare& po, Obj target, Mor via_b,
            Mor via_c) {
  Mor found = kNone;
  for (Mor w : c.hom(po.apex, target))
    if (c.compose(w, po.from_b) == via_b && c.compose(w, po.from_c) == via_c) {
      if (found != kNone) throw InputError("pushout mediator not unique");
      found = w;
    }
  if (found == kNone) throw InputError("pushout mediator missing");
  return found;
}

}  // namespace

SObjectDiagram chain_to_sobject(const CofStructure& s, const ArShape& shape,
                                PushoutOracle& po, const CofChain& chain) {
  const FinCategory& c = *s.base;
  int n = chain.n;
  if (shape.n != n) throw InputError("shape level mismatch");

  // cell objects
  std::vector<std::vector<Obj>> A(n + 1, std::vector<Obj>(n + 1, kNone));
  for (int j = 0; j <= n; ++j) A[j][j] = s.zero;
  for (int k = 1; k <= n; ++k) A[0][k] = chain.objects[k - 1];

  // top-row composites f0[j][k]: A_{0,j} -> A_{0,k}
  std::vector<std::vector<Mor>> f0(n + 1, std::vector<Mor>(n + 1, kNone));
  for (int j = 0; j <= n; ++j) {
    f0[j][j] = (j == 0) ? c.identity(s.zero) : c.identity(A[0][j]);
    for (int k = j + 1; k <= n; ++k) {
      if (j == 0)
        f0[j][k] = c.hom(s.zero, A[0][k]).front();
      else
        f0[j][k] = (k == j + 1) ? chain.maps[j - 1]
                                : c.compose(chain.maps[k - 2], f0[j][k - 1]);
    }
  }

  // row fill: A_{i,k} = pushout of 0 <- A_{0,i} >-> A_{0,k}, with vertical
  // quotients Q[i][k]: A_{0,k} -> A_{i,k} and zero legs Z[i][k]
  std::vector<std::vector<Mor>> Q(n + 1, std::vector<Mor>(n + 1, kNone));
  std::vector<std::vector<Mor>> Z(n + 1, std::vector<Mor>(n + 1, kNone));
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      Mor to_zero = c.hom(A[0][i], s.zero).front();
      const auto& sq = po.get(f0[i][k], to_zero);
      if (!sq)
        throw InputError("missing pushout for staircase cell (" + std::to_string(i) +
                         "," + std::to_string(k) + "): cofibration " +
                         c.morphism_name(f0[i][k]));
      A[i][k] = sq->apex;
      Q[i][k] = sq->from_b;
      Z[i][k] = sq->from_c;
    }
  }

  // generator maps: H[i][j]: A_{i,j} -> A_{i,j+1}, V[i][j]: A_{i,j} -> A_{i+1,j}
  std::vector<std::vector<Mor>> H(n + 1, std::vector<Mor>(n + 1, kNone));
  std::vector<std::vector<Mor>> V(n + 1, std::vector<Mor>(n + 1, kNone));
  for (int j = 0; j < n; ++j) H[0][j] = f0[j][j + 1];
  for (int i = 1; i <= n; ++i)
    for (int j = i; j < n; ++j) {
      if (j == i) {
        H[i][j] = c.hom(s.zero, A[i][j + 1]).front();
      } else {
        Mor to_zero = c.hom(A[0][i], s.zero).front();
        const auto& sq = po.get(f0[i][j], to_zero);
        H[i][j] = mediate(c, *sq, A[i][j + 1], c.compose(Q[i][j + 1], f0[j][j + 1]),
                          Z[i][j + 1]);
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j == i + 1) {
        V[i][j] = c.hom(A[i][j], s.zero).front();
      } else if (i == 0) {
        V[i][j] = Q[1][j];
      } else {
        Mor to_zero = c.hom(A[0][i], s.zero).front();
        const auto& sq = po.get(f0[i][j], to_zero);
        V[i][j] = mediate(c, *sq, A[i + 1][j], Q[i + 1][j], Z[i + 1][j]);
      }
    }

  // assemble the functor: every shape arrow is (down then right)
  SObjectDiagram out;
  out.n = n;
  out.fun.src = shape.cat;
  out.fun.tgt = s.base;
  int P = static_cast<int>(shape.pairs.size());
  out.fun.omap.resize(P);
  for (int p = 0; p < P; ++p) {
    auto [i, j] = shape.pairs[p];
    out.fun.omap[p] = A[i][j];
  }
  out.fun.mmap.assign(shape.cat->n_morphisms(), kNone);
  for (int p = 0; p < P; ++p) {
    auto [i, j] = shape.pairs[p];
    for (int q = 0; q < P; ++q) {
      auto [k, l] = shape.pairs[q];
      Mor arr = shape.arrow(i, j, k, l);
      if (arr == kNone) continue;
      Mor acc = c.identity(A[i][j]);
      int ci = i, cj = j;
      while (cj < l) {
        acc = c.compose(H[ci][cj], acc);
        ++cj;
      }
      while (ci < k) {
        acc = c.compose(V[ci][cj], acc);
        ++ci;
      }
      out.fun.mmap[arr] = acc;
    }
  }
  return out;
}

ValidationReport validate_sobject(const CofStructure& s, const ArShape& shape,
                                  const SObjectDiagram& a) {
  ValidationReport rep = validate_functor(a.fun);
  const FinCategory& c = *s.base;
  int n = a.n;
  auto at = [&](int i, int j) { return a.fun.omap[shape.index(i, j)]; };
  auto am = [&](int i, int j, int k, int l) {
    return a.fun.mmap[shape.arrow(i, j, k, l)];
  };
  for (int j = 0; j <= n; ++j)
    if (at(j, j) != s.zero)
      rep.violations.push_back("diagonal cell (" + std::to_string(j) + "," +
                               std::to_string(j) + ") is not the zero object");
  for (int i = 0; i <= n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (!s.is_cof(am(i, j, i, k)))
          rep.violations.push_back("horizontal map (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") -> (" + std::to_string(i) +
                                   "," + std::to_string(k) + ") is not a cofibration");
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (!is_pushout(c, am(i, j, i, k), am(i, j, j, j), at(j, k), am(i, k, j, k),
                        am(j, j, j, k)))
          rep.violations.push_back("cells (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(k) +
                                   ") are not a cofibration sequence");
  return rep;
}

CofChain mu(const ArShape& shape, const SObjectDiagram& a) {
  CofChain c;
  c.n = a.n;
  for (int k = 1; k <= a.n; ++k) c.objects.push_back(a.fun.omap[shape.index(0, k)]);
  for (int k = 1; k < a.n; ++k)
    c.maps.push_back(a.fun.mmap[shape.arrow(0, k, 0, k + 1)]);
  return c;
}

CofChain chain_face(const CofStructure& s, PushoutOracle& po, const CofChain& ch,
                    int i) {
  const FinCategory& c = *s.base;
  int n = ch.n;
  if (n < 1 || i < 0 || i > n) throw InputError("face index out of range");
  CofChain out;
  out.n = n - 1;
  if (i >= 1) {
    for (int k = 0; k < n; ++k)
      if (k != i - 1) out.objects.push_back(ch.objects[k]);
    if (i == 1) {
      out.maps.assign(ch.maps.begin() + (n >= 2 ? 1 : 0), ch.maps.end());
    } else if (i == n) {
      out.maps.assign(ch.maps.begin(), ch.maps.end() - 1);
    } else {
      for (int t = 0; t <= i - 3; ++t) out.maps.push_back(ch.maps[t]);
      out.maps.push_back(c.compose(ch.maps[i - 1], ch.maps[i - 2]));
      for (int t = i; t <= n - 2; ++t) out.maps.push_back(ch.maps[t]);
    }
    return out;
  }
  // d_0: quotient by A_{0,1}
  if (n == 1) return out;
  Mor to_zero = c.hom(ch.objects[0], s.zero).front();
  std::vector<Obj> B(n + 1, kNone);
  std::vector<Mor> q(n + 1, kNone), z(n + 1, kNone);
  Mor run = kNone;  // composite A_{0,1} -> A_{0,k}
  for (int k = 2; k <= n; ++k) {
    run = (k == 2) ? ch.maps[0] : c.compose(ch.maps[k - 2], run);
    const auto& sq = po.get(run, to_zero);
    if (!sq)
      throw InputError("missing pushout for face d_0 at column " + std::to_string(k));
    B[k] = sq->apex;
    q[k] = sq->from_b;
    z[k] = sq->from_c;
    out.objects.push_back(B[k]);
  }
  run = kNone;
  for (int k = 2; k < n; ++k) {
    run = (k == 2) ? ch.maps[0] : c.compose(ch.maps[k - 2], run);
    const auto& sq = po.get(run, to_zero);
    out.maps.push_back(
        mediate(c, *sq, B[k + 1], c.compose(q[k + 1], ch.maps[k - 1]), z[k + 1]));
  }
  return out;
}

CofChain chain_degeneracy(const CofStructure& s, const CofChain& ch, int i) {
  const FinCategory& c = *s.base;
  int n = ch.n;
  if (i < 0 || i > n) throw InputError("degeneracy index out of range");
  CofChain out;
  out.n = n + 1;
  if (i == 0) {
    out.objects.push_back(s.zero);
    out.objects.insert(out.objects.end(), ch.objects.begin(), ch.objects.end());
    if (n >= 1) out.maps.push_back(c.hom(s.zero, ch.objects[0]).front());
    out.maps.insert(out.maps.end(), ch.maps.begin(), ch.maps.end());
    return out;
  }
  for (int k = 0; k < n; ++k) {
    out.objects.push_back(ch.objects[k]);
    if (k == i - 1) out.objects.push_back(ch.objects[k]);
  }
  for (int t = 0; t <= n - 1; ++t) {
    if (t == i - 1) out.maps.push_back(c.identity(ch.objects[i - 1]));
    if (t < n - 1) out.maps.push_back(ch.maps[t]);
  }
  return out;
}

int IsoSDot::locate(const CofStructure& s, const CofChain& c) const {
  int n = c.n;
  for (size_t k = 0; k < reps[n].size(); ++k)
    if (chain_isomorphic(s, reps[n][k], c)) return static_cast<int>(k);
  throw InputError("chain has no isomorphism class at its level");
}

IsoSDot iso_s_dot(const CofStructure& s, int N, bool verify) {
  const FinCategory& c = *s.base;
  IsoSDot out;
  out.x.N = N;
  out.x.level_sizes.assign(N + 1, 0);
  out.x.faces.assign(N + 1, {});
  out.x.degen.assign(N + 1, {});
  out.reps.assign(N + 1, {});
  out.class_of.assign(N + 1, {});
  out.all_chains.assign(N + 1, {});
  PushoutOracle po(s.base);

  // object iso-classes for a fast chain pre-filter
  std::vector<int> ocls(c.n_objects(), -1);
  {
    int next = 0;
    for (Obj x = 0; x < c.n_objects(); ++x) {
      if (ocls[x] != -1) continue;
      ocls[x] = next;
      for (Obj y = x + 1; y < c.n_objects(); ++y)
        if (ocls[y] == -1 && !isos_between(c, x, y).empty()) ocls[y] = next;
      ++next;
    }
  }
  auto sig = [&](const CofChain& ch) {
    std::vector<int> v;
    for (Obj o : ch.objects) v.push_back(ocls[o]);
    return v;
  };

  std::vector<std::vector<std::vector<int>>> rep_sigs(N + 1);
  for (int n = 0; n <= N; ++n) {
    out.all_chains[n] = enumerate_chains(s, n);
    for (const auto& ch : out.all_chains[n]) {
      auto sg = sig(ch);
      int cls = -1;
      for (size_t k = 0; k < out.reps[n].size(); ++k)
        if (rep_sigs[n][k] == sg && chain_isomorphic(s, out.reps[n][k], ch)) {
          cls = static_cast<int>(k);
          break;
        }
      if (cls == -1) {
        cls = static_cast<int>(out.reps[n].size());
        out.reps[n].push_back(ch);
        rep_sigs[n].push_back(sg);
      }
      out.class_of[n].push_back(cls);
    }
    out.x.level_sizes[n] = static_cast<int>(out.reps[n].size());
  }

  auto locate_sig = [&](int n, const CofChain& ch) {
    auto sg = sig(ch);
    for (size_t k = 0; k < out.reps[n].size(); ++k)
      if (rep_sigs[n][k] == sg && chain_isomorphic(s, out.reps[n][k], ch))
        return static_cast<int>(k);
    throw InputError("image chain has no class");
  };

  for (int n = 1; n <= N; ++n) {
    out.x.faces[n].assign(n + 1, std::vector<int>(out.x.level_sizes[n], -1));
    for (int i = 0; i <= n; ++i)
      for (int r = 0; r < out.x.level_sizes[n]; ++r)
        out.x.faces[n][i][r] = locate_sig(n - 1, chain_face(s, po, out.reps[n][r], i));
  }
  for (int n = 0; n < N; ++n) {
    out.x.degen[n].assign(n + 1, std::vector<int>(out.x.level_sizes[n], -1));
    for (int i = 0; i <= n; ++i)
      for (int r = 0; r < out.x.level_sizes[n]; ++r)
        out.x.degen[n][i][r] =
            locate_sig(n + 1, chain_degeneracy(s, out.reps[n][r], i));
  }

  if (verify) {
    for (int n = 1; n <= N; ++n)
      for (size_t idx = 0; idx < out.all_chains[n].size(); ++idx)
        for (int i = 0; i <= n; ++i) {
          int via_chain = locate_sig(n - 1, chain_face(s, po, out.all_chains[n][idx], i));
          int via_rep = out.x.faces[n][i][out.class_of[n][idx]];
          if (via_chain != via_rep)
            throw InputError("face map not well-defined on isomorphism classes");
        }
    for (int n = 0; n < N; ++n)
      for (size_t idx = 0; idx < out.all_chains[n].size(); ++idx)
        for (int i = 0; i <= n; ++i) {
          int via_chain =
              locate_sig(n + 1, chain_degeneracy(s, out.all_chains[n][idx], i));
          int via_rep = out.x.degen[n][i][out.class_of[n][idx]];
          if (via_chain != via_rep)
            throw InputError("degeneracy not well-defined on isomorphism classes");
        }
  }
  return out;
}

}  // namespace segal
