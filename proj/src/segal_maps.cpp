#include "segal/segal_maps.hpp"

#include <algorithm>
#include <set>

namespace segal {

namespace {

// local indices of the subset E inside the sorted member M
std::vector<int> local_indices(const std::vector<int>& M, const std::vector<int>& E) {
  std::vector<int> out;
  for (int v : E)
    out.push_back(static_cast<int>(std::lower_bound(M.begin(), M.end(), v) - M.begin()));
  return out;
}

struct EdgeConstraint {
  int a, b;                  // member indices, a < b
  std::vector<int> loc_a, loc_b;  // local indices of the shared edge
};

std::vector<EdgeConstraint> edge_constraints(const Subdivision& p) {
  std::vector<EdgeConstraint> out;
  for (size_t a = 0; a < p.members.size(); ++a)
    for (size_t b = a + 1; b < p.members.size(); ++b) {
      std::vector<int> shared;
      std::set_intersection(p.members[a].begin(), p.members[a].end(),
                            p.members[b].begin(), p.members[b].end(),
                            std::back_inserter(shared));
      if (shared.size() == 2)
        out.push_back({static_cast<int>(a), static_cast<int>(b),
                       local_indices(p.members[a], shared),
                       local_indices(p.members[b], shared)});
    }
  return out;
}

void enumerate_tuples(const TruncatedSimplicialSet& x, const Subdivision& p,
                      const std::vector<EdgeConstraint>& cons, LimitTuple& cur,
                      size_t at, std::vector<LimitTuple>& out) {
  if (at == p.members.size()) {
    out.push_back(cur);
    return;
  }
  int level = static_cast<int>(p.members[at].size()) - 1;
  for (int e = 0; e < x.level_sizes[level]; ++e) {
    cur[at] = e;
    bool ok = true;
    for (const auto& con : cons) {
      if (static_cast<size_t>(std::max(con.a, con.b)) != at) continue;
      size_t other = static_cast<size_t>(std::min(con.a, con.b));
      const auto& la = (static_cast<size_t>(con.a) == at) ? con.loc_a : con.loc_b;
      const auto& lb = (static_cast<size_t>(con.a) == at) ? con.loc_b : con.loc_a;
      int level_o = static_cast<int>(p.members[other].size()) - 1;
      if (restrict_element(x, level, la, cur[at]) !=
          restrict_element(x, level_o, lb, cur[other])) {
        ok = false;
        break;
      }
    }
    if (ok) enumerate_tuples(x, p, cons, cur, at + 1, out);
  }
  cur[at] = -1;
}

}  // namespace

std::vector<LimitTuple> limit_over_subdivision(const TruncatedSimplicialSet& x,
                                               const Subdivision& p, bool parallel) {
  if (p.n > x.N) throw InputError("subdivision level exceeds truncation");
  for (const auto& m : p.members)
    if (static_cast<int>(m.size()) - 1 > x.N)
      throw InputError("subdivision member exceeds truncation");
  auto cons = edge_constraints(p);
  if (p.members.empty()) return {LimitTuple{}};

  if (!parallel) {
    std::vector<LimitTuple> out;
    LimitTuple cur(p.members.size(), -1);
    enumerate_tuples(x, p, cons, cur, 0, out);
    return out;
  }

  int first_level = static_cast<int>(p.members[0].size()) - 1;
  int k = x.level_sizes[first_level];
  std::vector<std::vector<LimitTuple>> chunks(k);
#ifdef SEGAL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int e = 0; e < k; ++e) {
    LimitTuple cur(p.members.size(), -1);
    cur[0] = e;
    enumerate_tuples(x, p, cons, cur, 1, chunks[e]);
  }
  std::vector<LimitTuple> out;
  for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
  return out;
}

SegalMapResult two_segal_map(const TruncatedSimplicialSet& x, const Subdivision& p) {
  SegalMapResult r;
  r.subdivision = p;
  auto lim = limit_over_subdivision(x, p);
  r.limit_size = static_cast<int>(lim.size());
  r.domain_size = x.level_sizes[p.n];

  std::vector<LimitTuple> images(r.domain_size);
  for (int z = 0; z < r.domain_size; ++z) {
    LimitTuple t(p.members.size());
    for (size_t m = 0; m < p.members.size(); ++m)
      t[m] = restrict_element(x, p.n, p.members[m], z);
    images[z] = std::move(t);
  }
  r.injective = true;
  for (int a = 0; a < r.domain_size && r.injective; ++a)
    for (int b = a + 1; b < r.domain_size; ++b)
      if (images[a] == images[b]) {
        r.injective = false;
        r.collision = {a, b};
        break;
      }
  r.surjective = true;
  std::set<LimitTuple> hit(images.begin(), images.end());
  for (const auto& t : lim)
    if (!hit.count(t)) {
      r.surjective = false;
      r.unreachable = t;
      break;
    }
  // sanity: images must land in the limit
  std::set<LimitTuple> ls(lim.begin(), lim.end());
  for (const auto& t : images)
    if (!ls.count(t)) throw InputError("comparison image escapes the limit");
  return r;
}

namespace {

std::vector<int> dedup_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// bijectivity of z -> (restr(z, A), restr(z, B)) into the pullback over
// the common subset I
bool pair_map_bijective(const TruncatedSimplicialSet& x, int n,
                        const std::vector<int>& A, const std::vector<int>& B,
                        const std::vector<int>& I) {
  int la = static_cast<int>(A.size()) - 1;
  int lb = static_cast<int>(B.size()) - 1;
  std::set<std::pair<int, int>> images;
  for (int z = 0; z < x.level_sizes[n]; ++z) {
    auto im = std::make_pair(restrict_element(x, n, A, z), restrict_element(x, n, B, z));
    if (!images.insert(im).second) return false;  // collision
  }
  int pullback = 0;
  for (int a = 0; a < x.level_sizes[la]; ++a)
    for (int b = 0; b < x.level_sizes[lb]; ++b)
      if (restrict_element(x, la, local_indices(A, I), a) ==
          restrict_element(x, lb, local_indices(B, I), b))
        ++pullback;
  return static_cast<int>(images.size()) == pullback;
}

}  // namespace

std::vector<VerdictEntry> check_left(const TruncatedSimplicialSet& x) {
  std::vector<VerdictEntry> out;
  for (int n = 3; n <= x.N; ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<int> A, B, I;
      A.push_back(0);
      for (int v = j; v <= n; ++v) A.push_back(v);
      for (int v = 0; v <= j; ++v) B.push_back(v);
      I = {0, j};
      out.push_back({n, j, true,
                     pair_map_bijective(x, n, dedup_sorted(A), dedup_sorted(B),
                                        dedup_sorted(I))});
    }
  return out;
}

std::vector<VerdictEntry> check_right(const TruncatedSimplicialSet& x) {
  std::vector<VerdictEntry> out;
  for (int n = 3; n <= x.N; ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<int> A, B, I;
      for (int v = 0; v <= j; ++v) A.push_back(v);
      A.push_back(n);
      for (int v = j; v <= n; ++v) B.push_back(v);
      I = {j, n};
      out.push_back({n, j, true,
                     pair_map_bijective(x, n, dedup_sorted(A), dedup_sorted(B),
                                        dedup_sorted(I))});
    }
  return out;
}

namespace {

std::vector<VerdictEntry> check_squares(const TruncatedSimplicialSet& x, bool lower) {
  std::vector<VerdictEntry> out;
  for (int n = 2; n <= x.N; ++n)
    for (int i = 1; i < n; ++i) {
      VerdictEntry e{n, i, n + 1 <= x.N, false};
      if (e.defined) {
        std::set<std::pair<int, int>> images;
        bool inj = true;
        for (int z = 0; z < x.level_sizes[n + 1]; ++z) {
          std::pair<int, int> im =
              lower ? std::make_pair(x.face(n + 1, n + 1, z), x.face(n + 1, i, z))
                    : std::make_pair(x.face(n + 1, 0, z), x.face(n + 1, i + 1, z));
          if (!images.insert(im).second) inj = false;
        }
        int pullback = 0;
        for (int a = 0; a < x.level_sizes[n]; ++a)
          for (int b = 0; b < x.level_sizes[n]; ++b) {
            bool match = lower ? x.face(n, i, a) == x.face(n, n, b)
                               : x.face(n, i, a) == x.face(n, 0, b);
            if (match) ++pullback;
          }
        e.ok = inj && static_cast<int>(images.size()) == pullback;
      }
      out.push_back(e);
    }
  return out;
}

}  // namespace

std::vector<VerdictEntry> check_lower(const TruncatedSimplicialSet& x) {
  return check_squares(x, true);
}

std::vector<VerdictEntry> check_upper(const TruncatedSimplicialSet& x) {
  return check_squares(x, false);
}

bool check_projection_surjective(const TruncatedSimplicialSet& x,
                                 const Subdivision& t) {
  int j = find_consecutive_triangle(t);
  std::vector<int> tri{j - 1, j, j + 1};
  Subdivision rest;
  rest.n = t.n;
  for (const auto& m : t.members)
    if (m != tri) rest.members.push_back(m);

  auto full = limit_over_subdivision(x, t);
  auto reduced = limit_over_subdivision(x, rest);

  // indices of the surviving members within the full tuple
  std::vector<int> surv;
  for (size_t m = 0; m < t.members.size(); ++m)
    if (t.members[m] != tri) surv.push_back(static_cast<int>(m));

  std::set<LimitTuple> reachable;
  for (const auto& tup : full) {
    LimitTuple r;
    for (int m : surv) r.push_back(tup[m]);
    reachable.insert(r);
  }
  for (const auto& r : reduced)
    if (!reachable.count(r)) return false;
  return true;
}

}  // namespace segal
