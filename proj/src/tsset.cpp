#include "segal/tsset.hpp"

#include <algorithm>
#include <string>

namespace segal {

ValidationReport validate_simplicial(const TruncatedSimplicialSet& x) {
  ValidationReport rep;
  auto bad = [&](const std::string& what, int n, int i, int j) {
    rep.violations.push_back(what + " at n=" + std::to_string(n) +
                             ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
  };
  if (static_cast<int>(x.level_sizes.size()) != x.N + 1) {
    rep.violations.push_back("level_sizes has wrong length");
    return rep;
  }
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= x.N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int e = 0; e < x.level_sizes[n]; ++e)
          if (x.face(n - 1, i, x.face(n, j, e)) != x.face(n - 1, j - 1, x.face(n, i, e))) {
            bad("face-face identity", n, i, j);
            goto next_ff;
          }
next_ff:
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 1 < x.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int e = 0; e < x.level_sizes[n]; ++e)
          if (x.degeneracy(n + 1, i, x.degeneracy(n, j, e)) !=
              x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, e))) {
            bad("degeneracy-degeneracy identity", n, i, j);
            goto next_ss;
          }
next_ss:
  // d_i s_j
  for (int n = 0; n < x.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int e = 0; e < x.level_sizes[n]; ++e) {
          int se = x.degeneracy(n, j, e);
          int got = x.face(n + 1, i, se);
          int want;
          if (i == j || i == j + 1)
            want = e;
          else if (i < j)
            want = n >= 1 ? x.degeneracy(n - 1, j - 1, x.face(n, i, e)) : -2;
          else
            want = n >= 1 ? x.degeneracy(n - 1, j, x.face(n, i - 1, e)) : -2;
          if (want != -2 && got != want) bad("face-degeneracy identity", n, i, j);
        }
  return rep;
}

int restrict_element(const TruncatedSimplicialSet& x, int n, const std::vector<int>& I,
                     int e) {
  if (I.empty()) throw InputError("restriction needs a nonempty vertex set");
  if (!std::is_sorted(I.begin(), I.end())) throw InputError("vertex set must be sorted");
  if (I.front() < 0 || I.back() > n) throw InputError("vertex out of range");
  std::vector<bool> keep(n + 1, false);
  for (int v : I) keep[v] = true;
  int cur = e, level = n;
  for (int v = n; v >= 0; --v)
    if (!keep[v]) {
      cur = x.face(level, v, cur);
      --level;
    }
  return cur;
}

TruncatedSimplicialSet reverse_simplicial(const TruncatedSimplicialSet& x) {
  TruncatedSimplicialSet r = x;
  for (int n = 1; n <= x.N; ++n)
    for (int i = 0; i <= n; ++i) r.faces[n][i] = x.faces[n][n - i];
  for (int n = 0; n < x.N; ++n)
    for (int i = 0; i <= n; ++i) r.degen[n][i] = x.degen[n][n - i];
  return r;
}

}  // namespace segal
