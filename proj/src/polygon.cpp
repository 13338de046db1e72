#include "segal/polygon.hpp"

#include <algorithm>

namespace segal {

bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = std::minmax(x.first, x.second);
  auto [c, d] = std::minmax(y.first, y.second);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

namespace {

std::vector<std::pair<int, int>> all_diagonals(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!(a == 0 && b == n)) out.emplace_back(a, b);
  return out;
}

// Splits the region given by the cyclic vertex interval `verts` along its
// first applicable diagonal; with no diagonals the region is a single face.
void faces_of(std::vector<int> verts, std::vector<std::pair<int, int>> diags,
              std::vector<std::vector<int>>& out) {
  if (diags.empty()) {
    out.push_back(std::move(verts));
    return;
  }
  auto [a, b] = diags.back();
  diags.pop_back();
  auto pos = [&](int v) {
    return static_cast<int>(std::find(verts.begin(), verts.end(), v) - verts.begin());
  };
  int ia = pos(a), ib = pos(b);
  if (ia > ib) std::swap(ia, ib);
  std::vector<int> side1(verts.begin() + ia, verts.begin() + ib + 1);
  std::vector<int> side2(verts.begin(), verts.begin() + ia + 1);
  side2.insert(side2.end(), verts.begin() + ib, verts.end());
  std::vector<std::pair<int, int>> d1, d2;
  auto contains = [](const std::vector<int>& vs, int v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  for (auto d : diags) {
    if (contains(side1, d.first) && contains(side1, d.second))
      d1.push_back(d);
    else
      d2.push_back(d);
  }
  faces_of(std::move(side1), std::move(d1), out);
  faces_of(std::move(side2), std::move(d2), out);
}

}  // namespace

Subdivision subdivision_from_diagonals(
    int n, const std::vector<std::pair<int, int>>& diagonals) {
  if (n < 2) throw InputError("polygon level must be at least 2");
  for (auto [a, b] : diagonals) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b > n || b < a + 2 || (a == 0 && b == n))
      throw InputError("not a diagonal of this polygon");
  }
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j)
      if (chords_cross(diagonals[i], diagonals[j]))
        throw InputError("diagonals cross");
  std::vector<int> verts(n + 1);
  for (int v = 0; v <= n; ++v) verts[v] = v;
  Subdivision s;
  s.n = n;
  faces_of(std::move(verts), diagonals, s.members);
  for (auto& m : s.members) std::sort(m.begin(), m.end());
  std::sort(s.members.begin(), s.members.end());
  return s;
}

std::vector<std::pair<int, int>> diagonals_of(const Subdivision& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& m : s.members) {
    int k = static_cast<int>(m.size());
    for (int i = 0; i < k; ++i) {
      int a = m[i], b = m[(i + 1) % k];
      if (a > b) std::swap(a, b);
      bool boundary = (b == a + 1) || (a == 0 && b == s.n);
      if (!boundary) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subdivision> enumerate_subdivisions(int n) {
  if (n < 2) throw InputError("polygon level must be at least 2");
  auto cand = all_diagonals(n);
  int k = static_cast<int>(cand.size());
  std::vector<Subdivision> out;
  std::vector<std::pair<int, int>> chosen;
  std::function<void(int)> go = [&](int at) {
    if (at == k) {
      out.push_back(subdivision_from_diagonals(n, chosen));
      return;
    }
    go(at + 1);
    for (auto d : chosen)
      if (chords_cross(d, cand[at])) return;
    chosen.push_back(cand[at]);
    go(at + 1);
    chosen.pop_back();
  };
  go(0);
  std::sort(out.begin(), out.end(),
            [](const Subdivision& a, const Subdivision& b) { return a.members < b.members; });
  return out;
}

bool is_triangulation(const Subdivision& s) {
  return std::all_of(s.members.begin(), s.members.end(),
                     [](const std::vector<int>& m) { return m.size() == 3; });
}

std::vector<Subdivision> enumerate_triangulations(int n) {
  auto subs = enumerate_subdivisions(n);
  std::erase_if(subs, [](const Subdivision& s) { return !is_triangulation(s); });
  return subs;
}

int find_consecutive_triangle(const Subdivision& t) {
  if (!is_triangulation(t)) throw InputError("not a triangulation");
  for (int j = 1; j + 1 <= t.n; ++j) {
    std::vector<int> tri{j - 1, j, j + 1};
    if (std::find(t.members.begin(), t.members.end(), tri) != t.members.end()) return j;
  }
  throw InputError("no consecutive triangle found");
}

int vertex_valency(const Subdivision& t, int v) {
  if (v < 0 || v > t.n) throw InputError("vertex out of range");
  int deg = 2;  // the two boundary edges at v, {0,n} included
  for (auto [a, b] : diagonals_of(t))
    if (a == v || b == v) ++deg;
  return deg;
}

SubdivisionClass classify_subdivision(const Subdivision& s) {
  bool left = true, right = true;
  for (const auto& m : s.members) {
    if (m.front() != 0) left = false;
    if (m.back() != s.n) right = false;
  }
  if (left && right) return SubdivisionClass::both;
  if (left) return SubdivisionClass::left;
  if (right) return SubdivisionClass::right;
  return SubdivisionClass::neither;
}

}  // namespace segal
