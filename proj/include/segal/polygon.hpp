#pragma once

// Cyclically labeled polygons P_n with vertices 0..n: triangulations and
// polygonal subdivisions as noncrossing diagonal sets, together with the
// structural facts the comparison maps depend on (consecutive triangles,
// vertex valencies, left/right classification).

#include <optional>
#include <vector>

#include "segal/fincat.hpp"

namespace segal {

/// Faces of a subdivision of P_n, each a sorted vertex subset of {0..n} of
/// size >= 3; the face list itself is sorted lexicographically.
struct Subdivision {
  int n = 0;
  std::vector<std::vector<int>> members;

  bool operator==(const Subdivision&) const = default;
};

enum class SubdivisionClass { left, right, both, neither };

/// All subdivisions of P_n, trivial one included, in a deterministic order
/// (lexicographic on the canonicalized member lists).  Counts follow the
/// little Schroeder numbers: 1, 3, 11, 45, ... for n = 2, 3, 4, 5.
std::vector<Subdivision> enumerate_subdivisions(int n);

/// The subdivisions all of whose faces are triangles; Catalan-many
/// (1, 2, 5, 14, ... for n = 2, 3, 4, 5).
std::vector<Subdivision> enumerate_triangulations(int n);

/// Faces determined by a pairwise-noncrossing set of diagonals {a,b}
/// (b >= a+2 and {a,b} != {0,n}).
Subdivision subdivision_from_diagonals(int n,
                                       const std::vector<std::pair<int, int>>& diagonals);

/// Diagonals of s, sorted; inverse to subdivision_from_diagonals.
std::vector<std::pair<int, int>> diagonals_of(const Subdivision& s);

bool is_triangulation(const Subdivision& s);

/// Two chords cross iff a < c < b < d after sorting each.
bool chords_cross(std::pair<int, int> x, std::pair<int, int> y);

/// A vertex j with face {j-1, j, j+1}, strictly consecutive (no wraparound).
/// Every triangulation has one; throws InputError on a non-triangulation.
int find_consecutive_triangle(const Subdivision& t);

/// Degree of v among boundary edges and diagonals.  Always >= 2 on a
/// triangulation, and == 2 exactly when the modularly consecutive triangle
/// at v is a face.
int vertex_valency(const Subdivision& t, int v);

/// left: every face contains vertex 0; right: every face contains vertex n.
SubdivisionClass classify_subdivision(const Subdivision& s);

}  // namespace segal
