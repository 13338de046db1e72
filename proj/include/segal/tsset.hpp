#pragma once

// Truncated simplicial sets: finite levels X_0..X_N with face and degeneracy
// tables, identity validation, restriction along vertex subsets, and the
// front-to-back reversal used for right-family checks.

#include <vector>

#include "segal/fincat.hpp"

namespace segal {

struct TruncatedSimplicialSet {
  int N = 0;
  std::vector<int> level_sizes;  // N+1 entries
  // faces[n][i] maps X_n -> X_{n-1}, 1 <= n <= N, 0 <= i <= n (faces[0] empty)
  std::vector<std::vector<std::vector<int>>> faces;
  // degen[n][i] maps X_n -> X_{n+1}, 0 <= n < N, 0 <= i <= n
  std::vector<std::vector<std::vector<int>>> degen;

  int face(int n, int i, int x) const { return faces[n][i][x]; }
  int degeneracy(int n, int i, int x) const { return degen[n][i][x]; }
};

/// All simplicial identities that stay inside levels 0..N, checked pointwise.
ValidationReport validate_simplicial(const TruncatedSimplicialSet& x);

/// Image of x-element e under the unique order-preserving injection picking
/// the vertex subset I of {0..n} (|I| >= 1): deletes the missing vertices
/// highest-first through face maps.
int restrict_element(const TruncatedSimplicialSet& x, int n, const std::vector<int>& I,
                     int e);

/// The same simplicial set traversed back to front: d_i becomes d_{n-i} and
/// s_i becomes s_{n-i}.
TruncatedSimplicialSet reverse_simplicial(const TruncatedSimplicialSet& x);

}  // namespace segal
