#pragma once

// Comparison maps from simplicial levels into limits over polygonal
// subdivisions, and the left / right / upper / lower check families with
// their cross-validation.

#include <optional>
#include <vector>

#include "segal/polygon.hpp"
#include "segal/tsset.hpp"

namespace segal {

/// A point of the limit: one element per subdivision member, in member order,
/// compatible on all shared edges.
using LimitTuple = std::vector<int>;

/// All limit tuples, in lexicographic order.  The parallel path chunks on
/// the first member's value and concatenates in order, so both paths return
/// identical vectors.
std::vector<LimitTuple> limit_over_subdivision(const TruncatedSimplicialSet& x,
                                               const Subdivision& p,
                                               bool parallel = false);

struct SegalMapResult {
  Subdivision subdivision;
  int domain_size = 0;
  int limit_size = 0;
  bool injective = false;
  bool surjective = false;
  std::optional<LimitTuple> unreachable;      // a limit tuple with no preimage
  std::optional<std::pair<int, int>> collision;  // two domain elements that collide

  bool bijective() const { return injective && surjective; }
};

/// The canonical map X_n -> lim: restrict each element to every member.
SegalMapResult two_segal_map(const TruncatedSimplicialSet& x, const Subdivision& p);

struct VerdictEntry {
  int n = 0;
  int idx = 0;  // j for left/right, i for upper/lower
  bool defined = false;
  bool ok = false;
};

/// For 3 <= n <= N and 0 <= j <= n: is X_n -> X_{{0,j..n}} x_{X_{{0,j}}}
/// X_{{0..j}} a bijection?
std::vector<VerdictEntry> check_left(const TruncatedSimplicialSet& x);

/// Mirror family: X_n -> X_{{0..j,n}} x_{X_{{j,n}}} X_{{j..n}}.
std::vector<VerdictEntry> check_right(const TruncatedSimplicialSet& x);

/// For 0 < i < n, n+1 <= N: is the square with top d_{n+1}, left d_i,
/// right d_i, bottom d_n cartesian?  Entries with n+1 > N are marked
/// undefined.
std::vector<VerdictEntry> check_lower(const TruncatedSimplicialSet& x);

/// The square with top d_0, left d_{i+1}, right d_i, bottom d_0.
std::vector<VerdictEntry> check_upper(const TruncatedSimplicialSet& x);

/// Forgetting the consecutive triangle's component: is the limit over t
/// surjective onto the limit over t minus that triangle?
bool check_projection_surjective(const TruncatedSimplicialSet& x, const Subdivision& t);

}  // namespace segal
