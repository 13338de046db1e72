#pragma once

// Categories of staircase diagrams: exhaustive enumeration of valid
// staircases at a level, their materialized diagram categories (all maps,
// weak equivalences, or isomorphisms), the chain groupoid with the top-row
// comparison functor, restriction functors along vertex subsets, and the
// categorical comparison checks against 2-limits and strict pullbacks.

#include <functional>
#include <map>
#include <string>

#include "segal/gpd2lim.hpp"
#include "segal/sconstr.hpp"

namespace segal {

/// All staircases at the shape's level, in deterministic order (chain order,
/// then cell/map choices ascending).  Every returned diagram satisfies
/// validate_sobject; every valid diagram is returned.
std::vector<SObjectDiagram> enumerate_sobjects(const CofStructure& s,
                                               const ArShape& shape);

/// A materialized category of staircases: objects are the enumerated
/// diagrams, morphisms natural transformations whose components satisfy a
/// filter, composition componentwise.
struct SCat {
  int n = 0;
  ArShape shape;
  std::vector<SObjectDiagram> objects;
  std::shared_ptr<const FinCategory> cat;
  std::vector<std::vector<Mor>> mor_comps;  // per morphism, per shape object

  std::map<std::pair<std::vector<Obj>, std::vector<Mor>>, int> obj_index;
  std::map<std::tuple<int, int, std::vector<Mor>>, Mor> mor_index;

  int locate_object(const SObjectDiagram& d) const;
};

/// Empty filter admits every component.  The filter must be closed under
/// composition and contain identities, or materialization throws.
SCat build_sn_category(const CofStructure& s, int n,
                       const std::function<bool(Mor)>& allow = {});

/// Components restricted to isomorphisms.
SCat build_isn_category(const CofStructure& s, int n);

/// Components restricted to the weak equivalences of w.
SCat build_wsn_category(const WaldStructure& w, int n);

/// The groupoid of length-n chains and their isomorphisms.
struct ChainCat {
  int n = 0;
  std::vector<CofChain> objects;  // sorted, as enumerated
  std::shared_ptr<const FinCategory> cat;
  std::vector<std::vector<Mor>> mor_comps;  // per morphism, n components
};

ChainCat build_mn_category(const CofStructure& s, int n);

/// Top-row readoff as a functor from the isomorphism staircase category to
/// the chain groupoid.
FinFunctor mu_functor(const CofStructure& s, const SCat& isn, const ChainCat& mn);

/// Precomposition with a vertex inclusion: verts is a sorted subset of
/// {0..from.n} of size to.n + 1.  Both categories must use the same
/// component filter or lookups fail.
FinFunctor restriction_functor(const SCat& from, const SCat& to,
                               const std::vector<int>& verts);

struct CatSegalVerdict {
  int n = 0;
  int j = 0;
  std::string variant;
  bool defined = false;
  bool isofib = false;  // the reverified fibrancy of the restriction leg
  EquivalenceVerdict equiv;

  bool ok() const { return !defined || (isofib && equiv.ok()); }
};

/// The left-family comparison at each (n, j), 2 <= n <= N, 0 < j < n, as a
/// functor into a limit: variant "iso-set" delegates to the element-level
/// maps, "groupoid" compares isomorphism categories against the 2-fiber
/// product, "category" and "w-category" compare against the strict pullback
/// after re-verifying that the restriction leg is an isofibration (a hard
/// error when it is not, since the strict pullback is then meaningless).
std::vector<CatSegalVerdict> check_categorical_2segal(
    const CofStructure& s, int N, const std::string& variant,
    const WaldStructure* w = nullptr);

}  // namespace segal
