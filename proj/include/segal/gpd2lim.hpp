#pragma once

// Limits of finite diagrams of categories with coherence isomorphisms:
// projective 2-limits, 2-fiber products, strict pullbacks, the homotopy
// pullback model with its comparison functor, and the equivalence /
// isofibration / slice-initial predicates.

#include <functional>
#include <memory>
#include <vector>

#include "segal/fincat.hpp"

namespace segal {

/// A strict functor from a finite shape into categories: one category per
/// shape object, one functor per shape morphism (identities must map to
/// identity functors, composites must agree strictly).
struct CatDiagram {
  std::shared_ptr<const FinCategory> shape;
  std::vector<std::shared_ptr<const FinCategory>> cats;
  std::vector<FinFunctor> functors;
};

ValidationReport validate_cat_diagram(const CatDiagram& d);

/// A category materialized from tuple data, with decode tables.
struct Materialized {
  std::shared_ptr<const FinCategory> cat;
  std::vector<std::vector<Obj>> obj_parts;  // per object: one entry per slot
  std::vector<std::vector<Mor>> obj_coh;    // per object: coherence isos
  std::vector<std::vector<Mor>> mor_parts;  // per morphism: one entry per slot
};

/// Objects: a vertex-wise object choice plus an isomorphism per non-identity
/// shape arrow, subject to the cocycle condition; identity coherences are
/// elided (they are forced).  Morphisms: vertex-wise components commuting
/// with the coherences.  For a one-vertex shape this returns a structural
/// copy of the input category.
Materialized projective_2_limit(const CatDiagram& d);

/// The cospan 2-limit: tuples (a, b, c, y_F: F(a) ~ b, y_G: G(c) ~ b) with
/// component triples as morphisms.  Slots are ordered a, b, c.
Materialized two_fiber_product(const FinFunctor& F, const FinFunctor& G);

/// Ordinary pullback: pairs (a, c) with F(a) = G(c), componentwise morphisms.
Materialized strict_pullback(const FinFunctor& F, const FinFunctor& G);

/// The isofibration-replacement model of the homotopy pullback; with both
/// legs replaced it coincides with the cospan 2-limit, which is how it is
/// materialized.
Materialized homotopy_pullback_category(const FinFunctor& F, const FinFunctor& G);

/// Comparison (a, c) -> (a, F(a), c, id, id) from the strict pullback into
/// the homotopy pullback model.
FinFunctor hpb_comparison(const Materialized& pb, const Materialized& hpb,
                          const FinFunctor& F, const FinFunctor& G);

/// Every isomorphism out of an image object lifts to an isomorphism.
bool check_isofibration(const FinFunctor& F);

struct EquivalenceVerdict {
  bool ess_surj = false;
  bool full = false;
  bool faithful = false;
  bool ok() const { return ess_surj && full && faithful; }
};

EquivalenceVerdict check_equivalence(const FinFunctor& F);

/// Does the slice H/x have an initial object?  Decided exhaustively.
bool check_slice_initial(const FinFunctor& H, Obj x);

bool is_groupoid(const FinCategory& c);

/// Disjoint union of connected groupoids; classes[i] = (object count, order
/// of the cyclic automorphism group).
std::shared_ptr<const FinCategory> cyclic_groupoid(
    const std::vector<std::pair<int, int>>& classes);

/// Contractible groupoid on k objects.
std::shared_ptr<const FinCategory> pair_groupoid(int k);

std::shared_ptr<const FinCategory> product_category(
    std::shared_ptr<const FinCategory> a, std::shared_ptr<const FinCategory> b);

FinFunctor product_projection(std::shared_ptr<const FinCategory> a,
                              std::shared_ptr<const FinCategory> b,
                              std::shared_ptr<const FinCategory> prod,
                              int which);

/// Inclusion of the full subcategory on the given (sorted, distinct) objects.
FinFunctor full_subcategory_inclusion(std::shared_ptr<const FinCategory> c,
                                      const std::vector<Obj>& objects);

/// A cospan of groupoids F: A -> B <- C :G where F is full and surjective on
/// objects (a product projection) and G is a full subcategory inclusion.
/// Deterministic in the seed.
struct GroupoidCospan {
  FinFunctor F;
  FinFunctor G;
};

GroupoidCospan random_groupoid_cospan(std::uint64_t seed);

}  // namespace segal
