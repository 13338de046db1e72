#pragma once

// Cofibration, fibration, and weak-equivalence structures layered on a
// FinCategory: axiom validation (strict and bounded), cokernels, generated
// subcategories, intersection closure, and the extension-property checker
// that drives the sufficiency results.

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "segal/fincat.hpp"

namespace segal {

struct CofStructure {
  std::shared_ptr<const FinCategory> base;
  Obj zero = kNone;
  std::set<Mor> cofibrations;

  bool is_cof(Mor m) const { return cofibrations.count(m) != 0; }
};

/// Weak equivalences on top of a CofStructure.  with_iso_weq picks the
/// smallest admissible class, the isomorphisms.
struct WaldStructure {
  CofStructure cof;
  std::set<Mor> weq;

  bool is_weq(Mor m) const { return weq.count(m) != 0; }
};

WaldStructure with_iso_weq(CofStructure s);

struct FibStructure {
  std::shared_ptr<const FinCategory> base;
  Obj zero = kNone;
  std::set<Mor> fibrations;
};

/// Axioms: zero object, zero->A cofibrant, isomorphisms cofibrant, closure
/// under composition, pushouts of cofibrations along arbitrary maps with a
/// cofibrant induced leg.  In bounded mode a missing pushout becomes a caveat
/// rather than a violation; the report's mode field records which was used.
ValidationReport validate_cof(const CofStructure& s, bool bounded = false);

/// CofStructure axioms plus: isomorphisms are weak equivalences, weq closed
/// under composition, and the glueing condition (maps of pushout spans that
/// are componentwise weak equivalences induce a weak equivalence on pushouts).
ValidationReport validate_wald(const WaldStructure& w, bool bounded = false);

/// Dual axioms, checked by validating the mirrored CofStructure on the
/// opposite category.
ValidationReport validate_fib(const FibStructure& s, bool bounded = false);

/// The fibration structure induced on opposite(base) by a cofibration
/// structure (same morphism ids; opposite preserves them).
FibStructure dual_fib(const CofStructure& s);

/// Cokernel of a cofibration i as the pushout of i along source(i) -> zero;
/// (cokernel object, quotient morphism target(i) -> cokernel).  Empty when
/// the pushout is not realized inside the category.
std::optional<std::pair<Obj, Mor>> cokernel(const CofStructure& s, Mor i);

struct Seed {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;
};

/// A subcategory presented by ambient ids.
struct SubcatSpec {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;
  std::set<Mor> cofibrations;
};

struct GeneratedSubcategory {
  CofStructure sub;  // freestanding category on the closure
  std::vector<Obj> ambient_objects;   // sub object id -> ambient object id
  std::vector<Mor> ambient_morphisms; // sub morphism id -> ambient morphism id

  SubcatSpec spec() const;
};

/// Least subcategory with cofibrations containing the seed: closed under
/// identities, composition, morphisms to and from zero, and pushouts of its
/// cofibrations along its morphisms (with both legs), computed as a fixpoint.
/// The seed must contain the zero object and every ambient morphism between
/// seed objects and zero.
GeneratedSubcategory generate_subcategory(const CofStructure& ambient, const Seed& seed);

/// Materializes a SubcatSpec as a freestanding CofStructure.
GeneratedSubcategory materialize_subcategory(const CofStructure& ambient,
                                             const SubcatSpec& spec);

/// Intersects the listed subcategories and revalidates the result (bounded
/// mode).  Expected to hold for all valid inputs.
bool check_intersection_closed(const CofStructure& ambient,
                               const std::vector<SubcatSpec>& subs);

struct ExtensionWitness {
  Mor cof_ax = kNone;   // A >-> X
  Mor quotient = kNone; // X ->> Y
  Mor cof_by = kNone;   // B >-> Y
  Obj c = kNone;        // the interpolating object
  Mor a_to_c = kNone;   // A >-> C
  Mor c_to_x = kNone;   // C >-> X
  Mor c_to_b = kNone;   // C ->> B
};

struct ExtensionReport {
  bool pass = true;
  std::string mode = "strict";
  int configurations = 0;
  std::vector<ExtensionWitness> witnesses;
  std::string failure;  // first failing configuration, pretty-printed
};

/// For every cofibration A >-> X with realized quotient X ->> Y and every
/// cofibration B >-> Y, searches for C with A >-> C >-> X over B such that
/// the square on (A -> 0, A >-> C) is a pushout and the square on
/// (C >-> X, C ->> B) is a pushout and a pullback.  Only the pushout
/// condition is imposed on the left square.
ExtensionReport check_extension_property(const CofStructure& s, bool bounded = false);

}  // namespace segal
