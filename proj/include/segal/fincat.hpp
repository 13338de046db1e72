#pragma once

// Explicit finite categories: objects and morphisms are dense integer ids,
// composition is a finite (partial) table.  All higher structure in this
// project (cofibration structures, S-construction levels, groupoid limits)
// is built on top of these.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace segal {

using Obj = int;
using Mor = int;
inline constexpr int kNone = -1;

/// Thrown on malformed inputs (unknown ids, mismatched shapes, bad files).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hard caps on category size; exhaustive checks are cubic in morphisms.
struct Limits {
  int max_objects = 64;
  int max_morphisms = 4096;
};

struct MorRec {
  std::string name;
  Obj src = kNone;
  Obj tgt = kNone;
};

class FinCategory {
 public:
  FinCategory() = default;

  int n_objects() const { return static_cast<int>(object_names_.size()); }
  int n_morphisms() const { return static_cast<int>(mors_.size()); }

  Obj src(Mor m) const { return mors_[check_mor(m)].src; }
  Obj tgt(Mor m) const { return mors_[check_mor(m)].tgt; }

  /// kNone when no identity was declared for x (validation reports it).
  Mor identity(Obj x) const { return identities_[check_obj(x)]; }
  bool is_identity(Mor m) const { return identities_[src(m)] == m; }

  /// g after f; kNone when the pair is not composable or the table has a gap.
  Mor compose(Mor g, Mor f) const {
    auto it = table_.find(key(g, f));
    return it == table_.end() ? kNone : it->second;
  }
  bool composable(Mor g, Mor f) const { return tgt(f) == src(g); }

  const std::vector<Mor>& hom(Obj a, Obj b) const {
    return hom_[check_obj(a) * n_objects() + check_obj(b)];
  }

  const std::string& object_name(Obj x) const { return object_names_[check_obj(x)]; }
  const std::string& morphism_name(Mor m) const { return mors_[check_mor(m)].name; }

  Obj check_obj(Obj x) const {
    if (x < 0 || x >= n_objects()) throw InputError("unknown object id");
    return x;
  }
  Mor check_mor(Mor m) const {
    if (m < 0 || m >= n_morphisms()) throw InputError("unknown morphism id");
    return m;
  }

 private:
  friend class FinCategoryBuilder;
  static std::uint64_t key(Mor g, Mor f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
  }

  std::vector<std::string> object_names_;
  std::vector<MorRec> mors_;
  std::vector<Mor> identities_;  // per object, kNone allowed
  std::unordered_map<std::uint64_t, Mor> table_;
  std::vector<std::vector<Mor>> hom_;  // indexed src * n_objects + tgt
};

class FinCategoryBuilder {
 public:
  explicit FinCategoryBuilder(Limits limits = {}) : limits_(limits) {}

  Obj add_object(std::string name = "");
  Mor add_morphism(Obj src, Obj tgt, std::string name = "");
  void set_identity(Obj x, Mor m);
  void set_compose(Mor g, Mor f, Mor gf);

  int n_objects() const { return static_cast<int>(cat_.object_names_.size()); }
  int n_morphisms() const { return static_cast<int>(cat_.mors_.size()); }

  /// Finalizes hom-set indices.  Only referential integrity is enforced here;
  /// category axioms are checked by validate_category so that broken tables
  /// can still be loaded and reported on.
  FinCategory build() &&;

 private:
  Limits limits_;
  FinCategory cat_;
};

struct ValidationReport {
  std::string mode = "strict";
  std::vector<std::string> violations;
  std::vector<std::string> caveats;
  bool ok() const { return violations.empty(); }
};

/// Identity, associativity, and closure checks; every violated instance is
/// listed (violations are data, not errors).
ValidationReport validate_category(const FinCategory& c);

std::optional<Mor> inverse_of(const FinCategory& c, Mor f);
bool is_isomorphism(const FinCategory& c, Mor f);

/// Exactly one morphism to and from every object.
bool is_zero_object(const FinCategory& c, Obj x);

FinCategory opposite(const FinCategory& c);

struct PushoutSquare {
  Obj apex = kNone;  // the pushout object P
  Mor from_b = kNone;  // B -> P
  Mor from_c = kNone;  // C -> P
};

/// Pushout of the span B <-f- A -g-> C decided by exhaustive universal-property
/// search over the category's own objects.  Ties broken by smallest object id,
/// then lexicographic legs, so results are reproducible.
std::optional<PushoutSquare> find_pushout(const FinCategory& c, Mor f, Mor g);

struct PullbackSquare {
  Obj apex = kNone;  // the pullback object Q
  Mor to_b = kNone;   // Q -> B
  Mor to_c = kNone;   // Q -> C
};

/// Pullback of the cospan B -f-> A <-g- C, dual search.
std::optional<PullbackSquare> find_pullback(const FinCategory& c, Mor f, Mor g);

/// Is (p, q) a pullback cone over the cospan B -f-> A <-g- C?  p: Q->B, q: Q->C.
bool is_pullback(const FinCategory& c, Mor f, Mor g, Obj q_apex, Mor p, Mor q);

/// Is (p, q) a pushout cocone under the span B <-f- A -g-> C?  p: B->P, q: C->P.
bool is_pushout(const FinCategory& c, Mor f, Mor g, Obj apex, Mor p, Mor q);

struct FinFunctor {
  std::shared_ptr<const FinCategory> src;
  std::shared_ptr<const FinCategory> tgt;
  std::vector<Obj> omap;
  std::vector<Mor> mmap;

  Obj on_obj(Obj x) const { return omap[src->check_obj(x)]; }
  Mor on_mor(Mor m) const { return mmap[src->check_mor(m)]; }
};

/// Preservation of sources, targets, identities, and composition, pairwise.
ValidationReport validate_functor(const FinFunctor& f);

FinFunctor identity_functor(std::shared_ptr<const FinCategory> c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

/// All natural transformations d1 => d2 (as component vectors indexed by shape
/// objects) whose every component satisfies `component_ok` (default: all).
std::vector<std::vector<Mor>> natural_transformations(
    const FinFunctor& d1, const FinFunctor& d2,
    const std::function<bool(Mor)>& component_ok = {});

/// First natural isomorphism d1 => d2 found by backtracking, if any.
std::optional<std::vector<Mor>> find_natural_iso(const FinFunctor& d1,
                                                 const FinFunctor& d2);

bool diagram_isomorphic(const FinFunctor& d1, const FinFunctor& d2);

}  // namespace segal
