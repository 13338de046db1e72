#pragma once

// Staircase diagrams on a category with cofibrations: the Ar[n] shape, chain
// representatives, staircase filling by pushouts, the level-wise simplicial
// set of isomorphism classes, and a memoized pushout oracle shared by the
// fillers.

#include <map>
#include <vector>

#include "segal/cofcat.hpp"
#include "segal/tsset.hpp"

namespace segal {

/// The poset of pairs (i,j), 0 <= i <= j <= n, ordered componentwise,
/// materialized as a FinCategory.
struct ArShape {
  int n = 0;
  std::shared_ptr<const FinCategory> cat;
  std::vector<std::pair<int, int>> pairs;  // object id -> (i,j)

  int index(int i, int j) const;
  /// Shape morphism (i,j) -> (k,l); kNone when not i<=k, j<=l.
  Mor arrow(int i, int j, int k, int l) const;

 private:
  friend ArShape ar_shape(int n);
  std::vector<int> index_;
  std::vector<Mor> arrows_;
};

ArShape ar_shape(int n);

/// Top row of a staircase: objects A_{0,1}..A_{0,n} and the n-1 connecting
/// cofibrations.  n = 0 is the empty chain.
struct CofChain {
  int n = 0;
  std::vector<Obj> objects;
  std::vector<Mor> maps;

  bool operator==(const CofChain&) const = default;
  bool operator<(const CofChain& o) const {
    return std::tie(n, objects, maps) < std::tie(o.n, o.objects, o.maps);
  }
};

/// All chains of n-1 cofibrations, in lexicographic (objects, maps) order.
std::vector<CofChain> enumerate_chains(const CofStructure& s, int n);

/// Componentwise isomorphism commuting with the chain maps, by backtracking.
bool chain_isomorphic(const CofStructure& s, const CofChain& a, const CofChain& b);

/// Memoizes exhaustive pushout searches; shared across staircase fills.
class PushoutOracle {
 public:
  explicit PushoutOracle(std::shared_ptr<const FinCategory> c) : c_(std::move(c)) {}
  const std::optional<PushoutSquare>& get(Mor f, Mor g);

 private:
  std::shared_ptr<const FinCategory> c_;
  std::map<std::pair<Mor, Mor>, std::optional<PushoutSquare>> cache_;
};

struct SObjectDiagram {
  int n = 0;
  FinFunctor fun;  // from ar_shape(n).cat
};

/// Zero diagonal, cofibrant horizontal maps, and the cofibration-sequence
/// pushout condition for every i < j < k.
ValidationReport validate_sobject(const CofStructure& s, const ArShape& shape,
                                  const SObjectDiagram& a);

/// Fills the staircase below a chain with memoized pushouts and mediating
/// maps.  Throws InputError naming the missing pushout when the category
/// does not realize one (bounded structures).
SObjectDiagram chain_to_sobject(const CofStructure& s, const ArShape& shape,
                                PushoutOracle& po, const CofChain& chain);

/// Reads the top row back off a staircase.
CofChain mu(const ArShape& shape, const SObjectDiagram& a);

/// Face d_i on chains: composes past vertex i for i >= 1; for i = 0 divides
/// out A_{0,1} through pushout mediators.
CofChain chain_face(const CofStructure& s, PushoutOracle& po, const CofChain& c, int i);

/// Degeneracy s_i on chains: inserts an identity (i >= 1) or prepends the
/// zero object (i = 0).
CofChain chain_degeneracy(const CofStructure& s, const CofChain& c, int i);

/// The simplicial set of chain isomorphism classes up to level N, with the
/// representative chains retained per class.
struct IsoSDot {
  TruncatedSimplicialSet x;
  std::vector<std::vector<CofChain>> reps;        // reps[n][class]
  std::vector<std::vector<int>> class_of;         // class_of[n][chain index]
  std::vector<std::vector<CofChain>> all_chains;  // all_chains[n]

  /// Class index of an arbitrary chain at level n.
  int locate(const CofStructure& s, const CofChain& c) const;
};

/// Quotients every level by chain_isomorphic (union-find) and induces faces
/// and degeneracies from the chain operations.  With verify set, every face
/// and degeneracy is recomputed on all chains, not just representatives, and
/// any class mismatch is a hard error.
IsoSDot iso_s_dot(const CofStructure& s, int N, bool verify = false);

}  // namespace segal
