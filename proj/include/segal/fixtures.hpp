#pragma once

// Bundled test categories: the zero-object-only category Z, the skeletal
// categories PS(k) of based sets with at most k non-base elements (all based
// maps, injections as cofibrations), and binary products for building larger
// ambients.

#include "segal/cofcat.hpp"

namespace segal {

CofStructure fixture_Z();

/// Objects are 0..k (object m is the based set with m non-base elements);
/// hom(m, p) has (p+1)^m elements; cofibrations are the based injections.
CofStructure fixture_PS(int k);

/// Morphism of PS(k) with the given endpoints and values, where values[i-1]
/// is the image of element i (0 means the basepoint).
Mor ps_morphism(const FinCategory& c, Obj src, Obj tgt, const std::vector<int>& values);

/// The values vector of a PS(k) morphism, inverse to ps_morphism.
std::vector<int> ps_values(const FinCategory& c, Mor m);

/// Product category with componentwise composition; cofibrations are the
/// pairs of cofibrations, zero is (zero, zero).
CofStructure fixture_product(const CofStructure& a, const CofStructure& b);

}  // namespace segal
