#pragma once

#include <vector>

#include "totcof/chain_complex.hpp"
#include "totcof/poset.hpp"

namespace totcof {

/// Normalized chains of the order complex: degree-n basis is the strict
/// (n+1)-chains in lexicographic order, d = sum_i (-1)^i (delete x_i).
/// `reduced` appends the augmentation to a single generator in degree -1.
ChainComplex order_complex_chains(const Poset& p, bool reduced = false);

/// Order complex of the sub-poset selected by `within` but with basis labels
/// and chain order taken from the ambient poset.
ChainComplex order_complex_chains(const Poset& p, const ElementMask& within);

/// Chains of C not entirely inside the sub-poset A, with the quotient
/// differential (faces inside A are dropped). Homology is H_*(N C, N A).
ChainComplex relative_chains(const Poset& c, const ElementMask& a);

/// The surjection N(C)/N(D) -> N(C)/N(C^F) for F outside the ideal: a chain
/// survives iff it is not contained in C^F.
ChainMap quotient_map_beta(const PosetPair& pair, std::size_t f);

/// Inclusion N(A) -> N(B) for sub-posets A within B of the same ambient poset.
ChainMap nerve_inclusion(const Poset& p, const ElementMask& a, const ElementMask& b);

}  // namespace totcof
