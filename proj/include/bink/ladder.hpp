#pragma once

#include "bink/complex.hpp"

namespace bink {

/// Binary j-ladder: two bounded acyclic multicomplexes of the same shape and
/// two graded isomorphisms between them, sigma compatible with the top
/// differentials in direction j, tau with the bottoms, and both compatible
/// with both flavors in every other direction.
struct Ladder {
  BinaryMultiComplex P, Q;
  int dir_j = 0;
  std::map<MultiIndex, Morphism> sigma, tau;

  Morphism sigma_at(const MultiIndex& idx) const;
  Morphism tau_at(const MultiIndex& idx) const;
};

Ladder identity_ladder(const BinaryMultiComplex& p, int dir_j);

std::vector<std::string> validate_ladder(const Ladder& l);

/// The torsion complex <sigma_i, tau_i>_j: the two-layer complex P_i => Q_i
/// in direction j (P slice at degree 1, Q slice at degree 0), all other
/// structure inherited.
BinaryMultiComplex torsion(const Ladder& l, int i);

struct RelationElement {
  FormalSum value;  // Q - P - sum_i (-1)^i <sigma_i, tau_i>_j
  bool involution = false;
};
RelationElement relation_element(const Ladder& l);

/// Kernels of the degree-1 top and bottom differentials along a direction,
/// as multicomplexes of one lower direction count, with the inclusion
/// families into the degree-1 slice.
struct BoundaryKernels {
  BinaryMultiComplex J, K;
  std::map<MultiIndex, Morphism> inclJ, inclK;  // keyed by residual multidegree
};
BoundaryKernels boundary_kernels(const BinaryMultiComplex& p, int dir);

/// Grayson shortening along a direction: support shrinks by one, degree 0
/// becomes J + K + P0, degree 1 becomes P2 + K + J + P1, degree 2 becomes
/// P3 + J + K, higher degrees shift down.
BinaryMultiComplex shorten(const BinaryMultiComplex& p, int dir);

/// The switch complex: J + J in two layers along `dir`, top the identity and
/// bottom the swap.
BinaryMultiComplex switch_complex(const BinaryMultiComplex& p, int dir);

struct ShortenedLadder {
  Ladder main;    // (short(P), short(Q), short(sigma), short(tau))
  Ladder swap;    // ladder between the switch complexes
};
ShortenedLadder shorten_ladder(const Ladder& l, int dir);

}  // namespace bink
