#pragma once

#include <random>

#include "bink/ladder.hpp"

namespace bink {

/// Seeded generators for test corpora. Everything is deterministic in the
/// seed; fallback paths guarantee termination.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

FinModule random_module(Rng& rng, BaseRing ring, bint max_order);
Subobject random_subobject(Rng& rng, const FinModule& m);
Morphism random_morphism(Rng& rng, const FinModule& src, const FinModule& tgt);
Morphism random_automorphism(Rng& rng, const FinModule& m);

/// Random binary acyclic complex on [0,len]: a spliced exact chain for the
/// top differentials and an independently resampled (or conjugated) exact
/// chain on the same objects for the bottoms.
BinaryMultiComplex random_acyclic_complex_1(Rng& rng, BaseRing ring, int len,
                                            bint max_object_order);

/// Random 2-fold binary acyclic complex: a direct sum of identity squares
/// with commuting bottom twists, scrambled by a global conjugation.
BinaryMultiComplex random_acyclic_complex_2(Rng& rng, BaseRing ring,
                                            std::vector<int> bounds,
                                            bint max_object_order, int atoms);

/// Random j-ladder on a random n-fold complex (n = 1 or 2). Q is a conjugated
/// copy of P; sigma and tau differ by unit scalings and, when a sampled
/// chain-homotopy twist validates, by that twist as well.
Ladder random_ladder(Rng& rng, BaseRing ring, int n, int dir_j, std::vector<int> bounds,
                     bint max_object_order);

}  // namespace bink
