#pragma once

#include "bink/module.hpp"

namespace bink::testhelp {

/// The C2+C8+C4 binary short exact sequence over Z/8, in canonical
/// coordinates (divisor order 2, 4, 8; the middle module's second and third
/// generators are the C4 and C8 factors respectively).
struct Example210 {
  FinModule Mp, M, Mpp;
  Morphism i, j, p, q;
};

inline Example210 make_example_2_10() {
  BaseRing r8 = make_ring(8);
  FinModule Mp = make_module(r8, {2, 4});
  FinModule M = make_module(r8, {2, 4, 8});
  FinModule Mpp = make_module(r8, {2, 4});
  // (a,b) -> (a, 0, 2b)
  Morphism i = make_morphism(Mp, M, IntMatrix(3, 2, {1, 0, 0, 0, 0, 2}));
  // (a,b) -> (0, b, 4a)
  Morphism j = make_morphism(Mp, M, IntMatrix(3, 2, {0, 0, 0, 1, 4, 0}));
  // (x1,x2,x3) -> (x3 mod 2, x2)
  Morphism p = make_morphism(M, Mpp, IntMatrix(2, 3, {0, 0, 1, 0, 1, 0}));
  // (x1,x2,x3) -> (x1, x3 mod 4)
  Morphism q = make_morphism(M, Mpp, IntMatrix(2, 3, {1, 0, 0, 0, 0, 1}));
  return {Mp, M, Mpp, i, j, p, q};
}

}  // namespace bink::testhelp
