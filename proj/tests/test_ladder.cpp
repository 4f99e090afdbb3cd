#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bink/ladder.hpp"
#include "bink/random_gen.hpp"
#include "helpers.hpp"

using namespace bink;
using testhelp::make_example_2_10;

namespace {

BinaryMultiComplex example_complex() {
  auto ex = make_example_2_10();
  return chain_complex(ex.Mp.ring, {ex.Mpp, ex.M, ex.Mp}, {ex.p, ex.i}, {ex.q, ex.j});
}

}  // namespace

TEST_CASE("identity ladder is valid; torsion diagonal") {
  BinaryMultiComplex ex = example_complex();
  Ladder l = identity_ladder(ex, 0);
  CHECK(validate_ladder(l).empty());
  for (int i = 0; i <= 2; ++i) {
    BinaryMultiComplex t = torsion(l, i);
    CHECK(validate(t).empty());
    CHECK(is_acyclic(t));
    CHECK(is_diagonal(t));
  }
}

TEST_CASE("broken commutation is reported") {
  BaseRing r8 = make_ring(8);
  FinModule c8 = make_module(r8, {8});
  Morphism mul2 = make_morphism(c8, c8, IntMatrix(1, 1, {2}));
  BinaryMultiComplex p =
      chain_complex(r8, {c8, c8}, {identity_morphism(c8)}, {identity_morphism(c8)});
  Ladder l = identity_ladder(p, 0);
  l.sigma[{1}] = make_morphism(c8, c8, IntMatrix(1, 1, {3}));  // breaks top square
  auto report = validate_ladder(l);
  REQUIRE(!report.empty());
  bool found = false;
  for (const auto& r : report)
    if (r.find("sigma does not commute with top") != std::string::npos) found = true;
  CHECK(found);
  (void)mul2;
}

TEST_CASE("random 1-fold ladders validate; torsion acyclic, diagonal iff sigma=tau") {
  Rng rng(71);
  BaseRing r8 = make_ring(8);
  for (int it = 0; it < 12; ++it) {
    Ladder l = random_ladder(rng, r8, 1, 0, {2 + int(rng.below(3))}, 64);
    CHECK(validate_ladder(l).empty());
    for (int i = 0; i <= l.P.bounds[0]; ++i) {
      BinaryMultiComplex t = torsion(l, i);
      CHECK(validate(t).empty());
      CHECK(is_acyclic(t));
      bool st_equal = true;
      MultiIndex full{i};
      if (!(l.sigma_at(full) == l.tau_at(full))) st_equal = false;
      CHECK(is_diagonal_in(t, 0) == st_equal);
    }
  }
}

TEST_CASE("relation element bookkeeping") {
  BinaryMultiComplex ex = example_complex();
  Ladder l = identity_ladder(ex, 0);
  RelationElement r = relation_element(l);
  // Q - P cancels; three diagonal torsion terms remain
  CHECK(r.value.size() == 3);
  for (const auto& [k, term] : r.value.terms()) CHECK(is_diagonal(term.first));
  CHECK(r.involution);  // identities are involutions

  // a 1-fold ladder on [0,2] contributes 1 + 1 + 3 terms before cancellation
  Rng rng(81);
  Ladder rl = random_ladder(rng, make_ring(8), 1, 0, {2}, 32);
  RelationElement rr = relation_element(rl);
  CHECK(rr.value.size() <= 5);
}

TEST_CASE("involution flag for a swap ladder") {
  BaseRing r8 = make_ring(8);
  FinModule c4 = make_module(r8, {4});
  DirectSum ds = direct_sum({c4, c4});
  Morphism swap = add(compose(ds.incl[0], ds.proj[1]), compose(ds.incl[1], ds.proj[0]));
  BinaryMultiComplex p = chain_complex(r8, {ds.mod, ds.mod}, {identity_morphism(ds.mod)},
                                       {identity_morphism(ds.mod)});
  Ladder l = identity_ladder(p, 0);
  l.sigma[{0}] = swap;
  l.sigma[{1}] = swap;
  l.tau[{0}] = swap;
  l.tau[{1}] = swap;
  CHECK(validate_ladder(l).empty());
  CHECK(relation_element(l).involution);
}

TEST_CASE("boundary kernels on a two-flavor splice") {
  BaseRing r8 = make_ring(8);
  FinModule a = make_module(r8, {2});
  // 0 -> A -(id)-> A => A -(id)-> A -> 0 with distinct middle flavors
  DirectSum ds = direct_sum({a, a});
  Morphism swap = add(compose(ds.incl[0], ds.proj[1]), compose(ds.incl[1], ds.proj[0]));
  FinModule m = ds.mod;
  BinaryMultiComplex p = chain_complex(
      r8, {m, m, m, m},
      {identity_morphism(m), identity_morphism(m), identity_morphism(m)},
      {identity_morphism(m), swap, identity_morphism(m)});
  REQUIRE(validate(p).empty());
  REQUIRE(is_acyclic(p));
  BoundaryKernels bk = boundary_kernels(p, 0);
  CHECK(bk.J.object_at({}).is_zero());
  CHECK(bk.K.object_at({}).is_zero());

  // length bookkeeping on the example complex: J = ker(p) has length 3
  BinaryMultiComplex ex = example_complex();
  BoundaryKernels bex = boundary_kernels(ex, 0);
  CHECK(length(bex.J.object_at({})) == 3);
  CHECK(length(bex.K.object_at({})) == 3);
}

TEST_CASE("shorten a diagonal acyclic complex stays diagonal acyclic") {
  Rng rng(91);
  BaseRing r8 = make_ring(8);
  BinaryMultiComplex c = diagonal_embed(random_acyclic_complex_1(rng, r8, 3, 64), {0});
  BinaryMultiComplex s = shorten(c, 0);
  CHECK(s.bounds[0] == 2);
  CHECK(validate(s).empty());
  CHECK(is_acyclic(s));
  CHECK(is_diagonal(s));
}

TEST_CASE("shorten random binary acyclic complexes") {
  Rng rng(101);
  for (BaseRing ring : {make_ring(8), make_ring(9)}) {
    for (int it = 0; it < 10; ++it) {
      BinaryMultiComplex c = random_acyclic_complex_1(rng, ring, 3, 64);
      BinaryMultiComplex s = shorten(c, 0);
      CHECK(s.bounds[0] == 2);
      CHECK(validate(s).empty());
      CHECK(is_acyclic(s));
    }
  }
}

TEST_CASE("double shorten equals iterated shorten reaching [0,2]") {
  Rng rng(111);
  BaseRing r8 = make_ring(8);
  BinaryMultiComplex c = random_acyclic_complex_1(rng, r8, 4, 64);
  BinaryMultiComplex once = shorten(c, 0);
  CHECK(once.bounds[0] == 3);
  CHECK(validate(once).empty());
  CHECK(is_acyclic(once));
  BinaryMultiComplex twice = shorten(once, 0);
  CHECK(twice.bounds[0] == 2);
  CHECK(validate(twice).empty());
  CHECK(is_acyclic(twice));
  CHECK_THROWS(shorten(twice, 0));  // support too short
}

TEST_CASE("switch complex") {
  Rng rng(121);
  BaseRing r8 = make_ring(8);
  BinaryMultiComplex c = random_acyclic_complex_1(rng, r8, 3, 64);
  BinaryMultiComplex sw = switch_complex(c, 0);
  CHECK(validate(sw).empty());
  CHECK(is_acyclic(sw));
  BoundaryKernels bk = boundary_kernels(c, 0);
  FinModule j = bk.J.object_at({});
  CHECK(is_diagonal(sw) == j.is_zero());
  CHECK(sw.object_at({0}).order() == mul_ck(j.order(), j.order()));
}

TEST_CASE("shorten_ladder: identity ladder goes to identity-like ladders") {
  Rng rng(131);
  BaseRing r8 = make_ring(8);
  BinaryMultiComplex c2 = random_acyclic_complex_2(rng, r8, {2, 3}, 8, 2);
  Ladder l = identity_ladder(c2, 0);
  ShortenedLadder sl = shorten_ladder(l, 1);
  CHECK(validate_ladder(sl.main).empty());
  CHECK(validate_ladder(sl.swap).empty());
  for (const auto& [idx, s] : sl.main.sigma) {
    CHECK(s == identity_morphism(s.src));
    CHECK(sl.main.tau.at(idx) == s);
  }
}

TEST_CASE("shorten_ladder on random 2-fold ladders with torsion identity") {
  Rng rng(141);
  BaseRing r4 = make_ring(4);
  for (int it = 0; it < 4; ++it) {
    Ladder l = random_ladder(rng, r4, 2, 0, {2, 3}, 8);
    REQUIRE(validate_ladder(l).empty());
    ShortenedLadder sl = shorten_ladder(l, 1);
    CHECK(validate_ladder(sl.main).empty());
    CHECK(validate_ladder(sl.swap).empty());
    // <short(sigma)_i, short(tau)_i>_j == short(<sigma_i, tau_i>_j)
    for (int i = 0; i <= l.P.bounds[0]; ++i) {
      BinaryMultiComplex lhs = torsion(sl.main, i);
      BinaryMultiComplex rhs = shorten(torsion(l, i), 1);
      CHECK(lhs == rhs);
    }
    // switch-side torsion identity
    for (int i = 0; i <= l.P.bounds[0]; ++i) {
      BinaryMultiComplex lhs = torsion(sl.swap, i);
      BinaryMultiComplex rhs = switch_complex(torsion(l, i), 1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("shorten_ladder decomposition bookkeeping") {
  Rng rng(151);
  BaseRing r8 = make_ring(8);
  Ladder l = random_ladder(rng, r8, 2, 0, {2, 3}, 8);
  REQUIRE(validate_ladder(l).empty());
  ShortenedLadder sl = shorten_ladder(l, 1);
  // term-by-term substitution X -> short(X) + switch(X) of the relation
  // element equals the sum of the two shortened relation elements
  FormalSum mapped;
  for (const auto& [k, term] : relation_element(l).value.terms()) {
    mapped.add(shorten(term.first, 1), term.second);
    mapped.add(switch_complex(term.first, 1), term.second);
  }
  FormalSum rhs = relation_element(sl.main).value;
  rhs += relation_element(sl.swap).value;
  FormalSum diff = mapped;
  diff += -rhs;
  CHECK(diff.empty());
}
