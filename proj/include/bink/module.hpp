#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bink/linalg.hpp"

namespace bink {

struct BaseRing {
  bint N = 2;        // the ring is Z/NZ
  bint radical = 2;  // product of the distinct primes of N
  bool operator==(const BaseRing&) const = default;
};

BaseRing make_ring(bint N);

/// A finitely generated Z/NZ-module in canonical elementary-divisor form:
/// divisors d1 | d2 | ... | dr, each di > 1 and di | N. The zero module has
/// an empty divisor list. Elements are column coordinate vectors.
struct FinModule {
  BaseRing ring;
  std::vector<bint> divisors;

  int rank() const { return int(divisors.size()); }
  bool is_zero() const { return divisors.empty(); }
  bint order() const {
    bint o = 1;
    for (bint d : divisors) o = mul_ck(o, d);
    return o;
  }
  bool operator==(const FinModule&) const = default;
};

FinModule make_module(BaseRing ring, std::vector<bint> divisors);
FinModule zero_module(BaseRing ring);

int length(const FinModule& m);
bool is_semisimple(const FinModule& m);

/// Morphism between canonical modules: matrix of size tgt.rank x src.rank
/// acting on column vectors, entries reduced into [0, d_i^tgt) row-wise.
struct Morphism {
  FinModule src, tgt;
  IntMatrix mat;
  bool operator==(const Morphism&) const = default;
};

bool is_well_defined(const FinModule& src, const FinModule& tgt, const IntMatrix& m);
Morphism make_morphism(const FinModule& src, const FinModule& tgt, IntMatrix m);
Morphism identity_morphism(const FinModule& m);
Morphism zero_morphism(const FinModule& src, const FinModule& tgt);
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism negate(const Morphism& f);
std::vector<bint> act(const Morphism& f, const std::vector<bint>& x);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

/// Subobject of a canonical module, stored as the canonical HNF basis of its
/// preimage lattice in Z^rank. Always contains the relation lattice
/// diag(divisors), so equal subobjects have identical representations.
struct Subobject {
  FinModule ambient;
  IntMatrix lat;
  bool operator==(const Subobject&) const = default;
};

Subobject zero_subobject(const FinModule& m);
Subobject full_subobject(const FinModule& m);
/// Subobject generated by the given element rows (module relations added).
Subobject span_subobject(const FinModule& m, const IntMatrix& element_rows);
bint subobject_order(const Subobject& s);
bool sub_contains(const Subobject& big, const Subobject& small);
bool sub_contains_element(const Subobject& s, const std::vector<bint>& x);

/// Canonical presentation of Z^r modulo a row-relation lattice (the ring
/// relations N*I are stacked in automatically).
struct Presentation {
  FinModule mod;
  IntMatrix to_canon;    // mod.rank x r
  IntMatrix from_canon;  // r x mod.rank
};
Presentation canonicalize(BaseRing ring, const IntMatrix& relation_rows, int ambient_rank);

struct SubModule {
  FinModule mod;
  Morphism incl;  // mono mod -> ambient with image the subobject
};
struct QuotModule {
  FinModule mod;
  Morphism proj;  // epi ambient -> mod with kernel the subobject
};
SubModule subobject_module(const Subobject& s);
QuotModule quotient_module(const Subobject& s);

struct KernelResult {
  FinModule mod;
  Morphism incl;
  Subobject sub;
};
KernelResult kernel(const Morphism& f);
Subobject kernel_subobject(const Morphism& f);
Subobject image(const Morphism& f);
Subobject image_of(const Morphism& f, const Subobject& s);
QuotModule cokernel(const Morphism& f);
Subobject preimage(const Morphism& f, const Subobject& t);
Subobject intersect(const Subobject& a, const Subobject& b);
Subobject subobject_sum(const Subobject& a, const Subobject& b);

Subobject socle(const FinModule& m);

FinModule dual_module(const FinModule& m);
Morphism dual_morphism(const Morphism& f);

/// Section of a split mono: s with s o incl = id, if one exists.
std::optional<Morphism> find_splitting(const Morphism& incl);
/// Two-sided inverse of an isomorphism (throws if f is not one).
Morphism invert(const Morphism& f);

/// h with mono o h = g (throws if im(g) is not inside im(mono)).
Morphism corestrict_through_mono(const Morphism& mono, const Morphism& g);
/// h with h o epi = g (throws if ker(epi) is not inside ker(g)).
Morphism induce_through_epi(const Morphism& epi, const Morphism& g);
/// f restricted to S and corestricted to T (throws if f(S) is not in T).
Morphism restrict_corestrict(const Morphism& f, const Subobject& s, const Subobject& t);

struct DirectSum {
  FinModule mod;
  std::vector<Morphism> incl;
  std::vector<Morphism> proj;
};
DirectSum direct_sum(const std::vector<FinModule>& factors);

std::vector<FinModule> enumerate_modules(BaseRing ring, bint max_order);
std::vector<Morphism> enumerate_morphisms(const FinModule& src, const FinModule& tgt,
                                          bint cap = bint(1) << 22);
std::vector<std::vector<bint>> enumerate_elements(const FinModule& m);
std::vector<Subobject> enumerate_subobjects(const FinModule& m);
bint endomorphism_count(const FinModule& src, const FinModule& tgt);
std::vector<Morphism> enumerate_automorphisms(const FinModule& m, bint cap = bint(1) << 22);

std::string module_str(const FinModule& m);

}  // namespace bink
