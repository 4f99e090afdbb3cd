#pragma once

#include <optional>
#include <vector>

#include "bink/matrix.hpp"

namespace bink {

/// U * A * V = D with U, V unimodular and D the Smith normal form of A:
/// diagonal, entries nonnegative, d1 | d2 | ... | dr.
struct SnfResult {
  IntMatrix U, D, V;
};

SnfResult smith_normal_form(const IntMatrix& A);

/// H = U * A with U unimodular and H in row-style Hermite normal form:
/// pivot columns strictly increase row by row, pivots positive, entries
/// above each pivot reduced to [0, pivot). Zero rows sit at the bottom.
struct HnfResult {
  IntMatrix H, U;
};

HnfResult hermite_normal_form(const IntMatrix& A);

/// Rows spanning { u : u * A = 0 }.
IntMatrix left_kernel(const IntMatrix& A);

/// Row HNF without the transform matrix (entries stay small; use this for
/// all internal lattice arithmetic).
IntMatrix hnf_basis(const IntMatrix& A);

/// Basis of { v : v * B in rowlat(C) }, given rows `extra` already known to
/// lie in the solution set (typically module relations); transform-free.
IntMatrix row_preimage_lattice(const IntMatrix& B, const IntMatrix& C,
                               const IntMatrix& extra);

/// One solution x of A x = b over the integers, if any.
std::optional<std::vector<bint>> solve_integer(const IntMatrix& A,
                                              const std::vector<bint>& b);

/// One solution x of A x = b componentwise mod the given moduli (each >= 1),
/// decided exactly via the SNF of the augmented system [A | diag(moduli)].
std::optional<std::vector<bint>> solve_congruence(const IntMatrix& A,
                                                 const std::vector<bint>& b,
                                                 const std::vector<bint>& moduli);

// --- full-rank row lattices in Z^r (used for subobject arithmetic) ---

/// Canonical basis of the row lattice spanned by the rows of `gens`:
/// the r x r upper-triangular HNF. `gens` must span a finite-index
/// sublattice of Z^r (always true once module relations are stacked in).
IntMatrix lattice_canonical(const IntMatrix& gens, int r);

/// Membership of the row vector v in the full-rank HNF lattice H.
bool lattice_contains(const IntMatrix& H, const std::vector<bint>& v);

/// Whether every row of `sub` lies in H.
bool lattice_contains_all(const IntMatrix& H, const IntMatrix& sub);

/// Basis of the intersection of two full-rank row lattices in Z^r.
IntMatrix lattice_intersect(const IntMatrix& H1, const IntMatrix& H2, int r);

/// Index [Z^r : L] = product of HNF pivots.
bint lattice_index(const IntMatrix& H);

/// Solve y * T = v exactly for an upper-triangular full-rank T (rows as
/// lattice vectors); returns the coordinate row or nullopt if not integral.
std::optional<std::vector<bint>> triangular_coords(const IntMatrix& T,
                                                  const std::vector<bint>& v);

}  // namespace bink
