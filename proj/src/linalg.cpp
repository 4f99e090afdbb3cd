#include "bink/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace bink {

namespace {

// Pick the nonzero entry of smallest magnitude in the trailing submatrix;
// keeping pivots small is what keeps 64 bits comfortable at our sizes.
// replace rows r and i by the unimodular gcd combination that zeroes (i, col)
void row_gcd_step(IntMatrix& A, IntMatrix& U, int r, int i, int col) {
  bint a = A(r, col), b = A(i, col);
  if (b == 0) return;
  if (a == 0) {
    A.swap_rows(r, i);
    U.swap_rows(r, i);
    return;
  }
  if (b % a == 0) {
    bint q = b / a;
    A.add_row(i, r, neg_ck(q));
    U.add_row(i, r, neg_ck(q));
    return;
  }
  XGcd e = xgcd(a, b);
  bint ag = a / e.g, bg = b / e.g;
  for (int k = 0; k < A.cols(); ++k) {
    bint ark = A(r, k), aik = A(i, k);
    A(r, k) = add_ck(mul_ck(e.x, ark), mul_ck(e.y, aik));
    A(i, k) = sub_ck(mul_ck(ag, aik), mul_ck(bg, ark));
  }
  for (int k = 0; k < U.cols(); ++k) {
    bint urk = U(r, k), uik = U(i, k);
    U(r, k) = add_ck(mul_ck(e.x, urk), mul_ck(e.y, uik));
    U(i, k) = sub_ck(mul_ck(ag, uik), mul_ck(bg, urk));
  }
}

// column version, transform accumulated in V on the right
void col_gcd_step(IntMatrix& A, IntMatrix& V, int c, int j, int row) {
  bint a = A(row, c), b = A(row, j);
  if (b == 0) return;
  if (a == 0) {
    A.swap_cols(c, j);
    V.swap_cols(c, j);
    return;
  }
  if (b % a == 0) {
    bint q = b / a;
    A.add_col(j, c, neg_ck(q));
    V.add_col(j, c, neg_ck(q));
    return;
  }
  XGcd e = xgcd(a, b);
  bint ag = a / e.g, bg = b / e.g;
  for (int k = 0; k < A.rows(); ++k) {
    bint akc = A(k, c), akj = A(k, j);
    A(k, c) = add_ck(mul_ck(e.x, akc), mul_ck(e.y, akj));
    A(k, j) = sub_ck(mul_ck(ag, akj), mul_ck(bg, akc));
  }
  for (int k = 0; k < V.rows(); ++k) {
    bint vkc = V(k, c), vkj = V(k, j);
    V(k, c) = add_ck(mul_ck(e.x, vkc), mul_ck(e.y, vkj));
    V(k, j) = sub_ck(mul_ck(ag, vkj), mul_ck(bg, vkc));
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& A) {
  int m = A.rows(), n = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  int r = std::min(m, n);
  // phase 1: alternate row and column Hermite forms until diagonal
  // (Kannan-Bachem; the canonical intermediate forms keep entries bounded)
  while (true) {
    bool diag = true;
    for (int i = 0; i < m && diag; ++i)
      for (int j = 0; j < n && diag; ++j)
        if (i != j && D(i, j) != 0) diag = false;
    if (diag) break;
    HnfResult hr = hermite_normal_form(D);
    D = hr.H;
    U = hr.U * U;
    HnfResult hc = hermite_normal_form(D.transpose());
    D = hc.H.transpose();
    V = V * hc.U.transpose();
  }

  // phase 2: enforce d_t | d_i pairwise with local 2x2 steps on the diagonal
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < r; ++t) {
      for (int i = t + 1; i < r; ++i) {
        bint a = D(t, t), b = D(i, i);
        if (a == 0 && b != 0) {
          D.swap_rows(t, i);
          U.swap_rows(t, i);
          D.swap_cols(t, i);
          V.swap_cols(t, i);
          std::swap(a, b);
          changed = true;
        }
        if (a == 0 || b == 0 || b % a == 0) continue;
        // diag(a, b) -> diag(gcd, +-lcm)
        D.add_col(t, i, 1);
        V.add_col(t, i, 1);
        row_gcd_step(D, U, t, i, t);
        bint g = D(t, t);
        assert(g != 0 && D(t, i) % g == 0);
        bint q = D(t, i) / g;
        D.add_col(i, t, neg_ck(q));
        V.add_col(i, t, neg_ck(q));
        assert(D(i, t) == 0 && D(t, i) == 0);
        changed = true;
      }
    }
  }

  for (int i = 0; i < r; ++i)
    if (D(i, i) < 0) {
      D.scale_row(i, -1);
      U.scale_row(i, -1);
    }
  return {U, D, V};
}

HnfResult hermite_normal_form(const IntMatrix& A) {
  int m = A.rows(), n = A.cols();
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(m);

  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    // gcd-reduce all entries of this column at or below `row` into one pivot
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (H(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    H.swap_rows(row, piv);
    U.swap_rows(row, piv);
    for (int i = row + 1; i < m; ++i) row_gcd_step(H, U, row, i, col);
    if (H(row, col) < 0) {
      H.scale_row(row, -1);
      U.scale_row(row, -1);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < row; ++i) {
      bint q = floor_div(H(i, col), H(row, col));
      if (q != 0) {
        H.add_row(i, row, neg_ck(q));
        U.add_row(i, row, neg_ck(q));
      }
    }
    ++row;
  }
  return {H, U};
}

IntMatrix hnf_basis(const IntMatrix& A) {
  IntMatrix H = A;
  int m = H.rows(), n = H.cols();
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (H(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    H.swap_rows(row, piv);
    for (int i = row + 1; i < m; ++i) {
      bint a = H(row, col), b = H(i, col);
      if (b == 0) continue;
      if (b % a == 0) {
        H.add_row(i, row, neg_ck(b / a));
        continue;
      }
      XGcd e = xgcd(a, b);
      bint ag = a / e.g, bg = b / e.g;
      for (int k = 0; k < n; ++k) {
        bint ark = H(row, k), aik = H(i, k);
        H(row, k) = add_ck(mul_ck(e.x, ark), mul_ck(e.y, aik));
        H(i, k) = sub_ck(mul_ck(ag, aik), mul_ck(bg, ark));
      }
    }
    if (H(row, col) < 0) H.scale_row(row, -1);
    for (int i = 0; i < row; ++i) {
      bint q = floor_div(H(i, col), H(row, col));
      if (q != 0) H.add_row(i, row, neg_ck(q));
    }
    ++row;
  }
  return H;
}

IntMatrix row_preimage_lattice(const IntMatrix& B, const IntMatrix& C,
                               const IntMatrix& extra) {
  int m = B.rows(), c = B.cols();
  assert(C.cols() == c || C.rows() == 0);
  assert(extra.cols() == m || extra.rows() == 0);
  // rows span the lattice {(v*B + u*C, v)}; v with zero first block are the
  // preimage; `extra` rows are known members and bound the entry growth
  IntMatrix top = B.hstack(IntMatrix::identity(m));
  IntMatrix mid = C.hstack(IntMatrix(C.rows(), m));
  IntMatrix bot = IntMatrix(extra.rows(), c).hstack(extra);
  IntMatrix H = hnf_basis(top.vstack(mid).vstack(bot));
  std::vector<int> rows;
  for (int i = 0; i < H.rows(); ++i) {
    bool zero_first = true;
    for (int j = 0; j < c; ++j)
      if (H(i, j) != 0) zero_first = false;
    bool zero_rest = true;
    for (int j = c; j < c + m; ++j)
      if (H(i, j) != 0) zero_rest = false;
    if (zero_first && !zero_rest) rows.push_back(i);
  }
  IntMatrix out(int(rows.size()), m);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < m; ++j) out(int(i), j) = H(rows[i], c + j);
  return out;
}

IntMatrix left_kernel(const IntMatrix& A) {
  HnfResult h = hermite_normal_form(A);
  // rows of U matching zero rows of H span the left kernel
  std::vector<int> zr;
  for (int i = 0; i < h.H.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.H.cols(); ++j)
      if (h.H(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zr.push_back(i);
  }
  IntMatrix K(int(zr.size()), A.rows());
  for (size_t i = 0; i < zr.size(); ++i)
    for (int j = 0; j < A.rows(); ++j) K(int(i), j) = h.U(zr[i], j);
  return K;
}

std::optional<std::vector<bint>> solve_integer(const IntMatrix& A,
                                              const std::vector<bint>& b) {
  assert(int(b.size()) == A.rows());
  SnfResult s = smith_normal_form(A);
  std::vector<bint> c = s.U.apply(b);
  int r = std::min(A.rows(), A.cols());
  std::vector<bint> y(A.cols(), 0);
  for (int i = 0; i < A.rows(); ++i) {
    bint d = (i < r) ? s.D(i, i) : 0;
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      if (i < A.cols()) y[i] = c[i] / d;
    }
  }
  return s.V.apply(y);
}

std::optional<std::vector<bint>> solve_congruence(const IntMatrix& A,
                                                 const std::vector<bint>& b,
                                                 const std::vector<bint>& moduli) {
  if (int(moduli.size()) != A.rows() || int(b.size()) != A.rows())
    throw std::invalid_argument("solve_congruence: dimension mismatch");
  IntMatrix aug = A.hstack(IntMatrix::diagonal(moduli));
  auto z = solve_integer(aug, b);
  if (!z) return std::nullopt;
  std::vector<bint> x(z->begin(), z->begin() + A.cols());
  return x;
}

IntMatrix lattice_canonical(const IntMatrix& gens, int r) {
  assert(gens.cols() == r || gens.rows() == 0);
  IntMatrix g = gens;
  if (g.rows() == 0) g = IntMatrix(0, r);
  IntMatrix h = hnf_basis(g);
  // strip zero rows; a finite-index lattice leaves exactly r of them
  int nz = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < r; ++j)
      if (h(i, j) != 0) zero = false;
    if (!zero) ++nz;
  }
  if (nz != r)
    throw std::invalid_argument("lattice_canonical: generators do not span a finite-index lattice");
  return h.submatrix(0, 0, r, r);
}

std::optional<std::vector<bint>> triangular_coords(const IntMatrix& T,
                                                  const std::vector<bint>& v) {
  int r = T.rows();
  assert(T.cols() == r && int(v.size()) == r);
  std::vector<bint> rem = v, y(r, 0);
  for (int i = 0; i < r; ++i) {
    if (rem[i] % T(i, i) != 0) return std::nullopt;
    bint q = rem[i] / T(i, i);
    y[i] = q;
    for (int j = i; j < r; ++j) rem[j] = sub_ck(rem[j], mul_ck(q, T(i, j)));
  }
  return y;
}

bool lattice_contains(const IntMatrix& H, const std::vector<bint>& v) {
  return triangular_coords(H, v).has_value();
}

bool lattice_contains_all(const IntMatrix& H, const IntMatrix& sub) {
  for (int i = 0; i < sub.rows(); ++i)
    if (!lattice_contains(H, sub.row(i))) return false;
  return true;
}

IntMatrix lattice_intersect(const IntMatrix& H1, const IntMatrix& H2, int r) {
  // rows span {(u1 H1 + u2 H2, u1 H1)}; zero first block = the intersection.
  // lcm(det H1, det H2) * Z^r lies inside both lattices and keeps entries
  // bounded during elimination.
  bint d = lcm_i64(lattice_index(H1), lattice_index(H2));
  std::vector<bint> dd(r, d);
  IntMatrix top = H1.hstack(H1);
  IntMatrix mid = H2.hstack(IntMatrix(r, r));
  IntMatrix bot = IntMatrix(r, r).hstack(IntMatrix::diagonal(dd));
  IntMatrix H = hnf_basis(top.vstack(mid).vstack(bot));
  std::vector<int> rows;
  for (int i = 0; i < H.rows(); ++i) {
    bool zero_first = true;
    for (int j = 0; j < r; ++j)
      if (H(i, j) != 0) zero_first = false;
    if (zero_first) rows.push_back(i);
  }
  IntMatrix gens(int(rows.size()), r);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < r; ++j) gens(int(i), j) = H(rows[i], r + j);
  return lattice_canonical(gens, r);
}

bint lattice_index(const IntMatrix& H) {
  bint idx = 1;
  for (int i = 0; i < H.rows(); ++i) idx = mul_ck(idx, H(i, i));
  return idx;
}

}  // namespace bink
