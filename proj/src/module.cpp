#include "bink/module.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bink {

BaseRing make_ring(bint N) {
  if (N < 2) throw std::invalid_argument("base ring needs N >= 2");
  return {N, squarefree_radical(N)};
}

FinModule make_module(BaseRing ring, std::vector<bint> divisors) {
  for (size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] <= 1 || ring.N % divisors[i] != 0)
      throw std::invalid_argument("module divisor must be > 1 and divide N");
    if (i > 0 && divisors[i] % divisors[i - 1] != 0)
      throw std::invalid_argument("module divisors must form a chain d1 | d2 | ...");
  }
  return {ring, std::move(divisors)};
}

FinModule zero_module(BaseRing ring) { return {ring, {}}; }

int length(const FinModule& m) {
  int len = 0;
  for (bint d : m.divisors) len += omega_mult(d);
  return len;
}

bool is_semisimple(const FinModule& m) {
  for (bint d : m.divisors)
    if (!is_squarefree(d)) return false;
  return true;
}

bool is_well_defined(const FinModule& src, const FinModule& tgt, const IntMatrix& m) {
  if (m.rows() != tgt.rank() || m.cols() != src.rank()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (mul_ck(src.divisors[j], m(i, j)) % tgt.divisors[i] != 0) return false;
  return true;
}

Morphism make_morphism(const FinModule& src, const FinModule& tgt, IntMatrix m) {
  if (m.rows() != tgt.rank() || m.cols() != src.rank())
    throw std::invalid_argument("morphism matrix shape mismatch");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = pos_mod(m(i, j), tgt.divisors[i]);
  if (!is_well_defined(src, tgt, m))
    throw std::invalid_argument("matrix does not define a morphism");
  return {src, tgt, std::move(m)};
}

Morphism identity_morphism(const FinModule& m) {
  return {m, m, IntMatrix::identity(m.rank())};
}

Morphism zero_morphism(const FinModule& src, const FinModule& tgt) {
  return {src, tgt, IntMatrix(tgt.rank(), src.rank())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("compose: src/tgt mismatch");
  return make_morphism(f.src, g.tgt, g.mat * f.mat);
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (!(f.src == g.src) || !(f.tgt == g.tgt))
    throw std::invalid_argument("add: shape mismatch");
  return make_morphism(f.src, f.tgt, f.mat + g.mat);
}

Morphism negate(const Morphism& f) { return make_morphism(f.src, f.tgt, -f.mat); }

std::vector<bint> act(const Morphism& f, const std::vector<bint>& x) {
  std::vector<bint> y = f.mat.apply(x);
  for (int i = 0; i < f.tgt.rank(); ++i) y[i] = pos_mod(y[i], f.tgt.divisors[i]);
  return y;
}

Subobject zero_subobject(const FinModule& m) {
  return {m, IntMatrix::diagonal(m.divisors)};
}

Subobject full_subobject(const FinModule& m) {
  return {m, IntMatrix::identity(m.rank())};
}

Subobject span_subobject(const FinModule& m, const IntMatrix& element_rows) {
  IntMatrix gens = element_rows.vstack(IntMatrix::diagonal(m.divisors));
  return {m, lattice_canonical(gens, m.rank())};
}

bint subobject_order(const Subobject& s) {
  return s.ambient.order() / lattice_index(s.lat);
}

bool sub_contains(const Subobject& big, const Subobject& small) {
  assert(big.ambient == small.ambient);
  return lattice_contains_all(big.lat, small.lat);
}

bool sub_contains_element(const Subobject& s, const std::vector<bint>& x) {
  return lattice_contains(s.lat, x);
}

Presentation canonicalize(BaseRing ring, const IntMatrix& relation_rows, int ambient_rank) {
  int r = ambient_rank;
  IntMatrix rel = relation_rows;
  if (rel.rows() == 0) rel = IntMatrix(0, r);
  assert(rel.cols() == r);
  IntMatrix stacked = rel.vstack(IntMatrix::diagonal(std::vector<bint>(r, ring.N)));
  SnfResult s = smith_normal_form(stacked.transpose());
  // U maps ambient coordinates to diag(d1..dr) coordinates
  std::vector<bint> divisors;
  std::vector<int> keep;
  for (int i = 0; i < r; ++i) {
    bint d = s.D(i, i);
    assert(d > 0);
    if (d > 1) {
      divisors.push_back(d);
      keep.push_back(i);
    }
  }
  FinModule mod = make_module(ring, divisors);
  // U^{-1} via HNF: the HNF of a unimodular matrix is the identity
  HnfResult inv = hermite_normal_form(s.U);
  assert(inv.H == IntMatrix::identity(r));
  IntMatrix to_canon(mod.rank(), r), from_canon(r, mod.rank());
  for (int k = 0; k < mod.rank(); ++k) {
    for (int j = 0; j < r; ++j) {
      to_canon(k, j) = pos_mod(s.U(keep[k], j), divisors[k]);
      from_canon(j, k) = inv.U(j, keep[k]);
    }
  }
  return {mod, to_canon, from_canon};
}

SubModule subobject_module(const Subobject& s) {
  int r = s.ambient.rank();
  if (r == 0) {
    FinModule z = zero_module(s.ambient.ring);
    return {z, zero_morphism(z, s.ambient)};
  }
  IntMatrix ht = s.lat.transpose();  // lower triangular, full rank
  // relation coordinates: solve ht * Y = diag(divisors) column by column
  IntMatrix y(r, r);
  for (int c = 0; c < r; ++c) {
    std::vector<bint> rhs(r, 0);
    rhs[c] = s.ambient.divisors[c];
    for (int i = 0; i < r; ++i) {
      bint acc = rhs[i];
      for (int k = 0; k < i; ++k) acc = sub_ck(acc, mul_ck(ht(i, k), y(k, c)));
      assert(acc % ht(i, i) == 0 && "relation lattice not inside subobject lattice");
      y(i, c) = acc / ht(i, i);
    }
  }
  Presentation pres = canonicalize(s.ambient.ring, y.transpose(), r);
  Morphism incl = make_morphism(pres.mod, s.ambient, ht * pres.from_canon);
  return {pres.mod, incl};
}

QuotModule quotient_module(const Subobject& s) {
  Presentation pres = canonicalize(s.ambient.ring, s.lat, s.ambient.rank());
  Morphism proj = make_morphism(s.ambient, pres.mod, pres.to_canon);
  return {pres.mod, proj};
}

Subobject preimage(const Morphism& f, const Subobject& t) {
  if (!(t.ambient == f.tgt)) throw std::invalid_argument("preimage: ambient mismatch");
  if (f.tgt.rank() == 0) return full_subobject(f.src);
  // module relations are always inside the preimage (well-definedness)
  IntMatrix gens =
      row_preimage_lattice(f.mat.transpose(), t.lat, IntMatrix::diagonal(f.src.divisors));
  return span_subobject(f.src, gens);
}

Subobject kernel_subobject(const Morphism& f) {
  return preimage(f, zero_subobject(f.tgt));
}

KernelResult kernel(const Morphism& f) {
  Subobject sub = kernel_subobject(f);
  SubModule sm = subobject_module(sub);
  return {sm.mod, sm.incl, sub};
}

Subobject image(const Morphism& f) {
  return span_subobject(f.tgt, f.mat.transpose());
}

Subobject image_of(const Morphism& f, const Subobject& s) {
  if (!(s.ambient == f.src)) throw std::invalid_argument("image_of: ambient mismatch");
  return span_subobject(f.tgt, s.lat * f.mat.transpose());
}

QuotModule cokernel(const Morphism& f) { return quotient_module(image(f)); }

Subobject intersect(const Subobject& a, const Subobject& b) {
  if (!(a.ambient == b.ambient)) throw std::invalid_argument("intersect: ambient mismatch");
  int r = a.ambient.rank();
  if (r == 0) return a;
  return {a.ambient, lattice_intersect(a.lat, b.lat, r)};
}

Subobject subobject_sum(const Subobject& a, const Subobject& b) {
  if (!(a.ambient == b.ambient)) throw std::invalid_argument("sum: ambient mismatch");
  return span_subobject(a.ambient, a.lat.vstack(b.lat));
}

Subobject socle(const FinModule& m) {
  IntMatrix gens(m.rank(), m.rank());
  for (int i = 0; i < m.rank(); ++i)
    gens(i, i) = m.divisors[i] / gcd_i64(m.divisors[i], m.ring.radical);
  return span_subobject(m, gens);
}

FinModule dual_module(const FinModule& m) { return m; }

Morphism dual_morphism(const Morphism& f) {
  IntMatrix d(f.src.rank(), f.tgt.rank());
  for (int i = 0; i < f.tgt.rank(); ++i)
    for (int j = 0; j < f.src.rank(); ++j) {
      bint num = mul_ck(f.mat(i, j), f.src.divisors[j]);
      assert(num % f.tgt.divisors[i] == 0);
      d(j, i) = num / f.tgt.divisors[i];
    }
  return make_morphism(dual_module(f.tgt), dual_module(f.src), d);
}

bool is_mono(const Morphism& f) {
  return kernel_subobject(f).lat == zero_subobject(f.src).lat;
}

bool is_epi(const Morphism& f) {
  return image(f).lat == IntMatrix::identity(f.tgt.rank());
}

bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

std::optional<Morphism> find_splitting(const Morphism& incl) {
  if (!is_mono(incl)) throw std::invalid_argument("find_splitting: input not mono");
  const FinModule& k = incl.src;
  const FinModule& m = incl.tgt;
  int rk = k.rank(), rm = m.rank();
  if (rk == 0) return zero_morphism(m, k);
  int nvar = rk * rm;
  int neq = rk * rk + rk * rm;
  IntMatrix sys(neq, nvar);
  std::vector<bint> rhs(neq, 0), moduli(neq, 1);
  int row = 0;
  for (int a = 0; a < rk; ++a)
    for (int c = 0; c < rk; ++c) {
      for (int b = 0; b < rm; ++b) sys(row, a * rm + b) = incl.mat(b, c);
      rhs[row] = (a == c) ? 1 : 0;
      moduli[row] = k.divisors[a];
      ++row;
    }
  for (int a = 0; a < rk; ++a)
    for (int b = 0; b < rm; ++b) {
      sys(row, a * rm + b) = m.divisors[b];
      moduli[row] = k.divisors[a];
      ++row;
    }
  auto sol = solve_congruence(sys, rhs, moduli);
  if (!sol) return std::nullopt;
  IntMatrix s(rk, rm);
  for (int a = 0; a < rk; ++a)
    for (int b = 0; b < rm; ++b) s(a, b) = (*sol)[a * rm + b];
  Morphism sm = make_morphism(m, k, s);
  assert(compose(sm, incl) == identity_morphism(k));
  return sm;
}

Morphism invert(const Morphism& f) {
  if (!is_iso(f)) throw std::invalid_argument("invert: morphism is not an isomorphism");
  auto s = find_splitting(f);
  assert(s.has_value());
  assert(compose(f, *s) == identity_morphism(f.tgt));
  return *s;
}

Morphism corestrict_through_mono(const Morphism& mono, const Morphism& g) {
  if (!(mono.tgt == g.tgt)) throw std::invalid_argument("corestrict: target mismatch");
  int rk = mono.src.rank();
  IntMatrix h(rk, g.src.rank());
  for (int c = 0; c < g.src.rank(); ++c) {
    auto y = solve_congruence(mono.mat, g.mat.col(c), g.tgt.divisors);
    if (!y) throw std::invalid_argument("corestrict: image not contained in subobject");
    for (int i = 0; i < rk; ++i) h(i, c) = (*y)[i];
  }
  Morphism res = make_morphism(g.src, mono.src, h);
  assert(compose(mono, res) == g);
  return res;
}

Morphism induce_through_epi(const Morphism& epi, const Morphism& g) {
  if (!(epi.src == g.src)) throw std::invalid_argument("induce: source mismatch");
  const FinModule& b = epi.tgt;
  IntMatrix h(g.tgt.rank(), b.rank());
  for (int c = 0; c < b.rank(); ++c) {
    std::vector<bint> unit(b.rank(), 0);
    unit[c] = 1;
    auto x = solve_congruence(epi.mat, unit, b.divisors);
    if (!x) throw std::invalid_argument("induce: map is not epi");
    std::vector<bint> img = g.mat.apply(*x);
    for (int i = 0; i < g.tgt.rank(); ++i) h(i, c) = pos_mod(img[i], g.tgt.divisors[i]);
  }
  Morphism res = make_morphism(b, g.tgt, h);
  if (!(compose(res, epi) == g))
    throw std::invalid_argument("induce: kernel of epi not inside kernel of map");
  return res;
}

Morphism restrict_corestrict(const Morphism& f, const Subobject& s, const Subobject& t) {
  if (!(s.ambient == f.src) || !(t.ambient == f.tgt))
    throw std::invalid_argument("restrict_corestrict: ambient mismatch");
  SubModule sm = subobject_module(s);
  SubModule tm = subobject_module(t);
  return corestrict_through_mono(tm.incl, compose(f, sm.incl));
}

DirectSum direct_sum(const std::vector<FinModule>& factors) {
  BaseRing ring = factors.empty() ? make_ring(2) : factors[0].ring;
  std::vector<bint> divs;
  for (const FinModule& f : factors) {
    assert(f.ring == ring);
    divs.insert(divs.end(), f.divisors.begin(), f.divisors.end());
  }
  int R = int(divs.size());
  Presentation pres = canonicalize(ring, IntMatrix::diagonal(divs), R);
  DirectSum out;
  out.mod = pres.mod;
  int offset = 0;
  for (const FinModule& f : factors) {
    int rf = f.rank();
    IntMatrix in(pres.mod.rank(), rf), pr(rf, pres.mod.rank());
    for (int i = 0; i < pres.mod.rank(); ++i)
      for (int j = 0; j < rf; ++j) in(i, j) = pres.to_canon(i, offset + j);
    for (int i = 0; i < rf; ++i)
      for (int j = 0; j < pres.mod.rank(); ++j) pr(i, j) = pres.from_canon(offset + i, j);
    out.incl.push_back(make_morphism(f, pres.mod, in));
    out.proj.push_back(make_morphism(pres.mod, f, pr));
    offset += rf;
  }
  return out;
}

std::vector<FinModule> enumerate_modules(BaseRing ring, bint max_order) {
  std::vector<bint> divs;
  for (bint d = 2; d <= ring.N; ++d)
    if (ring.N % d == 0) divs.push_back(d);
  std::vector<FinModule> out{zero_module(ring)};
  std::vector<bint> chain;
  // chains d1 | d2 | ... of divisors of N with bounded product
  auto rec = [&](auto&& self, bint prev, bint order) -> void {
    for (bint d : divs) {
      if (d % prev != 0) continue;
      if (mul_ck(order, d) > max_order) continue;
      chain.push_back(d);
      out.push_back(make_module(ring, chain));
      self(self, d, mul_ck(order, d));
      chain.pop_back();
    }
  };
  rec(rec, 1, 1);
  std::sort(out.begin(), out.end(), [](const FinModule& a, const FinModule& b) {
    return std::make_pair(a.order(), a.divisors) < std::make_pair(b.order(), b.divisors);
  });
  return out;
}

std::vector<std::vector<bint>> enumerate_elements(const FinModule& m) {
  std::vector<std::vector<bint>> out;
  std::vector<bint> x(m.rank(), 0);
  bint total = m.order();
  out.reserve(size_t(total));
  for (bint c = 0; c < total; ++c) {
    out.push_back(x);
    for (int i = 0; i < m.rank(); ++i) {
      if (++x[i] < m.divisors[i]) break;
      x[i] = 0;
    }
  }
  return out;
}

bint endomorphism_count(const FinModule& src, const FinModule& tgt) {
  bint c = 1;
  for (bint dt : tgt.divisors)
    for (bint ds : src.divisors) c = mul_ck(c, gcd_i64(dt, ds));
  return c;
}

std::vector<Morphism> enumerate_morphisms(const FinModule& src, const FinModule& tgt, bint cap) {
  bint total = endomorphism_count(src, tgt);
  if (total > cap) throw std::invalid_argument("enumerate_morphisms: bound exceeded");
  int rt = tgt.rank(), rs = src.rank();
  // legal entries at (i,j) are the multiples of d_i / gcd(d_i, e_j)
  std::vector<bint> stride(size_t(rt) * rs), count(size_t(rt) * rs);
  for (int i = 0; i < rt; ++i)
    for (int j = 0; j < rs; ++j) {
      bint g = gcd_i64(tgt.divisors[i], src.divisors[j]);
      stride[size_t(i) * rs + j] = tgt.divisors[i] / g;
      count[size_t(i) * rs + j] = g;
    }
  std::vector<Morphism> out;
  out.reserve(size_t(total));
  std::vector<bint> idx(size_t(rt) * rs, 0);
  for (bint c = 0; c < total; ++c) {
    IntMatrix m(rt, rs);
    for (int i = 0; i < rt; ++i)
      for (int j = 0; j < rs; ++j)
        m(i, j) = mul_ck(idx[size_t(i) * rs + j], stride[size_t(i) * rs + j]);
    out.push_back(make_morphism(src, tgt, m));
    for (size_t k = 0; k < idx.size(); ++k) {
      if (++idx[k] < count[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

std::vector<Subobject> enumerate_subobjects(const FinModule& m) {
  if (m.order() > 4096)
    throw std::invalid_argument("enumerate_subobjects: bound exceeded");
  auto elements = enumerate_elements(m);
  std::map<std::vector<bint>, Subobject> seen;
  auto key = [](const Subobject& s) { return s.lat.data(); };
  std::vector<Subobject> queue{zero_subobject(m)};
  seen.emplace(key(queue[0]), queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    Subobject cur = queue[head];
    for (const auto& x : elements) {
      IntMatrix row(1, m.rank());
      for (int j = 0; j < m.rank(); ++j) row(0, j) = x[j];
      Subobject next = {m, lattice_canonical(row.vstack(cur.lat), m.rank())};
      auto [it, fresh] = seen.emplace(key(next), next);
      if (fresh) queue.push_back(next);
    }
  }
  std::vector<Subobject> out;
  out.reserve(seen.size());
  for (auto& [k, s] : seen) out.push_back(s);
  return out;
}

std::vector<Morphism> enumerate_automorphisms(const FinModule& m, bint cap) {
  std::vector<Morphism> all = enumerate_morphisms(m, m, cap);
  std::vector<Morphism> out;
  for (const Morphism& f : all)
    if (is_iso(f)) out.push_back(f);
  return out;
}

std::string module_str(const FinModule& m) {
  std::ostringstream os;
  if (m.is_zero()) return "0";
  for (size_t i = 0; i < m.divisors.size(); ++i)
    os << (i ? "+" : "") << "C" << m.divisors[i];
  return os.str();
}

}  // namespace bink
