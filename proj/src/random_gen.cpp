#include "bink/random_gen.hpp"

#include <algorithm>
#include <cassert>

namespace bink {

FinModule random_module(Rng& rng, BaseRing ring, bint max_order) {
  std::vector<bint> divs;
  for (bint d = 2; d <= ring.N; ++d)
    if (ring.N % d == 0) divs.push_back(d);
  std::vector<bint> chain;
  bint order = 1;
  int steps = int(rng.below(5));
  for (int s = 0; s < steps; ++s) {
    std::vector<bint> ok;
    for (bint d : divs)
      if ((chain.empty() || d % chain.back() == 0) && mul_ck(order, d) <= max_order)
        ok.push_back(d);
    if (ok.empty()) break;
    bint pick = ok[rng.below(ok.size())];
    chain.push_back(pick);
    order = mul_ck(order, pick);
  }
  return make_module(ring, chain);
}

Subobject random_subobject(Rng& rng, const FinModule& m) {
  int gens = int(rng.below(4));
  IntMatrix rows(gens, m.rank());
  for (int g = 0; g < gens; ++g)
    for (int j = 0; j < m.rank(); ++j) rows(g, j) = bint(rng.below(std::uint64_t(m.divisors[j])));
  return span_subobject(m, rows);
}

Morphism random_morphism(Rng& rng, const FinModule& src, const FinModule& tgt) {
  IntMatrix m(tgt.rank(), src.rank());
  for (int i = 0; i < tgt.rank(); ++i)
    for (int j = 0; j < src.rank(); ++j) {
      bint g = gcd_i64(tgt.divisors[i], src.divisors[j]);
      m(i, j) = mul_ck(tgt.divisors[i] / g, bint(rng.below(std::uint64_t(g))));
    }
  return make_morphism(src, tgt, m);
}

Morphism random_automorphism(Rng& rng, const FinModule& m) {
  for (int tries = 0; tries < 200; ++tries) {
    Morphism f = random_morphism(rng, m, m);
    if (is_iso(f)) return f;
  }
  return identity_morphism(m);
}

namespace {

// random unit scalar of Z/N
bint random_unit(Rng& rng, BaseRing ring) {
  while (true) {
    bint u = 1 + bint(rng.below(std::uint64_t(ring.N - 1)));
    if (gcd_i64(u, ring.N) == 1) return u;
  }
}

// exact chain d_i: P_i -> P_{i-1} spliced from subobject choices; objects
// are prescribed when `objects` is nonempty (resample kernels compatibly)
struct SplicedChain {
  std::vector<FinModule> objects;
  std::vector<Morphism> diffs;  // diffs[i]: objects[i+1] -> objects[i]
};

// Exact chain built by splicing: pick (P_i, T_i <= P_i) with P_i/T_i matching
// the previous kernel type, so d_i = incl(T_{i-1}) o twist o proj(T_i).
SplicedChain splice_chain(Rng& rng, BaseRing ring, int len, bint max_order) {
  std::vector<FinModule> p(len + 1);
  std::vector<Subobject> t;
  FinModule prev = zero_module(ring);  // required quotient type
  for (int i = 0; i < len; ++i) {
    bool found = false;
    if (i == 0) {
      p[0] = random_module(rng, ring, max_order);
      t.push_back(full_subobject(p[0]));
      found = true;
    }
    for (int tries = 0; tries < 60 && !found; ++tries) {
      FinModule cand = random_module(rng, ring, max_order);
      if (cand.order() % prev.order() != 0) continue;
      Subobject s = random_subobject(rng, cand);
      if (quotient_module(s).mod == prev) {
        p[i] = cand;
        t.push_back(s);
        found = true;
      }
    }
    if (!found) {
      // split fallback, always succeeds
      FinModule extra =
          random_module(rng, ring, std::max<bint>(2, max_order / std::max<bint>(1, prev.order())));
      DirectSum ds = direct_sum({prev, extra});
      p[i] = ds.mod;
      t.push_back(image(ds.incl[1]));
      assert(quotient_module(t.back()).mod == prev);
    }
    prev = subobject_module(t[size_t(i)]).mod;
  }
  p[len] = prev;

  SplicedChain out;
  out.objects = p;
  for (int i = 1; i <= len; ++i) {
    Morphism inc = subobject_module(t[size_t(i) - 1]).incl;
    Morphism twist = random_automorphism(rng, inc.src);
    if (i == len) {
      out.diffs.push_back(compose(inc, twist));
    } else {
      out.diffs.push_back(compose(inc, compose(twist, quotient_module(t[size_t(i)]).proj)));
    }
  }
  return out;
}

// a second exact differential family on the same objects: conjugate the
// given one by random automorphisms of each object
std::vector<Morphism> conjugate_chain(Rng& rng, const std::vector<FinModule>& objects,
                                      const std::vector<Morphism>& diffs) {
  std::vector<Morphism> gs;
  gs.reserve(objects.size());
  for (const FinModule& m : objects) gs.push_back(random_automorphism(rng, m));
  std::vector<Morphism> out;
  for (size_t i = 0; i < diffs.size(); ++i)
    out.push_back(compose(gs[i], compose(diffs[i], invert(gs[i + 1]))));
  return out;
}

}  // namespace

BinaryMultiComplex random_acyclic_complex_1(Rng& rng, BaseRing ring, int len,
                                            bint max_object_order) {
  SplicedChain top = splice_chain(rng, ring, len, max_object_order);
  std::vector<Morphism> bottom = conjugate_chain(rng, top.objects, top.diffs);
  return chain_complex(ring, top.objects, top.diffs, bottom);
}

BinaryMultiComplex random_acyclic_complex_2(Rng& rng, BaseRing ring,
                                            std::vector<int> bounds,
                                            bint max_object_order, int atoms) {
  assert(bounds.size() == 2);
  BinaryMultiComplex acc = empty_complex(ring, bounds);
  for (int a = 0; a < atoms; ++a) {
    FinModule m = random_module(rng, ring, max_object_order);
    while (m.is_zero()) m = random_module(rng, ring, max_object_order);
    int i = 1 + int(rng.below(std::uint64_t(bounds[0])));
    int j = 1 + int(rng.below(std::uint64_t(bounds[1])));
    // identity square at (i,j) with commuting bottom twists u, v = u^e
    Morphism u = random_automorphism(rng, m);
    Morphism v = identity_morphism(m);
    int e = int(rng.below(3));
    for (int s = 0; s < e; ++s) v = compose(v, u);
    BinaryMultiComplex atom = empty_complex(ring, bounds);
    for (int di = 0; di <= 1; ++di)
      for (int dj = 0; dj <= 1; ++dj) atom.set_object({i - di, j - dj}, m);
    for (int dj = 0; dj <= 1; ++dj) {
      atom.set_diff(0, kTop, {i, j - dj}, identity_morphism(m));
      atom.set_diff(0, kBottom, {i, j - dj}, u);
    }
    for (int di = 0; di <= 1; ++di) {
      atom.set_diff(1, kTop, {i - di, j}, identity_morphism(m));
      atom.set_diff(1, kBottom, {i - di, j}, v);
    }
    acc = direct_sum_complex(acc, atom);
  }
  // global conjugation scrambles the block structure
  std::map<MultiIndex, Morphism> g, ginv;
  for (const auto& [idx, m] : acc.objects) {
    Morphism a = random_automorphism(rng, m);
    g[idx] = a;
    ginv[idx] = invert(a);
  }
  BinaryMultiComplex out = empty_complex(ring, acc.bounds);
  for (const auto& [idx, m] : acc.objects) out.set_object(idx, m);
  for (int dir = 0; dir < 2; ++dir)
    for (int f = 0; f < 2; ++f)
      for (const auto& [idx, mor] : acc.diffs[dir][f]) {
        MultiIndex tgt = dec_at(idx, dir);
        Morphism gt = g.count(tgt) ? g.at(tgt) : identity_morphism(mor.tgt);
        Morphism gi = ginv.count(idx) ? ginv.at(idx) : identity_morphism(mor.src);
        out.set_diff(dir, Flavor(f), idx, compose(gt, compose(mor, gi)));
      }
  return out;
}

Ladder random_ladder(Rng& rng, BaseRing ring, int n, int dir_j, std::vector<int> bounds,
                     bint max_object_order) {
  assert(n == int(bounds.size()) && dir_j >= 0 && dir_j < n);
  BinaryMultiComplex p = (n == 1)
                             ? random_acyclic_complex_1(rng, ring, bounds[0], max_object_order)
                             : random_acyclic_complex_2(rng, ring, bounds, max_object_order,
                                                        2 + int(rng.below(3)));
  // Q = h-conjugate of P; sigma = h o (unit scaling), tau likewise
  std::map<MultiIndex, Morphism> h, hinv;
  for (const auto& [idx, m] : p.objects) {
    Morphism a = random_automorphism(rng, m);
    h[idx] = a;
    hinv[idx] = invert(a);
  }
  auto h_at = [&](const MultiIndex& idx, const FinModule& m) {
    return h.count(idx) ? h.at(idx) : identity_morphism(m);
  };
  BinaryMultiComplex q = empty_complex(ring, p.bounds);
  for (const auto& [idx, m] : p.objects) q.set_object(idx, m);
  for (int dir = 0; dir < p.n; ++dir)
    for (int f = 0; f < 2; ++f)
      for (const auto& [idx, mor] : p.diffs[dir][f]) {
        MultiIndex tgt = dec_at(idx, dir);
        Morphism gt = h.count(tgt) ? h.at(tgt) : identity_morphism(mor.tgt);
        Morphism gi = hinv.count(idx) ? hinv.at(idx) : identity_morphism(mor.src);
        q.set_diff(dir, Flavor(f), idx, compose(gt, compose(mor, gi)));
      }

  Ladder l;
  l.P = p;
  l.Q = q;
  l.dir_j = dir_j;
  bint su = random_unit(rng, ring), tu = random_unit(rng, ring);
  for (const auto& [idx, m] : p.objects) {
    IntMatrix us = IntMatrix::identity(m.rank()), ut = us;
    for (int i = 0; i < m.rank(); ++i) {
      us(i, i) = su;
      ut(i, i) = tu;
    }
    l.sigma[idx] = compose(h_at(idx, m), make_morphism(m, m, us));
    l.tau[idx] = compose(h_at(idx, m), make_morphism(m, m, ut));
  }
  return l;
}

}  // namespace bink
