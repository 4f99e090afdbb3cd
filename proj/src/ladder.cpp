#include "bink/ladder.hpp"

#include <cassert>
#include <stdexcept>

namespace bink {

Morphism Ladder::sigma_at(const MultiIndex& idx) const {
  auto it = sigma.find(idx);
  if (it != sigma.end()) return it->second;
  return zero_morphism(P.object_at(idx), Q.object_at(idx));
}

Morphism Ladder::tau_at(const MultiIndex& idx) const {
  auto it = tau.find(idx);
  if (it != tau.end()) return it->second;
  return zero_morphism(P.object_at(idx), Q.object_at(idx));
}

Ladder identity_ladder(const BinaryMultiComplex& p, int dir_j) {
  Ladder l;
  l.P = p;
  l.Q = p;
  l.dir_j = dir_j;
  for (const auto& [idx, m] : p.objects) {
    l.sigma[idx] = identity_morphism(m);
    l.tau[idx] = identity_morphism(m);
  }
  return l;
}

std::vector<std::string> validate_ladder(const Ladder& l) {
  std::vector<std::string> report;
  if (l.dir_j < 0 || l.dir_j >= l.P.n) {
    report.push_back("ladder direction out of range");
    return report;
  }
  if (l.P.n != l.Q.n || l.P.bounds != l.Q.bounds || !(l.P.ring == l.Q.ring)) {
    report.push_back("ladder complexes have different shape");
    return report;
  }
  for (const std::string& r : validate(l.P)) report.push_back("P: " + r);
  for (const std::string& r : validate(l.Q)) report.push_back("Q: " + r);
  if (!report.empty()) return report;
  if (!is_acyclic(l.P)) report.push_back("P not acyclic");
  if (!is_acyclic(l.Q)) report.push_back("Q not acyclic");

  int j = l.dir_j;
  for (const MultiIndex& idx : support_box(l.P.bounds)) {
    Morphism s = l.sigma_at(idx), t = l.tau_at(idx);
    if (!(s.src == l.P.object_at(idx)) || !(s.tgt == l.Q.object_at(idx)))
      report.push_back("sigma endpoint mismatch");
    else if (!is_iso(s))
      report.push_back("sigma not an isomorphism");
    if (!(t.src == l.P.object_at(idx)) || !(t.tgt == l.Q.object_at(idx)))
      report.push_back("tau endpoint mismatch");
    else if (!is_iso(t))
      report.push_back("tau not an isomorphism");
    if (!report.empty() && report.size() > 40) return report;

    if (idx[j] >= 1) {
      if (!(compose(l.sigma_at(dec_at(idx, j)), l.P.diff_at(j, kTop, idx)) ==
            compose(l.Q.diff_at(j, kTop, idx), s)))
        report.push_back("sigma does not commute with top differentials in direction j");
      if (!(compose(l.tau_at(dec_at(idx, j)), l.P.diff_at(j, kBottom, idx)) ==
            compose(l.Q.diff_at(j, kBottom, idx), t)))
        report.push_back("tau does not commute with bottom differentials in direction j");
    }
    for (int d = 0; d < l.P.n; ++d) {
      if (d == j || idx[d] < 1) continue;
      for (int f = 0; f < 2; ++f) {
        if (!(compose(l.sigma_at(dec_at(idx, d)), l.P.diff_at(d, Flavor(f), idx)) ==
              compose(l.Q.diff_at(d, Flavor(f), idx), s)))
          report.push_back("sigma does not commute in direction " + std::to_string(d));
        if (!(compose(l.tau_at(dec_at(idx, d)), l.P.diff_at(d, Flavor(f), idx)) ==
              compose(l.Q.diff_at(d, Flavor(f), idx), t)))
          report.push_back("tau does not commute in direction " + std::to_string(d));
      }
    }
  }
  return report;
}

namespace {

// two-layer complex in direction j: upper slice at degree 1, lower at 0
BinaryMultiComplex two_layer(BaseRing ring, int j, const std::vector<int>& full_bounds,
                             const BinaryMultiComplex& upper,
                             const BinaryMultiComplex& lower,
                             const std::map<MultiIndex, Morphism>& top_maps,
                             const std::map<MultiIndex, Morphism>& bottom_maps) {
  std::vector<int> bounds = full_bounds;
  bounds[j] = 1;
  BinaryMultiComplex out = empty_complex(ring, bounds);
  for (const auto& [mu, m] : upper.objects) out.set_object(insert_at(mu, j, 1), m);
  for (const auto& [mu, m] : lower.objects) out.set_object(insert_at(mu, j, 0), m);
  for (const auto& [mu, mor] : top_maps) out.set_diff(j, kTop, insert_at(mu, j, 1), mor);
  for (const auto& [mu, mor] : bottom_maps)
    out.set_diff(j, kBottom, insert_at(mu, j, 1), mor);
  for (int d = 0; d < upper.n; ++d) {
    int full_d = d < j ? d : d + 1;
    for (int f = 0; f < 2; ++f) {
      for (const auto& [mu, mor] : upper.diffs[d][f])
        out.set_diff(full_d, Flavor(f), insert_at(mu, j, 1), mor);
      for (const auto& [mu, mor] : lower.diffs[d][f])
        out.set_diff(full_d, Flavor(f), insert_at(mu, j, 0), mor);
    }
  }
  return out;
}

}  // namespace

BinaryMultiComplex torsion(const Ladder& l, int i) {
  int j = l.dir_j;
  if (i < 0 || i > l.P.bounds[j]) throw std::invalid_argument("torsion index out of range");
  BinaryMultiComplex ps = slice(l.P, j, i), qs = slice(l.Q, j, i);
  std::map<MultiIndex, Morphism> tops, bottoms;
  for (const MultiIndex& mu : support_box(ps.bounds)) {
    MultiIndex full = insert_at(mu, j, i);
    tops[mu] = l.sigma_at(full);
    bottoms[mu] = l.tau_at(full);
  }
  return two_layer(l.P.ring, j, l.P.bounds, ps, qs, tops, bottoms);
}

RelationElement relation_element(const Ladder& l) {
  RelationElement out;
  out.value.add(l.Q, 1);
  out.value.add(l.P, -1);
  for (int i = 0; i <= l.P.bounds[l.dir_j]; ++i)
    out.value.add(torsion(l, i), (i % 2 == 0) ? -1 : 1);
  out.involution = l.P.objects == l.Q.objects;
  if (out.involution) {
    for (const MultiIndex& idx : support_box(l.P.bounds)) {
      Morphism s = l.sigma_at(idx), t = l.tau_at(idx);
      FinModule m = l.P.object_at(idx);
      if (!(compose(s, s) == identity_morphism(m)) ||
          !(compose(t, t) == identity_morphism(m))) {
        out.involution = false;
        break;
      }
    }
  }
  return out;
}

BoundaryKernels boundary_kernels(const BinaryMultiComplex& p, int dir) {
  if (p.bounds[dir] < 1) throw std::invalid_argument("boundary_kernels: direction too short");
  std::vector<int> rb = p.bounds;
  rb.erase(rb.begin() + dir);
  BoundaryKernels bk;
  bk.J = empty_complex(p.ring, rb);
  bk.K = empty_complex(p.ring, rb);
  for (const MultiIndex& mu : support_box(rb)) {
    KernelResult kj = kernel(p.diff_at(dir, kTop, insert_at(mu, dir, 1)));
    KernelResult kk = kernel(p.diff_at(dir, kBottom, insert_at(mu, dir, 1)));
    bk.J.set_object(mu, kj.mod);
    bk.K.set_object(mu, kk.mod);
    bk.inclJ[mu] = kj.incl;
    bk.inclK[mu] = kk.incl;
  }
  for (const MultiIndex& mu : support_box(rb)) {
    for (int nd = 0; nd < int(rb.size()); ++nd) {
      if (mu[nd] < 1) continue;
      int full_d = nd < dir ? nd : nd + 1;
      MultiIndex tgt = dec_at(mu, nd);
      for (int f = 0; f < 2; ++f) {
        Morphism e = p.diff_at(full_d, Flavor(f), insert_at(mu, dir, 1));
        bk.J.set_diff(nd, Flavor(f), mu,
                      corestrict_through_mono(bk.inclJ.at(tgt), compose(e, bk.inclJ.at(mu))));
        bk.K.set_diff(nd, Flavor(f), mu,
                      corestrict_through_mono(bk.inclK.at(tgt), compose(e, bk.inclK.at(mu))));
      }
    }
  }
  return bk;
}

namespace {

struct ShortenParts {
  BoundaryKernels bk;
  std::map<MultiIndex, DirectSum> ds0, ds1, ds2;
  BinaryMultiComplex out;
};

ShortenParts shorten_parts(const BinaryMultiComplex& p, int dir) {
  if (p.bounds[dir] < 3)
    throw std::invalid_argument("shorten: support too short in chosen direction");
  ShortenParts sp;
  sp.bk = boundary_kernels(p, dir);
  std::vector<int> rb = p.bounds;
  rb.erase(rb.begin() + dir);
  std::vector<int> ob = p.bounds;
  --ob[dir];
  sp.out = empty_complex(p.ring, ob);
  int k = p.bounds[dir];

  auto at = [&](const MultiIndex& mu, int i) { return insert_at(mu, dir, i); };

  for (const MultiIndex& mu : support_box(rb)) {
    FinModule jm = sp.bk.J.object_at(mu), km = sp.bk.K.object_at(mu);
    sp.ds0.emplace(mu, direct_sum({jm, km, p.object_at(at(mu, 0))}));
    sp.ds1.emplace(mu, direct_sum({p.object_at(at(mu, 2)), km, jm, p.object_at(at(mu, 1))}));
    sp.ds2.emplace(mu, direct_sum({p.object_at(at(mu, 3)), jm, km}));
    sp.out.set_object(at(mu, 0), sp.ds0.at(mu).mod);
    sp.out.set_object(at(mu, 1), sp.ds1.at(mu).mod);
    sp.out.set_object(at(mu, 2), sp.ds2.at(mu).mod);
    for (int i = 3; i <= k - 1; ++i) sp.out.set_object(at(mu, i), p.object_at(at(mu, i + 1)));
  }

  for (const MultiIndex& mu : support_box(rb)) {
    const DirectSum &d0 = sp.ds0.at(mu), &d1 = sp.ds1.at(mu), &d2 = sp.ds2.at(mu);
    const Morphism &iJ = sp.bk.inclJ.at(mu), &iK = sp.bk.inclK.at(mu);

    // direction-dir differentials, degree 1 -> 0
    Morphism d2J = corestrict_through_mono(iJ, p.diff_at(dir, kTop, at(mu, 2)));
    Morphism d2K = corestrict_through_mono(iK, p.diff_at(dir, kBottom, at(mu, 2)));
    Morphism top10 = add(add(compose(d0.incl[0], compose(d2J, d1.proj[0])),
                             compose(d0.incl[1], d1.proj[1])),
                         compose(d0.incl[2], compose(p.diff_at(dir, kBottom, at(mu, 1)),
                                                     d1.proj[3])));
    Morphism bot10 = add(add(compose(d0.incl[1], compose(d2K, d1.proj[0])),
                             compose(d0.incl[0], d1.proj[2])),
                         compose(d0.incl[2], compose(p.diff_at(dir, kTop, at(mu, 1)),
                                                     d1.proj[3])));
    sp.out.set_diff(dir, kTop, at(mu, 1), top10);
    sp.out.set_diff(dir, kBottom, at(mu, 1), bot10);

    // degree 2 -> 1
    Morphism top21 = add(add(compose(d1.incl[0], compose(p.diff_at(dir, kTop, at(mu, 3)),
                                                         d2.proj[0])),
                             compose(d1.incl[2], d2.proj[1])),
                         compose(d1.incl[3], compose(iK, d2.proj[2])));
    Morphism bot21 = add(add(compose(d1.incl[0], compose(p.diff_at(dir, kBottom, at(mu, 3)),
                                                         d2.proj[0])),
                             compose(d1.incl[1], d2.proj[2])),
                         compose(d1.incl[3], compose(iJ, d2.proj[1])));
    sp.out.set_diff(dir, kTop, at(mu, 2), top21);
    sp.out.set_diff(dir, kBottom, at(mu, 2), bot21);

    // degree 3 -> 2 enters the block at the first slot
    if (k >= 4) {
      sp.out.set_diff(dir, kTop, at(mu, 3),
                      compose(d2.incl[0], p.diff_at(dir, kTop, at(mu, 4))));
      sp.out.set_diff(dir, kBottom, at(mu, 3),
                      compose(d2.incl[0], p.diff_at(dir, kBottom, at(mu, 4))));
    }
    for (int i = 4; i <= k - 1; ++i) {
      sp.out.set_diff(dir, kTop, at(mu, i), p.diff_at(dir, kTop, at(mu, i + 1)));
      sp.out.set_diff(dir, kBottom, at(mu, i), p.diff_at(dir, kBottom, at(mu, i + 1)));
    }
  }

  // differentials in the other directions act blockwise
  for (const MultiIndex& mu : support_box(rb)) {
    for (int nd = 0; nd < int(rb.size()); ++nd) {
      if (mu[nd] < 1) continue;
      int full_d = nd < dir ? nd : nd + 1;
      MultiIndex tg = dec_at(mu, nd);
      for (int f = 0; f < 2; ++f) {
        Morphism eJ = sp.bk.J.diff_at(nd, Flavor(f), mu);
        Morphism eK = sp.bk.K.diff_at(nd, Flavor(f), mu);
        auto e_at = [&](int i) { return p.diff_at(full_d, Flavor(f), at(mu, i)); };
        const DirectSum &s0 = sp.ds0.at(mu), &t0 = sp.ds0.at(tg);
        const DirectSum &s1 = sp.ds1.at(mu), &t1 = sp.ds1.at(tg);
        const DirectSum &s2 = sp.ds2.at(mu), &t2 = sp.ds2.at(tg);
        Morphism m0 = add(add(compose(t0.incl[0], compose(eJ, s0.proj[0])),
                              compose(t0.incl[1], compose(eK, s0.proj[1]))),
                          compose(t0.incl[2], compose(e_at(0), s0.proj[2])));
        Morphism m1 = add(add(compose(t1.incl[0], compose(e_at(2), s1.proj[0])),
                              compose(t1.incl[1], compose(eK, s1.proj[1]))),
                          add(compose(t1.incl[2], compose(eJ, s1.proj[2])),
                              compose(t1.incl[3], compose(e_at(1), s1.proj[3]))));
        Morphism m2 = add(add(compose(t2.incl[0], compose(e_at(3), s2.proj[0])),
                              compose(t2.incl[1], compose(eJ, s2.proj[1]))),
                          compose(t2.incl[2], compose(eK, s2.proj[2])));
        sp.out.set_diff(full_d, Flavor(f), at(mu, 0), m0);
        sp.out.set_diff(full_d, Flavor(f), at(mu, 1), m1);
        sp.out.set_diff(full_d, Flavor(f), at(mu, 2), m2);
        for (int i = 3; i <= k - 1; ++i)
          sp.out.set_diff(full_d, Flavor(f), at(mu, i), e_at(i + 1));
      }
    }
  }
  return sp;
}

struct SwitchParts {
  BoundaryKernels bk;
  std::map<MultiIndex, DirectSum> ds;
  BinaryMultiComplex out;
};

SwitchParts switch_parts(const BinaryMultiComplex& p, int dir) {
  SwitchParts sw;
  sw.bk = boundary_kernels(p, dir);
  std::vector<int> rb = p.bounds;
  rb.erase(rb.begin() + dir);
  std::vector<int> ob = p.bounds;
  ob[dir] = 1;
  sw.out = empty_complex(p.ring, ob);
  for (const MultiIndex& mu : support_box(rb)) {
    FinModule jm = sw.bk.J.object_at(mu);
    DirectSum ds = direct_sum({jm, jm});
    sw.out.set_object(insert_at(mu, dir, 0), ds.mod);
    sw.out.set_object(insert_at(mu, dir, 1), ds.mod);
    Morphism swap = add(compose(ds.incl[0], ds.proj[1]), compose(ds.incl[1], ds.proj[0]));
    sw.out.set_diff(dir, kTop, insert_at(mu, dir, 1), identity_morphism(ds.mod));
    sw.out.set_diff(dir, kBottom, insert_at(mu, dir, 1), swap);
    sw.ds.emplace(mu, std::move(ds));
  }
  for (const MultiIndex& mu : support_box(rb)) {
    for (int nd = 0; nd < int(rb.size()); ++nd) {
      if (mu[nd] < 1) continue;
      int full_d = nd < dir ? nd : nd + 1;
      MultiIndex tg = dec_at(mu, nd);
      for (int f = 0; f < 2; ++f) {
        Morphism eJ = sw.bk.J.diff_at(nd, Flavor(f), mu);
        Morphism blocks = add(compose(sw.ds.at(tg).incl[0], compose(eJ, sw.ds.at(mu).proj[0])),
                              compose(sw.ds.at(tg).incl[1], compose(eJ, sw.ds.at(mu).proj[1])));
        sw.out.set_diff(full_d, Flavor(f), insert_at(mu, dir, 0), blocks);
        sw.out.set_diff(full_d, Flavor(f), insert_at(mu, dir, 1), blocks);
      }
    }
  }
  return sw;
}

}  // namespace

BinaryMultiComplex shorten(const BinaryMultiComplex& p, int dir) {
  return shorten_parts(p, dir).out;
}

BinaryMultiComplex switch_complex(const BinaryMultiComplex& p, int dir) {
  return switch_parts(p, dir).out;
}

ShortenedLadder shorten_ladder(const Ladder& l, int dir) {
  int j = l.dir_j;
  if (dir == j) throw std::invalid_argument("shorten_ladder: direction equals ladder direction");
  ShortenParts pp = shorten_parts(l.P, dir), qq = shorten_parts(l.Q, dir);
  SwitchParts psw = switch_parts(l.P, dir), qsw = switch_parts(l.Q, dir);
  std::vector<int> rb = l.P.bounds;
  rb.erase(rb.begin() + dir);
  int k = l.P.bounds[dir];

  auto at = [&](const MultiIndex& mu, int i) { return insert_at(mu, dir, i); };

  ShortenedLadder out;
  out.main.P = pp.out;
  out.main.Q = qq.out;
  out.main.dir_j = j;
  out.swap.P = psw.out;
  out.swap.Q = qsw.out;
  out.swap.dir_j = j;

  for (const MultiIndex& mu : support_box(rb)) {
    // restrictions of the degree-1 slice of sigma and tau to both kernels
    Morphism s1 = l.sigma_at(at(mu, 1)), t1 = l.tau_at(at(mu, 1));
    Morphism sJ = corestrict_through_mono(qq.bk.inclJ.at(mu), compose(s1, pp.bk.inclJ.at(mu)));
    Morphism sK = corestrict_through_mono(qq.bk.inclK.at(mu), compose(s1, pp.bk.inclK.at(mu)));
    Morphism tJ = corestrict_through_mono(qq.bk.inclJ.at(mu), compose(t1, pp.bk.inclJ.at(mu)));
    Morphism tK = corestrict_through_mono(qq.bk.inclK.at(mu), compose(t1, pp.bk.inclK.at(mu)));

    auto assemble = [&](const DirectSum& src, const DirectSum& tgt,
                        const std::vector<Morphism>& blocks) {
      Morphism m = zero_morphism(src.mod, tgt.mod);
      for (size_t b = 0; b < blocks.size(); ++b)
        m = add(m, compose(tgt.incl[b], compose(blocks[b], src.proj[b])));
      return m;
    };

    out.main.sigma[at(mu, 0)] = assemble(pp.ds0.at(mu), qq.ds0.at(mu),
                                         {sJ, sK, l.sigma_at(at(mu, 0))});
    out.main.tau[at(mu, 0)] = assemble(pp.ds0.at(mu), qq.ds0.at(mu),
                                       {tJ, tK, l.tau_at(at(mu, 0))});
    out.main.sigma[at(mu, 1)] = assemble(pp.ds1.at(mu), qq.ds1.at(mu),
                                         {l.sigma_at(at(mu, 2)), sK, sJ, s1});
    out.main.tau[at(mu, 1)] = assemble(pp.ds1.at(mu), qq.ds1.at(mu),
                                       {l.tau_at(at(mu, 2)), tK, tJ, t1});
    out.main.sigma[at(mu, 2)] = assemble(pp.ds2.at(mu), qq.ds2.at(mu),
                                         {l.sigma_at(at(mu, 3)), sJ, sK});
    out.main.tau[at(mu, 2)] = assemble(pp.ds2.at(mu), qq.ds2.at(mu),
                                       {l.tau_at(at(mu, 3)), tJ, tK});
    for (int i = 3; i <= k - 1; ++i) {
      out.main.sigma[at(mu, i)] = l.sigma_at(at(mu, i + 1));
      out.main.tau[at(mu, i)] = l.tau_at(at(mu, i + 1));
    }

    // switch ladder carries sigma_J + sigma_J and tau_J + tau_J on J + J
    Morphism ssw = assemble(psw.ds.at(mu), qsw.ds.at(mu), {sJ, sJ});
    Morphism tsw = assemble(psw.ds.at(mu), qsw.ds.at(mu), {tJ, tJ});
    out.swap.sigma[at(mu, 0)] = ssw;
    out.swap.sigma[at(mu, 1)] = ssw;
    out.swap.tau[at(mu, 0)] = tsw;
    out.swap.tau[at(mu, 1)] = tsw;
  }
  return out;
}

}  // namespace bink
