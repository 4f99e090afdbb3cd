#include "bink/complex.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bink {

MultiIndex dec_at(MultiIndex idx, int dir) {
  --idx[dir];
  return idx;
}

MultiIndex insert_at(MultiIndex idx, int dir, int v) {
  idx.insert(idx.begin() + dir, v);
  return idx;
}

MultiIndex erase_at(MultiIndex idx, int dir) {
  idx.erase(idx.begin() + dir);
  return idx;
}

FinModule BinaryMultiComplex::object_at(const MultiIndex& idx) const {
  for (int v : idx)
    if (v < 0) return zero_module(ring);
  auto it = objects.find(idx);
  return it == objects.end() ? zero_module(ring) : it->second;
}

Morphism BinaryMultiComplex::diff_at(int dir, Flavor f, const MultiIndex& idx) const {
  auto it = diffs[dir][f].find(idx);
  if (it != diffs[dir][f].end()) return it->second;
  return zero_morphism(object_at(idx), object_at(dec_at(idx, dir)));
}

void BinaryMultiComplex::set_object(const MultiIndex& idx, const FinModule& m) {
  assert(int(idx.size()) == n);
  if (!m.is_zero()) objects[idx] = m;
}

void BinaryMultiComplex::set_diff(int dir, Flavor f, const MultiIndex& idx,
                                  const Morphism& mor) {
  assert(int(idx.size()) == n && idx[dir] >= 1);
  if (!mor.mat.is_zero()) diffs[dir][f][idx] = mor;
}

bool BinaryMultiComplex::in_support(const MultiIndex& idx) const {
  for (int d = 0; d < n; ++d)
    if (idx[d] < 0 || idx[d] > bounds[d]) return false;
  return true;
}

bool BinaryMultiComplex::operator==(const BinaryMultiComplex& o) const {
  return ring == o.ring && n == o.n && bounds == o.bounds && objects == o.objects &&
         diffs == o.diffs;
}

BinaryMultiComplex empty_complex(BaseRing ring, std::vector<int> bounds) {
  BinaryMultiComplex c;
  c.ring = ring;
  c.n = int(bounds.size());
  c.bounds = std::move(bounds);
  c.diffs.resize(c.n);
  return c;
}

std::vector<MultiIndex> support_box(const std::vector<int>& bounds) {
  if (bounds.empty()) return {MultiIndex{}};
  std::vector<MultiIndex> out;
  MultiIndex idx(bounds.size(), 0);
  while (true) {
    out.push_back(idx);
    size_t d = 0;
    for (; d < bounds.size(); ++d) {
      if (++idx[d] <= bounds[d]) break;
      idx[d] = 0;
    }
    if (d == bounds.size()) break;
  }
  return out;
}

namespace {

std::string idx_str(const MultiIndex& idx) {
  std::ostringstream os;
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  return os.str();
}

}  // namespace

std::vector<std::string> validate(const BinaryMultiComplex& c) {
  std::vector<std::string> report;
  if (int(c.bounds.size()) != c.n || int(c.diffs.size()) != c.n) {
    report.push_back("shape: bounds/diffs arrays do not match direction count");
    return report;
  }
  for (const auto& [idx, m] : c.objects) {
    if (int(idx.size()) != c.n || !c.in_support(idx))
      report.push_back("object outside support at (" + idx_str(idx) + ")");
    if (!(m.ring == c.ring))
      report.push_back("object ring mismatch at (" + idx_str(idx) + ")");
  }
  for (int dir = 0; dir < c.n; ++dir)
    for (int f = 0; f < 2; ++f)
      for (const auto& [idx, mor] : c.diffs[dir][f]) {
        if (int(idx.size()) != c.n || !c.in_support(idx) || idx[dir] < 1) {
          report.push_back("differential outside support at (" + idx_str(idx) + ")");
          continue;
        }
        if (!(mor.src == c.object_at(idx)) ||
            !(mor.tgt == c.object_at(dec_at(idx, dir))))
          report.push_back("differential endpoint mismatch at (" + idx_str(idx) +
                           ") dir " + std::to_string(dir));
        else if (!is_well_defined(mor.src, mor.tgt, mor.mat))
          report.push_back("differential not well defined at (" + idx_str(idx) + ")");
      }
  if (!report.empty()) return report;

  for (const MultiIndex& idx : support_box(c.bounds)) {
    for (int dir = 0; dir < c.n; ++dir) {
      if (idx[dir] < 2) continue;
      for (int f = 0; f < 2; ++f) {
        Morphism d1 = c.diff_at(dir, Flavor(f), dec_at(idx, dir));
        Morphism d2 = c.diff_at(dir, Flavor(f), idx);
        if (!compose(d1, d2).mat.is_zero())
          report.push_back(std::string(f == kTop ? "top" : "bottom") +
                           " differential does not square to zero at (" + idx_str(idx) +
                           ") dir " + std::to_string(dir));
      }
    }
    for (int d1 = 0; d1 < c.n; ++d1)
      for (int d2 = d1 + 1; d2 < c.n; ++d2) {
        if (idx[d1] < 1 || idx[d2] < 1) continue;
        for (int f1 = 0; f1 < 2; ++f1)
          for (int f2 = 0; f2 < 2; ++f2) {
            Morphism a = compose(c.diff_at(d1, Flavor(f1), dec_at(idx, d2)),
                                 c.diff_at(d2, Flavor(f2), idx));
            Morphism b = compose(c.diff_at(d2, Flavor(f2), dec_at(idx, d1)),
                                 c.diff_at(d1, Flavor(f1), idx));
            if (!(a == b))
              report.push_back("differentials fail to commute at (" + idx_str(idx) +
                               ") dirs " + std::to_string(d1) + "/" + std::to_string(d2) +
                               " flavors " + std::to_string(f1) + "/" + std::to_string(f2));
          }
      }
  }
  return report;
}

bool is_acyclic(const BinaryMultiComplex& c) {
  if (c.n == 0) return c.objects.empty();
  for (int dir = 0; dir < c.n; ++dir) {
    std::vector<int> residual = c.bounds;
    residual.erase(residual.begin() + dir);
    for (const MultiIndex& mu : support_box(residual)) {
      for (int f = 0; f < 2; ++f) {
        int k = c.bounds[dir];
        for (int i = 0; i <= k; ++i) {
          MultiIndex at = insert_at(mu, dir, i);
          FinModule xi = c.object_at(at);
          Subobject ker = (i == 0) ? full_subobject(xi)
                                   : kernel_subobject(c.diff_at(dir, Flavor(f), at));
          Subobject im = (i == k)
                             ? zero_subobject(xi)
                             : image(c.diff_at(dir, Flavor(f), insert_at(mu, dir, i + 1)));
          if (!(ker == im)) return false;
        }
      }
    }
  }
  return true;
}

bool is_diagonal_in(const BinaryMultiComplex& c, int dir) {
  return c.diffs[dir][kTop] == c.diffs[dir][kBottom];
}

bool is_diagonal(const BinaryMultiComplex& c) {
  for (int dir = 0; dir < c.n; ++dir)
    if (!is_diagonal_in(c, dir)) return false;
  return true;
}

BinaryMultiComplex diagonal_embed(const BinaryMultiComplex& c, const std::vector<int>& dirs) {
  BinaryMultiComplex out = c;
  for (int dir : dirs) out.diffs[dir][kBottom] = out.diffs[dir][kTop];
  return out;
}

BinaryMultiComplex top_restriction(const BinaryMultiComplex& c, int dir) {
  BinaryMultiComplex out = c;
  out.diffs[dir][kBottom] = out.diffs[dir][kTop];
  return out;
}

BinaryMultiComplex direct_sum_complex(const BinaryMultiComplex& x,
                                      const BinaryMultiComplex& y) {
  assert(x.n == y.n && x.ring == y.ring);
  std::vector<int> bounds(x.n);
  for (int d = 0; d < x.n; ++d) bounds[d] = std::max(x.bounds[d], y.bounds[d]);
  BinaryMultiComplex out = empty_complex(x.ring, bounds);
  std::map<MultiIndex, DirectSum> sums;
  for (const MultiIndex& idx : support_box(bounds)) {
    DirectSum ds = direct_sum({x.object_at(idx), y.object_at(idx)});
    out.set_object(idx, ds.mod);
    sums.emplace(idx, std::move(ds));
  }
  for (const MultiIndex& idx : support_box(bounds)) {
    for (int dir = 0; dir < out.n; ++dir) {
      if (idx[dir] < 1) continue;
      MultiIndex tgt = dec_at(idx, dir);
      for (int f = 0; f < 2; ++f) {
        Morphism fx = x.diff_at(dir, Flavor(f), idx);
        Morphism fy = y.diff_at(dir, Flavor(f), idx);
        Morphism block =
            add(compose(sums.at(tgt).incl[0], compose(fx, sums.at(idx).proj[0])),
                compose(sums.at(tgt).incl[1], compose(fy, sums.at(idx).proj[1])));
        out.set_diff(dir, Flavor(f), idx, block);
      }
    }
  }
  return out;
}

BinaryMultiComplex slice(const BinaryMultiComplex& c, int dir, int value) {
  std::vector<int> bounds = c.bounds;
  bounds.erase(bounds.begin() + dir);
  BinaryMultiComplex out = empty_complex(c.ring, bounds);
  for (const auto& [idx, m] : c.objects)
    if (idx[dir] == value) out.set_object(erase_at(idx, dir), m);
  for (int d = 0; d < c.n; ++d) {
    if (d == dir) continue;
    int nd = d < dir ? d : d - 1;
    for (int f = 0; f < 2; ++f)
      for (const auto& [idx, mor] : c.diffs[d][f])
        if (idx[dir] == value) out.set_diff(nd, Flavor(f), erase_at(idx, dir), mor);
  }
  return out;
}

BinaryMultiComplex chain_complex(BaseRing ring, const std::vector<FinModule>& objects,
                                 const std::vector<Morphism>& top,
                                 const std::vector<Morphism>& bottom) {
  int k = int(objects.size()) - 1;
  assert(int(top.size()) == k && int(bottom.size()) == k);
  BinaryMultiComplex c = empty_complex(ring, {k});
  for (int i = 0; i <= k; ++i) c.set_object({i}, objects[i]);
  for (int i = 1; i <= k; ++i) {
    c.set_diff(0, kTop, {i}, top[i - 1]);
    c.set_diff(0, kBottom, {i}, bottom[i - 1]);
  }
  return c;
}

std::string canonical_key(const BinaryMultiComplex& c) {
  std::ostringstream os;
  os << "N" << bint_str(c.ring.N) << ";n" << c.n << ";k";
  for (int b : c.bounds) os << b << ",";
  os << ";O";
  for (const auto& [idx, m] : c.objects) {
    os << "(" << idx_str(idx) << ":";
    for (bint d : m.divisors) os << bint_str(d) << ",";
    os << ")";
  }
  for (int dir = 0; dir < c.n; ++dir)
    for (int f = 0; f < 2; ++f) {
      os << ";D" << dir << (f == kTop ? "t" : "b");
      for (const auto& [idx, mor] : c.diffs[dir][f]) {
        os << "(" << idx_str(idx) << ":";
        for (bint v : mor.mat.data()) os << bint_str(v) << ",";
        os << ")";
      }
    }
  return os.str();
}

void FormalSum::add(const BinaryMultiComplex& c, long long weight) {
  if (weight == 0) return;
  std::string key = canonical_key(c);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::make_pair(c, weight));
  } else {
    it->second.second += weight;
    if (it->second.second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [k, v] : o.terms_) add(v.first, v.second);
  return *this;
}

FormalSum FormalSum::operator-() const {
  FormalSum out;
  for (const auto& [k, v] : terms_) out.add(v.first, -v.second);
  return out;
}

}  // namespace bink
