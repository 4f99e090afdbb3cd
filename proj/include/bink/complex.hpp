#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bink/module.hpp"

namespace bink {

using MultiIndex = std::vector<int>;

enum Flavor : int { kTop = 0, kBottom = 1 };

MultiIndex dec_at(MultiIndex idx, int dir);          // idx - e_dir
MultiIndex insert_at(MultiIndex idx, int dir, int v);
MultiIndex erase_at(MultiIndex idx, int dir);

/// Bounded n-fold binary multicomplex over Z/NZ: one module per multidegree
/// (zero modules are not stored) and, per direction, a top and a bottom
/// family of degree -1 differentials. Supported on [0,k1] x ... x [0,kn].
struct BinaryMultiComplex {
  BaseRing ring;
  int n = 0;
  std::vector<int> bounds;
  std::map<MultiIndex, FinModule> objects;
  // diffs[dir][flavor]: morphisms keyed by the source multidegree
  std::vector<std::array<std::map<MultiIndex, Morphism>, 2>> diffs;

  FinModule object_at(const MultiIndex& idx) const;
  Morphism diff_at(int dir, Flavor f, const MultiIndex& idx) const;
  void set_object(const MultiIndex& idx, const FinModule& m);
  void set_diff(int dir, Flavor f, const MultiIndex& idx, const Morphism& mor);
  bool in_support(const MultiIndex& idx) const;

  bool operator==(const BinaryMultiComplex& o) const;
};

BinaryMultiComplex empty_complex(BaseRing ring, std::vector<int> bounds);

/// All multidegrees in the bounding box (odometer order).
std::vector<MultiIndex> support_box(const std::vector<int>& bounds);

/// Structural validation: shapes, well-definedness, d^2 = 0 per flavor per
/// direction, and commutation of all four flavor pairs across direction
/// pairs. Empty report = valid.
std::vector<std::string> validate(const BinaryMultiComplex& c);

/// Exactness of every line in every direction for both flavors, ends
/// included. Input must validate.
bool is_acyclic(const BinaryMultiComplex& c);

bool is_diagonal_in(const BinaryMultiComplex& c, int dir);
bool is_diagonal(const BinaryMultiComplex& c);

/// Copy the top differentials of the given directions onto the bottoms.
BinaryMultiComplex diagonal_embed(const BinaryMultiComplex& c, const std::vector<int>& dirs);
/// Forget the bottom differentials of one direction (replaced by the top).
BinaryMultiComplex top_restriction(const BinaryMultiComplex& c, int dir);

BinaryMultiComplex direct_sum_complex(const BinaryMultiComplex& x,
                                      const BinaryMultiComplex& y);

/// The (n-1)-fold slice at coordinate `value` in direction `dir`.
BinaryMultiComplex slice(const BinaryMultiComplex& c, int dir, int value);

/// One-fold binary complex on [0,k] from explicit data.
BinaryMultiComplex chain_complex(BaseRing ring, const std::vector<FinModule>& objects,
                                 const std::vector<Morphism>& top,
                                 const std::vector<Morphism>& bottom);

std::string canonical_key(const BinaryMultiComplex& c);

/// Integer-weighted multiset of canonicalized complexes.
class FormalSum {
 public:
  FormalSum() = default;
  void add(const BinaryMultiComplex& c, long long weight);
  FormalSum& operator+=(const FormalSum& o);
  FormalSum operator-() const;
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<std::string, std::pair<BinaryMultiComplex, long long>>& terms() const {
    return terms_;
  }

 private:
  std::map<std::string, std::pair<BinaryMultiComplex, long long>> terms_;
};

}  // namespace bink
