#pragma once

#include <memory>
#include <vector>

#include "ulrichlab/error.hpp"

namespace ulab {

// Numerical semigroup S = <a1,...,an> with gcd 1. Value object, fully
// precomputed at build time: membership is O(1) after construction.
class NumericalSemigroup {
 public:
  // raw generators: minimalized, deduplicated, sorted. EmptyInput / GcdNotOne.
  static NumericalSemigroup build(std::vector<long> raw);

  const std::vector<long>& generators() const { return gens_; }
  long multiplicity() const { return gens_.front(); }           // e(R) = a1
  long edim() const { return static_cast<long>(gens_.size()); }
  long frobenius() const { return frobenius_; }                 // -1 for S = N
  const std::vector<long>& gaps() const { return gaps_; }
  // apery()[r] = least element of S congruent to r mod a1
  const std::vector<long>& apery() const { return apery_; }
  const std::vector<long>& pseudo_frobenius() const { return pf_; }
  long type() const { return static_cast<long>(pf_.size()); }
  bool symmetric() const { return type() == 1; }
  bool has_minimal_multiplicity() const { return multiplicity() == edim(); }
  bool is_regular() const { return multiplicity() == 1; }       // S = N

  bool contains(long z) const {
    if (z < 0) return false;
    if (z > frobenius_) return true;
    return member_[static_cast<size_t>(z)];
  }

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
  std::string str() const;

 private:
  std::vector<long> gens_, gaps_, apery_, pf_;
  std::vector<bool> member_;  // [0, frobenius]
  long frobenius_ = -1;
};

using SgpPtr = std::shared_ptr<const NumericalSemigroup>;

inline SgpPtr make_semigroup(std::vector<long> raw) {
  return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::build(std::move(raw)));
}

}  // namespace ulab
