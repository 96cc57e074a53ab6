#pragma once

#include <optional>
#include <vector>

#include "ulrichlab/semigroup.hpp"

namespace ulab {

// Relative ideal E of a numerical semigroup S: a nonempty E with E + S in E,
// stored by its (unique) minimal generating set, sorted ascending. These are
// exactly the monomial rank-one modules; every generator may be negative.
class RelativeIdeal {
 public:
  RelativeIdeal() = default;
  // minimalize raw generators; EmptyInput when raw is empty
  static RelativeIdeal normalize(SgpPtr s, std::vector<long> raw);

  const std::vector<long>& gens() const { return gens_; }
  const SgpPtr& semigroup() const { return sgp_; }
  long min() const { return gens_.front(); }
  long max_gen() const { return gens_.back(); }
  long mu() const { return static_cast<long>(gens_.size()); }
  bool contains(long z) const;
  bool is_principal() const { return gens_.size() == 1; }
  // all generators inside S (so E is an ideal of R)
  bool inside_ring() const;

  bool operator==(const RelativeIdeal& o) const;
  std::string str() const;

 private:
  SgpPtr sgp_;
  std::vector<long> gens_;
};

// S itself as the unit ideal R
RelativeIdeal ring_ideal(SgpPtr s);
// maximal ideal (t^{a1},...,t^{an})
RelativeIdeal maximal_ideal(SgpPtr s);
// canonical ideal K = {z : F(S) - z not in S}, normalized with min gen 0
RelativeIdeal canonical_ideal(SgpPtr s);

// Minkowski sum E + F, minimalized. SemigroupMismatch on different semigroups.
RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal power(const RelativeIdeal& e, long n);  // n >= 0, E^0 = R
// colon (E : F) = {z : z + F in E}
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);
// e(I, R) for an ideal I of R: the smallest generator degree. NotMPrimary when
// some generator is outside S.
long ideal_multiplicity(const RelativeIdeal& i);
// l(E/F) = |E \ F| for F contained in E (NotContained otherwise)
long quotient_length(const RelativeIdeal& e, const RelativeIdeal& f);
// E isomorphic to F as R-modules iff gens agree up to one common shift
bool shift_equivalent(const RelativeIdeal& e, const RelativeIdeal& f);
std::optional<long> shift_between(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal shift(const RelativeIdeal& e, long c);
// smallest shift c >= 0 with all gens + c in S \ {0}; used only for display
long display_shift(const RelativeIdeal& e);

}  // namespace ulab
