#pragma once

#include <optional>
#include <utility>

#include "ulrichlab/graded.hpp"
#include "ulrichlab/rat.hpp"

namespace ulab {

// Multiplicity of a module with respect to a nonzero monomial ideal inside
// the ring. The value follows the dimension of the module: finite length
// modules contribute their length, modules with rank contribute
// rank * min(I), and the zero module contributes zero.
long ideal_mult_of_module(const RelativeIdeal& i, const PresentedModule& m);

// Annihilator of a finite length module, as a monomial ideal inside the
// ring. Throws NotArtinian when the module has positive rank.
RelativeIdeal annihilator_ideal(const PresentedModule& m);

// Classification of a module against a fixed ideal: the covolume
// l(M/IM), the multiplicity e(I,M), their exact ratio, and the freeness
// of M/IM over R/I. A module is Ulrich with respect to I when it is
// Cohen-Macaulay, M/IM is free over R/I, and e(I,M) = l(M/IM).
struct UlrichReport {
  ModuleFacts facts;
  long ideal_min = 0;   // e(I,R), the minimal degree of the ideal
  long covolume = 0;    // l(M/IM)
  long e_ideal = 0;     // e(I,M)
  Rat c_min;            // e_ideal / covolume
  bool free_mod_i = false;
  bool is_cm = false;
  bool is_ulrich = false;

  bool is_c_ulrich(const Rat& c) const {
    return is_cm && free_mod_i && !(c < c_min);
  }
};

UlrichReport classify(const PresentedModule& m);
UlrichReport classify(const PresentedModule& m, const RelativeIdeal& i);

// Freeness threshold 1 + alpha/e(I, M tensor N) where
// alpha = max(gcd(e(I,M) * mu(N), e(I, M tensor N)), e(I,R)).
// Requires M of positive rank; returns nullopt when M tensor N vanishes,
// in which case every c works and the threshold is infinite.
std::optional<Rat> alpha_threshold(const PresentedModule& m, const PresentedModule& n,
                                   const RelativeIdeal& i);

// Transpose construction from a two-generated rank-one ideal: the torsion
// free part of the transpose of N. The checks record the predicted values
// e = a1 * (beta1(N) - 1), mu = beta1(N), the vanishing of ext^1 into the
// ring, and (for multiplicity at least four) e >= 2 * mu.
struct BuChecks {
  long beta1_n = 0;
  long e_expected = 0;
  long e_actual = 0;
  long mu_expected = 0;
  long mu_actual = 0;
  long ext1_length = 0;
  bool e_ok = false;
  bool mu_ok = false;
  bool ext1_zero = false;
  bool doubling_ok = false;  // e >= 2*mu when a1 >= 4, vacuously true otherwise
  bool all_ok() const { return e_ok && mu_ok && ext1_zero && doubling_ok; }
};

std::pair<PresentedModule, BuChecks> bu_construct(const SgpPtr& s, const RelativeIdeal& n);

// Whether a finite length module has a minimal generator lying in its
// socle, i.e. the socle is not contained in m*Q. Throws NotArtinian on
// modules of positive rank.
bool socle_meets_generators(const PresentedModule& q);

}  // namespace ulab
