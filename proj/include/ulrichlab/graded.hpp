#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ulrichlab/matrix.hpp"
#include "ulrichlab/relideal.hpp"
#include "ulrichlab/semigroup.hpp"

namespace ulab {

// Hard cap on how far any degree scan may run past the largest presentation
// twist of the module at hand. Unset (the default) means every operation uses
// its provable span and always returns certified values; with a cap in place an
// operation whose provable span exceeds the cap raises WindowUnstable instead
// of computing anything it cannot certify.
std::optional<long> window_margin();
void set_window_margin(std::optional<long> m);

// Graded map between twisted free modules, +R(-col_twists[j]) -> +R(-row_twists[i]).
// Every graded piece of the ring is at most one-dimensional, so a homogeneous
// entry is a scalar times a single monomial and the scalar is all we store:
// entry (i,j) represents coef(i,j) * t^(col_twists[j] - row_twists[i]), and a
// nonzero coefficient requires that exponent to lie in the semigroup.
struct GradedMatrix {
  std::vector<long> row_twists, col_twists;
  DenseMatrix coef;

  int rows() const { return static_cast<int>(row_twists.size()); }
  int cols() const { return static_cast<int>(col_twists.size()); }
};

// entry pattern sanity check; Computation error on violation
void validate_graded(const NumericalSemigroup& s, const GradedMatrix& a);

// coordinates i with d - twists[i] in S
std::vector<int> active_coords(const NumericalSemigroup& s, const std::vector<long>& twists, long d);
// span of the columns of a that are active at degree d, in global row coordinates
Echelon column_space(const NumericalSemigroup& s, const GradedMatrix& a, long d);

struct ModuleFacts {
  long mu = 0;
  long beta1 = 0;
  long rank = 0;
  long torsion_length = 0;
  long length = -1;  // -1 when infinite
  long e_mult = 0;   // multiplicity with respect to the maximal ideal
  long depth = -1, dim = -1;
  bool is_zero = false, is_free = false, is_cm = false, is_mcm = false;
};

// Finitely generated graded module, stored as the cokernel of a graded matrix.
// Construction always minimalizes: unit entries are pruned by column operations
// and redundant relation columns are dropped, so mu() and beta1() read straight
// off the matrix for every module the callers ever see.
class PresentedModule {
 public:
  static PresentedModule from_matrix(SgpPtr s, GradedMatrix a);
  static PresentedModule zero(SgpPtr s);
  static PresentedModule free_module(SgpPtr s, std::vector<long> twists);
  // a relative ideal as a module, generators in its own degrees
  static PresentedModule from_relative_ideal(const RelativeIdeal& e);
  // R/I for an ideal inside the ring
  static PresentedModule quotient_ring(const RelativeIdeal& i);

  const SgpPtr& semigroup() const { return sgp_; }
  const GradedMatrix& matrix() const { return a_; }
  const std::vector<long>& gen_twists() const { return a_.row_twists; }
  long mu() const { return a_.rows(); }
  long beta1() const { return a_.cols(); }
  bool is_zero() const { return a_.rows() == 0; }

  long hilbert(long d) const;        // dim of the degree-d piece
  long rank() const;                 // generic rank
  long torsion_length() const;       // length of the finite torsion submodule
  bool torsion_free() const { return torsion_length() == 0; }
  long length() const;               // Computation error when rank > 0
  // all invariants, with the shifted-window stability recheck
  ModuleFacts facts() const;

  // largest twist appearing in the presentation; scans are measured against it
  long max_twist() const;
  long min_gen_twist() const;        // smallest generator degree (0 for the zero module)
  // degree from which every slice of the presentation is the full coefficient
  // matrix, so multiplication by t^a1 is an isomorphism onward
  long stable_degree() const;

  std::string str() const;

 private:
  PresentedModule() = default;
  SgpPtr sgp_;
  GradedMatrix a_;
};

PresentedModule shift_module(const PresentedModule& m, long c);  // M(-c): twists + c
PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n);
PresentedModule tensor(const PresentedModule& m, const PresentedModule& n);
// Auslander transpose coker(A^T), canonical for the stored minimal presentation
PresentedModule transpose_module(const PresentedModule& m);
// M modulo its finite torsion submodule
PresentedModule mod_torsion(const PresentedModule& m);
// M/IM for an ideal inside the ring
PresentedModule quotient_mod_ideal(const PresentedModule& m, const RelativeIdeal& i);

struct Resolution {
  // diff[k] presents step k: diff[0] is the minimal presentation, and
  // diff[k] lists minimal generators of the k-th syzygy module of that matrix
  std::vector<GradedMatrix> diff;
  std::vector<long> betti;  // betti[i], i = 0..steps
};
Resolution resolve(const PresentedModule& m, int steps);
// Omega^i with respect to the minimal resolution; Omega^0 gives m back
PresentedModule syzygy_module(const PresentedModule& m, int i);

// Shared extraction engine. An ambient family is a graded space presented in
// explicit global coordinates: relations_at(d) spans the subspace identified
// with zero at degree d, and torsion_stable bounds the degrees where the
// ambient module can still hide torsion. window_base is the largest input
// twist, used for the window cap policy.
struct Ambient {
  SgpPtr s;
  int ncoords = 0;
  std::function<std::vector<Vec>(long)> relations_at;  // null: free ambient
  long torsion_stable = 0;  // ambient torsion vanishes from this degree on
  long window_base = 0;
};

struct ChosenGens {
  std::vector<long> degs;
  std::vector<Vec> vecs;  // ambient coordinate vectors
};

// Minimal generators of the multiplication-closed subspace family V, where
// spans_at(d) returns vectors spanning V_d (relations may be mixed in) and
// every minimal generator provably lies in [lo, hi].
ChosenGens minimal_generators(const Ambient& w,
                              const std::function<std::vector<Vec>(long)>& spans_at,
                              long lo, long hi);

// Minimal generating syzygies among the given generators inside the ambient.
// Row twists of the result are g.degs.
GradedMatrix syzygies_of(const Ambient& w, const ChosenGens& g);

// presentation of the submodule generated by the family V
PresentedModule extract_submodule(const Ambient& w,
                                  const std::function<std::vector<Vec>(long)>& spans_at,
                                  long lo, long hi);

// WindowUnstable when a cap is set and needed_hi overshoots base + cap
void check_window_span(long needed_hi, long base);

}  // namespace ulab
