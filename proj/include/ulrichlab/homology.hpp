#pragma once

#include <vector>

#include "ulrichlab/graded.hpp"

namespace ulab {

// degreewise dimensions of a certified finite-length module
struct FiniteLengthTable {
  long lo = 0;                // degree of dims[0]
  std::vector<long> dims;     // window [lo, lo + dims.size())
  long total = 0;
};

// Tor_i(M, N) for i >= 1, computed from a minimal resolution of M. The result
// is torsion over the domain, so its support window is certified and the
// degrees just past it are rechecked to be zero.
FiniteLengthTable tor_table(int i, const PresentedModule& m, const PresentedModule& n);

// Ext^i(M, N) for i >= 1, from the dual complex into N
FiniteLengthTable ext_table(int i, const PresentedModule& m, const PresentedModule& n);

// graded Hom(M, N) as a presented module
PresentedModule hom_module(const PresentedModule& m, const PresentedModule& n);

// the canonical ideal as a module
PresentedModule canonical_module(SgpPtr s);

// Hom(M, omega)
PresentedModule canonical_dual(const PresentedModule& m);

// One comparison level of the duality check. A level is only meaningful under
// its vanishing hypothesis; rows with gate_ok false carry no verdict.
struct DualityRow {
  int i = 0;
  bool gate_ok = false;  // Ext^1..Ext^(i+1) of (M, N) all vanish
  long lhs = -1;         // level 0: tensor side table sum; level i: length of Tor_i(M, N-dual)
  long rhs = -1;         // level 0: Hom side table sum; level i: length of Ext^i(M, N)
  bool equal = false;
};
std::vector<DualityRow> check_duality(const PresentedModule& m, const PresentedModule& n, int imax);

}  // namespace ulab
