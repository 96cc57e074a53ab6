#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ulrichlab/matrix.hpp"
#include "ulrichlab/rat.hpp"

namespace ulab {

// Quotient of a polynomial ring by a monomial ideal with finite length,
// concretely the set of standard monomials (exponent vectors) that survive.
// Build fails unless every variable has a pure power among the relations,
// which is exactly the Artinian condition for monomial ideals.
struct MonomialArtinAlgebra {
  int nvars = 0;
  std::vector<std::vector<int>> relations;  // minimal monomial generators
  std::vector<std::vector<int>> basis;      // standard monomials, sorted by degree then lex

  long length() const { return static_cast<long>(basis.size()); }
  // index of a monomial in the basis, -1 when it lies in the ideal
  int basis_index(const std::vector<int>& mono) const;
};

using ArtinPtr = std::shared_ptr<const MonomialArtinAlgebra>;

ArtinPtr build_algebra(int nvars, std::vector<std::vector<int>> relations);

// variable letter used in printed monomials: x, y, z, u, v, w
char var_letter(int i);
std::string monomial_str(const std::vector<int>& e);

// Finite dimensional module over a monomial Artin algebra, stored as one
// nilpotent action matrix per variable on a chosen k-basis.
struct ArtinModule {
  ArtinPtr alg;
  int dim = 0;
  std::vector<DenseMatrix> action;
};

ArtinModule regular_module(const ArtinPtr& a);
ArtinModule k_power(const ArtinPtr& a, int n);
ArtinModule matlis_dual(const ArtinModule& m);
ArtinModule artin_direct_sum(const ArtinModule& a, const ArtinModule& b);

// cyclic module A/J for the monomial ideal J spanned by the given monomials
// (the defining relations of A are implicit); may come out zero
ArtinModule cyclic_quotient(const ArtinPtr& a,
                            const std::vector<std::vector<int>>& gens);

// checks actions commute, satisfy the defining relations, and are nilpotent
void validate_module(const ArtinModule& m);

struct ArtinInvariants {
  long length = 0;
  long mu = 0;
  long socle_dim = 0;
  Rat c_min;        // length / mu, the multiplicity ratio for finite length
  bool is_ulrich = false;
};

ArtinInvariants artin_invariants(const ArtinModule& m);

// l(m*M), the length of the submodule generated by all variable actions
long radical_image_length(const ArtinModule& m);

// number of minimal generators of the maximal ideal of the algebra
long algebra_edim(const MonomialArtinAlgebra& a);

struct SocleSummandResult {
  bool summand = false;       // true iff socle(M) is not inside m*M
  std::optional<Vec> witness; // a socle vector outside m*M when summand
  bool inequality = false;    // mu(M) > l(m*M) * mu(m), which forces summand
};

// detects a socle element among the minimal generators of M
SocleSummandResult socle_summand_test(const ArtinModule& m);

}  // namespace ulab
