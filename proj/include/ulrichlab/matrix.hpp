#pragma once

#include <optional>
#include <vector>

#include "ulrichlab/scalar.hpp"

namespace ulab {

using Vec = std::vector<Scalar>;

struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  Vec col(int j) const;
  Vec apply(const Vec& x) const;  // matrix * x, x.size() == cols
};

// Reduced echelon span of a growing set of vectors in k^n. Reduction always
// eliminates against fully reduced rows with unit pivots, so reduce() output is
// zero at every pivot position; coordinates at non-pivot positions classify the
// residue class modulo the span.
class Echelon {
 public:
  explicit Echelon(int n) : n_(n) {}
  int dim() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // residual of v modulo the span; zero at all pivot positions
  Vec reduce(Vec v) const;
  // add v to the span; true if rank grew
  bool add(Vec v);
  bool contains(const Vec& v) const;
  const std::vector<int>& pivots() const { return pivots_; }
  // indices in [0,n) that are not pivots, ascending
  std::vector<int> nonpivots() const;

 private:
  int n_;
  std::vector<Vec> rows_;    // kept sorted by pivot position, fully reduced
  std::vector<int> pivots_;  // ascending
};

int rank(const DenseMatrix& m);

// Basis of the right kernel {x : m x = 0}. Deterministic: one vector per free
// column in ascending column order, with 1 at the free column.
std::vector<Vec> kernel_basis(const DenseMatrix& m);

// One solution of m x = v if consistent (free variables set to 0).
std::optional<Vec> solve_membership(const DenseMatrix& m, const Vec& v);

}  // namespace ulab
