#include "ulrichlab/matrix.hpp"

#include <algorithm>

namespace ulab {

Vec DenseMatrix::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

Vec DenseMatrix::apply(const Vec& x) const {
  Vec y(rows);
  for (int i = 0; i < rows; ++i) {
    Scalar s;
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) s = s + at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Vec Echelon::reduce(Vec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Scalar f = c;  // rows_ have unit pivots
    for (int j = 0; j < n_; ++j)
      if (!rows_[k][j].is_zero()) v[j] = v[j] - f * rows_[k][j];
  }
  return v;
}

bool Echelon::add(Vec v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (!v[j].is_zero()) { p = j; break; }
  if (p < 0) return false;
  Scalar inv = Scalar::one() / v[p];
  for (int j = 0; j < n_; ++j)
    if (!v[j].is_zero()) v[j] = v[j] * inv;
  // back-substitute into existing rows so every row stays reduced
  for (auto& r : rows_) {
    const Scalar& c = r[p];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = 0; j < n_; ++j)
      if (!v[j].is_zero()) r[j] = r[j] - f * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Echelon::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& s : r)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<int> Echelon::nonpivots() const {
  std::vector<int> out;
  size_t k = 0;
  for (int j = 0; j < n_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) { ++k; continue; }
    out.push_back(j);
  }
  return out;
}

int rank(const DenseMatrix& m) {
  Echelon e(m.rows);
  for (int j = 0; j < m.cols; ++j) e.add(m.col(j));
  return e.rank();
}

namespace {
// Row echelon with recorded pivot columns; operates on a copy.
struct Rref {
  DenseMatrix m;
  std::vector<int> pivot_col;              // per pivot row
  std::vector<int> pivot_row_of_col;       // -1 if free

  explicit Rref(DenseMatrix a) : m(std::move(a)) {
    pivot_row_of_col.assign(m.cols, -1);
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
      int piv = -1;
      for (int i = r; i < m.rows; ++i)
        if (!m.at(i, j).is_zero()) { piv = i; break; }  // first nonzero pivot
      if (piv < 0) continue;
      if (piv != r)
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(r, c));
      Scalar inv = Scalar::one() / m.at(r, j);
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = m.at(r, c) * inv;
      for (int i = 0; i < m.rows; ++i) {
        if (i == r || m.at(i, j).is_zero()) continue;
        Scalar f = m.at(i, j);
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = m.at(i, c) - f * m.at(r, c);
      }
      pivot_col.push_back(j);
      pivot_row_of_col[j] = r;
      ++r;
    }
  }
};
}  // namespace

std::vector<Vec> kernel_basis(const DenseMatrix& m) {
  Rref e(m);
  std::vector<Vec> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (e.pivot_row_of_col[j] >= 0) continue;
    Vec x(m.cols);
    x[j] = Scalar::one();
    for (size_t k = 0; k < e.pivot_col.size(); ++k)
      x[e.pivot_col[k]] = -e.m.at(static_cast<int>(k), j);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve_membership(const DenseMatrix& m, const Vec& v) {
  DenseMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = v[i];
  }
  Rref e(std::move(aug));
  if (e.pivot_row_of_col[m.cols] >= 0) return std::nullopt;  // inconsistent
  Vec x(m.cols);
  for (size_t k = 0; k < e.pivot_col.size(); ++k)
    x[e.pivot_col[k]] = e.m.at(static_cast<int>(k), m.cols);
  return x;
}

}  // namespace ulab
