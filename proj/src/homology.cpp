#include "ulrichlab/homology.hpp"

#include <algorithm>

#include "ulrichlab/error.hpp"

namespace ulab {

namespace {

// a chain complex term with explicit coordinates: twisted copies of N glued
// into one coordinate list, with the block-diagonal relations of N
struct Term {
  std::vector<long> tw;  // coordinate twists
  GradedMatrix rel;      // relations, rows = coordinates
};

// F (x) N for a free module F with the given twists
Term tensor_term(const std::vector<long>& b, const PresentedModule& n) {
  const GradedMatrix& an = n.matrix();
  Term t;
  for (long bb : b)
    for (long x : an.row_twists) t.tw.push_back(bb + x);
  for (long bb : b)
    for (long c : an.col_twists) t.rel.col_twists.push_back(bb + c);
  t.rel.row_twists = t.tw;
  t.rel.coef = DenseMatrix(static_cast<int>(t.tw.size()), static_cast<int>(t.rel.col_twists.size()));
  int nr = an.rows(), nc = an.cols();
  for (int blk = 0; blk < static_cast<int>(b.size()); ++blk)
    for (int p = 0; p < nr; ++p)
      for (int q = 0; q < nc; ++q)
        t.rel.coef.at(blk * nr + p, blk * nc + q) = an.coef.at(p, q);
  return t;
}

// Hom(F, N) for a free module F with the given twists
Term hom_term(const std::vector<long>& b, const PresentedModule& n) {
  const GradedMatrix& an = n.matrix();
  Term t;
  for (long bb : b)
    for (long x : an.row_twists) t.tw.push_back(x - bb);
  for (long bb : b)
    for (long c : an.col_twists) t.rel.col_twists.push_back(c - bb);
  t.rel.row_twists = t.tw;
  t.rel.coef = DenseMatrix(static_cast<int>(t.tw.size()), static_cast<int>(t.rel.col_twists.size()));
  int nr = an.rows(), nc = an.cols();
  for (int blk = 0; blk < static_cast<int>(b.size()); ++blk)
    for (int p = 0; p < nr; ++p)
      for (int q = 0; q < nc; ++q)
        t.rel.coef.at(blk * nr + p, blk * nc + q) = an.coef.at(p, q);
  return t;
}

// a (x) id_N : one scalar block per entry of a
GradedMatrix tensor_map(const GradedMatrix& a, const PresentedModule& n) {
  const GradedMatrix& an = n.matrix();
  int nr = an.rows();
  GradedMatrix g;
  for (long bb : a.row_twists)
    for (long x : an.row_twists) g.row_twists.push_back(bb + x);
  for (long bb : a.col_twists)
    for (long x : an.row_twists) g.col_twists.push_back(bb + x);
  g.coef = DenseMatrix(a.rows() * nr, a.cols() * nr);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& c = a.coef.at(i, j);
      if (c.is_zero()) continue;
      for (int p = 0; p < nr; ++p) g.coef.at(i * nr + p, j * nr + p) = c;
    }
  return g;
}

// Hom(a, N) : precomposition with a, so the scalar blocks transpose
GradedMatrix hom_map(const GradedMatrix& a, const PresentedModule& n) {
  const GradedMatrix& an = n.matrix();
  int nr = an.rows();
  GradedMatrix g;
  for (long bb : a.col_twists)
    for (long x : an.row_twists) g.row_twists.push_back(x - bb);
  for (long bb : a.row_twists)
    for (long x : an.row_twists) g.col_twists.push_back(x - bb);
  g.coef = DenseMatrix(a.cols() * nr, a.rows() * nr);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& c = a.coef.at(i, j);
      if (c.is_zero()) continue;
      for (int p = 0; p < nr; ++p) g.coef.at(j * nr + p, i * nr + p) = c;
    }
  return g;
}

int slice_rank_two(const NumericalSemigroup& s, int ncoords, const GradedMatrix& first,
                   const GradedMatrix& second, long d, int* first_rank) {
  Echelon e(ncoords);
  for (int j = 0; j < first.cols(); ++j)
    if (s.contains(d - first.col_twists[static_cast<size_t>(j)])) e.add(first.coef.col(j));
  if (first_rank) *first_rank = e.rank();
  for (int j = 0; j < second.cols(); ++j)
    if (s.contains(d - second.col_twists[static_cast<size_t>(j)])) e.add(second.coef.col(j));
  return e.rank();
}

// homology dimensions of P --f--> Q --g--> T, certified torsion: the module is
// a submodule of coker(f), whose torsion support ends at the returned bound
FiniteLengthTable middle_homology(const NumericalSemigroup& s, const Term& p, const GradedMatrix& f,
                                  const Term& q, const GradedMatrix& g, const Term& t,
                                  long window_base) {
  FiniteLengthTable out;
  if (q.tw.empty()) return out;
  long lo = *std::min_element(q.tw.begin(), q.tw.end());
  long hi = *std::max_element(q.tw.begin(), q.tw.end());
  for (long c : q.rel.col_twists) hi = std::max(hi, c);
  for (long c : p.tw) hi = std::max(hi, c);
  hi += std::max<long>(s.frobenius(), 0);
  long a1 = s.multiplicity();
  check_window_span(hi + a1, window_base);
  out.lo = lo;
  for (long d = lo; d <= hi + a1; ++d) {
    long act = static_cast<long>(active_coords(s, q.tw, d).size());
    int rank_wt = 0;
    int rank_g_wt = slice_rank_two(s, static_cast<int>(t.tw.size()), t.rel, g, d, &rank_wt);
    int rank_f_wq = slice_rank_two(s, static_cast<int>(q.tw.size()), q.rel, f, d, nullptr);
    long h = act + rank_wt - rank_g_wt - rank_f_wq;
    if (h < 0) fail(Errc::Computation, "negative homology dimension");
    if (d > hi && h != 0)
      fail(Errc::SupportTouchesBoundary,
           "homology support reaches past its certified window at degree " + std::to_string(d));
    if (d <= hi) out.dims.push_back(h);
  }
  while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
  while (!out.dims.empty() && out.dims.front() == 0) {
    out.dims.erase(out.dims.begin());
    ++out.lo;
  }
  for (long v : out.dims) out.total += v;
  return out;
}

std::vector<long> free_twists(const Resolution& res, int j) {
  if (j == 0) return res.diff[0].row_twists;
  return res.diff[static_cast<size_t>(j - 1)].col_twists;
}

}  // namespace

FiniteLengthTable tor_table(int i, const PresentedModule& m, const PresentedModule& n) {
  if (i < 1) fail(Errc::Computation, "tor table needs homological degree at least 1");
  if (!(*m.semigroup() == *n.semigroup()))
    fail(Errc::SemigroupMismatch, "tor needs one common semigroup");
  const auto& s = *m.semigroup();
  if (m.is_zero() || n.is_zero()) return {};
  Resolution res = resolve(m, i + 1);
  Term p = tensor_term(free_twists(res, i + 1), n);
  Term q = tensor_term(free_twists(res, i), n);
  Term t = tensor_term(free_twists(res, i - 1), n);
  GradedMatrix f = tensor_map(res.diff[static_cast<size_t>(i)], n);
  GradedMatrix g = tensor_map(res.diff[static_cast<size_t>(i - 1)], n);
  long base = std::max(m.max_twist(), n.max_twist());
  return middle_homology(s, p, f, q, g, t, base);
}

FiniteLengthTable ext_table(int i, const PresentedModule& m, const PresentedModule& n) {
  if (i < 1) fail(Errc::Computation, "ext table needs cohomological degree at least 1");
  if (!(*m.semigroup() == *n.semigroup()))
    fail(Errc::SemigroupMismatch, "ext needs one common semigroup");
  const auto& s = *m.semigroup();
  if (m.is_zero() || n.is_zero()) return {};
  Resolution res = resolve(m, i + 1);
  Term p = hom_term(free_twists(res, i - 1), n);
  Term q = hom_term(free_twists(res, i), n);
  Term t = hom_term(free_twists(res, i + 1), n);
  GradedMatrix f = hom_map(res.diff[static_cast<size_t>(i - 1)], n);
  GradedMatrix g = hom_map(res.diff[static_cast<size_t>(i)], n);
  long base = std::max(m.max_twist(), n.max_twist());
  return middle_homology(s, p, f, q, g, t, base);
}

PresentedModule hom_module(const PresentedModule& m, const PresentedModule& n) {
  if (!(*m.semigroup() == *n.semigroup()))
    fail(Errc::SemigroupMismatch, "hom needs one common semigroup");
  SgpPtr sp = m.semigroup();
  const auto& s = *sp;
  if (m.is_zero() || n.is_zero()) return PresentedModule::zero(sp);
  const GradedMatrix& am = m.matrix();
  const GradedMatrix& an = n.matrix();
  int rm = am.rows(), rn = an.rows();
  // ambient: one copy of N per generator of M, coordinate (i, p) at twist x_p - w_i
  Term amb = hom_term(am.row_twists, n);
  int nco = static_cast<int>(amb.tw.size());

  long minw = *std::min_element(am.row_twists.begin(), am.row_twists.end());
  long minx = *std::min_element(an.row_twists.begin(), an.row_twists.end());
  long lo = minx - *std::max_element(am.row_twists.begin(), am.row_twists.end());
  long gen_hi = n.stable_degree() - minw + s.multiplicity();

  // a degree-d homomorphism assigns y_i in N_(d + w_i) to each generator of M
  // and must send every relation column to zero in N
  auto maps_at = [&](long d) {
    std::vector<Vec> out;
    std::vector<int> act;  // ambient coordinates (i, p) alive at degree d
    for (int i = 0; i < nco; ++i)
      if (s.contains(d - amb.tw[static_cast<size_t>(i)])) act.push_back(i);
    if (act.empty()) return out;
    // slack variables: active relation columns of N at degree d + ctw_j per relation j
    std::vector<std::pair<int, int>> slack;  // (relation j of M, column q of N)
    for (int j = 0; j < am.cols(); ++j) {
      long e = d + am.col_twists[static_cast<size_t>(j)];
      for (int q = 0; q < an.cols(); ++q)
        if (s.contains(e - an.col_twists[static_cast<size_t>(q)])) slack.emplace_back(j, q);
    }
    DenseMatrix sys(am.cols() * rn, static_cast<int>(act.size() + slack.size()));
    for (int c = 0; c < static_cast<int>(act.size()); ++c) {
      int co = act[static_cast<size_t>(c)];
      int gi = co / rn, p = co % rn;
      for (int j = 0; j < am.cols(); ++j) {
        const Scalar& aij = am.coef.at(gi, j);
        if (!aij.is_zero()) sys.at(j * rn + p, c) = aij;
      }
    }
    for (int c = 0; c < static_cast<int>(slack.size()); ++c) {
      auto [j, q] = slack[static_cast<size_t>(c)];
      for (int p = 0; p < rn; ++p)
        sys.at(j * rn + p, static_cast<int>(act.size()) + c) = -an.coef.at(p, q);
    }
    for (const Vec& lam : kernel_basis(sys)) {
      Vec y(static_cast<size_t>(nco), Scalar::zero());
      bool nz = false;
      for (int c = 0; c < static_cast<int>(act.size()); ++c) {
        y[static_cast<size_t>(act[static_cast<size_t>(c)])] = lam[static_cast<size_t>(c)];
        if (!lam[static_cast<size_t>(c)].is_zero()) nz = true;
      }
      if (nz) out.push_back(std::move(y));
    }
    return out;
  };

  Ambient w;
  w.s = sp;
  w.ncoords = nco;
  w.relations_at = [&s, amb](long d) {
    std::vector<Vec> rel;
    for (int j = 0; j < amb.rel.cols(); ++j)
      if (s.contains(d - amb.rel.col_twists[static_cast<size_t>(j)]))
        rel.push_back(amb.rel.coef.col(j));
    return rel;
  };
  w.torsion_stable = n.stable_degree() - minw;
  w.window_base = std::max(m.max_twist(), n.max_twist());
  return extract_submodule(w, maps_at, lo, gen_hi);
}

PresentedModule canonical_module(SgpPtr s) {
  return PresentedModule::from_relative_ideal(canonical_ideal(std::move(s)));
}

PresentedModule canonical_dual(const PresentedModule& m) {
  return hom_module(m, canonical_module(m.semigroup()));
}

std::vector<DualityRow> check_duality(const PresentedModule& m, const PresentedModule& n, int imax) {
  std::vector<DualityRow> rows;
  PresentedModule ndual = canonical_dual(n);
  std::vector<long> ext_lengths;  // ext_lengths[k] = total length of Ext^(k+1)(M, N)
  for (int k = 1; k <= imax + 1; ++k) ext_lengths.push_back(ext_table(k, m, n).total);
  for (int i = 0; i <= imax; ++i) {
    DualityRow row;
    row.i = i;
    row.gate_ok = true;
    for (int k = 1; k <= i + 1; ++k)
      if (ext_lengths[static_cast<size_t>(k - 1)] != 0) row.gate_ok = false;
    if (!row.gate_ok) {
      rows.push_back(row);
      continue;
    }
    if (i == 0) {
      PresentedModule lhs = tensor(m, ndual);
      PresentedModule rhs = canonical_dual(hom_module(m, n));
      long lo = std::min(lhs.min_gen_twist(), rhs.min_gen_twist());
      long hi = std::max(lhs.stable_degree(), rhs.stable_degree());
      row.equal = true;
      row.lhs = row.rhs = 0;
      for (long d = lo; d <= hi; ++d) {
        long a = lhs.hilbert(d), b = rhs.hilbert(d);
        row.lhs += a;
        row.rhs += b;
        if (a != b) row.equal = false;
      }
      if (lhs.rank() != rhs.rank()) row.equal = false;
    } else {
      row.lhs = tor_table(i, m, ndual).total;
      row.rhs = ext_lengths[static_cast<size_t>(i - 1)];
      row.equal = row.lhs == row.rhs;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ulab
