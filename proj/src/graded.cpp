#include "ulrichlab/graded.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ulrichlab/error.hpp"

namespace ulab {

namespace {
std::optional<long> g_margin;
}

std::optional<long> window_margin() { return g_margin; }
void set_window_margin(std::optional<long> m) { g_margin = m; }

void check_window_span(long needed_hi, long base) {
  if (g_margin && needed_hi > base + *g_margin) {
    fail(Errc::WindowUnstable,
         "certified scan needs degrees up to " + std::to_string(needed_hi) +
             " but the window cap ends at " + std::to_string(base + *g_margin));
  }
}

void validate_graded(const NumericalSemigroup& s, const GradedMatrix& a) {
  if (a.coef.rows != a.rows() || a.coef.cols != a.cols())
    fail(Errc::Computation, "graded matrix shape mismatch");
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a.coef.at(i, j).is_zero()) continue;
      long deg = a.col_twists[static_cast<size_t>(j)] - a.row_twists[static_cast<size_t>(i)];
      if (!s.contains(deg))
        fail(Errc::Computation, "graded matrix entry of impossible degree " + std::to_string(deg));
    }
  }
}

std::vector<int> active_coords(const NumericalSemigroup& s, const std::vector<long>& twists, long d) {
  std::vector<int> act;
  for (int i = 0; i < static_cast<int>(twists.size()); ++i) {
    if (s.contains(d - twists[static_cast<size_t>(i)])) act.push_back(i);
  }
  return act;
}

Echelon column_space(const NumericalSemigroup& s, const GradedMatrix& a, long d) {
  Echelon e(a.rows());
  for (int j = 0; j < a.cols(); ++j) {
    if (s.contains(d - a.col_twists[static_cast<size_t>(j)])) e.add(a.coef.col(j));
  }
  return e;
}

namespace {

// column operations with monomial multipliers cancel a unit entry (i, j) and
// delete generator i together with relation j; legality of each multiplier is
// forced by the grading, see the inline degree bookkeeping
GradedMatrix prune_unit_entries(const NumericalSemigroup& s, GradedMatrix a) {
  for (;;) {
    int ui = -1, uj = -1;
    for (int i = 0; i < a.rows() && ui < 0; ++i) {
      for (int j = 0; j < a.cols(); ++j) {
        if (!a.coef.at(i, j).is_zero() &&
            a.col_twists[static_cast<size_t>(j)] == a.row_twists[static_cast<size_t>(i)]) {
          ui = i;
          uj = j;
          break;
        }
      }
    }
    if (ui < 0) return a;
    Scalar u = a.coef.at(ui, uj);
    // clear the rest of row ui: col j' -= (entry / u) * t^(ctw_j' - ctw_j) * col j,
    // and the exponent equals the degree of entry (ui, j'), so it lies in S
    for (int j = 0; j < a.cols(); ++j) {
      if (j == uj) continue;
      Scalar c = a.coef.at(ui, j);
      if (c.is_zero()) continue;
      Scalar lam = c / u;
      for (int i = 0; i < a.rows(); ++i)
        a.coef.at(i, j) = a.coef.at(i, j) - lam * a.coef.at(i, uj);
    }
    GradedMatrix out;
    out.row_twists.reserve(a.row_twists.size() - 1);
    out.col_twists.reserve(a.col_twists.size() - 1);
    for (int i = 0; i < a.rows(); ++i)
      if (i != ui) out.row_twists.push_back(a.row_twists[static_cast<size_t>(i)]);
    for (int j = 0; j < a.cols(); ++j)
      if (j != uj) out.col_twists.push_back(a.col_twists[static_cast<size_t>(j)]);
    out.coef = DenseMatrix(a.rows() - 1, a.cols() - 1);
    for (int i = 0, io = 0; i < a.rows(); ++i) {
      if (i == ui) continue;
      for (int j = 0, jo = 0; j < a.cols(); ++j) {
        if (j == uj) continue;
        out.coef.at(io, jo) = a.coef.at(i, j);
        ++jo;
      }
      ++io;
    }
    a = std::move(out);
    (void)s;
  }
}

// keep only columns that minimally generate the relation module; a column of
// twist d is redundant exactly when it lies in the span of all columns with
// twist strictly below d in the S-order
GradedMatrix minimalize_columns(const NumericalSemigroup& s, const GradedMatrix& a) {
  std::vector<long> degs = a.col_twists;
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  std::vector<int> kept;
  for (long d : degs) {
    Echelon e(a.rows());
    for (int j = 0; j < a.cols(); ++j) {
      long diff = d - a.col_twists[static_cast<size_t>(j)];
      if (diff != 0 && s.contains(diff)) e.add(a.coef.col(j));
    }
    for (int j = 0; j < a.cols(); ++j) {
      if (a.col_twists[static_cast<size_t>(j)] == d && e.add(a.coef.col(j))) kept.push_back(j);
    }
  }
  std::sort(kept.begin(), kept.end());
  GradedMatrix out;
  out.row_twists = a.row_twists;
  out.coef = DenseMatrix(a.rows(), static_cast<int>(kept.size()));
  for (int jo = 0; jo < static_cast<int>(kept.size()); ++jo) {
    out.col_twists.push_back(a.col_twists[static_cast<size_t>(kept[static_cast<size_t>(jo)])]);
    for (int i = 0; i < a.rows(); ++i) out.coef.at(i, jo) = a.coef.at(i, kept[static_cast<size_t>(jo)]);
  }
  // stable sort columns by twist for a deterministic presentation
  std::vector<int> order(out.col_twists.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return out.col_twists[static_cast<size_t>(x)] < out.col_twists[static_cast<size_t>(y)];
  });
  GradedMatrix sorted;
  sorted.row_twists = out.row_twists;
  sorted.coef = DenseMatrix(out.rows(), out.cols());
  for (int jo = 0; jo < out.cols(); ++jo) {
    int j = order[static_cast<size_t>(jo)];
    sorted.col_twists.push_back(out.col_twists[static_cast<size_t>(j)]);
    for (int i = 0; i < out.rows(); ++i) sorted.coef.at(i, jo) = out.coef.at(i, j);
  }
  return sorted;
}

}  // namespace

PresentedModule PresentedModule::from_matrix(SgpPtr s, GradedMatrix a) {
  if (!s) fail(Errc::EmptyInput, "module needs a semigroup");
  validate_graded(*s, a);
  if (a.rows() == 0) return zero(std::move(s));
  a = prune_unit_entries(*s, std::move(a));
  if (a.rows() == 0) return zero(std::move(s));
  a = minimalize_columns(*s, a);
  PresentedModule m;
  m.sgp_ = std::move(s);
  m.a_ = std::move(a);
  return m;
}

PresentedModule PresentedModule::zero(SgpPtr s) {
  PresentedModule m;
  m.sgp_ = std::move(s);
  m.a_.coef = DenseMatrix(0, 0);
  return m;
}

PresentedModule PresentedModule::free_module(SgpPtr s, std::vector<long> twists) {
  GradedMatrix a;
  a.row_twists = std::move(twists);
  a.coef = DenseMatrix(static_cast<int>(a.row_twists.size()), 0);
  return from_matrix(std::move(s), std::move(a));
}

PresentedModule PresentedModule::from_relative_ideal(const RelativeIdeal& e) {
  // generators t^v for the minimal generators v of E; their syzygies live in
  // the one-dimensional graded pieces of the fraction field, so the ambient is
  // a single always-active coordinate with no relations and no torsion
  ChosenGens g;
  g.degs = e.gens();
  g.vecs.assign(g.degs.size(), Vec{Scalar::one()});
  Ambient w;
  w.s = e.semigroup();
  w.ncoords = 1;
  w.torsion_stable = e.min();
  w.window_base = e.max_gen();
  GradedMatrix a = syzygies_of(w, g);
  return from_matrix(e.semigroup(), std::move(a));
}

PresentedModule PresentedModule::quotient_ring(const RelativeIdeal& i) {
  if (!i.inside_ring()) fail(Errc::NotContained, "R/I needs an ideal inside the ring");
  GradedMatrix a;
  a.row_twists = {0};
  a.col_twists = i.gens();
  a.coef = DenseMatrix(1, static_cast<int>(i.gens().size()));
  for (int j = 0; j < a.coef.cols; ++j) a.coef.at(0, j) = Scalar::one();
  return from_matrix(i.semigroup(), std::move(a));
}

long PresentedModule::max_twist() const {
  long m = 0;
  for (long t : a_.row_twists) m = std::max(m, t);
  for (long t : a_.col_twists) m = std::max(m, t);
  return m;
}

long PresentedModule::min_gen_twist() const {
  long m = 0;
  bool first = true;
  for (long t : a_.row_twists) {
    if (first || t < m) m = t;
    first = false;
  }
  return m;
}

long PresentedModule::stable_degree() const {
  return max_twist() + std::max<long>(sgp_->frobenius(), 0) + 1;
}

long PresentedModule::hilbert(long d) const {
  if (is_zero()) return 0;
  long act = static_cast<long>(active_coords(*sgp_, a_.row_twists, d).size());
  Echelon cs = column_space(*sgp_, a_, d);
  return act - cs.rank();
}

long PresentedModule::rank() const {
  if (is_zero()) return 0;
  check_window_span(stable_degree(), max_twist());
  DenseMatrix full = a_.coef;
  return a_.rows() - ulab::rank(full);
}

long PresentedModule::torsion_length() const {
  if (is_zero()) return 0;
  long stable = stable_degree();
  long a1 = sgp_->multiplicity();
  check_window_span(stable + a1 - 1, max_twist());
  // torsion in degree d is the kernel of multiplication into any degree at or
  // past stabilization, where the column space is the span of all columns
  Echelon full(a_.rows());
  for (int j = 0; j < a_.cols(); ++j) full.add(a_.coef.col(j));
  long total = 0;
  for (long d = min_gen_twist(); d < stable; ++d) {
    auto act = active_coords(*sgp_, a_.row_twists, d);
    Echelon joint = full;
    for (int i : act) {
      Vec unit(static_cast<size_t>(a_.rows()), Scalar::zero());
      unit[static_cast<size_t>(i)] = Scalar::one();
      joint.add(std::move(unit));
    }
    long inter = static_cast<long>(act.size()) + full.rank() - joint.rank();
    total += inter - column_space(*sgp_, a_, d).rank();
  }
  return total;
}

long PresentedModule::length() const {
  if (is_zero()) return 0;
  if (rank() != 0) fail(Errc::Computation, "module has infinite length");
  long total = 0;
  for (long d = min_gen_twist(); d < stable_degree(); ++d) total += hilbert(d);
  return total;
}

ModuleFacts PresentedModule::facts() const {
  ModuleFacts f;
  if (is_zero()) {
    f.is_zero = true;
    f.length = 0;
    return f;
  }
  long a1 = sgp_->multiplicity();
  long stable = stable_degree();
  check_window_span(stable + a1, max_twist());
  f.mu = mu();
  f.beta1 = beta1();
  f.rank = rank();
  // stability recheck: the rank must also be the slice dimension at the first
  // stable degree and one multiplicity step later
  if (hilbert(stable) != f.rank || hilbert(stable + a1) != f.rank)
    fail(Errc::WindowUnstable, "module rank failed the shifted-window recheck");
  f.torsion_length = torsion_length();
  f.length = f.rank == 0 ? length() : -1;
  f.e_mult = f.rank > 0 ? f.rank * a1 : f.length;
  f.dim = f.rank > 0 ? 1 : 0;
  f.depth = f.torsion_length == 0 ? 1 : 0;
  if (f.rank == 0 && f.length > 0) f.depth = 0;  // a nonzero finite-length module
  f.is_free = beta1() == 0;
  if (f.is_free && f.mu != f.rank)
    fail(Errc::Computation, "free module with rank different from mu");
  f.is_cm = (f.dim == 1 && f.torsion_length == 0) || f.dim == 0;
  f.is_mcm = f.dim == 1 && f.torsion_length == 0;
  return f;
}

std::string PresentedModule::str() const {
  std::ostringstream os;
  os << "module over " << sgp_->str() << " gens[";
  for (size_t i = 0; i < a_.row_twists.size(); ++i) {
    if (i) os << ",";
    os << a_.row_twists[i];
  }
  os << "] rels[";
  for (size_t j = 0; j < a_.col_twists.size(); ++j) {
    if (j) os << ",";
    os << a_.col_twists[j];
  }
  os << "]";
  return os.str();
}

PresentedModule shift_module(const PresentedModule& m, long c) {
  GradedMatrix a = m.matrix();
  for (long& t : a.row_twists) t += c;
  for (long& t : a.col_twists) t += c;
  return PresentedModule::from_matrix(m.semigroup(), std::move(a));
}

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n) {
  if (!(*m.semigroup() == *n.semigroup()))
    fail(Errc::SemigroupMismatch, "direct sum needs one common semigroup");
  const GradedMatrix& am = m.matrix();
  const GradedMatrix& an = n.matrix();
  GradedMatrix a;
  a.row_twists = am.row_twists;
  a.row_twists.insert(a.row_twists.end(), an.row_twists.begin(), an.row_twists.end());
  a.col_twists = am.col_twists;
  a.col_twists.insert(a.col_twists.end(), an.col_twists.begin(), an.col_twists.end());
  a.coef = DenseMatrix(a.rows(), a.cols());
  for (int i = 0; i < am.rows(); ++i)
    for (int j = 0; j < am.cols(); ++j) a.coef.at(i, j) = am.coef.at(i, j);
  for (int i = 0; i < an.rows(); ++i)
    for (int j = 0; j < an.cols(); ++j) a.coef.at(am.rows() + i, am.cols() + j) = an.coef.at(i, j);
  return PresentedModule::from_matrix(m.semigroup(), std::move(a));
}

PresentedModule tensor(const PresentedModule& m, const PresentedModule& n) {
  if (!(*m.semigroup() == *n.semigroup()))
    fail(Errc::SemigroupMismatch, "tensor needs one common semigroup");
  const GradedMatrix& am = m.matrix();
  const GradedMatrix& an = n.matrix();
  int rm = am.rows(), rn = an.rows();
  GradedMatrix a;
  for (int i = 0; i < rm; ++i)
    for (int p = 0; p < rn; ++p)
      a.row_twists.push_back(am.row_twists[static_cast<size_t>(i)] +
                             an.row_twists[static_cast<size_t>(p)]);
  // relations of M against every generator of N, then symmetrically
  for (int j = 0; j < am.cols(); ++j)
    for (int p = 0; p < rn; ++p)
      a.col_twists.push_back(am.col_twists[static_cast<size_t>(j)] +
                             an.row_twists[static_cast<size_t>(p)]);
  for (int i = 0; i < rm; ++i)
    for (int q = 0; q < an.cols(); ++q)
      a.col_twists.push_back(am.row_twists[static_cast<size_t>(i)] +
                             an.col_twists[static_cast<size_t>(q)]);
  a.coef = DenseMatrix(rm * rn, static_cast<int>(a.col_twists.size()));
  int colbase = 0;
  for (int j = 0; j < am.cols(); ++j)
    for (int p = 0; p < rn; ++p, ++colbase)
      for (int i = 0; i < rm; ++i) a.coef.at(i * rn + p, colbase) = am.coef.at(i, j);
  for (int i = 0; i < rm; ++i)
    for (int q = 0; q < an.cols(); ++q, ++colbase)
      for (int p = 0; p < rn; ++p) a.coef.at(i * rn + p, colbase) = an.coef.at(p, q);
  return PresentedModule::from_matrix(m.semigroup(), std::move(a));
}

PresentedModule transpose_module(const PresentedModule& m) {
  const GradedMatrix& am = m.matrix();
  GradedMatrix a;
  a.row_twists.reserve(am.col_twists.size());
  for (long t : am.col_twists) a.row_twists.push_back(-t);
  a.col_twists.reserve(am.row_twists.size());
  for (long t : am.row_twists) a.col_twists.push_back(-t);
  a.coef = DenseMatrix(am.cols(), am.rows());
  for (int i = 0; i < am.rows(); ++i)
    for (int j = 0; j < am.cols(); ++j) a.coef.at(j, i) = am.coef.at(i, j);
  return PresentedModule::from_matrix(m.semigroup(), std::move(a));
}

PresentedModule mod_torsion(const PresentedModule& m) {
  if (m.is_zero() || m.beta1() == 0) return m;
  const auto& s = *m.semigroup();
  const GradedMatrix& am = m.matrix();
  int n = am.rows();
  long fr = s.frobenius();
  long lo = m.min_gen_twist();
  long maxrow = *std::max_element(am.row_twists.begin(), am.row_twists.end());
  long hi = maxrow + fr + s.multiplicity();
  check_window_span(hi, m.max_twist());

  // coordinate vectors whose class is torsion: combinations of all relation
  // columns that are supported on the coordinates active at degree d
  auto torsion_at = [&](long d) {
    std::vector<Vec> out;
    auto act = active_coords(s, am.row_twists, d);
    std::vector<bool> is_act(static_cast<size_t>(n), false);
    for (int i : act) is_act[static_cast<size_t>(i)] = true;
    std::vector<int> inact;
    for (int i = 0; i < n; ++i)
      if (!is_act[static_cast<size_t>(i)]) inact.push_back(i);
    DenseMatrix restr(static_cast<int>(inact.size()), am.cols());
    for (int r = 0; r < static_cast<int>(inact.size()); ++r)
      for (int j = 0; j < am.cols(); ++j)
        restr.at(r, j) = am.coef.at(inact[static_cast<size_t>(r)], j);
    for (const Vec& lam : kernel_basis(restr)) {
      Vec x(static_cast<size_t>(n), Scalar::zero());
      bool nz = false;
      for (int i = 0; i < n; ++i) {
        Scalar acc = Scalar::zero();
        for (int j = 0; j < am.cols(); ++j)
          acc = acc + am.coef.at(i, j) * lam[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = acc;
        if (!acc.is_zero()) nz = true;
      }
      if (nz) out.push_back(std::move(x));
    }
    return out;
  };

  Ambient w;
  w.s = m.semigroup();
  w.ncoords = n;
  w.window_base = m.max_twist();
  ChosenGens gens = minimal_generators(w, torsion_at, lo, hi);
  GradedMatrix a;
  a.row_twists = am.row_twists;
  a.col_twists = gens.degs;
  a.coef = DenseMatrix(n, static_cast<int>(gens.degs.size()));
  for (int j = 0; j < a.coef.cols; ++j)
    for (int i = 0; i < n; ++i) a.coef.at(i, j) = gens.vecs[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return PresentedModule::from_matrix(m.semigroup(), std::move(a));
}

PresentedModule quotient_mod_ideal(const PresentedModule& m, const RelativeIdeal& i) {
  if (!(*m.semigroup() == *i.semigroup()))
    fail(Errc::SemigroupMismatch, "M/IM needs one common semigroup");
  if (!i.inside_ring()) fail(Errc::NotContained, "M/IM needs an ideal inside the ring");
  const GradedMatrix& am = m.matrix();
  GradedMatrix a;
  a.row_twists = am.row_twists;
  a.col_twists = am.col_twists;
  for (int r = 0; r < am.rows(); ++r)
    for (long g : i.gens()) a.col_twists.push_back(am.row_twists[static_cast<size_t>(r)] + g);
  a.coef = DenseMatrix(am.rows(), static_cast<int>(a.col_twists.size()));
  for (int r = 0; r < am.rows(); ++r)
    for (int j = 0; j < am.cols(); ++j) a.coef.at(r, j) = am.coef.at(r, j);
  int jo = am.cols();
  for (int r = 0; r < am.rows(); ++r)
    for (size_t g = 0; g < i.gens().size(); ++g, ++jo) a.coef.at(r, jo) = Scalar::one();
  return PresentedModule::from_matrix(m.semigroup(), std::move(a));
}

Resolution resolve(const PresentedModule& m, int steps) {
  Resolution res;
  res.diff.push_back(m.matrix());
  res.betti.push_back(m.mu());
  for (int k = 1; k <= steps; ++k) {
    const GradedMatrix& prev = res.diff.back();
    res.betti.push_back(prev.cols());
    if (k == steps) break;
    ChosenGens g;
    g.degs = prev.col_twists;
    for (int j = 0; j < prev.cols(); ++j) g.vecs.push_back(prev.coef.col(j));
    Ambient w;
    w.s = m.semigroup();
    w.ncoords = prev.rows();
    long base = 0;
    for (long t : prev.row_twists) base = std::max(base, t);
    for (long t : prev.col_twists) base = std::max(base, t);
    w.torsion_stable = g.degs.empty() ? 0 : *std::min_element(g.degs.begin(), g.degs.end());
    w.window_base = base;
    res.diff.push_back(syzygies_of(w, g));
  }
  return res;
}

PresentedModule syzygy_module(const PresentedModule& m, int i) {
  if (i <= 0) return m;
  Resolution res = resolve(m, i + 1);
  return PresentedModule::from_matrix(m.semigroup(), res.diff[static_cast<size_t>(i)]);
}

ChosenGens minimal_generators(const Ambient& w,
                              const std::function<std::vector<Vec>(long)>& spans_at,
                              long lo, long hi) {
  check_window_span(hi, w.window_base);
  std::map<long, std::vector<Vec>> memo;
  auto spans = [&](long d) -> const std::vector<Vec>& {
    auto it = memo.find(d);
    if (it == memo.end()) it = memo.emplace(d, spans_at(d)).first;
    return it->second;
  };
  ChosenGens out;
  for (long d = lo; d <= hi; ++d) {
    Echelon e(w.ncoords);
    bool seeded = false;
    auto seed = [&]() {
      if (seeded) return;
      seeded = true;
      if (w.relations_at)
        for (const Vec& v : w.relations_at(d)) e.add(v);
      for (long a : w.s->generators())
        for (const Vec& v : spans(d - a)) e.add(v);
    };
    const std::vector<Vec>& here = spans(d);
    for (const Vec& v : here) {
      seed();
      if (e.add(v)) {
        out.degs.push_back(d);
        out.vecs.push_back(v);
      }
    }
  }
  return out;
}

GradedMatrix syzygies_of(const Ambient& w, const ChosenGens& g) {
  GradedMatrix out;
  out.row_twists = g.degs;
  int k = static_cast<int>(g.degs.size());
  out.coef = DenseMatrix(k, 0);
  if (k == 0) return out;
  const auto& s = *w.s;
  long lo = *std::min_element(g.degs.begin(), g.degs.end());
  long maxdeg = *std::max_element(g.degs.begin(), g.degs.end());
  long hi = std::max(maxdeg + s.frobenius(), w.torsion_stable - 1) + s.multiplicity();
  check_window_span(hi, w.window_base);

  // kernel slices: coefficient vectors c supported on the generators active at
  // degree d with sum c_k u_k falling into the ambient relations
  auto syz_at = [&](long d) {
    std::vector<Vec> out_v;
    std::vector<int> act;
    for (int j = 0; j < k; ++j)
      if (s.contains(d - g.degs[static_cast<size_t>(j)])) act.push_back(j);
    if (act.empty()) return out_v;
    std::vector<Vec> rel;
    if (w.relations_at) rel = w.relations_at(d);
    DenseMatrix b(w.ncoords, static_cast<int>(act.size() + rel.size()));
    for (int c = 0; c < static_cast<int>(act.size()); ++c)
      for (int i = 0; i < w.ncoords; ++i)
        b.at(i, c) = g.vecs[static_cast<size_t>(act[static_cast<size_t>(c)])][static_cast<size_t>(i)];
    for (int c = 0; c < static_cast<int>(rel.size()); ++c)
      for (int i = 0; i < w.ncoords; ++i)
        b.at(i, static_cast<int>(act.size()) + c) = rel[static_cast<size_t>(c)][static_cast<size_t>(i)];
    for (const Vec& lam : kernel_basis(b)) {
      Vec c(static_cast<size_t>(k), Scalar::zero());
      bool nz = false;
      for (int j = 0; j < static_cast<int>(act.size()); ++j) {
        c[static_cast<size_t>(act[static_cast<size_t>(j)])] = lam[static_cast<size_t>(j)];
        if (!lam[static_cast<size_t>(j)].is_zero()) nz = true;
      }
      if (nz) out_v.push_back(std::move(c));
    }
    return out_v;
  };

  Ambient free_amb;
  free_amb.s = w.s;
  free_amb.ncoords = k;
  free_amb.torsion_stable = lo;
  free_amb.window_base = w.window_base;
  ChosenGens syz = minimal_generators(free_amb, syz_at, lo, hi);
  out.col_twists = syz.degs;
  out.coef = DenseMatrix(k, static_cast<int>(syz.degs.size()));
  for (int j = 0; j < out.coef.cols; ++j)
    for (int i = 0; i < k; ++i)
      out.coef.at(i, j) = syz.vecs[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return out;
}

PresentedModule extract_submodule(const Ambient& w,
                                  const std::function<std::vector<Vec>(long)>& spans_at,
                                  long lo, long hi) {
  ChosenGens gens = minimal_generators(w, spans_at, lo, hi);
  GradedMatrix a = syzygies_of(w, gens);
  return PresentedModule::from_matrix(w.s, std::move(a));
}

}  // namespace ulab
