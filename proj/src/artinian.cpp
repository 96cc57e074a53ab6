#include "ulrichlab/artinian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "ulrichlab/error.hpp"

namespace ulab {

namespace {

constexpr long kBasisCap = 1000000;

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int total_degree(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) fail(Errc::Computation, "matmul shape mismatch");
  DenseMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return c;
}

bool matrix_is_zero(const DenseMatrix& m) {
  for (const auto& x : m.a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

int MonomialArtinAlgebra::basis_index(const std::vector<int>& mono) const {
  for (const auto& r : relations)
    if (divides(r, mono)) return -1;
  auto cmp = [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  };
  auto it = std::lower_bound(basis.begin(), basis.end(), mono, cmp);
  if (it == basis.end() || *it != mono)
    fail(Errc::Computation, "standard monomial missing from basis");
  return static_cast<int>(it - basis.begin());
}

ArtinPtr build_algebra(int nvars, std::vector<std::vector<int>> relations) {
  if (nvars < 1 || nvars > 6)
    fail(Errc::EmptyInput, "need between 1 and 6 variables");
  if (relations.empty())
    fail(Errc::NotArtinian, "a polynomial ring has infinite length");
  for (const auto& r : relations) {
    if (static_cast<int>(r.size()) != nvars)
      fail(Errc::Computation, "relation exponent vector has wrong arity");
    bool all_zero = true;
    for (int e : r) {
      if (e < 0) fail(Errc::Computation, "negative exponent in relation");
      if (e > 0) all_zero = false;
    }
    if (all_zero) fail(Errc::Computation, "the unit monomial collapses the ring");
  }

  // Artinian test for monomial ideals: every variable carries a pure power.
  for (int v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& r : relations) {
      bool pure = r[v] > 0;
      for (int w = 0; w < nvars && pure; ++w)
        if (w != v && r[w] > 0) pure = false;
      if (pure) { found = true; break; }
    }
    if (!found)
      fail(Errc::NotArtinian,
           "variable " + std::string(1, var_letter(v)) +
               " has no pure power among the relations");
  }

  // keep only minimal generators
  std::vector<std::vector<int>> min_rel;
  for (size_t i = 0; i < relations.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < relations.size() && !redundant; ++j)
      if (j != i && divides(relations[j], relations[i]) &&
          !(relations[i] == relations[j] && j > i))
        redundant = true;
    if (!redundant) min_rel.push_back(relations[i]);
  }
  std::sort(min_rel.begin(), min_rel.end());
  min_rel.erase(std::unique(min_rel.begin(), min_rel.end()), min_rel.end());

  auto alg = std::make_shared<MonomialArtinAlgebra>();
  alg->nvars = nvars;
  alg->relations = std::move(min_rel);

  // breadth first walk over standard monomials starting at 1
  std::map<std::vector<int>, bool> seen;
  std::queue<std::vector<int>> work;
  std::vector<int> unit(nvars, 0);
  work.push(unit);
  seen[unit] = true;
  while (!work.empty()) {
    auto mono = work.front();
    work.pop();
    alg->basis.push_back(mono);
    if (static_cast<long>(alg->basis.size()) > kBasisCap)
      fail(Errc::NotArtinian, "standard monomial basis exceeds the size cap");
    for (int v = 0; v < nvars; ++v) {
      auto next = mono;
      next[v] += 1;
      if (seen.count(next)) continue;
      bool standard = true;
      for (const auto& r : alg->relations)
        if (divides(r, next)) { standard = false; break; }
      if (!standard) continue;
      seen[next] = true;
      work.push(next);
    }
  }
  std::sort(alg->basis.begin(), alg->basis.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int da = total_degree(a), db = total_degree(b);
              if (da != db) return da < db;
              return a < b;
            });
  return alg;
}

char var_letter(int i) {
  static const char letters[] = {'x', 'y', 'z', 'u', 'v', 'w'};
  if (i < 0 || i >= 6) fail(Errc::Computation, "variable index out of range");
  return letters[i];
}

std::string monomial_str(const std::vector<int>& e) {
  std::string out;
  for (size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    out += var_letter(static_cast<int>(v));
    if (e[v] > 1) out += std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

ArtinModule regular_module(const ArtinPtr& a) {
  ArtinModule m;
  m.alg = a;
  m.dim = static_cast<int>(a->basis.size());
  m.action.assign(a->nvars, DenseMatrix(m.dim, m.dim));
  for (int j = 0; j < m.dim; ++j)
    for (int v = 0; v < a->nvars; ++v) {
      auto next = a->basis[j];
      next[static_cast<size_t>(v)] += 1;
      int i = a->basis_index(next);
      if (i >= 0) m.action[v].at(i, j) = Scalar::one();
    }
  return m;
}

ArtinModule k_power(const ArtinPtr& a, int n) {
  if (n < 0) fail(Errc::Computation, "negative rank for a trivial module");
  ArtinModule m;
  m.alg = a;
  m.dim = n;
  m.action.assign(a->nvars, DenseMatrix(n, n));
  return m;
}

ArtinModule matlis_dual(const ArtinModule& m) {
  ArtinModule d;
  d.alg = m.alg;
  d.dim = m.dim;
  d.action.reserve(m.action.size());
  for (const auto& a : m.action) {
    DenseMatrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    d.action.push_back(std::move(t));
  }
  return d;
}

void validate_module(const ArtinModule& m) {
  if (!m.alg) fail(Errc::EmptyInput, "module has no algebra attached");
  int nv = m.alg->nvars;
  if (static_cast<int>(m.action.size()) != nv)
    fail(Errc::Computation, "one action matrix per variable is required");
  for (const auto& a : m.action)
    if (a.rows != m.dim || a.cols != m.dim)
      fail(Errc::Computation, "action matrix shape disagrees with the module");
  for (int v = 0; v < nv; ++v)
    for (int w = v + 1; w < nv; ++w) {
      DenseMatrix vw = matmul(m.action[v], m.action[w]);
      DenseMatrix wv = matmul(m.action[w], m.action[v]);
      for (size_t i = 0; i < vw.a.size(); ++i)
        if (vw.a[i] != wv.a[i])
          fail(Errc::Computation, "action matrices do not commute");
    }
  for (const auto& r : m.alg->relations) {
    DenseMatrix p(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i) p.at(i, i) = Scalar::one();
    for (int v = 0; v < nv; ++v)
      for (int e = 0; e < r[static_cast<size_t>(v)]; ++e)
        p = matmul(p, m.action[v]);
    if (!matrix_is_zero(p))
      fail(Errc::Computation,
           "defining relation " + monomial_str(r) + " does not annihilate");
  }
  // nilpotency of each action follows from the pure power relations once the
  // relations hold, so no separate check is needed
}

ArtinInvariants artin_invariants(const ArtinModule& m) {
  if (m.dim == 0) fail(Errc::ZeroModule, "invariants of the zero module");
  ArtinInvariants inv;
  inv.length = m.dim;

  Echelon image(m.dim);
  for (const auto& a : m.action)
    for (int j = 0; j < a.cols; ++j) image.add(a.col(j));
  inv.mu = m.dim - image.rank();

  DenseMatrix stacked(m.dim * static_cast<int>(m.action.size()), m.dim);
  for (size_t v = 0; v < m.action.size(); ++v)
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j)
        stacked.at(static_cast<int>(v) * m.dim + i, j) = m.action[v].at(i, j);
  inv.socle_dim = m.dim - rank(stacked);

  inv.c_min = Rat(inv.length, inv.mu);
  inv.is_ulrich = inv.length == inv.mu;
  return inv;
}

long radical_image_length(const ArtinModule& m) {
  Echelon image(m.dim == 0 ? 1 : m.dim);
  for (const auto& a : m.action)
    for (int j = 0; j < a.cols; ++j) image.add(a.col(j));
  return image.rank();
}

long algebra_edim(const MonomialArtinAlgebra& a) {
  long n = 0;
  for (const auto& mono : a.basis)
    if (total_degree(mono) == 1) ++n;
  return n;
}

SocleSummandResult socle_summand_test(const ArtinModule& m) {
  if (m.dim == 0) fail(Errc::ZeroModule, "socle of the zero module");
  SocleSummandResult res;
  DenseMatrix stacked(m.dim * static_cast<int>(m.action.size()), m.dim);
  for (size_t v = 0; v < m.action.size(); ++v)
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j)
        stacked.at(static_cast<int>(v) * m.dim + i, j) = m.action[v].at(i, j);
  Echelon image(m.dim);
  for (const auto& a : m.action)
    for (int j = 0; j < a.cols; ++j) image.add(a.col(j));
  for (auto& k : kernel_basis(stacked))
    if (!image.contains(k)) {
      res.summand = true;
      res.witness = std::move(k);
      break;
    }
  long mu = m.dim - image.rank();
  res.inequality = mu > image.rank() * algebra_edim(*m.alg);
  return res;
}

ArtinModule artin_direct_sum(const ArtinModule& a, const ArtinModule& b) {
  if (!a.alg || a.alg != b.alg)
    fail(Errc::SemigroupMismatch, "direct sum needs modules over one algebra");
  ArtinModule s;
  s.alg = a.alg;
  s.dim = a.dim + b.dim;
  for (size_t v = 0; v < a.action.size(); ++v) {
    DenseMatrix blk(s.dim, s.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) blk.at(i, j) = a.action[v].at(i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j)
        blk.at(a.dim + i, a.dim + j) = b.action[v].at(i, j);
    s.action.push_back(std::move(blk));
  }
  return s;
}

ArtinModule cyclic_quotient(const ArtinPtr& a,
                            const std::vector<std::vector<int>>& gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != a->nvars)
      fail(Errc::Computation, "quotient generator has wrong arity");
    for (int e : g)
      if (e < 0) fail(Errc::Computation, "negative exponent in generator");
  }
  std::vector<std::vector<int>> kept;
  for (const auto& mono : a->basis) {
    bool in_ideal = false;
    for (const auto& g : gens)
      if (divides(g, mono)) { in_ideal = true; break; }
    if (!in_ideal) kept.push_back(mono);
  }
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < kept.size(); ++i)
    index[kept[i]] = static_cast<int>(i);
  ArtinModule m;
  m.alg = a;
  m.dim = static_cast<int>(kept.size());
  m.action.assign(a->nvars, DenseMatrix(m.dim, m.dim));
  for (int j = 0; j < m.dim; ++j)
    for (int v = 0; v < a->nvars; ++v) {
      auto next = kept[static_cast<size_t>(j)];
      next[static_cast<size_t>(v)] += 1;
      auto it = index.find(next);
      if (it != index.end()) m.action[v].at(it->second, j) = Scalar::one();
    }
  return m;
}

}  // namespace ulab
