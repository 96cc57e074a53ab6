#include "ulrichlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <thread>

#include <gmpxx.h>

#include "ulrichlab/error.hpp"
#include "ulrichlab/graded.hpp"
#include "ulrichlab/homology.hpp"
#include "ulrichlab/ulrich.hpp"

namespace ulab {

namespace {

struct Instance {
  std::string label;
  std::function<std::optional<Counterexample>()> run;
};

std::optional<Counterexample> pass() { return std::nullopt; }

std::string join(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string sgp_label(const std::vector<long>& g) { return "<" + join(g) + ">"; }
std::string ideal_label(const std::vector<long>& g) { return "(" + join(g) + ")"; }

// Module descriptor that closures can carry by value and rebuild on any thread.
struct ModSpec {
  std::string kind;        // R | k | can | ideal | quot | mpow | sum2
  std::vector<long> gens;  // ideal generators for ideal/quot
  std::vector<long> gens2; // second summand for sum2
  long n = 0;              // exponent for mpow

  std::string label() const {
    if (kind == "R") return "R";
    if (kind == "k") return "k";
    if (kind == "can") return "can";
    if (kind == "ideal") return ideal_label(gens);
    if (kind == "quot") return "R/" + ideal_label(gens);
    if (kind == "mpow") return "m^" + std::to_string(n);
    if (kind == "sum2") return ideal_label(gens) + "+" + ideal_label(gens2);
    return "?";
  }

  PresentedModule build(const SgpPtr& s) const {
    if (kind == "R") return PresentedModule::free_module(s, {0});
    if (kind == "k") return PresentedModule::quotient_ring(maximal_ideal(s));
    if (kind == "can") return PresentedModule::from_relative_ideal(canonical_ideal(s));
    if (kind == "ideal")
      return PresentedModule::from_relative_ideal(RelativeIdeal::normalize(s, gens));
    if (kind == "quot")
      return PresentedModule::quotient_ring(RelativeIdeal::normalize(s, gens));
    if (kind == "mpow")
      return PresentedModule::from_relative_ideal(power(maximal_ideal(s), n));
    if (kind == "sum2")
      return direct_sum(
          PresentedModule::from_relative_ideal(RelativeIdeal::normalize(s, gens)),
          PresentedModule::from_relative_ideal(RelativeIdeal::normalize(s, gens2)));
    fail(Errc::Computation, "unknown module descriptor " + kind);
  }
};

struct IdealSpec {
  std::string kind;        // m | m2 | gens
  std::vector<long> gens;

  std::string label() const {
    if (kind == "m") return "m";
    if (kind == "m2") return "m^2";
    return ideal_label(gens);
  }

  RelativeIdeal build(const SgpPtr& s) const {
    if (kind == "m") return maximal_ideal(s);
    if (kind == "m2") return power(maximal_ideal(s), 2);
    return RelativeIdeal::normalize(s, gens);
  }
};

// least exponent t with e_syz * (c-1)^(t+1) < 1, computed with big rationals
long vanishing_window_extension(long e_syz, const Rat& c) {
  mpq_class cm1(c.num - c.den, c.den);
  cm1.canonicalize();
  if (cm1 < 0 || cm1 >= 1)
    fail(Errc::HypothesisFailed, "deviation c-1 must lie in [0,1)");
  mpq_class acc(1);
  for (int s = 1; s <= 4000; ++s) {
    acc *= cm1;
    if (acc * e_syz < 1) return s - 1;
  }
  fail(Errc::Computation, "window extension search did not converge");
}

// ---- instance families, one builder per theorem id ----

struct FamilyContext {
  std::vector<std::vector<long>> sgps;  // stock semigroup generator sets
  long max_deg = 30;
};

std::vector<std::vector<long>> ideals_for(const std::vector<long>& sgens,
                                          long max_deg, int count) {
  return stock_ideal_gens(make_semigroup(sgens), max_deg, count);
}

void add_bound_chain(std::vector<Instance>& out, const FamilyContext& ctx) {
  for (const auto& sg : ctx.sgps) {
    auto ideals = ideals_for(sg, ctx.max_deg, 6);
    long a1 = sg.front();
    std::vector<IdealSpec> is = {{"m", {}}, {"gens", {a1}}, {"m2", {}}};
    std::vector<ModSpec> ms = {{"R"}, {"k"}, {"can"},
                               ModSpec{"quot", {a1}},
                               ModSpec{"ideal", sg}};
    for (size_t t = 0; t < ideals.size() && t < 2; ++t)
      ms.push_back(ModSpec{"ideal", ideals[t]});
    for (const auto& ispec : is)
      for (const auto& mspec : ms) {
        std::string label = "S=" + sgp_label(sg) + " I=" + ispec.label() +
                            " M=" + mspec.label();
        out.push_back({label, [sg, ispec, mspec, label]() {
          auto s = make_semigroup(sg);
          auto i = ispec.build(s);
          auto m = mspec.build(s);
          auto f = m.facts();
          if (!f.is_cm) return pass();
          long covol = quotient_mod_ideal(m, i).length();
          long e_im = ideal_mult_of_module(i, m);
          long upper;
          if (m.rank() > 0) {
            upper = f.mu * i.min();
          } else {
            auto ann = annihilator_ideal(m);
            upper = f.mu * quotient_length(ring_ideal(s), ann);
          }
          if (f.mu <= covol && covol <= e_im && e_im <= upper) return pass();
          return std::optional<Counterexample>({label,
              "chain mu=" + std::to_string(f.mu) + " l(M/IM)=" +
              std::to_string(covol) + " e(I,M)=" + std::to_string(e_im) +
              " mu*e(I,R/ann)=" + std::to_string(upper) + " broke"});
        }});
      }
  }
}

void add_lem_c(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 20;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    long a1 = sg.front();
    auto ideals = ideals_for(sg, ctx.max_deg, 3);
    std::vector<IdealSpec> is = {{"m", {}}, {"gens", {a1}}};
    std::vector<ModSpec> ms = {{"R"}, ModSpec{"ideal", sg}};
    std::vector<ModSpec> ns = {ModSpec{"quot", {a1}}};
    for (const auto& ig : ideals) ns.push_back(ModSpec{"ideal", ig});
    for (const auto& ispec : is)
      for (const auto& mspec : ms)
        for (const auto& nspec : ns) {
          std::string label = "S=" + sgp_label(sg) + " I=" + ispec.label() +
                              " M=" + mspec.label() + " N=" + nspec.label();
          out.push_back({label, [sg, ispec, mspec, nspec, label]() {
            auto s = make_semigroup(sg);
            auto i = ispec.build(s);
            auto m = mspec.build(s);
            auto n = nspec.build(s);
            auto repm = classify(m, i);
            auto repn = classify(n, i);
            if (!repm.free_mod_i || !repn.free_mod_i) return pass();
            auto t = tensor(m, n);
            if (t.is_zero()) return pass();
            auto tf = t.facts();
            if (tf.dim != m.facts().dim || !tf.is_cm) return pass();
            Rat c = repm.c_min;
            long e_t = ideal_mult_of_module(i, t);
            long mid = repm.e_ideal * n.mu();
            long cov_t = quotient_mod_ideal(t, i).length();
            bool chain = Rat(e_t) <= Rat(mid) && Rat(mid) <= c * Rat(cov_t) &&
                         cov_t <= e_t;
            bool sharp = c != Rat(1) || (e_t == mid && mid == cov_t);
            if (chain && sharp) return pass();
            return std::optional<Counterexample>({label,
                "c=" + c.str() + " e(I,MxN)=" + std::to_string(e_t) +
                " e(I,M)mu(N)=" + std::to_string(mid) + " l(MxN/I)=" +
                std::to_string(cov_t) + (chain ? " equality case broke"
                                               : " inequality chain broke")});
          }});
        }
  }
}

void add_ext_length(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 20;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    long a1 = sg.front();
    auto ideals = ideals_for(sg, ctx.max_deg, 1);
    std::vector<ModSpec> ms = {ModSpec{"ideal", {sg}}};
    if (!ideals.empty()) ms.push_back(ModSpec{"ideal", ideals[0]});
    std::vector<ModSpec> ns = {{"k"}, ModSpec{"quot", {a1}}};
    for (const auto& mspec : ms)
      for (const auto& nspec : ns)
        for (int i = 1; i <= 3; ++i) {
          std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label() +
                              " N=" + nspec.label() + " i=" + std::to_string(i);
          out.push_back({label, [sg, mspec, nspec, i, label]() {
            auto s = make_semigroup(sg);
            auto m = mspec.build(s);
            auto n = nspec.build(s);
            long ln = n.length();
            long lext = ext_table(i, m, n).total;
            long bi = resolve(m, i).betti[static_cast<size_t>(i)];
            if (lext <= bi * ln) return pass();
            return std::optional<Counterexample>({label,
                "l(Ext^i)=" + std::to_string(lext) + " exceeds beta_i*l(N)=" +
                std::to_string(bi) + "*" + std::to_string(ln)});
          }});
        }
  }
}

void add_socle_summand(std::vector<Instance>& out, const FamilyContext& ctx) {
  for (const auto& sg : ctx.sgps) {
    long a1 = sg.front();
    auto ideals = ideals_for(sg, ctx.max_deg, 3);
    std::vector<ModSpec> ms = {ModSpec{"mpow", {}, {}, a1 - 1},
                               ModSpec{"ideal", sg}, {"can"}};
    for (const auto& ig : ideals) ms.push_back(ModSpec{"ideal", ig});
    for (const auto& mspec : ms) {
      std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label();
      out.push_back({label, [sg, mspec, a1, label]() {
        auto s = make_semigroup(sg);
        auto m = mspec.build(s);
        auto f = m.facts();
        if (!f.is_mcm) return pass();
        long v = s->edim() - 1;
        auto rep = classify(m);
        if (!(rep.c_min < Rat(v + 1, v))) return pass();
        auto q = quotient_mod_ideal(m, RelativeIdeal::normalize(s, {a1}));
        if (socle_meets_generators(q)) return pass();
        return std::optional<Counterexample>({label,
            "c_min=" + rep.c_min.str() + " < 1+1/" + std::to_string(v) +
            " but no minimal generator of M/t^" + std::to_string(a1) +
            "M lies in the socle"});
      }});
    }
  }
}

void add_betti_growth(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 20;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    auto ideals = ideals_for(sg, ctx.max_deg, 2);
    std::vector<ModSpec> ms = {{"can"}, ModSpec{"ideal", sg}};
    for (const auto& ig : ideals) ms.push_back(ModSpec{"ideal", ig});
    for (const auto& mspec : ms) {
      std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label();
      out.push_back({label, [sg, mspec, label]() {
        auto s = make_semigroup(sg);
        auto m = mspec.build(s);
        auto f = m.facts();
        if (!f.is_mcm || f.is_free) return pass();
        long r = s->type();
        long e = s->multiplicity();
        auto res = resolve(m, 3);
        for (int i = 1; i <= 2; ++i) {
          long bi = res.betti[static_cast<size_t>(i)];
          long bn = res.betti[static_cast<size_t>(i) + 1];
          if (bn * (e - r) < r * bi)
            return std::optional<Counterexample>({label,
                "beta_" + std::to_string(i + 1) + "=" + std::to_string(bn) +
                " < (r/(e-r))*beta_" + std::to_string(i) + " with r=" +
                std::to_string(r) + " e=" + std::to_string(e) + " beta_i=" +
                std::to_string(bi)});
        }
        return pass();
      }});
    }
  }
}

void add_tor_rigid_pd(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 16;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    long a1 = sg.front();
    auto ideals = ideals_for(sg, ctx.max_deg, 8);
    std::vector<ModSpec> ms = {ModSpec{"mpow", {}, {}, a1 - 1}, {"can"}};
    std::vector<ModSpec> ns;
    for (const auto& ig : ideals)
      if (ig.size() >= 2) ns.push_back(ModSpec{"ideal", ig});
    if (ns.size() > 4) ns.resize(4);
    for (const auto& mspec : ms)
      for (const auto& nspec : ns) {
        std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label() +
                            " N=" + nspec.label();
        out.push_back({label, [sg, mspec, nspec, label]() {
          auto s = make_semigroup(sg);
          auto m = mspec.build(s);
          auto rep = classify(m);
          auto mf = m.facts();
          if (!mf.is_mcm || mf.rank <= 0 || !(rep.c_min < Rat(2)))
            return pass();
          auto n = nspec.build(s);
          auto nf = n.facts();
          if (!nf.is_mcm || nf.is_free) return pass();
          auto t = tensor(m, n);
          long v = t.facts().depth;
          auto syz = v == 1 ? n : syzygy_module(n, 1);
          long e_syz = syz.is_zero()
                           ? 0
                           : ideal_mult_of_module(maximal_ideal(s), syz);
          long text = vanishing_window_extension(e_syz, rep.c_min);
          long hi = 1 - v + text;
          if (hi < 1)
            return std::optional<Counterexample>({label,
                "nonfree N given an empty required vanishing range, so the "
                "freeness criterion itself failed"});
          for (int i = 1; i <= hi; ++i)
            if (tor_table(i, m, n).total != 0) return pass();
          return std::optional<Counterexample>({label,
              "Tor_i(M,N)=0 for i=1.." + std::to_string(hi) +
              " though N is nonfree (c=" + rep.c_min.str() + ")"});
        }});
      }
  }
}

void add_ext_rigid(std::vector<Instance>& out, const FamilyContext& ctx) {
  for (const auto& sg : ctx.sgps) {
    long a1 = sg.front();
    auto ideals = ideals_for(sg, ctx.max_deg, 3);
    std::vector<ModSpec> ms = {ModSpec{"mpow", {}, {}, a1 - 1}};
    for (const auto& ig : ideals) ms.push_back(ModSpec{"ideal", ig});
    for (const auto& mspec : ms) {
      std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label();
      out.push_back({label, [sg, mspec, label]() {
        auto s = make_semigroup(sg);
        auto m = mspec.build(s);
        if (!classify(m).is_ulrich) return pass();
        if (ext_table(1, m, m).total != 0) return pass();
        return std::optional<Counterexample>({label,
            "Ext^1(M,M)=0 for an Ulrich module over a singular ring"});
      }});
    }
  }
}

void add_tensor_free(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 25;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    long a1 = sg.front();
    auto ideals = ideals_for(sg, ctx.max_deg, 5);
    std::vector<ModSpec> ms = {ModSpec{"mpow", {}, {}, a1 - 1}};
    if (!ideals.empty()) ms.push_back(ModSpec{"ideal", ideals[0]});
    for (const auto& mspec : ms)
      for (const auto& ng : ideals) {
        std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label() +
                            " N=" + ideal_label(ng);
        out.push_back({label, [sg, mspec, ng, label]() {
          auto s = make_semigroup(sg);
          auto m = mspec.build(s);
          if (!classify(m).is_ulrich) return pass();
          auto n = RelativeIdeal::normalize(s, ng);
          auto t = tensor(m, PresentedModule::from_relative_ideal(n));
          if (t.torsion_length() != 0) return pass();
          if (n.is_principal()) return pass();
          return std::optional<Counterexample>({label,
              "M Ulrich and M(x)N torsion-free, yet N needs " +
              std::to_string(n.mu()) + " generators"});
        }});
      }
  }
}

void add_hw_ulrich(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 30;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    auto ideals = ideals_for(sg, ctx.max_deg, 6);
    for (const auto& ig : ideals) {
      std::string label = "S=" + sgp_label(sg) + " I=" + ideal_label(ig);
      out.push_back({label, [sg, ig, label]() {
        auto s = make_semigroup(sg);
        auto i = RelativeIdeal::normalize(s, ig);
        auto im = PresentedModule::from_relative_ideal(i);
        auto j = colon(ring_ideal(s), i);
        auto t = tensor(im, PresentedModule::from_relative_ideal(j));
        if (t.torsion_length() != 0) return pass();
        bool gate = s->has_minimal_multiplicity() || classify(im).is_ulrich;
        if (!gate || i.is_principal()) return pass();
        return std::optional<Counterexample>({label,
            "I(x)Hom(I,R) torsion-free over a qualifying ring, yet I needs " +
            std::to_string(i.mu()) + " generators"});
      }});
    }
  }
}

void add_fitting(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 16;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    long a1 = sg.front();
    auto ideals = ideals_for(sg, ctx.max_deg, 3);
    for (size_t x = 0; x < ideals.size(); ++x)
      for (size_t y = x; y < ideals.size(); ++y) {
        std::string label = "S=" + sgp_label(sg) + " M=m^" +
                            std::to_string(a1 - 1) + " N1=" +
                            ideal_label(ideals[x]) + " N2=" +
                            ideal_label(ideals[y]);
        auto g1 = ideals[x];
        auto g2 = ideals[y];
        out.push_back({label, [sg, a1, g1, g2, label]() {
          auto s = make_semigroup(sg);
          auto m = PresentedModule::from_relative_ideal(
              power(maximal_ideal(s), a1 - 1));
          if (!classify(m).is_ulrich) return pass();
          auto n1 = RelativeIdeal::normalize(s, g1);
          auto n2 = RelativeIdeal::normalize(s, g2);
          auto n1m = PresentedModule::from_relative_ideal(n1);
          auto n2m = PresentedModule::from_relative_ideal(n2);
          auto t1 = tensor(m, n1m);
          if (t1.torsion_length() != 0) return pass();
          if (tensor(m, n2m).torsion_length() != 0) return pass();
          auto t = tensor(t1, n2m);
          if (!classify(t).is_ulrich)
            return std::optional<Counterexample>({label,
                "M(x)N1(x)N2 is not Ulrich"});
          // the iterated tensor must agree with the matching sum of shifts
          std::optional<PresentedModule> cmp;
          for (long a : n1.gens())
            for (long b : n2.gens()) {
              auto piece = shift_module(m, a + b);
              cmp = cmp ? direct_sum(*cmp, piece) : piece;
            }
          bool same = t.mu() == cmp->mu() && t.rank() == cmp->rank();
          long lo = std::min(t.min_gen_twist(), cmp->min_gen_twist());
          long hi = std::max(t.stable_degree(), cmp->stable_degree()) +
                    s->multiplicity();
          for (long d = lo; same && d <= hi; ++d)
            same = t.hilbert(d) == cmp->hilbert(d);
          if (!same)
            return std::optional<Counterexample>({label,
                "M(x)N1(x)N2 differs from the matching direct sum of "
                "shifted copies of M"});
          if (tor_table(1, m, tensor(n1m, n2m)).total == 0 &&
              !(n1.is_principal() && n2.is_principal()))
            return std::optional<Counterexample>({label,
                "Tor_1(M,N1(x)N2)=0 though some N_i is not principal"});
          return pass();
        }});
      }
  }
}

void add_duality(std::vector<Instance>& out, const FamilyContext& ctx) {
  size_t scap = 12;
  for (size_t si = 0; si < ctx.sgps.size() && si < scap; ++si) {
    const auto& sg = ctx.sgps[si];
    auto ideals = ideals_for(sg, ctx.max_deg, 3);
    std::vector<ModSpec> ms = {{"can"}, ModSpec{"ideal", sg}};
    for (const auto& ig : ideals) ms.push_back(ModSpec{"ideal", ig});
    std::vector<ModSpec> ns = {{"can"}, {"R"}};
    for (const auto& mspec : ms)
      for (const auto& nspec : ns) {
        std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label() +
                            " N=" + nspec.label();
        out.push_back({label, [sg, mspec, nspec, label]() {
          auto s = make_semigroup(sg);
          auto m = mspec.build(s);
          auto n = nspec.build(s);
          for (const auto& row : check_duality(m, n, 2))
            if (row.gate_ok && !row.equal)
              return std::optional<Counterexample>({label,
                  "level " + std::to_string(row.i) + ": " +
                  std::to_string(row.lhs) + " != " + std::to_string(row.rhs)});
          return pass();
        }});
      }
  }
}

void add_mn_ulrich(std::vector<Instance>& out, const FamilyContext& ctx) {
  for (const auto& sg : ctx.sgps) {
    long a1 = sg.front();
    for (long n = std::max<long>(1, a1 - 1); n <= a1 + 1; ++n) {
      std::string label = "S=" + sgp_label(sg) + " n=" + std::to_string(n);
      out.push_back({label, [sg, n, label]() {
        auto s = make_semigroup(sg);
        auto m = PresentedModule::from_relative_ideal(
            power(maximal_ideal(s), n));
        auto rep = classify(m);
        if (rep.is_ulrich) return pass();
        return std::optional<Counterexample>({label,
            "m^n with n >= e(R)-1 is not Ulrich: e=" +
            std::to_string(rep.e_ideal) + " covol=" +
            std::to_string(rep.covolume)});
      }});
    }
  }
}

void add_minmult_syzygy(std::vector<Instance>& out, const FamilyContext& ctx) {
  for (const auto& sg : ctx.sgps) {
    {
      auto probe = make_semigroup(sg);
      if (!probe->has_minimal_multiplicity()) continue;
    }
    auto ideals = ideals_for(sg, ctx.max_deg, 4);
    std::vector<ModSpec> ms = {{"can"}, ModSpec{"ideal", sg}};
    for (const auto& ig : ideals) ms.push_back(ModSpec{"ideal", ig});
    if (ideals.size() >= 2)
      ms.push_back(ModSpec{"sum2", ideals[0], ideals[1]});
    for (const auto& mspec : ms)
      for (int i = 1; i <= 2; ++i) {
        std::string label = "S=" + sgp_label(sg) + " M=" + mspec.label() +
                            " i=" + std::to_string(i);
        out.push_back({label, [sg, mspec, i, label]() {
          auto s = make_semigroup(sg);
          auto m = mspec.build(s);
          if (!m.facts().is_mcm) return pass();
          auto syz = syzygy_module(m, i);
          if (syz.is_zero()) return pass();
          auto rep = classify(syz);
          if (rep.is_ulrich) return pass();
          return std::optional<Counterexample>({label,
              "syzygy " + std::to_string(i) + " is not Ulrich: e=" +
              std::to_string(rep.e_ideal) + " mu=" +
              std::to_string(rep.facts.mu)});
        }});
      }
  }
}

using FamilyFn = void (*)(std::vector<Instance>&, const FamilyContext&);

const std::vector<std::pair<std::string, FamilyFn>>& family_table() {
  static const std::vector<std::pair<std::string, FamilyFn>> table = {
      {"tensor-free", add_tensor_free},
      {"hw-ulrich", add_hw_ulrich},
      {"bound-chain", add_bound_chain},
      {"lem-c", add_lem_c},
      {"ext-length", add_ext_length},
      {"socle-summand", add_socle_summand},
      {"betti-growth", add_betti_growth},
      {"tor-rigid-pd", add_tor_rigid_pd},
      {"ext-rigid", add_ext_rigid},
      {"fitting", add_fitting},
      {"duality", add_duality},
      {"mn-ulrich", add_mn_ulrich},
      {"minmult-syzygy", add_minmult_syzygy},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verifier_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : family_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

bool is_verifier_id(const std::string& id) {
  for (const auto& known : verifier_ids())
    if (known == id) return true;
  return false;
}

std::vector<std::vector<long>> stock_semigroups(long max_gen) {
  std::vector<std::vector<long>> out;
  if (max_gen > 16) fail(Errc::Computation, "generator cap above 16");
  if (max_gen < 2) return out;
  int n = static_cast<int>(max_gen) - 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<long> gens;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) gens.push_back(b + 2);
    long g = 0;
    for (long x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    out.push_back(NumericalSemigroup::build(std::move(gens)).generators());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<long>> stock_ideal_gens(const SgpPtr& s, long max_deg,
                                                int max_count) {
  std::vector<long> pool;
  for (long z = 1; z <= max_deg && pool.size() < 8; ++z)
    if (s->contains(z)) pool.push_back(z);
  std::vector<std::vector<long>> out;
  auto try_add = [&](std::vector<long> gens) {
    if (static_cast<int>(out.size()) >= max_count) return;
    auto e = RelativeIdeal::normalize(s, gens);
    if (e.gens() != gens) return;  // only canonical antichains, once each
    out.push_back(std::move(gens));
  };
  size_t np = pool.size();
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j) try_add({pool[i], pool[j]});
  for (size_t i = 0; i < np; ++i) try_add({pool[i]});
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j)
      for (size_t k = j + 1; k < np; ++k) try_add({pool[i], pool[j], pool[k]});
  return out;
}

VerifierReport run_verifier(const std::string& id, long max_gen, long max_deg,
                            int jobs) {
  FamilyFn fn = nullptr;
  for (const auto& [known, f] : family_table())
    if (known == id) fn = f;
  if (!fn) fail(Errc::Computation, "unknown theorem id " + id);

  FamilyContext ctx;
  ctx.sgps = stock_semigroups(max_gen);
  ctx.max_deg = max_deg;
  std::vector<Instance> tasks;
  fn(tasks, ctx);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::optional<Counterexample>> cex(tasks.size());
  std::vector<std::string> errs(tasks.size());
  auto work = [&](size_t idx) {
    try {
      cex[idx] = tasks[idx].run();
    } catch (const std::exception& e) {
      errs[idx] = tasks[idx].label + ": " + e.what();
    }
  };
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int nt = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(jobs), tasks.size()));
    for (int w = 0; w < nt; ++w)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) work(i);
      });
    for (auto& th : pool) th.join();
  }

  VerifierReport rep;
  rep.theorem_id = id;
  rep.instances = static_cast<long>(tasks.size());
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (!errs[i].empty())
      rep.errors.push_back(errs[i]);
    else if (cex[i])
      rep.counterexamples.push_back(*cex[i]);
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace ulab
