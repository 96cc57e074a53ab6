#include "ulrichlab/report.hpp"

#include <functional>

#include "ulrichlab/artinian.hpp"
#include "ulrichlab/error.hpp"
#include "ulrichlab/homology.hpp"
#include "ulrichlab/ulrich.hpp"
#include "ulrichlab/verify.hpp"

namespace ulab {

namespace {

// Runs one row body; the body returns the computed display string and the
// row passes when it equals `expected`. Throws become ERROR rows.
ReportRow row(const std::string& id, const std::string& statement,
              const std::string& expected,
              const std::function<std::string()>& body) {
  ReportRow r;
  r.id = id;
  r.statement = statement;
  r.expected = expected;
  try {
    r.computed = body();
    r.status = r.computed == expected ? "PASS" : "FAIL";
  } catch (const std::exception& e) {
    r.status = "ERROR";
    r.error = e.what();
  }
  return r;
}

PresentedModule ideal_module(const SgpPtr& s, std::vector<long> gens) {
  return PresentedModule::from_relative_ideal(
      RelativeIdeal::normalize(s, std::move(gens)));
}

}  // namespace

std::vector<ReportRow> paper_report() {
  std::vector<ReportRow> rows;

  rows.push_back(row(
      "t456-pair", "over <4,5,6>, I=(4,5) and J=(4,6) are nonfree MCM of rank one",
      "mu(I)=2 mu(J)=2 e(I)=4 e(J)=4 mcm=yes free=no", [] {
        auto s = make_semigroup({4, 5, 6});
        auto i = ideal_module(s, {4, 5});
        auto j = ideal_module(s, {4, 6});
        auto fi = i.facts();
        auto fj = j.facts();
        bool mcm = fi.is_mcm && fj.is_mcm;
        bool fr = fi.is_free || fj.is_free;
        return "mu(I)=" + std::to_string(fi.mu) +
               " mu(J)=" + std::to_string(fj.mu) +
               " e(I)=" + std::to_string(classify(i).e_ideal) +
               " e(J)=" + std::to_string(classify(j).e_ideal) +
               std::string(" mcm=") + (mcm ? "yes" : "no") +
               std::string(" free=") + (fr ? "yes" : "no");
      }));

  rows.push_back(row(
      "t456-torfree", "over <4,5,6>, Tor_1(R/I,J)=0 and I(x)J is torsion-free",
      "tor1=0 torsion=0", [] {
        auto s = make_semigroup({4, 5, 6});
        auto i = RelativeIdeal::normalize(s, {4, 5});
        auto j = ideal_module(s, {4, 6});
        long t1 = tor_table(1, PresentedModule::quotient_ring(i), j).total;
        long tl = tensor(ideal_module(s, {4, 5}), j).torsion_length();
        return "tor1=" + std::to_string(t1) + " torsion=" + std::to_string(tl);
      }));

  rows.push_back(row(
      "t456-product", "over <4,5,6>, L=IJ is Ulrich with mu(L)=e(L)=4",
      "mu=4 e=4 ulrich=yes", [] {
        auto s = make_semigroup({4, 5, 6});
        auto l = product(RelativeIdeal::normalize(s, {4, 5}),
                         RelativeIdeal::normalize(s, {4, 6}));
        auto rep = classify(PresentedModule::from_relative_ideal(l));
        return "mu=" + std::to_string(rep.facts.mu) +
               " e=" + std::to_string(rep.e_ideal) +
               std::string(" ulrich=") + (rep.is_ulrich ? "yes" : "no");
      }));

  rows.push_back(row(
      "t456-selftensor", "over <4,5,6>, L(x)L has torsion, so it is not MCM",
      "torsion>0", [] {
        auto s = make_semigroup({4, 5, 6});
        auto l = PresentedModule::from_relative_ideal(
            product(RelativeIdeal::normalize(s, {4, 5}),
                    RelativeIdeal::normalize(s, {4, 6})));
        return tensor(l, l).torsion_length() > 0 ? "torsion>0" : "torsion=0";
      }));

  rows.push_back(row(
      "t9deep-pair",
      "over <9,10,11,12,15>, I=(9,10) and J=(9,12) are nonfree MCM, not Ulrich",
      "mu(I)=2 mu(J)=2 e(I)=9 e(J)=9 ulrich=no", [] {
        auto s = make_semigroup({9, 10, 11, 12, 15});
        auto ri = classify(ideal_module(s, {9, 10}));
        auto rj = classify(ideal_module(s, {9, 12}));
        bool ul = ri.is_ulrich || rj.is_ulrich;
        return "mu(I)=" + std::to_string(ri.facts.mu) +
               " mu(J)=" + std::to_string(rj.facts.mu) +
               " e(I)=" + std::to_string(ri.e_ideal) +
               " e(J)=" + std::to_string(rj.e_ideal) +
               std::string(" ulrich=") + (ul ? "yes" : "no");
      }));

  rows.push_back(row(
      "t9deep-canonical",
      "over <9,10,11,12,15>, I(x)J is torsion-free and IJ matches the "
      "canonical ideal up to shift",
      "torsion=0 canonical=yes", [] {
        auto s = make_semigroup({9, 10, 11, 12, 15});
        long tl = tensor(ideal_module(s, {9, 10}), ideal_module(s, {9, 12}))
                      .torsion_length();
        auto ij = product(RelativeIdeal::normalize(s, {9, 10}),
                          RelativeIdeal::normalize(s, {9, 12}));
        bool can = shift_equivalent(ij, canonical_ideal(s));
        return "torsion=" + std::to_string(tl) +
               std::string(" canonical=") + (can ? "yes" : "no");
      }));

  rows.push_back(row(
      "t345-omega", "over <3,4,5>, the canonical module is (3/2)-Ulrich",
      "c_min=3/2 beta0=2 beta1=3", [] {
        auto s = make_semigroup({3, 4, 5});
        auto w = PresentedModule::from_relative_ideal(canonical_ideal(s));
        auto rep = classify(w);
        auto res = resolve(w, 1);
        return "c_min=" + rep.c_min.str() +
               " beta0=" + std::to_string(res.betti[0]) +
               " beta1=" + std::to_string(res.betti[1]);
      }));

  rows.push_back(row(
      "t345-transpose",
      "over <3,4,5>, the torsion-free transpose of the canonical module is "
      "2-Ulrich with Ext^1(M,R)=0, while the ring is not Gorenstein",
      "e=6 mu=3 ext1=0 c_min=2 type=2", [] {
        auto s = make_semigroup({3, 4, 5});
        auto [m, checks] = bu_construct(s, canonical_ideal(s));
        auto rep = classify(m);
        return "e=" + std::to_string(checks.e_actual) +
               " mu=" + std::to_string(checks.mu_actual) +
               " ext1=" + std::to_string(checks.ext1_length) +
               " c_min=" + rep.c_min.str() +
               " type=" + std::to_string(s->type());
      }));

  rows.push_back(row(
      "t5689-transpose",
      "over <5,6,8,9>, the construction applied to N=(5,6) is (15/4)-Ulrich "
      "with Ext^1(M,R)=0",
      "e=15 mu=4 ext1=0 c_min=15/4", [] {
        auto s = make_semigroup({5, 6, 8, 9});
        auto [m, checks] =
            bu_construct(s, RelativeIdeal::normalize(s, {5, 6}));
        auto rep = classify(m);
        return "e=" + std::to_string(checks.e_actual) +
               " mu=" + std::to_string(checks.mu_actual) +
               " ext1=" + std::to_string(checks.ext1_length) +
               " c_min=" + rep.c_min.str();
      }));

  rows.push_back(row(
      "t34-cusp", "over <3,4>, the maximal ideal has e=3 and two generators",
      "e(m)=3 mu(m)=2", [] {
        auto s = make_semigroup({3, 4});
        auto m = maximal_ideal(s);
        long e = ideal_mult_of_module(m, PresentedModule::free_module(s, {0}));
        return "e(m)=" + std::to_string(e) + " mu(m)=" + std::to_string(m.mu());
      }));

  rows.push_back(row(
      "artin-ek",
      "over k[x,y]/(x^2,xy,y^2), the injective hull of k is (3/2)-Ulrich",
      "l=3 mu=2 c_min=3/2", [] {
        auto a = build_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
        auto inv = artin_invariants(matlis_dual(regular_module(a)));
        return "l=" + std::to_string(inv.length) +
               " mu=" + std::to_string(inv.mu) + " c_min=" + inv.c_min.str();
      }));

  rows.push_back(row(
      "artin-xpowers", "over k[x]/(x^5), R/(x^i) is exactly i-Ulrich",
      "c_min(i)=i for i=1..5", [] {
        auto a = build_algebra(1, {{5}});
        for (int i = 1; i <= 5; ++i) {
          auto q = i == 5 ? regular_module(a) : cyclic_quotient(a, {{i}});
          auto inv = artin_invariants(q);
          if (inv.length != i || inv.mu != 1 || inv.c_min != Rat(i))
            return std::string("mismatch at i=") + std::to_string(i) +
                   " l=" + std::to_string(inv.length) +
                   " c_min=" + inv.c_min.str();
        }
        return std::string("c_min(i)=i for i=1..5");
      }));

  rows.push_back(row(
      "mpower-sweep",
      "high powers of the maximal ideal are Ulrich across stock semigroups",
      "counterexamples=0 errors=0", [] {
        auto rep = run_verifier("mn-ulrich", 7, 20, 1);
        if (!rep.errors.empty())
          fail(Errc::Computation,
               std::to_string(rep.errors.size()) +
                   " instances could not be certified; first: " +
                   rep.errors.front());
        if (rep.instances < 30)
          return std::string("too few instances: ") +
                 std::to_string(rep.instances);
        return "counterexamples=" + std::to_string(rep.counterexamples.size()) +
               " errors=" + std::to_string(rep.errors.size());
      }));

  rows.push_back(row(
      "t345-betti-growth",
      "over <3,4,5>, betti numbers of the canonical module at least double "
      "from step one on",
      "beta=2,3,6,12,24 growth=ok", [] {
        auto s = make_semigroup({3, 4, 5});
        auto w = PresentedModule::from_relative_ideal(canonical_ideal(s));
        auto res = resolve(w, 4);
        std::string bs;
        for (size_t i = 0; i < res.betti.size(); ++i)
          bs += (i ? "," : "") + std::to_string(res.betti[i]);
        bool ok = true;
        for (size_t i = 1; i + 1 < res.betti.size(); ++i)
          if (res.betti[i + 1] < 2 * res.betti[i]) ok = false;
        return "beta=" + bs + std::string(" growth=") + (ok ? "ok" : "broken");
      }));

  return rows;
}

bool report_passed(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows)
    if (r.status != "PASS") return false;
  return true;
}

}  // namespace ulab
