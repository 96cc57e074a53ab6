#include "doctest.h"

#include "ulrichlab/error.hpp"
#include "ulrichlab/graded.hpp"
#include "ulrichlab/ulrich.hpp"

using namespace ulab;

namespace {

PresentedModule ideal_module(const SgpPtr& s, std::vector<long> g) {
  return PresentedModule::from_relative_ideal(RelativeIdeal::normalize(s, std::move(g)));
}

}  // namespace

TEST_CASE("classify the ring against the maximal ideal") {
  auto s = make_semigroup({3, 4, 5});
  auto r = PresentedModule::free_module(s, {0});
  auto rep = classify(r);
  CHECK(rep.facts.mu == 1);
  CHECK(rep.covolume == 1);
  CHECK(rep.e_ideal == 3);
  CHECK(rep.c_min == Rat(3));
  CHECK(rep.free_mod_i);
  CHECK(rep.is_cm);
  CHECK_FALSE(rep.is_ulrich);
  CHECK(rep.is_c_ulrich(Rat(3)));
  CHECK(rep.is_c_ulrich(Rat(7, 2)));
  CHECK_FALSE(rep.is_c_ulrich(Rat(5, 2)));
}

TEST_CASE("the canonical ideal sits at c equal three halves") {
  auto s = make_semigroup({3, 4, 5});
  auto w = ideal_module(s, {0, 1});
  auto rep = classify(w);
  CHECK(rep.facts.mu == 2);
  CHECK(rep.covolume == 2);
  CHECK(rep.e_ideal == 3);
  CHECK(rep.c_min == Rat(3, 2));
  CHECK(rep.free_mod_i);
  CHECK_FALSE(rep.is_ulrich);
  CHECK(rep.is_c_ulrich(Rat(3, 2)));
  CHECK_FALSE(rep.is_c_ulrich(Rat(4, 3)));
}

TEST_CASE("residue field and maximal ideal are ulrich over minimal multiplicity") {
  auto s = make_semigroup({3, 4, 5});
  auto k = PresentedModule::quotient_ring(maximal_ideal(s));
  auto repk = classify(k);
  CHECK(repk.e_ideal == 1);
  CHECK(repk.covolume == 1);
  CHECK(repk.is_ulrich);

  auto m = ideal_module(s, {3, 4, 5});
  auto repm = classify(m);
  CHECK(repm.facts.mu == 3);
  CHECK(repm.e_ideal == 3);
  CHECK(repm.covolume == 3);
  CHECK(repm.is_ulrich);
}

TEST_CASE("the ring is ulrich with respect to a principal reduction") {
  auto s = make_semigroup({3, 4, 5});
  auto r = PresentedModule::free_module(s, {0});
  auto t3 = RelativeIdeal::normalize(s, {3});
  auto rep = classify(r, t3);
  CHECK(rep.ideal_min == 3);
  CHECK(rep.e_ideal == 3);
  CHECK(rep.covolume == 3);
  CHECK(rep.free_mod_i);
  CHECK(rep.is_ulrich);
}

TEST_CASE("a cyclic quotient is ulrich with respect to its defining ideal") {
  auto s = make_semigroup({3, 4, 5});
  auto t3 = RelativeIdeal::normalize(s, {3});
  auto q = PresentedModule::quotient_ring(t3);
  auto rep = classify(q, t3);
  CHECK(rep.facts.length == 3);
  CHECK(rep.e_ideal == 3);
  CHECK(rep.covolume == 3);
  CHECK(rep.is_ulrich);
}

TEST_CASE("classify rejects ideals not contained in the ring") {
  auto s = make_semigroup({3, 4, 5});
  auto r = PresentedModule::free_module(s, {0});
  CHECK_THROWS_AS((void)classify(r, canonical_ideal(s)), Error);
  try {
    (void)classify(r, canonical_ideal(s));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMPrimary);
  }
}

TEST_CASE("powers of the maximal ideal become ulrich at multiplicity minus one") {
  auto s = make_semigroup({4, 5, 7});
  auto m1 = classify(PresentedModule::from_relative_ideal(maximal_ideal(s)));
  CHECK(m1.e_ideal == 4);
  CHECK(m1.covolume == 3);
  CHECK_FALSE(m1.is_ulrich);
  CHECK(m1.c_min == Rat(4, 3));
  for (long n = 3; n <= 5; ++n) {
    auto mn = PresentedModule::from_relative_ideal(power(maximal_ideal(s), n));
    CHECK(classify(mn).is_ulrich);
  }
}

TEST_CASE("the alpha threshold for the ring against itself is two") {
  auto s = make_semigroup({3, 4, 5});
  auto r = PresentedModule::free_module(s, {0});
  auto th = alpha_threshold(r, r, maximal_ideal(s));
  REQUIRE(th.has_value());
  CHECK(*th == Rat(2));
}

TEST_CASE("the alpha threshold is infinite against the zero module") {
  auto s = make_semigroup({3, 4, 5});
  auto r = PresentedModule::free_module(s, {0});
  auto zero = quotient_mod_ideal(r, ring_ideal(s));
  REQUIRE(zero.is_zero());
  CHECK_FALSE(alpha_threshold(r, zero, maximal_ideal(s)).has_value());
}

TEST_CASE("the alpha threshold requires positive rank") {
  auto s = make_semigroup({3, 4, 5});
  auto r = PresentedModule::free_module(s, {0});
  auto k = PresentedModule::quotient_ring(maximal_ideal(s));
  CHECK_THROWS_AS((void)alpha_threshold(k, r, maximal_ideal(s)), Error);
}

TEST_CASE("transpose construction from the canonical ideal doubles generators") {
  auto s = make_semigroup({3, 4, 5});
  auto [m, checks] = bu_construct(s, canonical_ideal(s));
  CHECK(checks.beta1_n == 3);
  CHECK(checks.e_expected == 6);
  CHECK(checks.e_actual == 6);
  CHECK(checks.mu_expected == 3);
  CHECK(checks.mu_actual == 3);
  CHECK(checks.ext1_length == 0);
  CHECK(checks.all_ok());
  auto rep = classify(m);
  CHECK(rep.c_min == Rat(2));
  CHECK(rep.is_c_ulrich(Rat(2)));
}

TEST_CASE("transpose construction over a four generator semigroup") {
  auto s = make_semigroup({5, 6, 8, 9});
  auto n = RelativeIdeal::normalize(s, {5, 6});
  auto [m, checks] = bu_construct(s, n);
  CHECK(checks.beta1_n == 4);
  CHECK(checks.e_expected == 15);
  CHECK(checks.e_actual == 15);
  CHECK(checks.mu_expected == 4);
  CHECK(checks.mu_actual == 4);
  CHECK(checks.ext1_length == 0);
  CHECK(checks.all_ok());
  CHECK(classify(m).c_min == Rat(15, 4));
}

TEST_CASE("transpose construction refuses principal canonical ideals") {
  auto s = make_semigroup({2, 3});
  CHECK_THROWS_AS((void)bu_construct(s, canonical_ideal(s)), Error);
  try {
    (void)bu_construct(s, canonical_ideal(s));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisFailed);
  }
}

TEST_CASE("annihilators of finite length quotients") {
  auto s = make_semigroup({3, 4, 5});
  auto k = PresentedModule::quotient_ring(maximal_ideal(s));
  CHECK(annihilator_ideal(k) == maximal_ideal(s));
  auto t3 = RelativeIdeal::normalize(s, {3});
  auto q = PresentedModule::quotient_ring(t3);
  CHECK(annihilator_ideal(q) == t3);
  auto r = PresentedModule::free_module(s, {0});
  CHECK_THROWS_AS((void)annihilator_ideal(r), Error);
}

TEST_CASE("socle meets generators exactly for very short reductions") {
  auto s = make_semigroup({3, 4, 5});
  auto t3 = RelativeIdeal::normalize(s, {3});
  auto m = ideal_module(s, {3, 4, 5});
  // m / t^3 m is three copies of the residue field
  CHECK(socle_meets_generators(quotient_mod_ideal(m, t3)));
  auto k = PresentedModule::quotient_ring(maximal_ideal(s));
  CHECK(socle_meets_generators(k));
  // R / t^9 R is cyclic with socle {t^10, t^11} inside the radical
  auto t9 = RelativeIdeal::normalize(s, {9});
  auto r = PresentedModule::free_module(s, {0});
  CHECK_FALSE(socle_meets_generators(quotient_mod_ideal(r, t9)));
}

TEST_CASE("ideal multiplicity of modules follows rank in dimension one") {
  auto s = make_semigroup({3, 4, 5});
  auto mi = maximal_ideal(s);
  CHECK(ideal_mult_of_module(mi, PresentedModule::free_module(s, {0})) == 3);
  CHECK(ideal_mult_of_module(mi, ideal_module(s, {0, 1})) == 3);
  CHECK(ideal_mult_of_module(mi, PresentedModule::quotient_ring(mi)) == 1);
  auto t3 = RelativeIdeal::normalize(s, {3});
  CHECK(ideal_mult_of_module(t3, PresentedModule::free_module(s, {0, 2})) == 6);
  CHECK(ideal_mult_of_module(t3, PresentedModule::quotient_ring(t3)) == 3);
}
