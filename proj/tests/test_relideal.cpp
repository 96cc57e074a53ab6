#include "doctest.h"

#include <numeric>

#include "ulrichlab/error.hpp"
#include "ulrichlab/relideal.hpp"

using namespace ulab;

namespace {

RelativeIdeal mk(const SgpPtr& s, std::vector<long> g) {
  return RelativeIdeal::normalize(s, std::move(g));
}

}  // namespace

TEST_CASE("normalization picks minimal generators") {
  auto s = make_semigroup({3, 4, 5});
  CHECK(mk(s, {3, 4, 5, 6, 7, 8}).gens() == std::vector<long>{3, 4, 5});
  CHECK(mk(s, {0, 3}).gens() == std::vector<long>{0});
  CHECK(mk(s, {2, 3, 4}).gens() == std::vector<long>{2, 3, 4});
  auto cusp = make_semigroup({2, 3});
  CHECK(mk(cusp, {2, 3, 4}).gens() == std::vector<long>{2, 3});
  CHECK_THROWS_AS(mk(s, {}), Error);
}

TEST_CASE("canonical ideal generators") {
  auto s = make_semigroup({3, 4, 5});
  auto k = canonical_ideal(s);
  CHECK(k.gens() == std::vector<long>{0, 1});
  CHECK(k.contains(0));
  CHECK(k.contains(1));
  CHECK_FALSE(k.contains(2));
  CHECK(k.contains(3));

  auto sym = make_semigroup({4, 5, 6});
  CHECK(canonical_ideal(sym) == ring_ideal(sym));

  auto big = make_semigroup({9, 10, 11, 12, 15});
  CHECK(canonical_ideal(big).gens() == std::vector<long>{0, 1, 3, 4});
}

TEST_CASE("products") {
  auto s = make_semigroup({3, 4, 5});
  auto m = maximal_ideal(s);
  CHECK(product(m, m).gens() == std::vector<long>{6, 7, 8});
  CHECK(power(m, 2) == product(m, m));
  CHECK(power(m, 3).gens() == std::vector<long>{9, 10, 11});
  CHECK(power(m, 0) == ring_ideal(s));
  CHECK(product(m, ring_ideal(s)) == m);

  auto t = make_semigroup({4, 5, 6});
  auto i = mk(t, {4, 5});
  auto j = mk(t, {4, 6});
  CHECK(product(i, j).gens() == std::vector<long>{8, 9, 10, 11});

  auto big = make_semigroup({9, 10, 11, 12, 15});
  auto l = product(mk(big, {9, 10}), mk(big, {9, 12}));
  CHECK(l.gens() == std::vector<long>{18, 19, 21, 22});
  CHECK(shift_equivalent(l, canonical_ideal(big)));
  CHECK(shift_between(canonical_ideal(big), l) == 18);

  CHECK_THROWS_AS(product(m, i), Error);  // different semigroups
}

TEST_CASE("colon ideals") {
  auto s = make_semigroup({3, 4, 5});
  auto k = canonical_ideal(s);
  auto m = maximal_ideal(s);
  CHECK(colon(k, k) == ring_ideal(s));
  // (S : m) = S together with the pseudo-Frobenius numbers
  CHECK(colon(ring_ideal(s), m).gens() == std::vector<long>{0, 1, 2});
  CHECK(colon(k, ring_ideal(s)) == k);
  // duality into the canonical ideal is an involution
  for (const auto& e : {m, k, power(m, 2), product(m, k), ring_ideal(s)}) {
    CHECK(colon(k, colon(k, e)) == e);
  }
}

TEST_CASE("lengths and multiplicities") {
  auto s = make_semigroup({3, 4, 5});
  auto m = maximal_ideal(s);
  CHECK(quotient_length(ring_ideal(s), m) == 1);
  CHECK(quotient_length(ring_ideal(s), mk(s, {3})) == 3);   // classes of 0, 4, 5
  CHECK(quotient_length(ring_ideal(s), power(m, 2)) == 4);  // 0, 3, 4, 5
  CHECK(quotient_length(m, power(m, 2)) == 3);
  CHECK(ideal_multiplicity(m) == 3);
  CHECK(ideal_multiplicity(power(m, 2)) == 6);
  CHECK_THROWS_AS(quotient_length(m, ring_ideal(s)), Error);          // R not inside m
  CHECK_THROWS_AS(quotient_length(ring_ideal(s), canonical_ideal(s)), Error);
  CHECK_THROWS_AS(ideal_multiplicity(canonical_ideal(s)), Error);     // 1 outside the ring
  CHECK_THROWS_AS(ideal_multiplicity(ring_ideal(s)), Error);          // not proper

  auto t = make_semigroup({4, 5, 6});
  CHECK(quotient_length(ring_ideal(t), mk(t, {4, 5})) == 2);  // classes of 0 and 6
}

TEST_CASE("shifts") {
  auto s = make_semigroup({3, 4, 5});
  auto k = canonical_ideal(s);
  CHECK(shift(k, 3).gens() == std::vector<long>{3, 4});
  CHECK(display_shift(k) == 3);
  CHECK(display_shift(maximal_ideal(s)) == 0);
  CHECK_FALSE(shift_equivalent(k, ring_ideal(s)));
  CHECK(shift_equivalent(k, shift(k, 7)));
}

TEST_CASE("relative ideal identities over small semigroups") {
  for (long a = 2; a <= 8; ++a) {
    for (long b = a + 1; b <= 9; ++b) {
      for (long c = b + 1; c <= 10; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        auto s = make_semigroup({a, b, c});
        auto r = ring_ideal(s);
        auto m = maximal_ideal(s);
        auto k = canonical_ideal(s);

        // (S : m) = S plus pseudo-Frobenius numbers
        std::vector<long> augmented{0};
        for (long f : s->pseudo_frobenius())
          if (f >= 0) augmented.push_back(f);
        CHECK(colon(r, m) == mk(s, augmented));

        // symmetric iff the canonical ideal is a shifted copy of the ring
        CHECK(s->symmetric() == shift_equivalent(k, r));

        CHECK(quotient_length(r, m) == 1);
        CHECK(quotient_length(r, mk(s, {s->multiplicity()})) == s->multiplicity());

        // canonical duality is an involution on these test ideals
        for (const auto& e : {m, k, power(m, 2), product(m, k)}) {
          CHECK(colon(k, colon(k, e)) == e);
          // colon adjunction: (E : F) * F sits inside E
          auto cf = product(colon(e, m), m);
          for (long g : cf.gens()) CHECK(e.contains(g));
        }
      }
    }
  }
}
