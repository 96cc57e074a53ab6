#include "doctest.h"

#include <numeric>

#include "ulrichlab/error.hpp"
#include "ulrichlab/semigroup.hpp"

using namespace ulab;

TEST_CASE("three-four-five") {
  auto s = NumericalSemigroup::build({3, 4, 5});
  CHECK(s.generators() == std::vector<long>{3, 4, 5});
  CHECK(s.multiplicity() == 3);
  CHECK(s.edim() == 3);
  CHECK(s.frobenius() == 2);
  CHECK(s.gaps() == std::vector<long>{1, 2});
  CHECK(s.pseudo_frobenius() == std::vector<long>{1, 2});
  CHECK(s.type() == 2);
  CHECK_FALSE(s.symmetric());
  CHECK(s.has_minimal_multiplicity());
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(2));
  CHECK(s.contains(3));
  CHECK(s.contains(100));
  CHECK_FALSE(s.contains(-3));
  CHECK(s.str() == "<3,4,5>");
}

TEST_CASE("four-five-six is symmetric") {
  auto s = NumericalSemigroup::build({4, 5, 6});
  CHECK(s.frobenius() == 7);
  CHECK(s.gaps() == std::vector<long>{1, 2, 3, 7});
  CHECK(s.pseudo_frobenius() == std::vector<long>{7});
  CHECK(s.symmetric());
  CHECK_FALSE(s.has_minimal_multiplicity());
}

TEST_CASE("large type example") {
  auto s = NumericalSemigroup::build({9, 10, 11, 12, 15});
  CHECK(s.frobenius() == 17);
  CHECK(s.pseudo_frobenius() == std::vector<long>{13, 14, 16, 17});
  CHECK(s.type() == 4);
}

TEST_CASE("generator minimalization and dedup") {
  auto s = NumericalSemigroup::build({4, 6, 8, 10, 13, 6});
  CHECK(s.generators() == std::vector<long>{4, 6, 13});
  auto t = NumericalSemigroup::build({2, 3, 4, 5});
  CHECK(t.generators() == std::vector<long>{2, 3});
}

TEST_CASE("the full semigroup N") {
  auto s = NumericalSemigroup::build({1});
  CHECK(s.is_regular());
  CHECK(s.frobenius() == -1);
  CHECK(s.gaps().empty());
  CHECK(s.pseudo_frobenius() == std::vector<long>{-1});
  CHECK(s.type() == 1);
  CHECK(s.contains(0));
  CHECK(s.contains(7));
  auto t = NumericalSemigroup::build({3, 5, 7, 1});
  CHECK(t.generators() == std::vector<long>{1});
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(NumericalSemigroup::build({}), Error);
  CHECK_THROWS_AS(NumericalSemigroup::build({0, 3}), Error);
  CHECK_THROWS_AS(NumericalSemigroup::build({-2, 3}), Error);
  CHECK_THROWS_AS(NumericalSemigroup::build({4, 6}), Error);      // gcd 2
  CHECK_THROWS_AS(NumericalSemigroup::build({6}), Error);         // gcd 6
  try {
    NumericalSemigroup::build({4, 6});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GcdNotOne);
  }
}

TEST_CASE("apery set structure") {
  auto s = NumericalSemigroup::build({5, 6, 8, 9});
  CHECK(s.frobenius() == 7);
  const auto& ap = s.apery();
  REQUIRE(ap.size() == 5);
  CHECK(ap[0] == 0);
  for (long r = 0; r < 5; ++r) {
    CHECK(ap[static_cast<size_t>(r)] % 5 == r);
    CHECK(s.contains(ap[static_cast<size_t>(r)]));
    if (ap[static_cast<size_t>(r)] >= 5) CHECK_FALSE(s.contains(ap[static_cast<size_t>(r)] - 5));
  }
  // gap count identity: |gaps| = sum over Apery values of floor(w / a1)
  long total = 0;
  for (long w : ap) total += w / 5;
  CHECK(total == static_cast<long>(s.gaps().size()));
}

TEST_CASE("oracle sweep over small generator sets") {
  // exhaustive cross-check of the precomputed tables against brute force on
  // every minimal semigroup drawn from subsets of {2..9}
  for (long a = 2; a <= 9; ++a) {
    for (long b = a + 1; b <= 9; ++b) {
      for (long c = b + 1; c <= 9; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        auto s = NumericalSemigroup::build({a, b, c});
        // brute-force membership by breadth of sums
        long limit = a * c + a + 1;
        std::vector<bool> mem(static_cast<size_t>(limit) + 1, false);
        mem[0] = true;
        for (long z = 1; z <= limit; ++z)
          for (long g : {a, b, c})
            if (z >= g && mem[static_cast<size_t>(z - g)]) mem[static_cast<size_t>(z)] = true;
        long fr = -1;
        for (long z = 0; z <= limit; ++z)
          if (!mem[static_cast<size_t>(z)]) fr = z;
        CHECK(s.frobenius() == fr);
        for (long z = 0; z <= limit; ++z)
          CHECK(s.contains(z) == static_cast<bool>(mem[static_cast<size_t>(z)]));
        // pseudo-Frobenius by definition
        std::vector<long> pf;
        for (long z = 0; z <= fr; ++z) {
          if (mem[static_cast<size_t>(z)]) continue;
          bool all = true;
          for (long g : s.generators())
            if (!s.contains(z + g)) all = false;
          if (all) pf.push_back(z);
        }
        if (fr == -1) pf = {-1};
        CHECK(s.pseudo_frobenius() == pf);
        // symmetry criterion: gaps pair with elements via z <-> F - z
        bool sym = true;
        for (long z = 0; z <= fr; ++z)
          if (s.contains(z) == s.contains(fr - z)) sym = false;
        if (fr >= 0) CHECK(s.symmetric() == sym);
      }
    }
  }
}
