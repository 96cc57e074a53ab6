#include "doctest.h"

#include "ulrichlab/artinian.hpp"
#include "ulrichlab/error.hpp"

using namespace ulab;

TEST_CASE("fat point algebra has the expected basis") {
  auto a = build_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(a->length() == 3);
  CHECK(algebra_edim(*a) == 2);
  CHECK(a->basis_index({0, 0}) == 0);
  CHECK(a->basis_index({1, 0}) >= 1);
  CHECK(a->basis_index({2, 0}) == -1);
  CHECK(monomial_str({2, 1}) == "x2y");
  CHECK(monomial_str({0, 0}) == "1");
}

TEST_CASE("build rejects non artinian and degenerate input") {
  CHECK_THROWS_AS((void)build_algebra(2, {{2, 0}}), Error);
  try {
    (void)build_algebra(2, {{2, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotArtinian);
  }
  CHECK_THROWS_AS((void)build_algebra(2, {}), Error);
  CHECK_THROWS_AS((void)build_algebra(1, {{0}}), Error);
  CHECK_THROWS_AS((void)build_algebra(0, {}), Error);
}

TEST_CASE("regular module of the fat point algebra") {
  auto a = build_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
  auto r = regular_module(a);
  validate_module(r);
  auto inv = artin_invariants(r);
  CHECK(inv.length == 3);
  CHECK(inv.mu == 1);
  CHECK(inv.socle_dim == 2);
  CHECK(inv.c_min == Rat(3));
  CHECK_FALSE(inv.is_ulrich);
  CHECK(radical_image_length(r) == 2);
}

TEST_CASE("the injective hull of the residue field via the matlis dual") {
  auto a = build_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
  auto e = matlis_dual(regular_module(a));
  validate_module(e);
  auto inv = artin_invariants(e);
  CHECK(inv.length == 3);
  CHECK(inv.mu == 2);
  CHECK(inv.socle_dim == 1);
  CHECK(inv.c_min == Rat(3, 2));
  auto back = artin_invariants(matlis_dual(e));
  CHECK(back.length == 3);
  CHECK(back.mu == 1);
  CHECK(back.socle_dim == 2);
}

TEST_CASE("dual swaps generator count and socle dimension") {
  auto a = build_algebra(2, {{3, 0}, {1, 1}, {0, 2}});
  auto r = regular_module(a);
  auto ir = artin_invariants(r);
  auto id = artin_invariants(matlis_dual(r));
  CHECK(id.length == ir.length);
  CHECK(id.mu == ir.socle_dim);
  CHECK(id.socle_dim == ir.mu);
}

TEST_CASE("truncated polynomial ring quotients climb the ulrich scale") {
  auto a = build_algebra(1, {{5}});
  CHECK(a->length() == 5);
  for (int i = 1; i <= 5; ++i) {
    auto q = cyclic_quotient(a, {{i}});
    validate_module(q);
    auto inv = artin_invariants(q);
    CHECK(inv.length == i);
    CHECK(inv.mu == 1);
    CHECK(inv.c_min == Rat(i));
    CHECK(inv.is_ulrich == (i == 1));
  }
  auto q2 = cyclic_quotient(a, {{2}});
  auto dd = artin_invariants(matlis_dual(matlis_dual(q2)));
  CHECK(dd.length == 2);
  CHECK(dd.mu == 1);
}

TEST_CASE("vector spaces over any algebra are ulrich") {
  auto a = build_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
  auto k2 = k_power(a, 2);
  auto inv = artin_invariants(k2);
  CHECK(inv.length == 2);
  CHECK(inv.mu == 2);
  CHECK(inv.is_ulrich);
  CHECK(inv.c_min == Rat(1));
  auto dual = artin_invariants(matlis_dual(k2));
  CHECK(dual.mu == 2);
}

TEST_CASE("socle summand detection") {
  auto a = build_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
  auto r = regular_module(a);
  auto rr = socle_summand_test(r);
  CHECK_FALSE(rr.summand);
  CHECK_FALSE(rr.witness.has_value());
  CHECK_FALSE(rr.inequality);

  auto e = socle_summand_test(matlis_dual(r));
  CHECK_FALSE(e.summand);

  auto k2 = socle_summand_test(k_power(a, 2));
  CHECK(k2.summand);
  CHECK(k2.witness.has_value());
  CHECK(k2.inequality);  // mu = 2 > 0 = l(mM) * edim

  auto mixed = socle_summand_test(artin_direct_sum(k_power(a, 1), r));
  CHECK(mixed.summand);
  CHECK(mixed.witness.has_value());
}

TEST_CASE("length splits as radical image plus generators") {
  auto a = build_algebra(2, {{3, 0}, {2, 1}, {0, 3}});
  auto mods = {regular_module(a), matlis_dual(regular_module(a)),
               cyclic_quotient(a, {{1, 1}}), k_power(a, 3)};
  for (const auto& m : mods) {
    auto inv = artin_invariants(m);
    CHECK(inv.length == radical_image_length(m) + inv.mu);
  }
}

TEST_CASE("generator inequality forces a socle summand on small algebras") {
  // sweep all two variable algebras (x^a, y^b, optional cross terms) with
  // length at most 12 and every nonzero cyclic quotient
  long instances = 0;
  for (int av = 1; av <= 4; ++av)
    for (int bv = 1; bv <= 4; ++bv)
      for (int mask = 0; mask < 4; ++mask) {
        std::vector<std::vector<int>> rel = {{av, 0}, {0, bv}};
        if (mask & 1) rel.push_back({1, 1});
        if (mask & 2) rel.push_back({2, 2});
        auto a = build_algebra(2, rel);
        if (a->length() > 12) continue;
        for (int p = 0; p <= av; ++p)
          for (int q = 0; q <= bv; ++q) {
            if (p == 0 && q == 0) continue;
            auto m = cyclic_quotient(a, {{p, q}});
            if (m.dim == 0) continue;
            auto res = socle_summand_test(m);
            auto inv = artin_invariants(m);
            CHECK(inv.length == radical_image_length(m) + inv.mu);
            if (res.inequality) CHECK(res.summand);
            ++instances;
          }
      }
  CHECK(instances > 100);
}

TEST_CASE("validate rejects matrices that break the relations") {
  auto a = build_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
  ArtinModule bad;
  bad.alg = a;
  bad.dim = 2;
  bad.action.assign(2, DenseMatrix(2, 2));
  bad.action[0].at(0, 1) = Scalar::one();
  bad.action[1].at(1, 1) = Scalar::one();
  CHECK_THROWS_AS(validate_module(bad), Error);
}
