#include "doctest.h"

#include "ulrichlab/error.hpp"
#include "ulrichlab/matrix.hpp"
#include "ulrichlab/rat.hpp"
#include "ulrichlab/scalar.hpp"

using namespace ulab;

namespace {

// deterministic small integers for property checks
struct Lcg {
  std::uint64_t s;
  long next(long lo, long hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

struct FieldGuard {
  Field saved = session_field();
  ~FieldGuard() { set_session_field(saved); }
};

DenseMatrix from_ints(int r, int c, const std::vector<long>& entries) {
  DenseMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(entries[static_cast<size_t>(i) * c + j]);
  return m;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rational scalar arithmetic") {
  FieldGuard guard;
  set_session_field(parse_field("rational"));
  Scalar third = Scalar::from_int(1) / Scalar::from_int(3);
  Scalar sixth = Scalar::from_int(1) / Scalar::from_int(6);
  CHECK((third + sixth).str() == "1/2");
  CHECK((third * Scalar::from_int(3)) == Scalar::one());
  CHECK((third - third).is_zero());
  CHECK(Scalar::from_int(-2).str() == "-2");
  CHECK((-Scalar::from_int(5) + Scalar::from_int(5)).is_zero());
}

TEST_CASE("prime field scalar arithmetic") {
  FieldGuard guard;
  set_session_field(parse_field("fp:32003"));
  Scalar third = Scalar::from_int(1) / Scalar::from_int(3);
  CHECK((third * Scalar::from_int(3)) == Scalar::one());
  CHECK(Scalar::from_int(32003).is_zero());
  CHECK(Scalar::from_int(-1) == Scalar::from_int(32002));
  Scalar a = Scalar::from_int(12345);
  CHECK(a / a == Scalar::one());
}

TEST_CASE("field parsing rejects junk") {
  CHECK_THROWS_AS(parse_field("fp:6"), Error);        // composite
  CHECK_THROWS_AS(parse_field("real"), Error);
  CHECK(parse_field("fp:65537").p == 65537);
  CHECK(parse_field("rational").is_rational());
}

TEST_CASE("mixed-field operations are rejected") {
  FieldGuard guard;
  set_session_field(parse_field("rational"));
  Scalar q = Scalar::from_int(2);
  set_session_field(parse_field("fp:32003"));
  Scalar r = Scalar::from_int(2);
  CHECK_THROWS_AS((void)(q + r), Error);
}

TEST_CASE("echelon span bookkeeping") {
  FieldGuard guard;
  set_session_field(parse_field("rational"));
  Echelon e(3);
  auto vec = [](long a, long b, long c) {
    return Vec{Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c)};
  };
  CHECK(e.add(vec(1, 2, 3)));
  CHECK_FALSE(e.add(vec(2, 4, 6)));  // dependent
  CHECK(e.rank() == 1);
  CHECK(e.add(vec(0, 1, 1)));
  CHECK(e.rank() == 2);
  CHECK(e.contains(vec(1, 3, 4)));
  CHECK_FALSE(e.contains(vec(0, 0, 1)));
  // reduce() vanishes at pivot coordinates
  Vec res = e.reduce(vec(5, 7, 11));
  CHECK(res[0].is_zero());
  CHECK(res[1].is_zero());
  CHECK_FALSE(res[2].is_zero());
  CHECK(e.nonpivots() == std::vector<int>{2});
}

TEST_CASE("rank, kernel, membership on fixed matrices") {
  FieldGuard guard;
  set_session_field(parse_field("rational"));

  DenseMatrix sing = from_ints(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(rank(sing) == 2);

  DenseMatrix m = from_ints(2, 3, {1, 2, 3, 0, 1, 1});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Scalar::from_int(-1));
  CHECK(ker[0][1] == Scalar::from_int(-1));
  CHECK(ker[0][2] == Scalar::one());
  CHECK(is_zero_vec(m.apply(ker[0])));

  DenseMatrix sq = from_ints(2, 2, {1, 2, 3, 4});
  auto sol = solve_membership(sq, Vec{Scalar::from_int(5), Scalar::from_int(11)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Scalar::one());
  CHECK((*sol)[1] == Scalar::from_int(2));

  // inconsistent system
  DenseMatrix flat = from_ints(2, 2, {1, 1, 2, 2});
  CHECK_FALSE(solve_membership(flat, Vec{Scalar::zero(), Scalar::one()}).has_value());
}

TEST_CASE("rank-nullity and modular rank bound") {
  Lcg rng{20260817};
  for (int trial = 0; trial < 12; ++trial) {
    int r = static_cast<int>(rng.next(1, 5));
    int c = static_cast<int>(rng.next(1, 5));
    std::vector<long> entries(static_cast<size_t>(r) * c);
    for (auto& x : entries) x = rng.next(-4, 4);

    FieldGuard guard;
    set_session_field(parse_field("rational"));
    DenseMatrix mq = from_ints(r, c, entries);
    int rq = rank(mq);
    auto ker = kernel_basis(mq);
    CHECK(rq + static_cast<int>(ker.size()) == c);
    for (const auto& v : ker) CHECK(is_zero_vec(mq.apply(v)));

    set_session_field(parse_field("fp:32003"));
    DenseMatrix mp = from_ints(r, c, entries);
    CHECK(rank(mp) <= rq);  // rank can only drop mod p
  }
}

TEST_CASE("invariant ratios are field independent") {
  CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(-4, -2).str() == "2");
  CHECK(Rat(1, -2).num == -1);
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(Rat(3, 2) > Rat(4, 3));
  CHECK_THROWS_AS(Rat(1, 2) / Rat(0), Error);
}
