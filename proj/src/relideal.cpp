#include "ulrichlab/relideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ulrichlab/error.hpp"

namespace ulab {

namespace {

// z lies in the ideal generated by gens: z = g + s for some gen g, s in S
bool in_span(const NumericalSemigroup& s, const std::vector<long>& gens, long z) {
  for (long g : gens) {
    if (z >= g && s.contains(z - g)) return true;
  }
  return false;
}

}  // namespace

RelativeIdeal RelativeIdeal::normalize(SgpPtr s, std::vector<long> raw) {
  if (!s) fail(Errc::EmptyInput, "relative ideal needs a semigroup");
  if (raw.empty()) fail(Errc::EmptyInput, "relative ideal needs at least one generator");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // g is redundant iff it lies in the span of the remaining generators; since
  // generators are sorted, only smaller ones can cover g
  std::vector<long> kept;
  for (long g : raw) {
    if (!in_span(*s, kept, g)) kept.push_back(g);
  }
  // a generator above min + F(S) is always redundant, so kept is already
  // within the window [min, min + F]; nothing further to trim
  RelativeIdeal e;
  e.sgp_ = std::move(s);
  e.gens_ = std::move(kept);
  return e;
}

bool RelativeIdeal::contains(long z) const { return in_span(*sgp_, gens_, z); }

bool RelativeIdeal::inside_ring() const {
  for (long g : gens_) {
    if (!sgp_->contains(g)) return false;
  }
  return true;
}

bool RelativeIdeal::operator==(const RelativeIdeal& o) const {
  return *sgp_ == *o.sgp_ && gens_ == o.gens_;
}

std::string RelativeIdeal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ",";
    os << gens_[i];
  }
  os << ")";
  return os.str();
}

RelativeIdeal ring_ideal(SgpPtr s) { return RelativeIdeal::normalize(std::move(s), {0}); }

RelativeIdeal maximal_ideal(SgpPtr s) {
  std::vector<long> g = s->generators();
  return RelativeIdeal::normalize(std::move(s), std::move(g));
}

RelativeIdeal canonical_ideal(SgpPtr s) {
  // K = {z : F - z not in S}; its minimal generators are F - f over the
  // pseudo-Frobenius numbers f, and min K = F - F = 0... careful: min K is
  // F - max(PF) = 0 exactly because max(PF) = F. For S = N this gives {0}.
  std::vector<long> gens;
  long fr = s->frobenius();
  for (long f : s->pseudo_frobenius()) gens.push_back(fr - f);
  return RelativeIdeal::normalize(std::move(s), std::move(gens));
}

namespace {

void check_same(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!(*e.semigroup() == *f.semigroup()))
    fail(Errc::SemigroupMismatch, "ideals live over different semigroups");
}

}  // namespace

RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f) {
  check_same(e, f);
  std::vector<long> sums;
  sums.reserve(e.gens().size() * f.gens().size());
  for (long a : e.gens())
    for (long b : f.gens()) sums.push_back(a + b);
  return RelativeIdeal::normalize(e.semigroup(), std::move(sums));
}

RelativeIdeal power(const RelativeIdeal& e, long n) {
  if (n < 0) fail(Errc::EmptyInput, "ideal power wants a nonnegative exponent");
  RelativeIdeal acc = ring_ideal(e.semigroup());
  for (long i = 0; i < n; ++i) acc = product(acc, e);
  return acc;
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  check_same(e, f);
  // (E : F) = {z : z + g in E for every generator g of F}. Any member obeys
  // z >= min(E) - max(gens F). Conversely z* = min(E) + F(S) + 1 - min(gens F)
  // is always a member, so min(colon) <= z*, and the minimal generators of a
  // relative ideal sit within one Frobenius window above its minimum. Scanning
  // [lo, z* + F(S)] therefore sees every minimal generator.
  const auto& s = *e.semigroup();
  long fr = std::max<long>(s.frobenius(), 0);
  long lo = e.min() - f.max_gen();
  long hi = e.min() - f.min() + 2 * fr + 1;
  std::vector<long> members;
  for (long z = lo; z <= hi; ++z) {
    bool ok = true;
    for (long g : f.gens()) {
      if (!e.contains(z + g)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(z);
  }
  if (members.empty()) fail(Errc::Computation, "colon ideal came out empty");
  RelativeIdeal out = RelativeIdeal::normalize(e.semigroup(), std::move(members));
  // safety net: one multiplicity step further must add no new generator
  for (long z = hi + 1; z <= hi + s.multiplicity(); ++z) {
    bool ok = true;
    for (long g : f.gens()) {
      if (!e.contains(z + g)) {
        ok = false;
        break;
      }
    }
    if (ok && !out.contains(z)) fail(Errc::Computation, "colon scan window too small");
  }
  return out;
}

long ideal_multiplicity(const RelativeIdeal& i) {
  if (!i.inside_ring())
    fail(Errc::NotMPrimary, "multiplicity needs an ideal contained in the ring");
  if (i.min() <= 0)
    fail(Errc::NotMPrimary, "multiplicity needs a proper ideal");
  return i.min();
}

long quotient_length(const RelativeIdeal& e, const RelativeIdeal& f) {
  check_same(e, f);
  for (long g : f.gens()) {
    if (!e.contains(g)) fail(Errc::NotSubideal, "length of E/F needs F inside E");
  }
  // E and F agree from min(F) + F(S) + 1 on, so the difference is finite and
  // supported below that point
  long fr = e.semigroup()->frobenius();
  long hi = f.min() + std::max<long>(fr, 0);
  long count = 0;
  for (long z = e.min(); z <= hi; ++z) {
    if (e.contains(z) && !f.contains(z)) ++count;
  }
  return count;
}

std::optional<long> shift_between(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!(*e.semigroup() == *f.semigroup())) return std::nullopt;
  if (e.gens().size() != f.gens().size()) return std::nullopt;
  long c = f.min() - e.min();
  for (std::size_t i = 0; i < e.gens().size(); ++i) {
    if (e.gens()[i] + c != f.gens()[i]) return std::nullopt;
  }
  return c;
}

bool shift_equivalent(const RelativeIdeal& e, const RelativeIdeal& f) {
  return shift_between(e, f).has_value();
}

RelativeIdeal shift(const RelativeIdeal& e, long c) {
  std::vector<long> g = e.gens();
  for (long& z : g) z += c;
  return RelativeIdeal::normalize(e.semigroup(), std::move(g));
}

long display_shift(const RelativeIdeal& e) {
  const auto& s = *e.semigroup();
  for (long c = std::max<long>(0, 1 - e.min());; ++c) {
    bool ok = true;
    for (long g : e.gens()) {
      if (g + c <= 0 || !s.contains(g + c)) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
}

}  // namespace ulab
