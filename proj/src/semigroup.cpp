#include "ulrichlab/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace ulab {

NumericalSemigroup NumericalSemigroup::build(std::vector<long> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (raw.empty()) fail(Errc::EmptyInput, "semigroup needs at least one generator");
  if (raw.front() <= 0) fail(Errc::EmptyInput, "semigroup generators must be positive");
  long g = 0;
  for (long a : raw) g = std::gcd(g, a);
  if (g != 1) fail(Errc::GcdNotOne, "generators have gcd " + std::to_string(g));

  long a1 = raw.front(), amax = raw.back();
  // Any residue mod a1 is hit by a sum of < a1 generators, so every Apery value
  // is <= (a1-1)*amax and F < a1*amax. DP membership up to that bound.
  if (a1 > 100000 || amax > 100000 || a1 * amax > 20000000)
    fail(Errc::EmptyInput, "generators too large for exact tabulation");
  long limit = a1 * amax + a1 + 1;
  std::vector<bool> mem(static_cast<size_t>(limit) + 1, false);
  mem[0] = true;
  for (long z = 1; z <= limit; ++z)
    for (long a : raw) {
      if (a > z) break;
      if (mem[static_cast<size_t>(z - a)]) { mem[static_cast<size_t>(z)] = true; break; }
    }

  NumericalSemigroup s;
  long fr = -1;
  for (long z = limit; z >= 0; --z)
    if (!mem[static_cast<size_t>(z)]) { fr = z; break; }
  s.frobenius_ = fr;
  s.member_.assign(mem.begin(), mem.begin() + fr + 1);
  if (fr < 0) s.member_.clear();
  for (long z = 1; z <= fr; ++z)
    if (!mem[static_cast<size_t>(z)]) s.gaps_.push_back(z);

  // minimal generators: a is redundant iff a = s1 + s2 with s1,s2 in S \ {0}
  for (long a : raw) {
    bool redundant = false;
    for (long z = a1; z <= a - a1; ++z)
      if (mem[static_cast<size_t>(z)] && mem[static_cast<size_t>(a - z)]) { redundant = true; break; }
    if (!redundant) s.gens_.push_back(a);
  }
  a1 = s.gens_.front();

  s.apery_.assign(static_cast<size_t>(a1), -1);
  for (long z = 0; z <= fr + a1; ++z) {
    if (!s.contains(z)) continue;
    long r = z % a1;
    if (s.apery_[static_cast<size_t>(r)] < 0) s.apery_[static_cast<size_t>(r)] = z;
  }

  for (long z : s.gaps_) {
    bool pf = true;
    for (long a : s.gens_)
      if (!s.contains(z + a)) { pf = false; break; }
    if (pf) s.pf_.push_back(z);
  }
  if (fr < 0) s.pf_ = {};  // S = N: no gaps; type taken as 1 below
  if (s.pf_.empty()) s.pf_ = {fr};  // S = N convention: PF = {-1}, type 1

  return s;
}

std::string NumericalSemigroup::str() const {
  std::string out = "<";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens_[i]);
  }
  return out + ">";
}

}  // namespace ulab
