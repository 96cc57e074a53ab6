#pragma once

#include <numeric>
#include <string>

#include "ulrichlab/error.hpp"

namespace ulab {

// Exact ratio of module invariants (multiplicities, lengths, Betti numbers).
// Independent of the coefficient field: c_min prints as 3/2 under F_p too.
struct Rat {
  long num = 0;
  long den = 1;

  Rat() = default;
  Rat(long n) : num(n) {}
  Rat(long n, long d) : num(n), den(d) {
    if (d == 0) fail(Errc::Computation, "rational with zero denominator");
    normalize();
  }
  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }
  Rat operator+(Rat o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(Rat o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(Rat o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(Rat o) const {
    if (o.num == 0) fail(Errc::Computation, "rational division by zero");
    return Rat(num * o.den, den * o.num);
  }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat rat_pow(Rat b, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r = r * b;
  return r;
}

}  // namespace ulab
