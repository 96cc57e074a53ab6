#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ulrichlab/error.hpp"

namespace ulab {

// Coefficient field for all slice linear algebra: exact rationals (p == 0)
// or the prime field F_p. Chosen once per session; no floating point anywhere.
struct Field {
  std::uint64_t p = 0;
  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const { return p == 0 ? "rational" : "fp:" + std::to_string(p); }
};

// Session-global field. Set before building matrices/modules; read-only during
// parallel verifier sweeps.
Field session_field();
void set_session_field(Field f);
Field parse_field(const std::string& text);  // "rational" | "fp:<prime>"

class Scalar {
 public:
  Scalar() : p_(session_field().p) {}
  static Scalar from_int(long n);
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_int(1); }

  bool is_zero() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // o must be nonzero
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "n" or "n/d" for rationals, the residue for F_p
  std::string str() const;

 private:
  mpq_class q_;            // value when p_ == 0
  std::uint64_t r_ = 0;    // value when p_ > 0
  std::uint64_t p_;
  void check_same(const Scalar& o) const;
};

}  // namespace ulab
