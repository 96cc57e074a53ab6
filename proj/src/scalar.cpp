#include "ulrichlab/scalar.hpp"

#include <atomic>

namespace ulab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::SemigroupMismatch: return "SemigroupMismatch";
    case Errc::NotMPrimary: return "NotMPrimary";
    case Errc::NotContained: return "NotContained";
    case Errc::NotSubideal: return "NotSubideal";
    case Errc::OutOfWindow: return "OutOfWindow";
    case Errc::WindowUnstable: return "WindowUnstable";
    case Errc::SupportTouchesBoundary: return "SupportTouchesBoundary";
    case Errc::NotMCM: return "NotMCM";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::ZeroModule: return "ZeroModule";
    case Errc::NotArtinian: return "NotArtinian";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::TypeError: return "TypeError";
    case Errc::Computation: return "Computation";
  }
  return "Error";
}

namespace {
Field g_field;  // default: rationals

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}
}  // namespace

Field session_field() { return g_field; }

void set_session_field(Field f) {
  if (f.p != 0 && (!is_prime_u64(f.p) || f.p >= (1ull << 31)))
    fail(Errc::TypeError, "field characteristic must be a prime < 2^31, got " + std::to_string(f.p));
  g_field = f;
}

Field parse_field(const std::string& text) {
  if (text == "rational") return Field{0};
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(text.substr(3));
    } catch (...) {
      fail(Errc::TypeError, "bad field spec '" + text + "'");
    }
    Field f{p};
    if (!is_prime_u64(p) || p >= (1ull << 31))
      fail(Errc::TypeError, "field characteristic must be a prime < 2^31, got " + text);
    return f;
  }
  fail(Errc::TypeError, "bad field spec '" + text + "' (want rational or fp:<prime>)");
}

Scalar Scalar::from_int(long n) {
  Scalar s;
  if (s.p_ == 0) {
    s.q_ = n;
  } else {
    long m = n % static_cast<long>(s.p_);
    if (m < 0) m += static_cast<long>(s.p_);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) fail(Errc::TypeError, "mixed coefficient fields in one expression");
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (p_ == 0) s.q_ = q_ + o.q_;
  else s.r_ = (r_ + o.r_) % p_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (p_ == 0) s.q_ = q_ - o.q_;
  else s.r_ = (r_ + p_ - o.r_) % p_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (p_ == 0) s.q_ = q_ * o.q_;
  else s.r_ = static_cast<std::uint64_t>((unsigned __int128)r_ * o.r_ % p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) fail(Errc::Computation, "division by zero scalar");
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = q_ / o.q_;
    s.q_.canonicalize();
  } else {
    s.r_ = static_cast<std::uint64_t>((unsigned __int128)r_ * powmod(o.r_, p_ - 2, p_) % p_);
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) s.q_ = -q_;
  else s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace ulab
