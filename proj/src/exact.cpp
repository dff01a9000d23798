#include "syslab/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "syslab/error.hpp"

namespace syslab {
namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits31(std::int64_t v) { return v > -(std::int64_t{1} << 31) && v < (std::int64_t{1} << 31); }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (abs128(n) > kMax || d > kMax) throw Error(ErrorCode::Overflow, "rational exceeds 64 bits");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = from_wide(static_cast<i128>(num_) + o.num_, den_);
  return *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                           static_cast<i128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // cross-reduce first so the 128-bit products stay small
  const i128 g1 = gcd128(num_, o.den_);
  const i128 g2 = gcd128(o.num_, den_);
  const i128 a = g1 > 1 ? num_ / g1 : num_;
  const i128 d2 = g1 > 1 ? o.den_ / g1 : o.den_;
  const i128 c = g2 > 1 ? o.num_ / g2 : o.num_;
  const i128 d1 = g2 > 1 ? den_ / g2 : den_;
  return *this = from_wide(a * c, d1 * d2);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return *this *= from_wide(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  return l <=> r;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (q_.is_zero() && o.q_.is_zero()) {
    p_ *= o.p_;
    return *this;
  }
  const Rational p = p_ * o.p_ + Rational(3) * q_ * o.q_;
  const Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = p;
  q_ = q;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  // multiply by the conjugate: 1/(a + b r3) = (a - b r3) / (a^2 - 3 b^2)
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  const Rational norm = o.p_ * o.p_ - Rational(3) * o.q_ * o.q_;
  *this *= ExactScalar(o.p_ / norm, -o.q_ / norm);
  return *this;
}

int ExactScalar::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // opposite signs: compare p^2 against 3 q^2, i.e. (a d)^2 against 3 (c b)^2
  const std::int64_t a = p_.num(), b = p_.den(), c = q_.num(), d = q_.den();
  int cmp;
  if (fits31(a) && fits31(b) && fits31(c) && fits31(d)) {
    const i128 ad = static_cast<i128>(a) * d;
    const i128 cb = static_cast<i128>(c) * b;
    const i128 l = ad * ad;
    const i128 r = 3 * cb * cb;
    cmp = (l > r) - (l < r);
  } else {
    using boost::multiprecision::int256_t;
    const int256_t ad = int256_t(a) * d;
    const int256_t cb = int256_t(c) * b;
    const int256_t l = ad * ad;
    const int256_t r = 3 * cb * cb;
    cmp = (l > r) - (l < r);
  }
  // |p| dominates when p^2 > 3 q^2
  return cmp > 0 ? sp : (cmp < 0 ? sq : 0);
}

std::int64_t ExactScalar::floor() const {
  auto f = static_cast<std::int64_t>(std::floor(to_long_double()));
  while (*this < ExactScalar(f)) --f;
  while (!(*this < ExactScalar(f + 1))) ++f;
  return f;
}

double ExactScalar::to_double() const noexcept { return static_cast<double>(to_long_double()); }

long double ExactScalar::to_long_double() const noexcept {
  static const long double r3 = std::sqrt(3.0L);
  return p_.to_long_double() + q_.to_long_double() * r3;
}

std::string ExactScalar::str() const {
  if (q_.is_zero()) return p_.str();
  std::ostringstream os;
  if (!p_.is_zero()) os << p_ << (q_.sign() > 0 ? "+" : "");
  os << q_ << "*r3";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

std::ostream& operator<<(std::ostream& os, const PlanePoint& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

int orient(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  // long double estimate first; exact only when it is within rounding of zero
  const long double ax = a.x.to_long_double(), ay = a.y.to_long_double();
  const long double ux = b.x.to_long_double() - ax, uy = b.y.to_long_double() - ay;
  const long double vx = c.x.to_long_double() - ax, vy = c.y.to_long_double() - ay;
  const long double v = ux * vy - uy * vx;
  const long double scale = std::fabs(ux * vy) + std::fabs(uy * vx) + std::fabs(ax) + std::fabs(ay) + 1;
  if (std::fabs(v) > 1e-12L * scale) return v > 0 ? 1 : -1;
  return cross(b - a, c - a).sign();
}

bool on_segment(const PlanePoint& a, const PlanePoint& b, const PlanePoint& p) {
  const long double px = p.x.to_long_double(), py = p.y.to_long_double();
  const long double ax = a.x.to_long_double(), ay = a.y.to_long_double();
  const long double bx = b.x.to_long_double(), by = b.y.to_long_double();
  constexpr long double slack = 1e-9L;
  if (px < std::min(ax, bx) - slack || px > std::max(ax, bx) + slack || py < std::min(ay, by) - slack ||
      py > std::max(ay, by) + slack)
    return false;
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, p - b).sign() <= 0;
}

double euclidean_length(const PlanePoint& a, const PlanePoint& b) {
  const PlanePoint d = b - a;
  return std::sqrt(static_cast<double>(squared_norm(d).to_long_double()));
}

}  // namespace syslab
