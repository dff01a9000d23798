#pragma once

// Exact arithmetic in Q[sqrt 3]. Every lattice point of the triangulated plane,
// every point at rational position along a lattice segment, and every
// intersection of two lines through such points has coordinates in this field,
// so incidence and side-of-line decisions are bit-exact.

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>

namespace syslab {

// Normalized fraction with 64-bit numerator and positive denominator.
// Arithmetic throws Error(Overflow) rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit from integer
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  std::int64_t floor() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  std::string str() const;

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// p + q * sqrt(3).
class ExactScalar {
 public:
  constexpr ExactScalar() = default;
  ExactScalar(Rational p) : p_(p) {}  // NOLINT: implicit from rational
  ExactScalar(std::int64_t p) : p_(p) {}  // NOLINT: implicit from integer
  ExactScalar(Rational p, Rational q) : p_(p), q_(q) {}

  static ExactScalar sqrt3() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& sqrt3_part() const noexcept { return q_; }

  ExactScalar operator-() const { return {-p_, -q_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) noexcept {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const;
  bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }
  std::int64_t floor() const;
  double to_double() const noexcept;
  long double to_long_double() const noexcept;
  std::string str() const;

 private:
  Rational p_;
  Rational q_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

struct PlanePoint {
  ExactScalar x;
  ExactScalar y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend PlanePoint operator*(const ExactScalar& s, const PlanePoint& p) { return {s * p.x, s * p.y}; }

  double xd() const noexcept { return x.to_double(); }
  double yd() const noexcept { return y.to_double(); }
};

std::ostream& operator<<(std::ostream& os, const PlanePoint& p);

inline ExactScalar cross(const PlanePoint& a, const PlanePoint& b) { return a.x * b.y - a.y * b.x; }
inline ExactScalar dot(const PlanePoint& a, const PlanePoint& b) { return a.x * b.x + a.y * b.y; }
inline ExactScalar squared_norm(const PlanePoint& a) { return dot(a, a); }

// +1 if c lies left of the directed line a->b, -1 if right, 0 if collinear.
int orient(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);

// Closed-segment membership for a point already known to be collinear or not.
bool on_segment(const PlanePoint& a, const PlanePoint& b, const PlanePoint& p);

double euclidean_length(const PlanePoint& a, const PlanePoint& b);

}  // namespace syslab
