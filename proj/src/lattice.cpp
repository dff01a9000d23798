#include "syslab/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "syslab/error.hpp"

namespace syslab {

std::string AxialCoord::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::ostream& operator<<(std::ostream& os, const AxialCoord& c) { return os << c.str(); }

std::int64_t lattice_norm(AxialCoord d) {
  const std::int64_t p = d.a, q = d.b;
  if ((p >= 0 && q >= 0) || (p <= 0 && q <= 0)) return std::llabs(p + q);
  return std::max(std::llabs(p), std::llabs(q));
}

std::int64_t lattice_distance(AxialCoord u, AxialCoord v) { return lattice_norm(v - u); }

bool lattice_adjacent(AxialCoord u, AxialCoord v) { return lattice_distance(u, v) == 1; }

PlanePoint embed(AxialCoord v) {
  return {ExactScalar(Rational(2 * v.a + v.b, 2)), ExactScalar(Rational(0), Rational(v.b, 2))};
}

std::optional<AxialCoord> lattice_point_at(const PlanePoint& p) {
  if (!p.x.sqrt3_part().is_zero() || !p.y.rational_part().is_zero()) return std::nullopt;
  const Rational b2 = p.y.sqrt3_part() * Rational(2);
  if (!b2.is_integer()) return std::nullopt;
  const Rational a = p.x.rational_part() - b2 / Rational(2);
  if (!a.is_integer()) return std::nullopt;
  return AxialCoord{a.num(), b2.num()};
}

std::vector<AxialCoord> plane_layer(AxialCoord x, AxialCoord y, std::int64_t i) {
  const std::int64_t n = lattice_distance(x, y);
  std::vector<AxialCoord> out;
  if (i < 0 || i > n) return out;
  for (std::int64_t db = -i; db <= i; ++db) {
    for (std::int64_t da = -i; da <= i; ++da) {
      const AxialCoord u = x + AxialCoord{da, db};
      if (lattice_norm({da, db}) == i && lattice_distance(u, y) == n - i) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::array<std::int64_t, 4> kIdentity{1, 0, 0, 1};

AxialCoord mul(const std::array<std::int64_t, 4>& m, AxialCoord v) {
  return {m[0] * v.a + m[1] * v.b, m[2] * v.a + m[3] * v.b};
}

std::array<std::int64_t, 4> mul(const std::array<std::int64_t, 4>& l, const std::array<std::int64_t, 4>& r) {
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2],
          l[2] * r[1] + l[3] * r[3]};
}

// (a, b) -> (-b, a + b)
constexpr std::array<std::int64_t, 4> kRot{0, -1, 1, 1};

}  // namespace

PlaneIsometry::PlaneIsometry(std::array<std::int64_t, 4> m, AxialCoord t) : m_(m), t_(t) {
  for (const AxialCoord& e : kUnitSteps) {
    const AxialCoord img = mul(m_, e);
    if (std::find(kUnitSteps.begin(), kUnitSteps.end(), img) == kUnitSteps.end())
      throw Error(ErrorCode::InvalidArgument, "matrix does not preserve the lattice neighbor set");
  }
}

PlaneIsometry PlaneIsometry::translation(AxialCoord t) { return {kIdentity, t}; }

PlaneIsometry PlaneIsometry::rotation60(int k, AxialCoord center) {
  k = ((k % 6) + 6) % 6;
  std::array<std::int64_t, 4> m = kIdentity;
  for (int i = 0; i < k; ++i) m = mul(kRot, m);
  // v -> M (v - c) + c
  return {m, center - mul(m, center)};
}

PlaneIsometry PlaneIsometry::glide(AxialCoord t) { return {{0, 1, 1, 0}, t}; }

PlaneIsometry PlaneIsometry::swap() { return {{0, 1, 1, 0}, {}}; }

AxialCoord PlaneIsometry::apply(AxialCoord v) const { return mul(m_, v) + t_; }

AxialCoord PlaneIsometry::linear(AxialCoord v) const { return mul(m_, v); }

PlaneIsometry PlaneIsometry::then(const PlaneIsometry& next) const {
  return {mul(next.m_, m_), mul(next.m_, t_) + next.t_};
}

PlaneIsometry PlaneIsometry::inverse() const {
  // point-group matrices have determinant +-1
  const std::int64_t det = m_[0] * m_[3] - m_[1] * m_[2];
  const std::array<std::int64_t, 4> inv{m_[3] * det, -m_[1] * det, -m_[2] * det, m_[0] * det};
  return {inv, AxialCoord{} - mul(inv, t_)};
}

PlaneIsometry PlaneIsometry::power(std::int64_t n) const {
  PlaneIsometry base = n < 0 ? inverse() : *this;
  std::int64_t e = n < 0 ? -n : n;
  PlaneIsometry acc;
  while (e > 0) {
    if (e & 1) acc = acc.then(base);
    base = base.then(base);
    e >>= 1;
  }
  return acc;
}

std::string PlaneIsometry::str() const {
  std::ostringstream os;
  if (is_translation()) {
    os << "translate(" << t_.a << "," << t_.b << ")";
  } else if (m_ == std::array<std::int64_t, 4>{0, 1, 1, 0}) {
    os << "glide(" << t_.a << "," << t_.b << ")";
  } else {
    os << "affine(" << m_[0] << "," << m_[1] << "," << m_[2] << "," << m_[3] << "," << t_.a << ","
       << t_.b << ")";
  }
  return os.str();
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& s) : s_(s) {}

  PlaneIsometry parse() {
    PlaneIsometry result = term();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      // A * B applies B first
      result = term().then(result);
      skip();
    }
    if (pos_ != s_.size()) fail("trailing characters");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "isometry literal '" + s_ + "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  std::vector<std::int64_t> args() {
    expect('(');
    std::vector<std::int64_t> out{integer()};
    while (accept(',')) out.push_back(integer());
    expect(')');
    return out;
  }

  AxialCoord pair() {
    const auto v = args();
    if (v.size() != 2) fail("expected a coordinate pair");
    return {v[0], v[1]};
  }

  PlaneIsometry term() {
    const std::string w = word();
    if (w == "translate") return PlaneIsometry::translation(pair());
    if (w == "glide") return PlaneIsometry::glide(pair());
    if (w == "swap") return PlaneIsometry::swap();
    if (w == "identity") return PlaneIsometry::identity();
    if (w == "affine") {
      const auto v = args();
      if (v.size() != 6) fail("affine takes six integers");
      return PlaneIsometry({v[0], v[1], v[2], v[3]}, {v[4], v[5]});
    }
    if (w == "rot60") {
      std::int64_t k = 1;
      if (accept('^')) k = integer();
      AxialCoord center{};
      if (accept('@')) center = pair();
      return PlaneIsometry::rotation60(static_cast<int>(k % 6), center);
    }
    fail(w.empty() ? "expected an isometry" : "unknown isometry '" + w + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

PlaneIsometry parse_isometry(const std::string& text) {
  try {
    return LiteralParser(text).parse();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

AxialCoord layer_direction(AxialCoord x, AxialCoord y) {
  const AxialCoord d = y - x;
  if (d == AxialCoord{}) return {-1, 2};
  for (int k = 0; k < 6; ++k) {
    const AxialCoord e = kUnitSteps[k];
    const AxialCoord f = kUnitSteps[(k + 1) % 6];
    // d = alpha e + beta f, det(e, f) = 1
    const std::int64_t alpha = d.a * f.b - d.b * f.a;
    const std::int64_t beta = e.a * d.b - e.b * d.a;
    if (alpha > 0 && beta >= 0) {
      if (beta > 0) return f - e;
      // along a lattice direction: every layer is one vertex, use the perpendicular line
      return f - kUnitSteps[(k + 5) % 6];
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no sector contains " + d.str());
}

PlaneLine layer_line(std::int64_t i, AxialCoord x, AxialCoord y) {
  const std::vector<AxialCoord> layer = plane_layer(x, y, i);
  if (layer.empty()) throw Error(ErrorCode::EmptyLayer, "layer " + std::to_string(i) + " between " + x.str() + " and " + y.str());
  return {embed(layer.front()), embed(layer_direction(x, y))};
}

}  // namespace syslab
