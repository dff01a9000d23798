#pragma once

// Axial coordinates on the equilateral triangulation of the plane and its
// lattice-affine isometries. Pure arithmetic; no complex is involved here.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "syslab/exact.hpp"

namespace syslab {

struct AxialCoord {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const AxialCoord&, const AxialCoord&) = default;
  // Row-major (b first). Window vertex ids follow the same order, so
  // "lexicographic" tie-breaks mean the same thing everywhere.
  friend std::strong_ordering operator<=>(const AxialCoord& l, const AxialCoord& r) {
    if (auto c = l.b <=> r.b; c != 0) return c;
    return l.a <=> r.a;
  }
  friend AxialCoord operator+(AxialCoord l, AxialCoord r) { return {l.a + r.a, l.b + r.b}; }
  friend AxialCoord operator-(AxialCoord l, AxialCoord r) { return {l.a - r.a, l.b - r.b}; }
  friend AxialCoord operator*(std::int64_t k, AxialCoord v) { return {k * v.a, k * v.b}; }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const AxialCoord& c);

struct AxialHash {
  std::size_t operator()(const AxialCoord& c) const noexcept {
    return std::hash<std::int64_t>{}(c.a * 0x9E3779B97F4A7C15LL ^ (c.b + 0x632BE59BD9B4E019LL));
  }
};

// Counter-clockwise order; unit(k) for k mod 6.
inline constexpr std::array<AxialCoord, 6> kUnitSteps{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

std::int64_t lattice_norm(AxialCoord d);
std::int64_t lattice_distance(AxialCoord u, AxialCoord v);
bool lattice_adjacent(AxialCoord u, AxialCoord v);
PlanePoint embed(AxialCoord v);

// Inverse of embed for points that happen to be lattice points.
std::optional<AxialCoord> lattice_point_at(const PlanePoint& p);

// Vertices u with d(x,u) = i and d(u,y) = d(x,y) - i, sorted.
std::vector<AxialCoord> plane_layer(AxialCoord x, AxialCoord y, std::int64_t i);

// Lattice-affine map v -> M v + t. M ranges over the 12-element point group.
class PlaneIsometry {
 public:
  PlaneIsometry() = default;
  PlaneIsometry(std::array<std::int64_t, 4> m, AxialCoord t);

  static PlaneIsometry identity() { return {}; }
  static PlaneIsometry translation(AxialCoord t);
  // rotation by k * 60 degrees counter-clockwise about `center`
  static PlaneIsometry rotation60(int k, AxialCoord center = {});
  // (u, v) -> (v + a, u + b)
  static PlaneIsometry glide(AxialCoord t);
  static PlaneIsometry swap();

  AxialCoord apply(AxialCoord v) const;
  AxialCoord linear(AxialCoord v) const;
  PlaneIsometry then(const PlaneIsometry& next) const;  // next after this
  PlaneIsometry inverse() const;
  PlaneIsometry power(std::int64_t n) const;

  const std::array<std::int64_t, 4>& matrix() const noexcept { return m_; }
  AxialCoord translation_part() const noexcept { return t_; }
  bool is_translation() const noexcept { return m_ == std::array<std::int64_t, 4>{1, 0, 0, 1}; }
  bool is_identity() const noexcept { return is_translation() && t_ == AxialCoord{}; }

  friend bool operator==(const PlaneIsometry&, const PlaneIsometry&) = default;

  std::string str() const;

 private:
  std::array<std::int64_t, 4> m_{1, 0, 0, 1};
  AxialCoord t_{};
};

// Literal grammar: term ('*' term)*, applied right to left like composition;
// term := translate(a,b) | glide(a,b) | swap | identity | rot60^k [@ (a,b)].
PlaneIsometry parse_isometry(const std::string& text);

struct PlaneLine {
  PlanePoint point;
  PlanePoint direction;
};

// Straight line of the plane carrying layer i between x and y.
PlaneLine layer_line(std::int64_t i, AxialCoord x, AxialCoord y);

// Primitive lattice direction of all layers between x and y.
AxialCoord layer_direction(AxialCoord x, AxialCoord y);

}  // namespace syslab
