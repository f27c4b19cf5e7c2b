#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "barycoords/errors.hpp"

namespace barycoords {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a);

/// Half the determinant of [p1 - p0, p2 - p0]; positive iff the triple is
/// counter-clockwise. The determinant is always evaluated on the
/// lexicographically sorted triple, so permuting the arguments changes only
/// the sign, bit for bit.
constexpr double signed_area(Point p0, Point p1, Point p2) {
  auto less = [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  double sign = 0.5;
  if (less(p1, p0)) { std::swap(p0, p1); sign = -sign; }
  if (less(p2, p1)) { std::swap(p1, p2); sign = -sign; }
  if (less(p1, p0)) { std::swap(p0, p1); sign = -sign; }
  return sign * cross(p1 - p0, p2 - p0);
}

/// Relative tolerance for on-boundary and degeneracy classification. Lengths
/// are compared against kGeomEps * diameter, areas against kGeomEps * diameter^2.
inline constexpr double kGeomEps = 1e-9;

/// A strictly convex polygon with counter-clockwise vertices. Only obtainable
/// through validate(), so every instance satisfies the convexity invariant.
class Polygon {
 public:
  static Polygon validate(std::vector<Point> points);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  /// Vertex by 0-based index taken modulo size(); negative indices wrap.
  Point vertex(std::ptrdiff_t i) const noexcept;
  double diameter() const noexcept { return diameter_; }
  double area() const noexcept;
  double length_tolerance() const noexcept { return kGeomEps * diameter_; }
  double area_tolerance() const noexcept { return kGeomEps * diameter_ * diameter_; }

  /// Axis-aligned bounding box as (min corner, max corner).
  std::array<Point, 2> bounds() const noexcept;

 private:
  Polygon(std::vector<Point> vertices, double diameter)
      : vertices_(std::move(vertices)), diameter_(diameter) {}

  std::vector<Point> vertices_;
  double diameter_;
};

/// Areal coordinates of x with respect to a counter-clockwise triangle. Values
/// may be negative when x lies outside the triangle.
std::array<double, 3> areal_coords(const std::array<Point, 3>& tri, Point x);

/// Affine coordinates of x with respect to a d-simplex given by d + 1 points in
/// R^d, computed as determinant ratios.
std::vector<double> simplex_volumetric_coords(const std::vector<std::vector<double>>& simplex,
                                              std::span<const double> x);

struct EdgeFrame {
  Point normal;    // outward unit normal of edge v_i -> v_{i+1}
  double support;  // <v_i - x | normal>, the distance from x to the edge line
};

std::vector<EdgeFrame> edge_frames(const Polygon& poly, Point x);

struct Location {
  enum class Kind { Interior, OnEdge, AtVertex, Outside };
  Kind kind = Kind::Outside;
  std::size_t index = 0;  // edge index for OnEdge, vertex index for AtVertex
  double t = 0.0;         // parameter along v_index -> v_{index+1} for OnEdge

  bool inside_or_boundary() const noexcept { return kind != Kind::Outside; }
};

Location locate(const Polygon& poly, Point x);

/// Weight vector over polygon vertices.
struct BaryCoords {
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  double operator[](std::size_t i) const { return weights[i]; }
  double sum() const noexcept;
  /// Σ w_i v_i.
  Point combine(const Polygon& poly) const;

  /// Normalizes nonnegative raw weights to sum 1. Components in (-1e-12, 0)
  /// relative to the largest weight are clamped to zero; anything more
  /// negative raises DegenerateGeometry.
  static BaryCoords normalized(std::vector<double> raw);
  static BaryCoords delta(std::size_t n, std::size_t i);
};

inline constexpr double kWeightEps = 1e-10;

}  // namespace barycoords
