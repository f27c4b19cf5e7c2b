#include "barycoords/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace barycoords {

double norm(Point a) { return std::hypot(a.x, a.y); }

Polygon Polygon::validate(std::vector<Point> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::ParseError, "vertex coordinates must be finite");
    }
  }
  double diameter = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      diameter = std::max(diameter, norm(points[i] - points[j]));
    }
  }
  if (diameter == 0.0) {
    throw Error(ErrorCode::DegenerateTriple, "all vertices coincide");
  }
  const double eps_len = kGeomEps * diameter;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norm(points[i] - points[j]) <= eps_len) {
        throw Error(ErrorCode::DegenerateTriple,
                    "duplicate vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
      }
    }
  }

  const double eps_area = kGeomEps * diameter * diameter;
  std::size_t positive = 0;
  std::size_t negative = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = signed_area(points[(i + n - 1) % n], points[i], points[(i + 1) % n]);
    if (std::abs(a) <= eps_area) {
      throw Error(ErrorCode::DegenerateTriple,
                  "vertices around " + std::to_string(i + 1) + " are collinear");
    }
    (a > 0 ? positive : negative) += 1;
  }
  if (negative == n) {
    throw Error(ErrorCode::WrongOrientation,
                "vertices are clockwise; reverse the vertex order");
  }
  if (negative > 0) {
    throw Error(ErrorCode::NotConvex, "vertex turns are not all counter-clockwise");
  }

  // Locally convex turns can still wind around more than once (a star); the
  // total turning of a simple convex polygon is exactly 2π.
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = points[i] - points[(i + n - 1) % n];
    const Point e1 = points[(i + 1) % n] - points[i];
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(turning - 2.0 * M_PI) > 1e-6) {
    throw Error(ErrorCode::NotConvex, "boundary winds more than once");
  }
  return Polygon(std::move(points), diameter);
}

Point Polygon::vertex(std::ptrdiff_t i) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

double Polygon::area() const noexcept {
  double a = 0.0;
  for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
    a += signed_area(vertices_[0], vertices_[i], vertices_[i + 1]);
  }
  return a;
}

std::array<Point, 2> Polygon::bounds() const noexcept {
  Point lo = vertices_.front();
  Point hi = vertices_.front();
  for (const Point& p : vertices_) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return {lo, hi};
}

std::array<double, 3> areal_coords(const std::array<Point, 3>& tri, Point x) {
  const double diam = std::max({norm(tri[0] - tri[1]), norm(tri[1] - tri[2]), norm(tri[2] - tri[0])});
  const double total = signed_area(tri[0], tri[1], tri[2]);
  if (!(std::abs(total) > kGeomEps * diam * diam)) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle has (near) zero area");
  }
  // <x|v_i> = A(v_{i-1}, x, v_{i+1}) / A(v_0, v_1, v_2)
  std::array<double, 3> out{};
  out[0] = signed_area(tri[2], x, tri[1]) / total;
  out[1] = signed_area(tri[0], x, tri[2]) / total;
  out[2] = signed_area(tri[1], x, tri[0]) / total;
  return out;
}

std::vector<double> simplex_volumetric_coords(const std::vector<std::vector<double>>& simplex,
                                              std::span<const double> x) {
  const std::size_t d = x.size();
  if (simplex.size() != d + 1) {
    throw Error(ErrorCode::DegenerateSimplex, "a d-simplex needs d + 1 vertices");
  }
  for (const auto& v : simplex) {
    if (v.size() != d) {
      throw Error(ErrorCode::DegenerateSimplex, "vertex dimension mismatch");
    }
  }
  // Homogeneous matrix with rows (1, v_i); the coordinate of v_i is the ratio
  // of determinants with row i replaced by (1, x).
  Eigen::MatrixXd m(d + 1, d + 1);
  double scale = 0.0;
  for (std::size_t i = 0; i <= d; ++i) {
    m(static_cast<Eigen::Index>(i), 0) = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k + 1)) = simplex[i][k];
    }
    for (std::size_t j = 0; j < i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        s += (simplex[i][k] - simplex[j][k]) * (simplex[i][k] - simplex[j][k]);
      }
      scale = std::max(scale, std::sqrt(s));
    }
  }
  const double total = m.determinant();
  if (!(std::abs(total) > kGeomEps * std::pow(scale, static_cast<double>(d)))) {
    throw Error(ErrorCode::DegenerateSimplex, "simplex has (near) zero volume");
  }
  std::vector<double> out(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    Eigen::MatrixXd mi = m;
    for (std::size_t k = 0; k < d; ++k) {
      mi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k + 1)) = x[k];
    }
    out[i] = mi.determinant() / total;
  }
  return out;
}

namespace {

Point outward_normal(Point a, Point b) {
  const Point e = b - a;
  const double len = norm(e);
  return {e.y / len, -e.x / len};
}

}  // namespace

std::vector<EdgeFrame> edge_frames(const Polygon& poly, Point x) {
  if (!locate(poly, x).inside_or_boundary()) {
    throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
  }
  const std::size_t n = poly.size();
  std::vector<EdgeFrame> frames(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point vi = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point normal = outward_normal(vi, poly.vertex(static_cast<std::ptrdiff_t>(i + 1)));
    frames[i] = {normal, std::max(0.0, dot(vi - x, normal))};
  }
  return frames;
}

Location locate(const Polygon& poly, Point x) {
  const std::size_t n = poly.size();
  const double eps = poly.length_tolerance();

  for (std::size_t i = 0; i < n; ++i) {
    if (norm(x - poly.vertex(static_cast<std::ptrdiff_t>(i))) <= eps) {
      return {Location::Kind::AtVertex, i, 0.0};
    }
  }

  std::size_t on_edge = n;
  double min_dist = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point b = poly.vertex(static_cast<std::ptrdiff_t>(i + 1));
    const double dist = cross(b - a, x - a) / norm(b - a);  // positive inside
    if (dist < -eps) {
      return {Location::Kind::Outside, 0, 0.0};
    }
    if (dist <= eps && (on_edge == n || dist < min_dist)) {
      on_edge = i;
      min_dist = dist;
    }
  }
  if (on_edge == n) {
    return {Location::Kind::Interior, 0, 0.0};
  }
  const Point a = poly.vertex(static_cast<std::ptrdiff_t>(on_edge));
  const Point e = poly.vertex(static_cast<std::ptrdiff_t>(on_edge + 1)) - a;
  const double t = std::clamp(dot(x - a, e) / dot(e, e), 0.0, 1.0);
  return {Location::Kind::OnEdge, on_edge, t};
}

double BaryCoords::sum() const noexcept {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

Point BaryCoords::combine(const Polygon& poly) const {
  Point p{};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    p = p + weights[i] * poly.vertex(static_cast<std::ptrdiff_t>(i));
  }
  return p;
}

BaryCoords BaryCoords::normalized(std::vector<double> raw) {
  double largest = 0.0;
  for (double w : raw) largest = std::max(largest, std::abs(w));
  if (!(largest > 0.0) || !std::isfinite(largest)) {
    throw Error(ErrorCode::DegenerateGeometry, "weights are all zero or non-finite");
  }
  double total = 0.0;
  for (double& w : raw) {
    if (w < 0.0) {
      if (w < -1e-12 * largest) {
        throw Error(ErrorCode::DegenerateGeometry, "negative coordinate weight");
      }
      w = 0.0;
    }
    total += w;
  }
  for (double& w : raw) w /= total;
  return BaryCoords{std::move(raw)};
}

BaryCoords BaryCoords::delta(std::size_t n, std::size_t i) {
  BaryCoords c{std::vector<double>(n, 0.0)};
  c.weights[i] = 1.0;
  return c;
}

}  // namespace barycoords
