#include "barycoords/wachspress.hpp"

namespace barycoords {

namespace {

void require_interior(const Polygon& poly, Point x) {
  const Location loc = locate(poly, x);
  if (loc.kind == Location::Kind::Outside) {
    throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
  }
  if (loc.kind != Location::Kind::Interior) {
    throw Error(ErrorCode::NotInterior, "interior Wachspress formula needs an interior point");
  }
}

}  // namespace

std::vector<double> wachspress_weights_interior(const Polygon& poly, Point x) {
  require_interior(poly, x);
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  std::vector<double> w(poly.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Point prev = poly.vertex(i - 1);
    const Point cur = poly.vertex(i);
    const Point next = poly.vertex(i + 1);
    w[static_cast<std::size_t>(i)] =
        signed_area(prev, cur, next) / (signed_area(prev, cur, x) * signed_area(x, cur, next));
  }
  return w;
}

std::vector<double> wachspress_weights_curvature(const Polygon& poly, Point x) {
  require_interior(poly, x);
  const auto frames = edge_frames(poly, x);
  const std::size_t n = poly.size();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeFrame& before = frames[(i + n - 1) % n];
    const EdgeFrame& after = frames[i];
    w[i] = 2.0 * cross(before.normal, after.normal) / (before.support * after.support);
  }
  return w;
}

std::vector<double> rescaled_weights(const Polygon& poly, Point x) {
  auto frames = edge_frames(poly, x);
  const std::size_t n = poly.size();
  const double eps = poly.length_tolerance();
  for (auto& f : frames) {
    if (f.support <= eps) f.support = 0.0;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t before = (i + n - 1) % n;
    double prod = cross(frames[before].normal, frames[i].normal);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != before && j != i) prod *= frames[j].support;
    }
    w[i] = prod;
  }
  return w;
}

BaryCoords wachspress_coords(const Polygon& poly, Point x) {
  const Location loc = locate(poly, x);
  switch (loc.kind) {
    case Location::Kind::Outside:
      throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
    case Location::Kind::Interior:
      return BaryCoords::normalized(wachspress_weights_interior(poly, x));
    case Location::Kind::AtVertex:
    case Location::Kind::OnEdge:
      break;
  }
  return BaryCoords::normalized(rescaled_weights(poly, x));
}

}  // namespace barycoords
