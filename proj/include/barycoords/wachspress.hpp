#pragma once

#include <vector>

#include "barycoords/geometry.hpp"

namespace barycoords {

/// w_i = A(v_{i-1}, v_i, v_{i+1}) / (A(v_{i-1}, v_i, x) A(x, v_i, v_{i+1})).
/// Requires locate(poly, x) to be Interior.
std::vector<double> wachspress_weights_interior(const Polygon& poly, Point x);

/// Curvature form of the interior weights, 2 det[n_{i-1}, n_i] / (h_{i-1} h_i).
std::vector<double> wachspress_weights_curvature(const Polygon& poly, Point x);

/// w'_i = det[n_{i-1}, n_i] * Π_{j ∉ {i-1, i}} h_j, which extends to the closed
/// polygon. Support values within the length tolerance are treated as zero.
std::vector<double> rescaled_weights(const Polygon& poly, Point x);

BaryCoords wachspress_coords(const Polygon& poly, Point x);

}  // namespace barycoords
