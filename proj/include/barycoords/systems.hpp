#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "barycoords/chordal.hpp"
#include "barycoords/geometry.hpp"

namespace barycoords {

struct MixtureTerm;

namespace system_kind {
struct Areal {};
struct Wachspress {};
struct Gibbs {};
struct Chordal {
  ChordalDecomposition decomposition;
};
struct Cartographic {
  ChordalDecomposition representative;
};
struct Mixture {
  std::vector<MixtureTerm> terms;
};
}  // namespace system_kind

/// A coordinate system on convex polygons: a rule assigning barycentric
/// coordinates to every point of the closed polygon. Chordal and cartographic
/// systems are tied to a polygon size through their decomposition.
class CoordinateSystem {
 public:
  using Variant = std::variant<system_kind::Areal, system_kind::Wachspress, system_kind::Gibbs,
                               system_kind::Chordal, system_kind::Cartographic, system_kind::Mixture>;

  static CoordinateSystem areal() { return CoordinateSystem(system_kind::Areal{}); }
  static CoordinateSystem wachspress() { return CoordinateSystem(system_kind::Wachspress{}); }
  static CoordinateSystem gibbs() { return CoordinateSystem(system_kind::Gibbs{}); }
  static CoordinateSystem chordal(ChordalDecomposition delta) {
    return CoordinateSystem(system_kind::Chordal{std::move(delta)});
  }
  static CoordinateSystem cartographic(ChordalDecomposition representative) {
    return CoordinateSystem(system_kind::Cartographic{std::move(representative)});
  }

  const Variant& variant() const noexcept { return value_; }

  /// Spec string in the CLI grammar, e.g. "chordal:1-3,1-5,3-5".
  std::string name() const;

 private:
  friend CoordinateSystem convex_combine(std::vector<MixtureTerm> parts);
  explicit CoordinateSystem(Variant v) : value_(std::move(v)) {}

  Variant value_;
};

struct MixtureTerm {
  CoordinateSystem system;
  double weight;
};

/// Weights must be positive and sum to 1 within 1e-9.
CoordinateSystem convex_combine(std::vector<MixtureTerm> parts);

BaryCoords evaluate(const CoordinateSystem& sys, const Polygon& poly, Point x);

/// First n - 1 components of sysA(x) - sysB(x).
struct DiscrepancyVector {
  std::vector<double> components;

  double norm() const;
  /// Appends the n-th component so that the components sum to zero.
  std::vector<double> completed() const;
};

DiscrepancyVector discrepancy(const CoordinateSystem& a, const CoordinateSystem& b,
                              const Polygon& poly, Point x);

struct GridSample {
  double x;
  double y;
  double value;
};

/// Discrepancy norms on a resolution × resolution lattice over the bounding
/// box, row-major (y outer, x inner), keeping points inside or on the polygon.
std::vector<GridSample> discrepancy_grid(const CoordinateSystem& a, const CoordinateSystem& b,
                                         const Polygon& poly, std::size_t resolution);

/// Reference quadrilateral (0,0), (1,0), (0,1), (-1,1/2) on which Gibbs and
/// Wachspress coordinates differ.
Polygon reference_quadrilateral();

/// Ordinate of the curve through the reference quadrilateral where its Gibbs
/// and Wachspress coordinates agree, for -1 ≤ a ≤ 1.
double equator_b(double a);

/// Parses `wachspress | gibbs | areal | chordal:<chords> |
/// cartographic:<chords> | mix:<w1>*<spec1>+<w2>*<spec2>...`. `n` sizes the
/// decompositions. A bare `chordal` / `cartographic` uses `default_chords`
/// when given, otherwise the first enumerated decomposition.
CoordinateSystem parse_system(std::string_view spec, std::size_t n,
                              std::string_view default_chords = {});

}  // namespace barycoords
