#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "barycoords/geometry.hpp"

namespace barycoords {

/// Gauge-fixed affine potential: vertex v carries exponent θ·v, so
/// q_i ∝ exp(θ·v_i). The additive constant of the gauge orbit is dropped.
struct Theta {
  double x = 0.0;
  double y = 0.0;
};

/// A potential with an explicit gauge constant, exponent θ·v + constant.
struct Potential {
  Theta theta;
  double constant = 0.0;

  /// Representative of the gauge orbit with zero constant.
  Theta gauge_fixed() const noexcept { return theta; }
};

struct LogPartition {
  double value = 0.0;       // log Σ exp(θ·v_i)
  Point gradient;           // Σ q_i v_i
  Eigen::Matrix2d hessian;  // covariance of the vertices under q
};

LogPartition log_partition(const Polygon& poly, Theta theta);

BaryCoords gibbs_distribution(const Polygon& poly, Theta theta);
BaryCoords gibbs_distribution(const Polygon& poly, const Potential& potential);

/// q_i = exp(e_i) / Σ exp(e_j) with max-shift.
std::vector<double> softmax(std::span<const double> exponents);

/// Boltzmann weights for vertex energies β_i, q_i ∝ exp(-β_i).
BaryCoords gibbs_from_energies(std::span<const double> energies);

double entropy(const BaryCoords& coords);

struct GibbsSolution {
  Theta theta;
  BaryCoords coords;
  double entropy = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;  // ‖Σ q_i v_i - x‖
};

struct NewtonIterate {
  std::size_t iteration;
  Theta theta;
  double objective;
  double residual;
  Eigen::Matrix2d hessian;
  bool gradient_step;  // true when the Hessian was too ill-conditioned
};

struct GibbsOptions {
  double tolerance = 1e-12;  // relative to polygon diameter
  std::size_t max_iterations = 200;
  std::function<void(const NewtonIterate&)> observer;
};

/// Raised by solve_gibbs when the residual does not reach the tolerance; the
/// best iterate found is attached.
class NoConvergence : public Error {
 public:
  NoConvergence(GibbsSolution best, const std::string& what)
      : Error(ErrorCode::NoConvergence, what), best_(std::move(best)) {}
  const GibbsSolution& best() const noexcept { return best_; }

 private:
  GibbsSolution best_;
};

/// Maximum-entropy weights reproducing an interior point x, found by damped
/// Newton on F(θ) = log Σ exp(θ·v_i) - θ·x.
GibbsSolution solve_gibbs(const Polygon& poly, Point x, const GibbsOptions& options = {});

/// Gibbs coordinates on the closed polygon. Boundary points take the limit
/// values: linear interpolation on an edge, a delta at a vertex.
BaryCoords gibbs_coords(const Polygon& poly, Point x);

}  // namespace barycoords
