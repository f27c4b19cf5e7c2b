#include "barycoords/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace barycoords {

namespace {

struct Evaluation {
  double value = 0.0;
  Eigen::Vector2d gradient = Eigen::Vector2d::Zero();
  Eigen::Matrix2d hessian = Eigen::Matrix2d::Zero();
  std::vector<double> q;
};

// log Σ exp(φ·u_i) with its first two derivatives, max-shifted so that every
// exponent is ≤ 0.
Evaluation evaluate_lse(std::span<const Eigen::Vector2d> pts, const Eigen::Vector2d& phi) {
  Evaluation ev;
  ev.q.resize(pts.size());
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ev.q[i] = phi.dot(pts[i]);
    shift = std::max(shift, ev.q[i]);
  }
  double total = 0.0;
  for (double& e : ev.q) {
    e = std::exp(e - shift);
    total += e;
  }
  ev.value = shift + std::log(total);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ev.q[i] /= total;
    ev.gradient += ev.q[i] * pts[i];
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Eigen::Vector2d c = pts[i] - ev.gradient;
    ev.hessian += ev.q[i] * c * c.transpose();
  }
  return ev;
}

std::vector<Eigen::Vector2d> as_vectors(const Polygon& poly, Point origin, double scale) {
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(poly.size());
  for (const Point& v : poly.vertices()) {
    pts.emplace_back((v.x - origin.x) / scale, (v.y - origin.y) / scale);
  }
  return pts;
}

constexpr double kArmijo = 1e-4;
constexpr double kMaxCondition = 1e12;
constexpr int kMaxHalvings = 60;
constexpr double kFlatSlope = 1e-14;

}  // namespace

LogPartition log_partition(const Polygon& poly, Theta theta) {
  const auto pts = as_vectors(poly, Point{}, 1.0);
  const Evaluation ev = evaluate_lse(pts, Eigen::Vector2d(theta.x, theta.y));
  return {ev.value, Point{ev.gradient.x(), ev.gradient.y()}, ev.hessian};
}

BaryCoords gibbs_distribution(const Polygon& poly, Theta theta) {
  std::vector<double> exponents;
  exponents.reserve(poly.size());
  for (const Point& v : poly.vertices()) exponents.push_back(theta.x * v.x + theta.y * v.y);
  return BaryCoords{softmax(exponents)};
}

BaryCoords gibbs_distribution(const Polygon& poly, const Potential& potential) {
  return gibbs_distribution(poly, potential.gauge_fixed());
}

std::vector<double> softmax(std::span<const double> exponents) {
  const double shift = *std::max_element(exponents.begin(), exponents.end());
  std::vector<double> q(exponents.size());
  double total = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = std::exp(exponents[i] - shift);
    total += q[i];
  }
  for (double& v : q) v /= total;
  return q;
}

BaryCoords gibbs_from_energies(std::span<const double> energies) {
  std::vector<double> neg(energies.size());
  std::transform(energies.begin(), energies.end(), neg.begin(), [](double b) { return -b; });
  return BaryCoords{softmax(neg)};
}

double entropy(const BaryCoords& coords) {
  double h = 0.0;
  for (double p : coords.weights) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

GibbsSolution solve_gibbs(const Polygon& poly, Point x, const GibbsOptions& options) {
  const Location loc = locate(poly, x);
  if (loc.kind == Location::Kind::Outside) {
    throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
  }
  if (loc.kind != Location::Kind::Interior) {
    throw Error(ErrorCode::NotInterior, "Gibbs solve needs an interior point");
  }

  // Work with vertices centred on x and scaled by the diameter: the objective
  // becomes log Σ exp(φ·u_i) with φ = θ·diameter, whose gradient is the
  // moment mismatch directly.
  const double scale = poly.diameter();
  const auto pts = as_vectors(poly, x, scale);

  Eigen::Vector2d phi = Eigen::Vector2d::Zero();
  Evaluation ev = evaluate_lse(pts, phi);

  Eigen::Vector2d best_phi = phi;
  Evaluation best = ev;
  std::size_t iter = 0;
  bool converged = ev.gradient.norm() <= options.tolerance;

  while (!converged && iter < options.max_iterations) {
    ++iter;
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(ev.hessian);
    const double lo = eig.eigenvalues()(0);
    const double hi = eig.eigenvalues()(1);
    const bool gradient_step = !(lo > 0.0) || hi > kMaxCondition * lo;
    const Eigen::Vector2d step =
        gradient_step ? Eigen::Vector2d(-ev.gradient) : Eigen::Vector2d(ev.hessian.ldlt().solve(-ev.gradient));

    if (options.observer) {
      options.observer({iter, Theta{phi.x() / scale, phi.y() / scale}, ev.value,
                        ev.gradient.norm() * scale, ev.hessian * (scale * scale), gradient_step});
    }

    const double slope = ev.gradient.dot(step);
    // Near the optimum the predicted decrease sinks below the rounding of the
    // objective; the moment mismatch then serves as merit instead.
    const bool flat = -slope <= kFlatSlope * (1.0 + std::abs(ev.value));
    double t = 1.0;
    bool accepted = false;
    Evaluation trial;
    for (int k = 0; k < kMaxHalvings; ++k, t *= 0.5) {
      trial = evaluate_lse(pts, phi + t * step);
      const bool ok = flat ? trial.gradient.norm() < ev.gradient.norm()
                           : trial.value <= ev.value + kArmijo * t * slope;
      if (ok) {
        accepted = true;
        break;
      }
    }
    if (!accepted && !flat) {
      trial = evaluate_lse(pts, phi + step);
      if (trial.gradient.norm() < ev.gradient.norm()) {
        t = 1.0;
        accepted = true;
      }
    }
    if (!accepted) break;

    phi += t * step;
    ev = std::move(trial);
    if (ev.gradient.norm() < best.gradient.norm()) {
      best_phi = phi;
      best = ev;
    }
    converged = ev.gradient.norm() <= options.tolerance;
  }

  GibbsSolution sol;
  sol.theta = Theta{best_phi.x() / scale, best_phi.y() / scale};
  sol.coords = BaryCoords{best.q};
  sol.entropy = entropy(sol.coords);
  sol.iterations = iter;
  sol.residual = best.gradient.norm() * scale;
  if (!converged) {
    throw NoConvergence(std::move(sol), "Newton iteration stalled before reaching the tolerance");
  }
  return sol;
}

BaryCoords gibbs_coords(const Polygon& poly, Point x) {
  const Location loc = locate(poly, x);
  const std::size_t n = poly.size();
  switch (loc.kind) {
    case Location::Kind::Outside:
      throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
    case Location::Kind::AtVertex:
      return BaryCoords::delta(n, loc.index);
    case Location::Kind::OnEdge: {
      BaryCoords c{std::vector<double>(n, 0.0)};
      c.weights[loc.index] = 1.0 - loc.t;
      c.weights[(loc.index + 1) % n] = loc.t;
      return c;
    }
    case Location::Kind::Interior:
      break;
  }
  return solve_gibbs(poly, x).coords;
}

}  // namespace barycoords
