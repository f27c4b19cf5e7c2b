#include "barycoords/systems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <thread>

#include "barycoords/gibbs.hpp"
#include "barycoords/wachspress.hpp"

namespace barycoords {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

std::string CoordinateSystem::name() const {
  return std::visit(
      overloaded{
          [](const system_kind::Areal&) -> std::string { return "areal"; },
          [](const system_kind::Wachspress&) -> std::string { return "wachspress"; },
          [](const system_kind::Gibbs&) -> std::string { return "gibbs"; },
          [](const system_kind::Chordal& c) -> std::string {
            return "chordal:" + c.decomposition.to_string();
          },
          [](const system_kind::Cartographic& c) -> std::string {
            return "cartographic:" + c.representative.to_string();
          },
          [](const system_kind::Mixture& m) -> std::string {
            std::string out = "mix:";
            for (std::size_t i = 0; i < m.terms.size(); ++i) {
              if (i > 0) out += '+';
              out += format_weight(m.terms[i].weight) + "*" + m.terms[i].system.name();
            }
            return out;
          },
      },
      value_);
}

CoordinateSystem convex_combine(std::vector<MixtureTerm> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::BadWeights, "a mixture needs at least one part");
  }
  double total = 0.0;
  for (const auto& p : parts) {
    if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
      throw Error(ErrorCode::BadWeights, "mixture weights must be positive");
    }
    total += p.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::BadWeights, "mixture weights must sum to 1");
  }
  return CoordinateSystem(system_kind::Mixture{std::move(parts)});
}

namespace {

void require_size(const ChordalDecomposition& delta, const Polygon& poly) {
  if (delta.n() != poly.size()) {
    throw Error(ErrorCode::InvalidDecomposition,
                "decomposition is for a " + std::to_string(delta.n()) + "-gon but the polygon has " +
                    std::to_string(poly.size()) + " vertices");
  }
}

}  // namespace

BaryCoords evaluate(const CoordinateSystem& sys, const Polygon& poly, Point x) {
  return std::visit(
      overloaded{
          [&](const system_kind::Areal&) {
            if (poly.size() != 3) {
              throw Error(ErrorCode::OutOfRange, "areal coordinates need a triangle");
            }
            if (!locate(poly, x).inside_or_boundary()) {
              throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
            }
            const auto a = areal_coords({poly.vertex(0), poly.vertex(1), poly.vertex(2)}, x);
            return BaryCoords::normalized({std::max(a[0], 0.0), std::max(a[1], 0.0), std::max(a[2], 0.0)});
          },
          [&](const system_kind::Wachspress&) { return wachspress_coords(poly, x); },
          [&](const system_kind::Gibbs&) { return gibbs_coords(poly, x); },
          [&](const system_kind::Chordal& c) {
            require_size(c.decomposition, poly);
            return chordal_coords(poly, c.decomposition, x);
          },
          [&](const system_kind::Cartographic& c) {
            require_size(c.representative, poly);
            return cartographic_coords(poly, c.representative, x);
          },
          [&](const system_kind::Mixture& m) {
            std::vector<double> w(poly.size(), 0.0);
            for (const MixtureTerm& term : m.terms) {
              const BaryCoords part = evaluate(term.system, poly, x);
              for (std::size_t i = 0; i < w.size(); ++i) w[i] += term.weight * part.weights[i];
            }
            return BaryCoords{std::move(w)};
          },
      },
      sys.variant());
}

double DiscrepancyVector::norm() const {
  double s = 0.0;
  for (double d : components) s += d * d;
  return std::sqrt(s);
}

std::vector<double> DiscrepancyVector::completed() const {
  std::vector<double> out = components;
  double s = 0.0;
  for (double d : components) s += d;
  out.push_back(-s);
  return out;
}

DiscrepancyVector discrepancy(const CoordinateSystem& a, const CoordinateSystem& b,
                              const Polygon& poly, Point x) {
  const BaryCoords ca = evaluate(a, poly, x);
  const BaryCoords cb = evaluate(b, poly, x);
  DiscrepancyVector d;
  d.components.resize(poly.size() - 1);
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) d.components[i] = ca[i] - cb[i];
  return d;
}

std::vector<GridSample> discrepancy_grid(const CoordinateSystem& a, const CoordinateSystem& b,
                                         const Polygon& poly, std::size_t resolution) {
  if (resolution < 2) {
    throw Error(ErrorCode::OutOfRange, "grid resolution must be at least 2");
  }
  const auto [lo, hi] = poly.bounds();
  const double step_x = (hi.x - lo.x) / static_cast<double>(resolution - 1);
  const double step_y = (hi.y - lo.y) / static_cast<double>(resolution - 1);

  auto row = [&](std::size_t iy) {
    std::vector<GridSample> out;
    const double y = iy + 1 == resolution ? hi.y : lo.y + step_y * static_cast<double>(iy);
    for (std::size_t ix = 0; ix < resolution; ++ix) {
      const double x = ix + 1 == resolution ? hi.x : lo.x + step_x * static_cast<double>(ix);
      const Point p{x, y};
      if (!locate(poly, p).inside_or_boundary()) continue;
      out.push_back({x, y, discrepancy(a, b, poly, p).norm()});
    }
    return out;
  };

  // Rows are independent; each worker handles a strided subset and the rows
  // are stitched back in lattice order.
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), resolution));
  std::vector<std::vector<GridSample>> rows(resolution);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t iy = w; iy < resolution; iy += workers) rows[iy] = row(iy);
    }));
  }
  for (auto& j : jobs) j.get();

  std::vector<GridSample> grid;
  for (auto& r : rows) grid.insert(grid.end(), r.begin(), r.end());
  return grid;
}

Polygon reference_quadrilateral() {
  return Polygon::validate({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.5}});
}

double equator_b(double a) {
  if (!(a >= -1.0 && a <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "equator parameter must lie in [-1, 1]");
  }
  return (-12.0 - 13.0 * a + std::sqrt(25.0 * 25.0 + 11.0 * 13.0 * (1.0 - a * a))) / (4.0 * 13.0);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_weight(std::string_view text) {
  const std::string s(trim(text));
  const std::size_t slash = s.find('/');
  auto number = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size()) {
      throw Error(ErrorCode::ParseError, "bad mixture weight '" + s + "'");
    }
    return v;
  };
  if (slash == std::string::npos) return number(s);
  return number(s.substr(0, slash)) / number(s.substr(slash + 1));
}

ChordalDecomposition decomposition_for(std::string_view chords, std::size_t n,
                                       std::string_view default_chords) {
  if (!chords.empty()) return ChordalDecomposition::parse(n, chords);
  if (!default_chords.empty()) return ChordalDecomposition::parse(n, default_chords);
  return enumerate_decompositions(n).front();
}

}  // namespace

CoordinateSystem parse_system(std::string_view spec, std::size_t n, std::string_view default_chords) {
  spec = trim(spec);
  const std::size_t colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (head == "wachspress" && tail.empty()) return CoordinateSystem::wachspress();
  if (head == "gibbs" && tail.empty()) return CoordinateSystem::gibbs();
  if (head == "areal" && tail.empty()) return CoordinateSystem::areal();
  if (head == "chordal") return CoordinateSystem::chordal(decomposition_for(tail, n, default_chords));
  if (head == "cartographic") {
    return CoordinateSystem::cartographic(decomposition_for(tail, n, default_chords));
  }
  if (head == "mix") {
    std::vector<MixtureTerm> parts;
    std::string_view rest = tail;
    while (true) {
      const std::size_t plus = rest.find('+');
      const std::string_view term = rest.substr(0, plus);
      const std::size_t star = term.find('*');
      if (star == std::string_view::npos) {
        throw Error(ErrorCode::ParseError, "mixture term '" + std::string(term) + "' needs <weight>*<system>");
      }
      const std::string_view inner = trim(term.substr(star + 1));
      if (inner.substr(0, 4) == "mix:") {
        throw Error(ErrorCode::ParseError, "nested mixtures are not supported");
      }
      parts.push_back({parse_system(inner, n, default_chords), parse_weight(term.substr(0, star))});
      if (plus == std::string_view::npos) break;
      rest.remove_prefix(plus + 1);
    }
    return convex_combine(std::move(parts));
  }
  throw Error(ErrorCode::ParseError, "unknown coordinate system '" + std::string(spec) + "'");
}

}  // namespace barycoords
