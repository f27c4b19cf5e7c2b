#include "barycoords/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "barycoords/chordal.hpp"
#include "barycoords/gibbs.hpp"
#include "barycoords/polygon_io.hpp"
#include "barycoords/systems.hpp"

namespace barycoords::cli {

namespace {

struct PolygonSource {
  std::string path;
  std::string builtin;

  Polygon load() const {
    if (!path.empty() && !builtin.empty()) {
      throw Error(ErrorCode::ParseError, "give either --polygon or --builtin, not both");
    }
    if (!path.empty()) return read_polygon_file(path);
    if (!builtin.empty()) return builtin_polygon(builtin);
    throw Error(ErrorCode::ParseError, "a polygon is required (--polygon FILE or --builtin NAME)");
  }
};

void add_polygon_flags(CLI::App* cmd, PolygonSource& src) {
  cmd->add_option("--polygon", src.path, "Polygon JSON file {\"vertices\": [[x,y],...]}");
  cmd->add_option("--builtin", src.builtin, "Named polygon: quad54 | hex72 | unitsquare");
}

Point parse_point(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::ParseError, "point must be given as x,y");
  }
  auto number = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw Error(ErrorCode::ParseError, "bad coordinate '" + s + "'");
    }
    return v;
  };
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes to the --output file when given, else to `out`.
template <class Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  fn(file);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::OutsidePolygon: return kOutside;
    case ErrorCode::NoConvergence: return kNoConvergence;
    default: return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barycentric coordinates on convex polygons", "barycoords"};
  app.require_subcommand(1);

  PolygonSource coords_poly;
  std::string coords_system = "wachspress";
  std::string coords_chords;
  std::string coords_point;
  auto* coords = app.add_subcommand("coords", "Evaluate one coordinate system at a point");
  add_polygon_flags(coords, coords_poly);
  coords->add_option("--system", coords_system, "System spec")->capture_default_str();
  coords->add_option("--decomposition", coords_chords, "Chords for bare chordal/cartographic, e.g. 1-3,1-5");
  coords->add_option("--point", coords_point, "Query point x,y")->required();

  PolygonSource grid_poly;
  std::string grid_a;
  std::string grid_b;
  std::string grid_chords;
  std::string grid_output;
  std::size_t grid_res = 101;
  auto* grid = app.add_subcommand("grid", "Discrepancy-norm field of two systems as CSV");
  add_polygon_flags(grid, grid_poly);
  grid->add_option("--a", grid_a, "First system spec")->required();
  grid->add_option("--b", grid_b, "Second system spec")->required();
  grid->add_option("--decomposition", grid_chords, "Chords for bare chordal/cartographic");
  grid->add_option("--res", grid_res, "Lattice points per axis")->capture_default_str();
  grid->add_option("--output,-o", grid_output, "Output CSV path (default stdout)");

  std::size_t enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List all chordal decompositions of an n-gon");
  enumerate->add_option("--n", enum_n, "Number of polygon vertices")->required();

  std::size_t eq_samples = 51;
  std::string eq_output;
  auto* equator = app.add_subcommand("equator", "Sample the Gibbs/Wachspress equator of quad54");
  equator->add_option("--samples", eq_samples, "Number of samples in [-1, 1]")->capture_default_str();
  equator->add_option("--output,-o", eq_output, "Output CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (coords->parsed()) {
      const Polygon poly = coords_poly.load();
      const Point x = parse_point(coords_point);
      const CoordinateSystem sys = parse_system(coords_system, poly.size(), coords_chords);
      const BaryCoords c = evaluate(sys, poly, x);
      nlohmann::ordered_json doc;
      doc["system"] = sys.name();
      doc["point"] = {x.x, x.y};
      doc["coords"] = c.weights;
      out << doc.dump() << '\n';
    } else if (grid->parsed()) {
      const Polygon poly = grid_poly.load();
      const CoordinateSystem a = parse_system(grid_a, poly.size(), grid_chords);
      const CoordinateSystem b = parse_system(grid_b, poly.size(), grid_chords);
      const auto samples = discrepancy_grid(a, b, poly, grid_res);
      with_output(grid_output, out, [&](std::ostream& os) {
        os << "x,y,value\n";
        for (const auto& s : samples) os << fmt17(s.x) << ',' << fmt17(s.y) << ',' << fmt17(s.value) << '\n';
      });
    } else if (enumerate->parsed()) {
      if (enum_n < 3) throw Error(ErrorCode::OutOfRange, "n must be at least 3");
      for (const auto& delta : enumerate_decompositions(enum_n)) {
        out << delta.to_string() << '\t' << format_cds(cds(delta)) << '\t'
            << orbit_with_multiplicity(delta).size() << '\n';
      }
    } else if (equator->parsed()) {
      if (eq_samples < 2) throw Error(ErrorCode::OutOfRange, "need at least 2 samples");
      const Polygon poly = reference_quadrilateral();
      const auto gibbs = CoordinateSystem::gibbs();
      const auto wachspress = CoordinateSystem::wachspress();
      with_output(eq_output, out, [&](std::ostream& os) {
        os << "a,b,gw_norm\n";
        for (std::size_t k = 0; k < eq_samples; ++k) {
          double a = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(eq_samples - 1);
          if (k + 1 == eq_samples) a = 1.0;
          if (2 * k + 1 == eq_samples) a = 0.0;
          const double b = equator_b(a);
          const double norm = discrepancy(gibbs, wachspress, poly, {a, b}).norm();
          os << fmt17(a) << ',' << fmt17(b) << ',' << fmt17(norm) << '\n';
        }
      });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace barycoords::cli
