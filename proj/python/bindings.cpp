#include <array>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "barycoords/chordal.hpp"
#include "barycoords/gibbs.hpp"
#include "barycoords/polygon_io.hpp"
#include "barycoords/systems.hpp"
#include "barycoords/wachspress.hpp"

namespace py = pybind11;
using namespace barycoords;

namespace {

using XY = std::array<double, 2>;

Point to_point(const XY& p) { return {p[0], p[1]}; }

Polygon make_polygon(const std::vector<XY>& verts) {
  std::vector<Point> pts;
  pts.reserve(verts.size());
  for (const auto& v : verts) pts.push_back(to_point(v));
  return Polygon::validate(std::move(pts));
}

std::string kind_name(Location::Kind k) {
  switch (k) {
    case Location::Kind::Interior: return "interior";
    case Location::Kind::OnEdge: return "edge";
    case Location::Kind::AtVertex: return "vertex";
    case Location::Kind::Outside: return "outside";
  }
  return "outside";
}

std::array<std::size_t, 3> one_based(const std::array<std::size_t, 3>& v) {
  return {v[0] + 1, v[1] + 1, v[2] + 1};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Barycentric coordinate systems on convex polygons";

  py::register_exception<Error>(m, "BarycoordsError", PyExc_ValueError);

  py::class_<Polygon>(m, "Polygon")
      .def(py::init(&make_polygon), py::arg("vertices"))
      .def_property_readonly("vertices",
                             [](const Polygon& p) {
                               std::vector<XY> out;
                               for (const Point& v : p.vertices()) out.push_back({v.x, v.y});
                               return out;
                             })
      .def_property_readonly("diameter", &Polygon::diameter)
      .def_property_readonly("area", &Polygon::area)
      .def("__len__", &Polygon::size)
      .def("to_json", &polygon_to_json)
      .def_static("from_json", &polygon_from_json, py::arg("text"))
      .def_static("builtin", &builtin_polygon, py::arg("name"));

  m.def("signed_area", [](const XY& a, const XY& b, const XY& c) {
    return signed_area(to_point(a), to_point(b), to_point(c));
  });

  m.def(
      "locate",
      [](const Polygon& poly, const XY& x) {
        const Location loc = locate(poly, to_point(x));
        return std::make_tuple(kind_name(loc.kind), loc.index, loc.t);
      },
      py::arg("polygon"), py::arg("point"),
      "Classify a point: (kind, index, t) with kind in interior/edge/vertex/outside.");

  m.def(
      "wachspress_coords",
      [](const Polygon& poly, const XY& x) { return wachspress_coords(poly, to_point(x)).weights; },
      py::arg("polygon"), py::arg("point"));

  m.def(
      "gibbs_coords",
      [](const Polygon& poly, const XY& x) { return gibbs_coords(poly, to_point(x)).weights; },
      py::arg("polygon"), py::arg("point"));

  py::class_<GibbsSolution>(m, "GibbsSolution")
      .def_property_readonly("theta", [](const GibbsSolution& s) { return XY{s.theta.x, s.theta.y}; })
      .def_property_readonly("coords", [](const GibbsSolution& s) { return s.coords.weights; })
      .def_readonly("entropy", &GibbsSolution::entropy)
      .def_readonly("iterations", &GibbsSolution::iterations)
      .def_readonly("residual", &GibbsSolution::residual);

  m.def(
      "solve_gibbs", [](const Polygon& poly, const XY& x) { return solve_gibbs(poly, to_point(x)); },
      py::arg("polygon"), py::arg("point"));

  m.def(
      "entropy", [](const std::vector<double>& p) { return entropy(BaryCoords{p}); }, py::arg("weights"));

  m.def(
      "enumerate_decompositions",
      [](std::size_t n) {
        std::vector<std::string> out;
        for (const auto& d : enumerate_decompositions(n)) out.push_back(d.to_string());
        return out;
      },
      py::arg("n"), "All triangulations of the convex n-gon as 1-based chord strings.");

  m.def(
      "cds", [](std::size_t n, const std::string& chords) {
        return format_cds(cds(ChordalDecomposition::parse(n, chords)));
      },
      py::arg("n"), py::arg("chords"));

  m.def(
      "orbit",
      [](std::size_t n, const std::string& chords) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto& member : orbit_with_multiplicity(ChordalDecomposition::parse(n, chords))) {
          out.emplace_back(member.decomposition.to_string(), member.weight);
        }
        return out;
      },
      py::arg("n"), py::arg("chords"), "Dihedral orbit as (chords, weight) pairs.");

  m.def(
      "parsing_tree_regions",
      [](std::size_t n, const std::string& chords) {
        std::vector<std::pair<std::array<std::size_t, 3>, std::string>> out;
        const ParsingTree tree = build_parsing_tree(ChordalDecomposition::parse(n, chords));
        for (const auto& r : tree.regions()) out.emplace_back(one_based(r.vertices), r.path);
        return out;
      },
      py::arg("n"), py::arg("chords"), "Regions in pre-order as (1-based vertices, path).");

  m.def(
      "region_codes",
      [](const Polygon& poly, const std::string& chords) {
        const ParsingTree tree = build_parsing_tree(ChordalDecomposition::parse(poly.size(), chords));
        return region_codes(tree, poly).codes;
      },
      py::arg("polygon"), py::arg("chords"));

  m.def(
      "chordal_coords",
      [](const Polygon& poly, const std::string& chords, const XY& x) {
        return chordal_coords(poly, ChordalDecomposition::parse(poly.size(), chords), to_point(x)).weights;
      },
      py::arg("polygon"), py::arg("chords"), py::arg("point"));

  m.def(
      "cartographic_coords",
      [](const Polygon& poly, const std::string& chords, const XY& x) {
        return cartographic_coords(poly, ChordalDecomposition::parse(poly.size(), chords), to_point(x))
            .weights;
      },
      py::arg("polygon"), py::arg("chords"), py::arg("point"));

  m.def(
      "evaluate",
      [](const std::string& spec, const Polygon& poly, const XY& x, const std::string& default_chords) {
        return evaluate(parse_system(spec, poly.size(), default_chords), poly, to_point(x)).weights;
      },
      py::arg("system"), py::arg("polygon"), py::arg("point"), py::arg("decomposition") = "");

  m.def(
      "discrepancy",
      [](const std::string& a, const std::string& b, const Polygon& poly, const XY& x,
         const std::string& default_chords) {
        return discrepancy(parse_system(a, poly.size(), default_chords),
                           parse_system(b, poly.size(), default_chords), poly, to_point(x))
            .components;
      },
      py::arg("a"), py::arg("b"), py::arg("polygon"), py::arg("point"), py::arg("decomposition") = "");

  m.def(
      "discrepancy_grid",
      [](const std::string& a, const std::string& b, const Polygon& poly, std::size_t resolution,
         const std::string& default_chords) {
        const auto sa = parse_system(a, poly.size(), default_chords);
        const auto sb = parse_system(b, poly.size(), default_chords);
        std::vector<GridSample> grid;
        {
          py::gil_scoped_release release;
          grid = discrepancy_grid(sa, sb, poly, resolution);
        }
        std::vector<std::tuple<double, double, double>> out;
        out.reserve(grid.size());
        for (const auto& s : grid) out.emplace_back(s.x, s.y, s.value);
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("polygon"), py::arg("resolution"),
      py::arg("decomposition") = "", "Rows (x, y, norm) of the discrepancy field.");

  m.def("equator_b", &equator_b, py::arg("a"));
}
