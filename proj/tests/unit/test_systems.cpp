#include <gtest/gtest.h>

#include <cmath>

#include "barycoords/systems.hpp"
#include "test_support.hpp"

namespace barycoords {
namespace {

using testing::Rng;

void expect_coords(const BaryCoords& c, const std::vector<double>& expected, double tol) {
  ASSERT_EQ(c.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(c[i], expected[i], tol) << "i=" << i;
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::ParseError;
}

const Point kA{0.0, 3.0 / 8.0};
const Point kB{0.0, 5.0 / 12.0};

double max_grid_value(const std::vector<GridSample>& grid) {
  double m = 0.0;
  for (const GridSample& s : grid) m = std::max(m, s.value);
  return m;
}

/// Every variant applicable to an n-gon, with decompositions picked by `pick`.
std::vector<CoordinateSystem> all_variants(std::size_t n, std::size_t pick) {
  const auto decomps = enumerate_decompositions(n);
  const auto& d1 = decomps[pick % decomps.size()];
  const auto& d2 = decomps[(pick * 31 + 7) % decomps.size()];
  std::vector<CoordinateSystem> out{CoordinateSystem::wachspress(), CoordinateSystem::gibbs(),
                                    CoordinateSystem::chordal(d1), CoordinateSystem::cartographic(d2)};
  out.push_back(convex_combine({{CoordinateSystem::gibbs(), 0.3},
                                {CoordinateSystem::chordal(d2), 0.5},
                                {CoordinateSystem::wachspress(), 0.2}}));
  if (n == 3) out.push_back(CoordinateSystem::areal());
  return out;
}

TEST(Evaluate, ReferenceQuadrilateral) {
  const Polygon q = reference_quadrilateral();
  expect_coords(evaluate(CoordinateSystem::wachspress(), q, kB),
                {49.0 / 264, 70.0 / 264, 75.0 / 264, 70.0 / 264}, 1e-10);
  const CoordinateSystem half =
      convex_combine({{CoordinateSystem::gibbs(), 0.5}, {CoordinateSystem::wachspress(), 0.5}});
  expect_coords(evaluate(half, q, kA), {53.0 / 224, 58.0 / 224, 55.0 / 224, 58.0 / 224}, 1e-8);
}

TEST(Evaluate, ArealNeedsTriangle) {
  EXPECT_EQ(error_of([] { evaluate(CoordinateSystem::areal(), reference_quadrilateral(), kA); }),
            ErrorCode::OutOfRange);
  const Polygon tri = Polygon::validate({{0, 0}, {3, 0}, {0, 3}});
  expect_coords(evaluate(CoordinateSystem::areal(), tri, {1, 1}), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-15);
}

TEST(Evaluate, SizeMismatchAndOutside) {
  const Polygon q = reference_quadrilateral();
  const auto hexsys = CoordinateSystem::chordal(ChordalDecomposition::parse(6, "1-3,1-5,3-5"));
  EXPECT_EQ(error_of([&] { evaluate(hexsys, q, kA); }), ErrorCode::InvalidDecomposition);
  EXPECT_EQ(error_of([&] { evaluate(CoordinateSystem::gibbs(), q, {4, 4}); }), ErrorCode::OutsidePolygon);
}

TEST(ConvexCombine, WeightValidation) {
  const auto w = CoordinateSystem::wachspress();
  EXPECT_EQ(error_of([&] { convex_combine({}); }), ErrorCode::BadWeights);
  EXPECT_EQ(error_of([&] { convex_combine({{w, 0.5}, {w, 0.4}}); }), ErrorCode::BadWeights);
  EXPECT_EQ(error_of([&] { convex_combine({{w, 1.5}, {w, -0.5}}); }), ErrorCode::BadWeights);
  EXPECT_NO_THROW(convex_combine({{w, 0.5}, {w, 0.5 + 1e-12}}));
}

TEST(ConvexCombine, SingletonAndIdempotent) {
  Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const Polygon poly = testing::random_convex_polygon(rng, 3 + trial % 8);
    const Point x = testing::random_interior_point(rng, poly);
    for (const CoordinateSystem& sys : all_variants(poly.size(), trial)) {
      const BaryCoords direct = evaluate(sys, poly, x);
      expect_coords(evaluate(convex_combine({{sys, 1.0}}), poly, x), direct.weights, 1e-15);
      expect_coords(evaluate(convex_combine({{sys, 0.5}, {sys, 0.5}}), poly, x), direct.weights, 1e-15);
    }
  }
}

TEST(ConvexCombine, HalfChordalPairIsCartographicOnQuadrilaterals) {
  Rng rng(52);
  const auto d = ChordalDecomposition::parse(4, "1-3");
  const auto e = ChordalDecomposition::parse(4, "2-4");
  const CoordinateSystem half =
      convex_combine({{CoordinateSystem::chordal(d), 0.5}, {CoordinateSystem::chordal(e), 0.5}});
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon poly = testing::random_convex_polygon(rng, 4);
    const Point x = testing::random_interior_point(rng, poly);
    expect_coords(evaluate(half, poly, x), evaluate(CoordinateSystem::cartographic(d), poly, x).weights,
                  1e-14);
  }
}

TEST(Systems, PartitionOfUnityAndLinearPrecision) {
  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const Polygon poly = testing::random_convex_polygon(rng, 3 + trial % 10);
    const Point x = testing::random_interior_point(rng, poly);
    for (const CoordinateSystem& sys : all_variants(poly.size(), trial)) {
      const BaryCoords c = evaluate(sys, poly, x);
      EXPECT_NEAR(c.sum(), 1.0, 1e-10) << sys.name();
      EXPECT_LT(testing::reproduction_error(poly, c.weights, x), 1e-10 * poly.diameter()) << sys.name();
    }
  }
}

TEST(Discrepancy, ReferenceQuadrilateral) {
  const Polygon q = reference_quadrilateral();
  const auto g = CoordinateSystem::gibbs(), w = CoordinateSystem::wachspress();
  const DiscrepancyVector at_a = discrepancy(g, w, q, kA);
  ASSERT_EQ(at_a.components.size(), 3u);
  EXPECT_NEAR(at_a.components[0], 3.0 / 112, 1e-6);
  EXPECT_NEAR(at_a.components[1], -2.0 / 112, 1e-6);
  EXPECT_NEAR(at_a.components[2], 1.0 / 112, 1e-6);
  EXPECT_NEAR(at_a.completed()[3], -2.0 / 112, 1e-6);

  const DiscrepancyVector at_b = discrepancy(g, w, q, kB);
  EXPECT_NEAR(at_b.components[0], 0.037, 1e-3);
  EXPECT_NEAR(at_b.components[1], -0.025, 1e-3);
  EXPECT_NEAR(at_b.components[2], 0.013, 1e-3);

  EXPECT_EQ(discrepancy(w, w, q, kB).norm(), 0.0);
}

TEST(Discrepancy, AffineConditions) {
  Rng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon poly = testing::random_convex_polygon(rng, 4 + trial % 8);
    const Point x = testing::random_interior_point(rng, poly);
    const auto systems = all_variants(poly.size(), trial);
    for (std::size_t i = 0; i + 1 < systems.size(); ++i) {
      const auto d = discrepancy(systems[i], systems[i + 1], poly, x).completed();
      EXPECT_NEAR(testing::sum_of(d), 0.0, 1e-9);
      EXPECT_LT(testing::reproduction_error(poly, d, {0, 0}), 1e-9 * poly.diameter());
    }
  }
}

TEST(Discrepancy, QuadrilateralVectorsAreParallel) {
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const Polygon poly = testing::random_convex_polygon(rng, 4);
    const auto systems = all_variants(4, trial);
    for (std::size_t i = 0; i < systems.size(); ++i) {
      for (std::size_t j = i + 1; j < systems.size(); ++j) {
        std::vector<std::vector<double>> vecs;
        for (int k = 0; k < 5; ++k) {
          const auto d = discrepancy(systems[i], systems[j], poly, testing::random_interior_point(rng, poly));
          if (d.norm() > 1e-6) vecs.push_back(d.components);
        }
        for (std::size_t p = 1; p < vecs.size(); ++p) {
          double dot = 0, n0 = 0, n1 = 0;
          for (int c = 0; c < 3; ++c) {
            dot += vecs[0][c] * vecs[p][c];
            n0 += vecs[0][c] * vecs[0][c];
            n1 += vecs[p][c] * vecs[p][c];
          }
          EXPECT_GE(std::abs(dot) / std::sqrt(n0 * n1), 1 - 1e-6)
              << systems[i].name() << " vs " << systems[j].name();
        }
      }
    }
  }
}

TEST(DiscrepancyGrid, LayoutAndDeterminism) {
  const Polygon sq = testing::unit_square();
  const auto grid = discrepancy_grid(CoordinateSystem::gibbs(), CoordinateSystem::wachspress(), sq, 11);
  ASSERT_EQ(grid.size(), 121u);
  EXPECT_EQ(grid.front().x, 0.0);
  EXPECT_EQ(grid.front().y, 0.0);
  EXPECT_EQ(grid[1].x, 0.1);
  EXPECT_EQ(grid[11].y, 0.1);
  EXPECT_EQ(grid.back().x, 1.0);
  EXPECT_EQ(grid.back().y, 1.0);
  const auto again = discrepancy_grid(CoordinateSystem::gibbs(), CoordinateSystem::wachspress(), sq, 11);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(grid[i].value, again[i].value);

  // Lattice points outside the polygon are dropped.
  const auto tri = discrepancy_grid(CoordinateSystem::gibbs(), CoordinateSystem::wachspress(),
                                    Polygon::validate({{0, 0}, {1, 0}, {0, 1}}), 11);
  EXPECT_EQ(tri.size(), 66u);
  EXPECT_EQ(error_of([&] { discrepancy_grid(CoordinateSystem::gibbs(), CoordinateSystem::gibbs(), sq, 1); }),
            ErrorCode::OutOfRange);
}

TEST(DiscrepancyGrid, SemisimplicesCoincide) {
  Rng rng(56);
  const auto g = CoordinateSystem::gibbs(), w = CoordinateSystem::wachspress();
  EXPECT_LE(max_grid_value(discrepancy_grid(g, w, testing::unit_square(), 41)), 1e-8);
  for (int trial = 0; trial < 5; ++trial) {
    EXPECT_LE(max_grid_value(discrepancy_grid(g, w, testing::random_parallelogram(rng), 41)), 1e-8);
    EXPECT_LE(max_grid_value(discrepancy_grid(g, w, testing::random_triangle(rng), 41)), 1e-8);
  }
}

TEST(DiscrepancyGrid, ReferenceQuadrilateralBoundary) {
  const Polygon q = reference_quadrilateral();
  const auto grid = discrepancy_grid(CoordinateSystem::gibbs(), CoordinateSystem::wachspress(), q, 41);
  double interior_max = 0.0;
  for (const GridSample& s : grid) {
    if (locate(q, {s.x, s.y}).kind == Location::Kind::Interior) {
      interior_max = std::max(interior_max, s.value);
    } else {
      EXPECT_LE(s.value, 1e-6);
    }
  }
  EXPECT_GT(interior_max, 1e-3);
}

TEST(DiscrepancyGrid, SquareGibbsVersusCartographic) {
  const Polygon sq = testing::unit_square();
  const auto g = CoordinateSystem::gibbs();
  const auto c = CoordinateSystem::cartographic(ChordalDecomposition::parse(4, "1-3"));
  EXPECT_NEAR(discrepancy(g, c, sq, {0.25, 0.125}).norm(), std::sqrt(3.0) / 32, 1e-10);
  EXPECT_GT(max_grid_value(discrepancy_grid(g, c, sq, 41)), 1e-3);
}

TEST(Equator, ClosedForm) {
  EXPECT_EQ(equator_b(1.0), 0.0);
  EXPECT_EQ(equator_b(-1.0), 0.5);
  EXPECT_NEAR(equator_b(0.0), (-12.0 + 16.0 * std::sqrt(3.0)) / 52.0, 1e-15);
  EXPECT_NEAR(equator_b(0.0), 0.30217, 1e-5);
  EXPECT_EQ(error_of([] { equator_b(1.5); }), ErrorCode::OutOfRange);
  EXPECT_EQ(error_of([] { equator_b(NAN); }), ErrorCode::OutOfRange);
}

TEST(Equator, GibbsAndWachspressAgree) {
  const Polygon q = reference_quadrilateral();
  for (int i = 1; i < 50; ++i) {
    const double a = -1.0 + 2.0 * i / 50.0;
    const double b = equator_b(a);
    EXPECT_LE(discrepancy(CoordinateSystem::gibbs(), CoordinateSystem::wachspress(), q, {a, b}).norm(), 1e-6)
        << "a=" << a;
  }
}

TEST(ParseSystem, Grammar) {
  EXPECT_EQ(parse_system("wachspress", 4).name(), "wachspress");
  EXPECT_EQ(parse_system(" gibbs ", 4).name(), "gibbs");
  EXPECT_EQ(parse_system("areal", 3).name(), "areal");
  EXPECT_EQ(parse_system("chordal:3-1", 4).name(), "chordal:1-3");
  EXPECT_EQ(parse_system("chordal", 4).name(), "chordal:1-3");
  EXPECT_EQ(parse_system("cartographic", 6, "1-3,1-5,3-5").name(), "cartographic:1-3,1-5,3-5");
  const CoordinateSystem mix = parse_system("mix:1/2*gibbs+1/2*wachspress", 4);
  EXPECT_EQ(mix.name(), "mix:0.5*gibbs+0.5*wachspress");
  EXPECT_EQ(parse_system(mix.name(), 4).name(), mix.name());
  expect_coords(evaluate(mix, reference_quadrilateral(), kA),
                {53.0 / 224, 58.0 / 224, 55.0 / 224, 58.0 / 224}, 1e-8);

  EXPECT_EQ(error_of([] { parse_system("mean-value", 4); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_system("gibbs:1-3", 4); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_system("mix:gibbs", 4); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_system("mix:x*gibbs", 4); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_system("mix:1*mix:1*gibbs", 4); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_system("mix:0.3*gibbs+0.3*wachspress", 4); }), ErrorCode::BadWeights);
  EXPECT_EQ(error_of([] { parse_system("chordal:1-3,2-4", 4); }), ErrorCode::InvalidDecomposition);
}

}  // namespace
}  // namespace barycoords
