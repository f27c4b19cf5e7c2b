"""Barycentric coordinate systems on convex polygons.

Wachspress, maximum-entropy (Gibbs), chordal and cartographic coordinates,
triangulation enumeration, and discrepancy fields between systems.
"""

from ._core import (
    BarycoordsError,
    GibbsSolution,
    Polygon,
    cartographic_coords,
    cds,
    chordal_coords,
    discrepancy,
    discrepancy_grid,
    entropy,
    enumerate_decompositions,
    equator_b,
    evaluate,
    gibbs_coords,
    locate,
    orbit,
    parsing_tree_regions,
    region_codes,
    signed_area,
    solve_gibbs,
    wachspress_coords,
)

__all__ = [
    "BarycoordsError",
    "GibbsSolution",
    "Polygon",
    "cartographic_coords",
    "cds",
    "chordal_coords",
    "discrepancy",
    "discrepancy_grid",
    "entropy",
    "enumerate_decompositions",
    "equator_b",
    "evaluate",
    "gibbs_coords",
    "locate",
    "orbit",
    "parsing_tree_regions",
    "region_codes",
    "signed_area",
    "solve_gibbs",
    "wachspress_coords",
]
