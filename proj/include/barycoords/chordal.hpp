#pragma once

// Triangulations ("chordal decompositions") of a convex n-gon, their dihedral
// symmetry, the parsing tree that recovers the triangles from the chord set,
// and the coordinate systems built on them.
//
// Vertex indices are 0-based in the API; text forms ("1-3,1-5") are 1-based.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "barycoords/geometry.hpp"

namespace barycoords {

/// A diagonal of the n-cycle, stored with j < k. Chords never join adjacent
/// vertices, so the wrap-around pair {1, n} never occurs and the standard
/// order of a chord is plain ascending order.
struct Chord {
  std::size_t j = 0;
  std::size_t k = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

class ChordalDecomposition {
 public:
  /// Validates and sorts the chord set: exactly n - 3 distinct, pairwise
  /// non-crossing diagonals.
  static ChordalDecomposition make(std::size_t n, std::vector<Chord> chords);
  /// Parses "j-k,j-k,..." with 1-based endpoints in either order.
  static ChordalDecomposition parse(std::size_t n, std::string_view text);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Chord>& chords() const noexcept { return chords_; }
  bool has_chord(std::size_t a, std::size_t b) const noexcept;
  std::string to_string() const;

  friend bool operator==(const ChordalDecomposition&, const ChordalDecomposition&) = default;

 private:
  ChordalDecomposition(std::size_t n, std::vector<Chord> chords) : n_(n), chords_(std::move(chords)) {}

  std::size_t n_;
  std::vector<Chord> chords_;
};

bool chords_cross(const Chord& a, const Chord& b) noexcept;

/// All triangulations of the convex n-gon, Catalan(n - 2) of them, generated by
/// recursion on the apex of the base edge 1∧2 in ascending order.
std::vector<ChordalDecomposition> enumerate_decompositions(std::size_t n);

/// Chordal degree sequence: ascending multiset of nonzero vertex degrees in the
/// chord graph.
using DegreeSequence = std::vector<std::size_t>;

DegreeSequence cds(const ChordalDecomposition& delta);
/// "1^3 3", "1^2 2^2", "2^3"; empty for a triangle.
std::string format_cds(const DegreeSequence& seq);
DegreeSequence parse_cds(std::string_view text);

/// Element of D_n acting on vertices by i -> (reflect ? -i : i) + rotation
/// (1-based, mod n). rotation = 1 is ρ, reflect with rotation = 0 is σ.
struct DihedralElement {
  std::size_t rotation = 0;
  bool reflect = false;
};

std::vector<DihedralElement> dihedral_group(std::size_t n);
std::size_t dihedral_map_vertex(const DihedralElement& g, std::size_t vertex, std::size_t n);
ChordalDecomposition dihedral_apply(const ChordalDecomposition& delta, const DihedralElement& g);

struct OrbitMember {
  ChordalDecomposition decomposition;
  std::size_t stabilizer;  // number of group elements mapping delta here
  double weight;           // stabilizer / 2n
};

/// Distinct images under D_n in order of first appearance; weights sum to 1.
std::vector<OrbitMember> orbit_with_multiplicity(const ChordalDecomposition& delta);

/// A triangle of the decomposition. `vertices` is in standard (ascending)
/// order, which is counter-clockwise; `oriented` starts at the base edge that
/// selected it.
struct OrientedRegion {
  std::array<std::size_t, 3> vertices;
  std::array<std::size_t, 3> oriented;
  std::string path;  // word over {L, R}; empty at the root
};

struct ParseNode {
  bool leaf = false;
  std::array<std::size_t, 2> edge{};  // base (internal) or boundary edge (leaf)
  std::size_t region = 0;             // index into ParsingTree::regions for internal nodes
  int left = -1;
  int right = -1;
};

class ParsingTree {
 public:
  const ChordalDecomposition& decomposition() const noexcept { return delta_; }
  const std::vector<ParseNode>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return 0; }
  /// Internal-node regions in pre-order (node, left subtree, right subtree).
  const std::vector<OrientedRegion>& regions() const noexcept { return regions_; }
  /// Boundary edges at the leaves from left to right, standard-ordered.
  std::vector<std::array<std::size_t, 2>> leaves_in_order() const;

 private:
  friend ParsingTree build_parsing_tree(const ChordalDecomposition& delta);
  explicit ParsingTree(ChordalDecomposition delta) : delta_(std::move(delta)) {}

  ChordalDecomposition delta_;
  std::vector<ParseNode> nodes_;
  std::vector<OrientedRegion> regions_;
};

ParsingTree build_parsing_tree(const ChordalDecomposition& delta);

/// Per-region sign bits of the chord areal functions ⟨x|j∧k⟩ = A(x, v_j, v_k):
/// '1' for non-negative, '0' for non-positive, one character per chord.
struct RegionCodeTable {
  std::vector<Chord> chords;
  std::vector<std::string> codes;  // parallel to ParsingTree::regions()
};

RegionCodeTable region_codes(const ParsingTree& tree, const Polygon& poly);

/// Point location and coordinate evaluation for one decomposition of one
/// polygon. Holds the parsing tree and the region code table.
class ChordalLocator {
 public:
  ChordalLocator(const Polygon& poly, const ChordalDecomposition& delta);

  const ParsingTree& tree() const noexcept { return tree_; }
  const RegionCodeTable& codes() const noexcept { return codes_; }

  /// Sign code of x; entries with |⟨x|j∧k⟩| within the area tolerance are '*'.
  std::string point_code(Point x) const;
  /// Indices (pre-order) of every region containing x.
  std::vector<std::size_t> locate(Point x) const;
  /// Areal coordinates of x in one region, scattered into an n-vector.
  BaryCoords coords_in_region(std::size_t region, Point x) const;
  BaryCoords coords(Point x) const;

 private:
  Polygon poly_;
  ParsingTree tree_;
  RegionCodeTable codes_;
};

std::vector<OrientedRegion> locate_region(const ChordalDecomposition& delta, const Polygon& poly,
                                          Point x);

BaryCoords chordal_coords(const Polygon& poly, const ChordalDecomposition& delta, Point x);

BaryCoords cartographic_coords(const Polygon& poly, const ChordalDecomposition& representative,
                               Point x);

/// First enumerated decomposition of the n-gon with the given CDS.
ChordalDecomposition representative_for_cds(std::size_t n, const DegreeSequence& seq);

}  // namespace barycoords
