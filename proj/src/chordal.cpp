#include "barycoords/chordal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace barycoords {

bool chords_cross(const Chord& a, const Chord& b) noexcept {
  return (a.j < b.j && b.j < a.k && a.k < b.k) || (b.j < a.j && a.j < b.k && b.k < a.k);
}

ChordalDecomposition ChordalDecomposition::make(std::size_t n, std::vector<Chord> chords) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidDecomposition, "polygon needs at least 3 vertices");
  }
  if (chords.size() != n - 3) {
    throw Error(ErrorCode::InvalidDecomposition, "a decomposition of an " + std::to_string(n) +
                                                     "-gon has " + std::to_string(n - 3) + " chords");
  }
  for (Chord& c : chords) {
    if (c.j > c.k) std::swap(c.j, c.k);
    if (c.k >= n) {
      throw Error(ErrorCode::InvalidDecomposition, "chord endpoint out of range");
    }
    if (c.k - c.j < 2 || (c.j == 0 && c.k == n - 1)) {
      throw Error(ErrorCode::InvalidDecomposition,
                  std::to_string(c.j + 1) + "-" + std::to_string(c.k + 1) + " is an edge, not a chord");
    }
  }
  std::sort(chords.begin(), chords.end());
  if (std::adjacent_find(chords.begin(), chords.end()) != chords.end()) {
    throw Error(ErrorCode::InvalidDecomposition, "duplicate chord");
  }
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      if (chords_cross(chords[a], chords[b])) {
        throw Error(ErrorCode::InvalidDecomposition, "chords cross");
      }
    }
  }
  return ChordalDecomposition(n, std::move(chords));
}

namespace {

std::size_t parse_index(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw Error(ErrorCode::ParseError, "bad vertex index '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

ChordalDecomposition ChordalDecomposition::parse(std::size_t n, std::string_view text) {
  std::vector<Chord> chords;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "chord '" + std::string(item) + "' is not of the form j-k");
    }
    chords.push_back({parse_index(item.substr(0, dash)) - 1, parse_index(item.substr(dash + 1)) - 1});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return make(n, std::move(chords));
}

bool ChordalDecomposition::has_chord(std::size_t a, std::size_t b) const noexcept {
  const Chord c{std::min(a, b), std::max(a, b)};
  return std::binary_search(chords_.begin(), chords_.end(), c);
}

std::string ChordalDecomposition::to_string() const {
  std::string out;
  for (const Chord& c : chords_) {
    if (!out.empty()) out += ',';
    out += std::to_string(c.j + 1) + "-" + std::to_string(c.k + 1);
  }
  return out;
}

namespace {

// Recursion on the apex W[m] of the base edge W[0]∧W[1]. The left part keeps
// W[0] with W[m..r-1], the right part is W[m], W[1..m-1].
std::vector<std::vector<Chord>> triangulations(const std::vector<std::size_t>& w) {
  const std::size_t r = w.size();
  if (r < 3) return {{}};
  std::vector<std::vector<Chord>> out;
  for (std::size_t m = 2; m < r; ++m) {
    std::vector<std::size_t> left{w[0]};
    left.insert(left.end(), w.begin() + static_cast<std::ptrdiff_t>(m), w.end());
    std::vector<std::size_t> right{w[m]};
    right.insert(right.end(), w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(m));

    std::vector<Chord> apex;
    if (m + 1 < r) apex.push_back({std::min(w[0], w[m]), std::max(w[0], w[m])});
    if (m > 2) apex.push_back({std::min(w[1], w[m]), std::max(w[1], w[m])});

    const auto lefts = triangulations(left);
    const auto rights = triangulations(right);
    for (const auto& l : lefts) {
      for (const auto& rr : rights) {
        std::vector<Chord> all = apex;
        all.insert(all.end(), l.begin(), l.end());
        all.insert(all.end(), rr.begin(), rr.end());
        out.push_back(std::move(all));
      }
    }
  }
  return out;
}

std::vector<std::size_t> iota_vertices(std::size_t n) {
  std::vector<std::size_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = i;
  return w;
}

}  // namespace

std::vector<ChordalDecomposition> enumerate_decompositions(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::OutOfRange, "polygon needs at least 3 vertices");
  }
  std::vector<ChordalDecomposition> out;
  for (auto& chords : triangulations(iota_vertices(n))) {
    out.push_back(ChordalDecomposition::make(n, std::move(chords)));
  }
  return out;
}

DegreeSequence cds(const ChordalDecomposition& delta) {
  std::vector<std::size_t> degree(delta.n(), 0);
  for (const Chord& c : delta.chords()) {
    ++degree[c.j];
    ++degree[c.k];
  }
  DegreeSequence seq;
  for (std::size_t d : degree) {
    if (d > 0) seq.push_back(d);
  }
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::string format_cds(const DegreeSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size();) {
    std::size_t j = i;
    while (j < seq.size() && seq[j] == seq[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(seq[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

DegreeSequence parse_cds(std::string_view text) {
  DegreeSequence seq;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const std::size_t caret = token.find('^');
    const std::size_t degree = parse_index(std::string_view(token).substr(0, caret));
    const std::size_t mult =
        caret == std::string::npos ? 1 : parse_index(std::string_view(token).substr(caret + 1));
    seq.insert(seq.end(), mult, degree);
  }
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::vector<DihedralElement> dihedral_group(std::size_t n) {
  std::vector<DihedralElement> g;
  g.reserve(2 * n);
  for (bool reflect : {false, true}) {
    for (std::size_t r = 0; r < n; ++r) g.push_back({r, reflect});
  }
  return g;
}

std::size_t dihedral_map_vertex(const DihedralElement& g, std::size_t vertex, std::size_t n) {
  // 1-based: σ(i) = -i mod n, ρ(i) = i + 1 mod n, residues taken in 1..n.
  const std::size_t one_based = vertex + 1;
  std::size_t image = g.reflect ? (n - one_based % n) % n : one_based % n;
  if (image == 0) image = n;
  return (image - 1 + g.rotation) % n;
}

ChordalDecomposition dihedral_apply(const ChordalDecomposition& delta, const DihedralElement& g) {
  std::vector<Chord> mapped;
  mapped.reserve(delta.chords().size());
  for (const Chord& c : delta.chords()) {
    mapped.push_back({dihedral_map_vertex(g, c.j, delta.n()), dihedral_map_vertex(g, c.k, delta.n())});
  }
  return ChordalDecomposition::make(delta.n(), std::move(mapped));
}

std::vector<OrbitMember> orbit_with_multiplicity(const ChordalDecomposition& delta) {
  std::vector<OrbitMember> orbit;
  const auto group = dihedral_group(delta.n());
  for (const auto& g : group) {
    ChordalDecomposition image = dihedral_apply(delta, g);
    auto it = std::find_if(orbit.begin(), orbit.end(),
                           [&](const OrbitMember& m) { return m.decomposition == image; });
    if (it == orbit.end()) {
      orbit.push_back({std::move(image), 1, 0.0});
    } else {
      ++it->stabilizer;
    }
  }
  for (auto& m : orbit) {
    m.weight = static_cast<double>(m.stabilizer) / static_cast<double>(group.size());
  }
  return orbit;
}

std::vector<std::array<std::size_t, 2>> ParsingTree::leaves_in_order() const {
  std::vector<std::array<std::size_t, 2>> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const ParseNode& node = nodes_[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    if (node.leaf) {
      out.push_back(node.edge);
      continue;
    }
    stack.push_back(node.right);
    stack.push_back(node.left);
  }
  return out;
}

namespace {

std::array<std::size_t, 2> standard_pair(std::size_t a, std::size_t b, std::size_t n) {
  if (a > b) std::swap(a, b);
  if (a == 0 && b == n - 1) return {b, a};
  return {a, b};
}

struct TreeBuilder {
  const ChordalDecomposition& delta;
  std::vector<ParseNode>& nodes;
  std::vector<OrientedRegion>& regions;

  // Returns the node index for the sub-polygon w with base w[0]∧w[1].
  int build(const std::vector<std::size_t>& w, const std::string& path) {
    const std::size_t r = w.size();
    const int index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    if (r == 2) {
      nodes[static_cast<std::size_t>(index)].leaf = true;
      nodes[static_cast<std::size_t>(index)].edge = standard_pair(w[0], w[1], delta.n());
      return index;
    }

    // The apex d closes the triangle on the base: 1∧d is a chord or the edge
    // r∧1, and 2∧d is a chord or the edge 2∧3.
    std::size_t apex = r;
    for (std::size_t m = 2; m < r; ++m) {
      const bool left_side = (m + 1 == r) || delta.has_chord(w[0], w[m]);
      const bool right_side = (m == 2) || delta.has_chord(w[1], w[m]);
      if (left_side && right_side) {
        apex = m;
        break;
      }
    }
    if (apex == r) {
      throw Error(ErrorCode::InvalidDecomposition, "no triangle on base " + std::to_string(w[0] + 1) +
                                                       "-" + std::to_string(w[1] + 1));
    }

    OrientedRegion region;
    region.oriented = {w[0], w[1], w[apex]};
    region.vertices = region.oriented;
    std::sort(region.vertices.begin(), region.vertices.end());
    region.path = path;
    const std::size_t region_index = regions.size();
    regions.push_back(std::move(region));

    std::vector<std::size_t> left{w[0]};
    left.insert(left.end(), w.begin() + static_cast<std::ptrdiff_t>(apex), w.end());
    std::vector<std::size_t> right{w[apex]};
    right.insert(right.end(), w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(apex));

    const int l = build(left, path + "L");
    const int rr = build(right, path + "R");
    ParseNode& node = nodes[static_cast<std::size_t>(index)];
    node.edge = {w[0], w[1]};
    node.region = region_index;
    node.left = l;
    node.right = rr;
    return index;
  }
};

}  // namespace

ParsingTree build_parsing_tree(const ChordalDecomposition& delta) {
  ParsingTree tree(delta);
  TreeBuilder builder{tree.delta_, tree.nodes_, tree.regions_};
  builder.build(iota_vertices(delta.n()), "");
  return tree;
}

RegionCodeTable region_codes(const ParsingTree& tree, const Polygon& poly) {
  const ChordalDecomposition& delta = tree.decomposition();
  if (delta.n() != poly.size()) {
    throw Error(ErrorCode::InvalidDecomposition, "decomposition and polygon sizes differ");
  }
  const double tol = poly.area_tolerance();
  RegionCodeTable table{delta.chords(), {}};
  for (const OrientedRegion& region : tree.regions()) {
    const Point a = poly.vertex(static_cast<std::ptrdiff_t>(region.vertices[0]));
    const Point b = poly.vertex(static_cast<std::ptrdiff_t>(region.vertices[1]));
    const Point c = poly.vertex(static_cast<std::ptrdiff_t>(region.vertices[2]));
    const Point centroid = (1.0 / 3.0) * (a + b + c);
    std::string code;
    for (const Chord& chord : delta.chords()) {
      const double value = signed_area(centroid, poly.vertex(static_cast<std::ptrdiff_t>(chord.j)),
                                       poly.vertex(static_cast<std::ptrdiff_t>(chord.k)));
      if (std::abs(value) <= tol) {
        throw Error(ErrorCode::DegenerateGeometry, "region centroid lies on a chord line");
      }
      code += value > 0.0 ? '1' : '0';
    }
    table.codes.push_back(std::move(code));
  }
  std::set<std::string> distinct(table.codes.begin(), table.codes.end());
  if (distinct.size() != table.codes.size()) {
    throw Error(ErrorCode::DegenerateGeometry, "region codes are not distinct");
  }
  return table;
}

ChordalLocator::ChordalLocator(const Polygon& poly, const ChordalDecomposition& delta)
    : poly_(poly), tree_(build_parsing_tree(delta)), codes_(region_codes(tree_, poly_)) {}

std::string ChordalLocator::point_code(Point x) const {
  const double tol = poly_.area_tolerance();
  std::string code;
  for (const Chord& chord : codes_.chords) {
    const double value = signed_area(x, poly_.vertex(static_cast<std::ptrdiff_t>(chord.j)),
                                     poly_.vertex(static_cast<std::ptrdiff_t>(chord.k)));
    code += std::abs(value) <= tol ? '*' : (value > 0.0 ? '1' : '0');
  }
  return code;
}

std::vector<std::size_t> ChordalLocator::locate(Point x) const {
  if (!barycoords::locate(poly_, x).inside_or_boundary()) {
    throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
  }
  const std::string code = point_code(x);
  std::vector<std::size_t> hits;
  for (std::size_t r = 0; r < codes_.codes.size(); ++r) {
    const std::string& rc = codes_.codes[r];
    bool match = true;
    for (std::size_t i = 0; i < code.size() && match; ++i) {
      match = code[i] == '*' || code[i] == rc[i];
    }
    if (match) hits.push_back(r);
  }
  if (hits.empty()) {
    throw Error(ErrorCode::DegenerateGeometry, "point matched no region code");
  }
  return hits;
}

BaryCoords ChordalLocator::coords_in_region(std::size_t region, Point x) const {
  const OrientedRegion& reg = tree_.regions().at(region);
  const std::array<Point, 3> tri{poly_.vertex(static_cast<std::ptrdiff_t>(reg.vertices[0])),
                                 poly_.vertex(static_cast<std::ptrdiff_t>(reg.vertices[1])),
                                 poly_.vertex(static_cast<std::ptrdiff_t>(reg.vertices[2]))};
  const auto alpha = areal_coords(tri, x);
  std::vector<double> w(poly_.size(), 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    double a = alpha[i];
    // Points located within tolerance of a region edge may sit a hair outside.
    if (a < 0.0) {
      if (a < -1e-8) {
        throw Error(ErrorCode::DegenerateGeometry, "point lies outside the selected region");
      }
      a = 0.0;
    }
    w[reg.vertices[i]] = a;
  }
  return BaryCoords::normalized(std::move(w));
}

BaryCoords ChordalLocator::coords(Point x) const { return coords_in_region(locate(x).front(), x); }

std::vector<OrientedRegion> locate_region(const ChordalDecomposition& delta, const Polygon& poly,
                                          Point x) {
  const ChordalLocator locator(poly, delta);
  std::vector<OrientedRegion> out;
  for (std::size_t r : locator.locate(x)) out.push_back(locator.tree().regions()[r]);
  return out;
}

BaryCoords chordal_coords(const Polygon& poly, const ChordalDecomposition& delta, Point x) {
  return ChordalLocator(poly, delta).coords(x);
}

BaryCoords cartographic_coords(const Polygon& poly, const ChordalDecomposition& representative,
                               Point x) {
  if (!locate(poly, x).inside_or_boundary()) {
    throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
  }
  std::vector<double> w(poly.size(), 0.0);
  for (const OrbitMember& member : orbit_with_multiplicity(representative)) {
    const BaryCoords part = chordal_coords(poly, member.decomposition, x);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += member.weight * part.weights[i];
  }
  return BaryCoords{std::move(w)};
}

ChordalDecomposition representative_for_cds(std::size_t n, const DegreeSequence& seq) {
  for (auto& delta : enumerate_decompositions(n)) {
    if (cds(delta) == seq) return delta;
  }
  throw Error(ErrorCode::InvalidDecomposition,
              "no decomposition of the " + std::to_string(n) + "-gon has CDS '" + format_cds(seq) + "'");
}

}  // namespace barycoords
