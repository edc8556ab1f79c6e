#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dipair {

struct CellId {
  std::uint32_t dim = 0;
  std::uint32_t index = 0;

  auto operator<=>(const CellId&) const = default;
};

std::string to_string(CellId c);

enum class Sign : std::uint8_t { minus = 0, plus = 1 };

inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }

/// A finite pre-cubical set: cells per dimension and the face maps d_i^-, d_i^+.
///
/// Faces of an n-cell are stored in axis order, minus before plus. Axes are
/// 1-based throughout the public API. There are no degeneracies.
///
/// Instances are immutable once built; use PreCubicalSet::Builder.
class PreCubicalSet {
 public:
  class Builder;

  PreCubicalSet() = default;

  /// Highest dimension carrying storage. An empty set has dims() == 0 and no cells.
  std::uint32_t dims() const { return counts_.empty() ? 0 : static_cast<std::uint32_t>(counts_.size() - 1); }
  std::uint32_t count(std::uint32_t dim) const { return dim < counts_.size() ? counts_[dim] : 0; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }
  std::uint32_t vertex_count() const { return count(0); }

  bool contains(CellId c) const { return c.dim < counts_.size() && c.index < counts_[c.dim]; }

  /// d_axis^sign(c); axis in 1..c.dim. The result is whatever was stored, so
  /// callers working on unvalidated input must check contains() themselves.
  CellId face(CellId c, std::uint32_t axis, Sign sign) const {
    return faces_[c.dim][(static_cast<std::size_t>(c.index) * c.dim + (axis - 1)) * 2 +
                         static_cast<std::size_t>(sign)];
  }

  /// Iterated face of a cell: the vertex reached by taking d_1^{signs[0]} ...
  /// i.e. the corner whose coordinate along each axis is 0 (minus) or 1 (plus).
  CellId corner(CellId c, std::span<const Sign> signs) const;

  // Edge endpoints.
  std::uint32_t source(std::uint32_t edge) const { return face({1, edge}, 1, Sign::minus).index; }
  std::uint32_t target(std::uint32_t edge) const { return face({1, edge}, 1, Sign::plus).index; }

  std::optional<CellId> find(const std::string& name) const;
  /// Primary (first registered) name of a cell, if any.
  std::optional<std::string> name_of(CellId c) const;
  /// Display label: primary name or "dim:index".
  std::string label(CellId c) const;
  const std::map<std::string, CellId>& names() const { return names_; }

  friend bool operator==(const PreCubicalSet& a, const PreCubicalSet& b) {
    return a.counts_ == b.counts_ && a.faces_ == b.faces_;
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::vector<std::vector<CellId>> faces_;
  std::map<std::string, CellId> names_;
  std::map<CellId, std::string> primary_names_;
};

class PreCubicalSet::Builder {
 public:
  Builder() = default;
  explicit Builder(std::vector<std::uint32_t> counts);
  /// Starts from an existing set (cells, faces and names are kept).
  explicit Builder(PreCubicalSet base) : pcs_(std::move(base)) {}

  CellId add_cell(std::uint32_t dim);
  /// Sets all 2*dim faces of c, ordered (d_1^-, d_1^+, d_2^-, d_2^+, ...).
  void set_faces(CellId c, std::span<const CellId> faces);
  void set_face(CellId c, std::uint32_t axis, Sign sign, CellId f);
  /// Registers a name. The first name given to a cell is its primary name.
  void name(CellId c, const std::string& name);

  CellId add_vertex() { return add_cell(0); }
  CellId add_edge(CellId from, CellId to);
  CellId add_square(CellId d1_minus, CellId d1_plus, CellId d2_minus, CellId d2_plus);

  PreCubicalSet build() &&;

 private:
  void grow(std::uint32_t dim);
  PreCubicalSet pcs_;
};

struct Violation {
  CellId cell;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Sign alpha = Sign::minus;
  Sign beta = Sign::minus;
  /// Empty for relation violations; describes the bad reference otherwise.
  std::string missing;
};

using ValidationReport = std::vector<Violation>;

/// Checks that face references resolve and that d_i^a d_j^b = d_{j-1}^b d_i^a for i < j.
ValidationReport validate(const PreCubicalSet& pcs);
std::string describe(const Violation& v, const PreCubicalSet& pcs);

/// A point of the geometric realization: [carrier; coords/denom], with every
/// coordinate strictly inside (0, denom).
struct GridPoint {
  CellId carrier;
  std::int64_t denom = 1;
  std::vector<std::int64_t> coords;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Builds a point, pushing coordinates equal to 0 or denom onto the matching
/// boundary cell so that the carrier is the open cell containing the point.
GridPoint make_point(const PreCubicalSet& pcs, CellId carrier, std::int64_t denom,
                     std::vector<std::int64_t> coords);

/// Same point over the denominator k; k must be a multiple of p.denom.
GridPoint rescale(const GridPoint& p, std::int64_t k);

struct SubdividedCell {
  CellId original;
  /// One entry per axis of the original cell, in 1..2k-1: even entries are
  /// grid vertices at position/2k, odd entries are open grid segments.
  std::vector<std::int32_t> position;
};

class SubdivisionMap {
 public:
  SubdivisionMap() = default;

  std::uint32_t factor() const { return factor_; }

  /// Subdivided cell at the given positions (values 0..2k) of an original
  /// cell; boundary positions are resolved through the original's faces.
  CellId cell_at(const PreCubicalSet& original, CellId c, std::vector<std::int32_t> position) const;

  /// The subdivided vertex realizing p. p.denom must divide factor().
  std::uint32_t vertex_of(const PreCubicalSet& original, const GridPoint& p) const;

  const SubdividedCell& origin(CellId subdivided) const { return origin_[subdivided.dim][subdivided.index]; }

  /// The point realized by a subdivided vertex, as a GridPoint over factor().
  GridPoint point_of(std::uint32_t vertex) const;

 private:
  friend struct SubdivisionBuilder;

  struct KeyHash {
    std::size_t operator()(const std::vector<std::int32_t>& key) const noexcept;
  };

  std::uint32_t factor_ = 1;
  std::vector<std::vector<SubdividedCell>> origin_;
  std::unordered_map<std::vector<std::int32_t>, CellId, KeyHash> lookup_;
};

struct Subdivision {
  PreCubicalSet complex;
  SubdivisionMap map;
};

/// Replaces every n-cell by k^n cells of the uniform grid. Throws
/// std::invalid_argument for k == 0.
Subdivision subdivide(const PreCubicalSet& pcs, std::uint32_t k);

/// Cells are pairs (p-cell of a, q-cell of b); faces act on the left factor
/// for axes 1..p and on the right factor for axes p+1..p+q. Cells of each
/// dimension n are ordered by p ascending, then a-index, then b-index.
PreCubicalSet product(const PreCubicalSet& a, const PreCubicalSet& b);

/// The factor cells of a product cell.
std::pair<CellId, CellId> product_factors(const PreCubicalSet& a, const PreCubicalSet& b, CellId c);

/// A cell of the unit-grid decomposition of R^n.
struct EuclideanCell {
  std::vector<std::int64_t> base;
  std::vector<std::uint8_t> extent;

  std::uint32_t dim() const;
  auto operator<=>(const EuclideanCell&) const = default;
};

struct EuclideanComplex {
  std::uint32_t ambient_dim = 0;
  std::vector<EuclideanCell> top_cells;
};

struct EuclideanRealization {
  PreCubicalSet complex;
  /// Coordinates of every cell, indexed [dim][index].
  std::vector<std::vector<EuclideanCell>> cells;
};

/// Closes the listed cells under faces. Cells of each dimension are ordered
/// by (base, extent). Throws std::invalid_argument on duplicate or
/// malformed cells.
EuclideanRealization from_euclidean(const EuclideanComplex& e);

/// The reversed complex: d_i^- and d_i^+ swapped on every cell.
PreCubicalSet reverse(const PreCubicalSet& pcs);

}  // namespace dipair
