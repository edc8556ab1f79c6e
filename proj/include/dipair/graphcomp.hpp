#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dipair/category.hpp"
#include "dipair/precubical.hpp"

namespace dipair {

/// True iff every pair of vertices is joined by at most one directed edge
/// path. A directed loop gives infinitely many paths, so it fails. Only the
/// 1-skeleton is inspected.
bool check_unique_path(const PreCubicalSet& g);

enum class GraphFlavor : std::uint8_t { future, past, total };

/// A partition of the vertices and open edges of a graph into pieces. An open
/// edge belongs to exactly one piece; together with the endpoint that shares
/// its piece it forms the half-open edge of the construction.
struct GraphDecomposition {
  struct Piece {
    std::string name;
    std::vector<CellId> cells;  // vertices then edges, ascending
  };

  std::vector<std::uint32_t> branch;  // branch vertices, ascending
  std::vector<Piece> pieces;
  std::vector<std::uint32_t> vertex_piece;
  std::vector<std::uint32_t> edge_piece;

  std::uint32_t piece_of(CellId c) const { return c.dim == 0 ? vertex_piece[c.index] : edge_piece[c.index]; }
};

/// future: one piece per branch vertex b (out-degree > 1) holding the cells
/// whose first branch vertex ahead is b, plus the connected components of the
/// cells that reach no branch vertex. past: the same on the reversed graph.
/// total: every branch vertex of either kind alone, plus the components of
/// the rest. Throws NotAGraph and UniquePathViolated.
GraphDecomposition decompose(const PreCubicalSet& g, GraphFlavor flavor);

struct GraphCategory {
  GraphDecomposition decomposition;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> objects;  // piece pairs
  FiniteCategory category;
};

/// Objects are the piece pairs (P, Q) with some x in P below some y in Q.
/// There is a morphism (P, Q) -> (P', Q') when x' <= x <= y <= y' for some
/// x' in P', x in P, y in Q, y' in Q', closed under composition.
GraphCategory graph_components(const PreCubicalSet& g, GraphFlavor flavor);

}  // namespace dipair
