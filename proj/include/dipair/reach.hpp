#pragma once

#include <cstdint>
#include <vector>

#include "dipair/precubical.hpp"

namespace dipair {

enum class Flavor : std::uint8_t { future, past };

/// Vertices and one arc per 1-cell, from d_1^-(e) to d_1^+(e).
struct DirectedSkeleton {
  struct Arc {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
  };

  std::uint32_t vertex_count = 0;
  std::vector<Arc> arcs;                       // indexed by 1-cell index
  std::vector<std::vector<std::uint32_t>> out;  // arc ids leaving each vertex, ascending
  std::vector<std::vector<std::uint32_t>> in;   // arc ids entering each vertex, ascending
};

DirectedSkeleton skeleton(const PreCubicalSet& pcs);

/// Membership over the vertices of one complex.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t universe, bool all = false) : bits_(universe, all ? 1 : 0) {}

  static VertexSet of(std::uint32_t universe, std::initializer_list<std::uint32_t> members);

  std::uint32_t universe() const { return static_cast<std::uint32_t>(bits_.size()); }
  bool contains(std::uint32_t v) const { return bits_[v] != 0; }
  void insert(std::uint32_t v) { bits_[v] = 1; }
  void erase(std::uint32_t v) { bits_[v] = 0; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::uint32_t> members() const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet complement() const;
  bool subset_of(const VertexSet& o) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

bool has_directed_loop(const PreCubicalSet& pcs);
bool reachable(const PreCubicalSet& pcs, std::uint32_t from, std::uint32_t to);

/// Every vertex with a directed path into s (past) or out of s (future); s is included.
VertexSet past_set(const PreCubicalSet& pcs, const VertexSet& s);
VertexSet future_set(const PreCubicalSet& pcs, const VertexSet& s);

/// Cells that are an iterated lower (future) or upper (past) face of more
/// than one maximal cell. The empty composite counts, so a maximal cell is
/// its own lower face.
///
/// Note: under this definition the corner a+ of the four-square complex in
/// builtins::dubut() is not a future branch point, although it is the unique
/// vertex separating A from the rest; no alternative definition is applied.
std::vector<CellId> branch_cubes(const PreCubicalSet& pcs, Flavor flavor);

/// The region E(x): the intersection of the pasts (futures, for the past
/// flavor) of the branch vertices comparable with x and of the complements
/// of the pasts (futures) of the remaining branch vertices.
VertexSet e_region(const PreCubicalSet& pcs, std::uint32_t x, Flavor flavor);

/// All-pairs vertex reachability, one bit row per source.
class ReachabilityIndex {
 public:
  explicit ReachabilityIndex(const DirectedSkeleton& sk);

  bool operator()(std::uint32_t from, std::uint32_t to) const {
    return (rows_[static_cast<std::size_t>(from) * words_ + to / 64] >> (to % 64)) & 1u;
  }
  std::uint32_t vertex_count() const { return n_; }

 private:
  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Vertices in a topological order of the skeleton; empty optional-like
/// result (size < vertex_count) signals a directed cycle.
std::vector<std::uint32_t> topological_order(const DirectedSkeleton& sk);

}  // namespace dipair
