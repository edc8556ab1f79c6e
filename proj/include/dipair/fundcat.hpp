#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "dipair/precubical.hpp"
#include "dipair/reach.hpp"

namespace dipair {

inline constexpr std::uint64_t default_budget = 1'000'000;

/// A directed edge path; arcs are 1-cell indices. Empty iff source == target.
struct EdgePath {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::vector<std::uint32_t> arcs;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// A dihomotopy class of edge paths: its lexicographically least member and
/// how many paths it contains (saturating at UINT64_MAX).
struct DipathClass {
  EdgePath canonical;
  std::uint64_t size = 0;

  friend bool operator==(const DipathClass&, const DipathClass&) = default;
};

/// All directed edge paths from u to v in lexicographic order of arc indices.
/// Throws LoopsPresent on complexes with directed loops and BudgetExceeded
/// when more than budget paths exist.
std::vector<EdgePath> enumerate_dipaths(const PreCubicalSet& pcs, std::uint32_t u, std::uint32_t v,
                                        std::uint64_t budget = default_budget);

/// Partitions paths by the closure of the square move a.b <-> c.d, where for
/// a 2-cell s: a = d_1^-(s), b = d_2^+(s), c = d_2^-(s), d = d_1^+(s).
/// Classes are sorted by canonical member. Throws std::invalid_argument if
/// the paths do not share endpoints.
std::vector<DipathClass> square_classes(const PreCubicalSet& pcs, std::span<const EdgePath> paths);

/// Dihomotopy classes of all dipaths leaving one source vertex, computed
/// vertex by vertex in topological order. A path ending with arc e is
/// determined up to dihomotopy by the class of its prefix and e; the only
/// identifications beyond those of the prefixes come from squares whose top
/// corner is the current vertex.
class PathClassTable {
 public:
  PathClassTable(const PreCubicalSet& pcs, const DirectedSkeleton& sk, std::span<const std::uint32_t> topo,
                 std::uint32_t source);

  std::uint32_t source() const { return source_; }
  std::uint32_t class_count(std::uint32_t v) const { return static_cast<std::uint32_t>(classes_[v].size()); }
  const std::vector<std::uint32_t>& canonical(std::uint32_t v, std::uint32_t c) const { return classes_[v][c].canonical; }
  std::uint64_t path_count(std::uint32_t v, std::uint32_t c) const { return classes_[v][c].paths; }
  std::uint64_t total_paths(std::uint32_t v) const;

  /// Class at target(e) of (class c at source(e)) followed by e.
  std::uint32_t step(std::uint32_t arc, std::uint32_t c) const { return step_[arc][c]; }

  /// Class of start_class followed by the given arcs, starting at vertex start.
  std::uint32_t extend(std::uint32_t start, std::uint32_t start_class, std::span<const std::uint32_t> arcs) const;

  std::vector<DipathClass> classes(std::uint32_t v) const;

 private:
  struct Entry {
    std::vector<std::uint32_t> canonical;
    std::uint64_t paths = 0;
  };

  std::uint32_t source_;
  const DirectedSkeleton* sk_;
  std::vector<std::vector<Entry>> classes_;
  std::vector<std::vector<std::uint32_t>> step_;
};

/// Reference to a dihomotopy class between two vertices.
struct ClassRef {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::uint32_t index = 0;

  friend bool operator==(const ClassRef&, const ClassRef&) = default;
};

/// The fundamental category of a loop-free complex: vertices, dihomotopy
/// classes of dipaths, concatenation. Per-source tables are built on demand
/// and cached; concurrent const access is safe.
class FundamentalCategory {
 public:
  /// Throws LoopsPresent.
  explicit FundamentalCategory(PreCubicalSet pcs);
  ~FundamentalCategory();

  const PreCubicalSet& complex() const { return pcs_; }
  const DirectedSkeleton& skeleton() const { return sk_; }

  const PathClassTable& from(std::uint32_t u) const;

  std::uint32_t class_count(std::uint32_t u, std::uint32_t v) const { return from(u).class_count(v); }
  std::uint64_t path_count(std::uint32_t u, std::uint32_t v) const { return from(u).total_paths(v); }
  std::vector<DipathClass> classes(std::uint32_t u, std::uint32_t v) const;

  /// Class of an arbitrary dipath.
  ClassRef class_of(const EdgePath& path) const;
  /// Concatenation f then g; requires f.to == g.from.
  ClassRef compose(ClassRef f, ClassRef g) const;
  EdgePath canonical(ClassRef c) const;

 private:
  PreCubicalSet pcs_;
  DirectedSkeleton sk_;
  std::vector<std::uint32_t> topo_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<PathClassTable>> tables_;
};

using PointPair = std::pair<GridPoint, GridPoint>;

struct Pi0Result {
  std::uint32_t factor = 1;      // subdivision used
  std::uint32_t source = 0;      // vertices of the subdivided complex
  std::uint32_t target = 0;
  std::uint64_t path_count = 0;
  std::vector<DipathClass> classes;

  std::size_t count() const { return classes.size(); }
};

/// Connected components of the trace space between two grid points: the
/// complex is subdivided by the common denominator, the points become
/// vertices and their dipath classes are returned. Throws LoopsPresent and
/// BudgetExceeded (more than budget dipaths between the points).
Pi0Result trace_pi0(const PreCubicalSet& pcs, const GridPoint& p, const GridPoint& q,
                    std::uint64_t budget = default_budget);

/// A morphism (x,y) -> (x',y') of the extension category: a class back from
/// x' to x and a class forward from y to y'. Paths live in the complex
/// subdivided by the points' common denominator.
struct ExtMorphism {
  PointPair src;
  PointPair dst;
  DipathClass back;
  DipathClass fwd;

  friend bool operator==(const ExtMorphism&, const ExtMorphism&) = default;
};

/// All extension morphisms src -> dst, back-class major, in canonical order.
std::vector<ExtMorphism> homset(const PreCubicalSet& pcs, const PointPair& src, const PointPair& dst,
                                std::uint64_t budget = default_budget);

/// m1 then m2. Throws std::invalid_argument unless m1.dst == m2.src.
ExtMorphism compose(const PreCubicalSet& pcs, const ExtMorphism& m1, const ExtMorphism& m2);

/// The identity on a reachable pair (empty back and forward paths).
ExtMorphism identity(const PreCubicalSet& pcs, const PointPair& obj);

/// Smallest common denominator of the given points, with every point rescaled to it.
std::vector<GridPoint> common_denominator(std::span<const GridPoint> points, std::int64_t at_least = 1);

}  // namespace dipair
