#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dipair/category.hpp"
#include "dipair/fundcat.hpp"
#include "dipair/precubical.hpp"

namespace dipair {

using Rational = boost::rational<std::int64_t>;

/// Rank pattern of a coordinate vector: rank[i] in 1..blocks, equal ranks for
/// equal coordinates, every rank in between used.
struct OrderType {
  std::vector<std::uint32_t> rank;

  std::uint32_t arity() const { return static_cast<std::uint32_t>(rank.size()); }
  std::uint32_t blocks() const;
  auto operator<=>(const OrderType&) const = default;
};

std::string to_string(const OrderType& t);

/// Order type of the concatenation (s, t). Every entry must lie strictly
/// inside (0, 1); throws std::invalid_argument otherwise.
OrderType order_type(std::span<const Rational> s, std::span<const Rational> t);
OrderType order_type(const GridPoint& p, const GridPoint& q);

/// Every order type of the given arity, lexicographically by rank vector.
std::vector<OrderType> all_order_types(std::uint32_t arity);

/// Number of weak orders on n elements: 1, 1, 3, 13, 75, 541, ...
std::uint64_t ordered_bell(std::uint32_t n);

/// 2 * dims + 1: the denominator of every canonical representative.
std::int64_t grid_denominator(const PreCubicalSet& pcs);

/// Points on c and d whose coordinate i is rank(i) / grid_denominator.
/// Throws std::invalid_argument on arity mismatch or a rank that does not fit.
PointPair canonical_rep(const PreCubicalSet& pcs, CellId c, CellId d, const OrderType& otype);

struct PairObject {
  CellId src;
  CellId dst;
  OrderType otype;
  PointPair rep;
};

/// Every (c, d, order type) whose canonical representative is a reachable
/// pair, ordered by c, d, then rank vector. Works on complexes with loops.
std::vector<PairObject> order_objects(const PreCubicalSet& pcs);

/// Object count bound: sum over cell pairs of ordered_bell(dim c + dim d).
std::uint64_t order_object_bound(const PreCubicalSet& pcs);

struct OrderCategory {
  std::vector<PairObject> objects;
  std::shared_ptr<const FundamentalCategory> paths;  // on the grid subdivision
  FiniteCategory category;
};

/// Objects from order_objects, hom sets from dipath classes between the
/// canonical representatives. Throws LoopsPresent and BudgetExceeded.
OrderCategory order_category(const PreCubicalSet& pcs, std::uint64_t budget = default_budget);

struct CubePairCategory {
  EuclideanRealization realization;
  std::vector<std::pair<CellId, CellId>> objects;
  std::shared_ptr<const FundamentalCategory> paths;  // on the subdivision by 2
  FiniteCategory category;
};

/// Objects are the cell pairs whose barycentres form a reachable pair.
CubePairCategory cube_pair_category(const EuclideanComplex& e, std::uint64_t budget = default_budget);

/// Extension category on the given vertex pairs of a loop-free complex:
/// morphisms (x,y) -> (x',y') are pairs (class x' -> x, class y -> y').
/// Labels and data are attached to the objects in order.
FiniteCategory extension_category(std::shared_ptr<const FundamentalCategory> fc,
                                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& objects,
                                  const std::vector<std::string>& labels, std::vector<nlohmann::json> data,
                                  std::uint64_t budget);

}  // namespace dipair
