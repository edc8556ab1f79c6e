#include "dipair/ordercomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "dipair/errors.hpp"
#include "dipair/io.hpp"
#include "dipair/reach.hpp"

namespace dipair {

std::uint32_t OrderType::blocks() const { return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()); }

std::string to_string(const OrderType& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rank.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t.rank[i]);
  }
  return out;
}

OrderType order_type(std::span<const Rational> s, std::span<const Rational> t) {
  std::vector<Rational> v(s.begin(), s.end());
  v.insert(v.end(), t.begin(), t.end());
  for (const auto& x : v) {
    if (x <= 0 || x >= 1) throw std::invalid_argument("coordinate outside the open unit interval");
  }
  std::vector<Rational> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  OrderType out;
  for (const auto& x : v) {
    out.rank.push_back(static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  }
  return out;
}

OrderType order_type(const GridPoint& p, const GridPoint& q) {
  auto as_rationals = [](const GridPoint& g) {
    std::vector<Rational> v;
    for (auto c : g.coords) v.emplace_back(c, g.denom);
    return v;
  };
  const auto s = as_rationals(p), t = as_rationals(q);
  return order_type(s, t);
}

std::vector<OrderType> all_order_types(std::uint32_t arity) {
  std::vector<OrderType> out;
  std::vector<std::uint32_t> r(arity, 1);
  std::vector<char> used(arity + 1);
  while (true) {
    std::fill(used.begin(), used.end(), 0);
    std::uint32_t top = 0;
    for (auto x : r) {
      used[x] = 1;
      top = std::max(top, x);
    }
    if (std::all_of(used.begin() + 1, used.begin() + 1 + top, [](char c) { return c != 0; })) out.push_back({r});
    std::size_t i = arity;
    while (i > 0 && r[i - 1] == arity) r[--i] = 1;
    if (i == 0) break;
    ++r[i - 1];
  }
  return out;
}

std::uint64_t ordered_bell(std::uint32_t n) {
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    std::uint64_t binom = 1;  // C(m, k)
    for (std::uint32_t k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

std::int64_t grid_denominator(const PreCubicalSet& pcs) { return 2 * static_cast<std::int64_t>(pcs.dims()) + 1; }

PointPair canonical_rep(const PreCubicalSet& pcs, CellId c, CellId d, const OrderType& otype) {
  if (otype.arity() != c.dim + d.dim) throw std::invalid_argument("order type arity does not match the cells");
  const std::int64_t k = grid_denominator(pcs);
  if (otype.blocks() >= k) throw std::invalid_argument("order type has more blocks than the grid allows");
  PointPair rep{{c, k, {}}, {d, k, {}}};
  for (std::uint32_t i = 0; i < c.dim; ++i) rep.first.coords.push_back(otype.rank[i]);
  for (std::uint32_t i = 0; i < d.dim; ++i) rep.second.coords.push_back(otype.rank[c.dim + i]);
  return rep;
}

namespace {

std::vector<CellId> all_cells(const PreCubicalSet& pcs) {
  std::vector<CellId> out;
  for (std::uint32_t n = 0; n <= pcs.dims(); ++n) {
    for (std::uint32_t i = 0; i < pcs.count(n); ++i) out.push_back({n, i});
  }
  return out;
}

std::vector<PairObject> objects_on(const PreCubicalSet& pcs, const Subdivision& sub) {
  const ReachabilityIndex reach(skeleton(sub.complex));
  const auto cells = all_cells(pcs);
  std::vector<std::vector<OrderType>> types(2 * pcs.dims() + 1);
  for (std::uint32_t a = 0; a < types.size(); ++a) types[a] = all_order_types(a);
  std::vector<PairObject> out;
  for (const CellId c : cells) {
    for (const CellId d : cells) {
      for (const auto& t : types[c.dim + d.dim]) {
        PointPair rep = canonical_rep(pcs, c, d, t);
        if (reach(sub.map.vertex_of(pcs, rep.first), sub.map.vertex_of(pcs, rep.second))) {
          out.push_back({c, d, t, std::move(rep)});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<PairObject> order_objects(const PreCubicalSet& pcs) {
  return objects_on(pcs, subdivide(pcs, static_cast<std::uint32_t>(grid_denominator(pcs))));
}

std::uint64_t order_object_bound(const PreCubicalSet& pcs) {
  std::uint64_t total = 0;
  for (std::uint32_t p = 0; p <= pcs.dims(); ++p) {
    for (std::uint32_t q = 0; q <= pcs.dims(); ++q) {
      total += std::uint64_t{pcs.count(p)} * pcs.count(q) * ordered_bell(p + q);
    }
  }
  return total;
}

FiniteCategory extension_category(std::shared_ptr<const FundamentalCategory> fc,
                                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& objects,
                                  const std::vector<std::string>& labels, std::vector<nlohmann::json> data,
                                  std::uint64_t budget) {
  struct Info {
    std::uint32_t back = 0;
    std::uint32_t fwd = 0;
  };
  struct Shared {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> objects;
    std::vector<Info> info;
  };
  auto shared = std::make_shared<Shared>();
  shared->objects = objects;

  FiniteCategory cat;
  for (std::size_t o = 0; o < objects.size(); ++o) {
    cat.add_object(labels[o], o < data.size() ? std::move(data[o]) : nlohmann::json());
  }
  for (std::uint32_t a = 0; a < objects.size(); ++a) {
    const auto [x, y] = objects[a];
    for (std::uint32_t b = 0; b < objects.size(); ++b) {
      const auto [xb, yb] = objects[b];
      const std::uint32_t nb = fc->class_count(xb, x);
      if (nb == 0) continue;
      const std::uint32_t nf = fc->class_count(y, yb);
      if (nf == 0) continue;
      if (const auto p = fc->path_count(xb, x); p > budget) throw BudgetExceeded(p);
      if (const auto p = fc->path_count(y, yb); p > budget) throw BudgetExceeded(p);
      for (std::uint32_t i = 0; i < nb; ++i) {
        for (std::uint32_t j = 0; j < nf; ++j) {
          const auto m = cat.add_morphism(a, b, std::to_string(i) + "," + std::to_string(j));
          shared->info.resize(m + 1);
          shared->info[m] = {i, j};
        }
      }
    }
    // the empty path is the only class x -> x in a loop-free complex
    cat.set_identity(a, cat.hom(a, a).front());
  }
  cat.set_composer([fc, shared](const FiniteCategory& c, std::uint32_t f, std::uint32_t g) {
    const auto& mf = c.morphism(f);
    const auto& mg = c.morphism(g);
    const auto [xa, ya] = shared->objects[mf.src];
    const auto [xb, yb] = shared->objects[mf.dst];
    const auto [xc, yc] = shared->objects[mg.dst];
    const ClassRef back = fc->compose({xc, xb, shared->info[g].back}, {xb, xa, shared->info[f].back});
    const ClassRef fwd = fc->compose({ya, yb, shared->info[f].fwd}, {yb, yc, shared->info[g].fwd});
    const std::uint32_t nf = fc->class_count(ya, yc);
    return c.hom(mf.src, mg.dst)[back.index * nf + fwd.index];
  });
  return cat;
}

OrderCategory order_category(const PreCubicalSet& pcs, std::uint64_t budget) {
  if (has_directed_loop(pcs)) throw LoopsPresent();
  Subdivision sub = subdivide(pcs, static_cast<std::uint32_t>(grid_denominator(pcs)));
  OrderCategory out;
  out.objects = objects_on(pcs, sub);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::string> labels;
  std::vector<nlohmann::json> data;
  for (const auto& o : out.objects) {
    pairs.emplace_back(sub.map.vertex_of(pcs, o.rep.first), sub.map.vertex_of(pcs, o.rep.second));
    labels.push_back(pcs.label(o.src) + "|" + pcs.label(o.dst) + "|" + to_string(o.otype));
    data.push_back({{"cells", {pcs.label(o.src), pcs.label(o.dst)}},
                    {"ranks", o.otype.rank},
                    {"rep", {io::format_point(pcs, o.rep.first), io::format_point(pcs, o.rep.second)}}});
  }
  out.paths = std::make_shared<const FundamentalCategory>(std::move(sub.complex));
  out.category = extension_category(out.paths, pairs, labels, std::move(data), budget);
  return out;
}

CubePairCategory cube_pair_category(const EuclideanComplex& e, std::uint64_t budget) {
  CubePairCategory out;
  out.realization = from_euclidean(e);
  const PreCubicalSet& pcs = out.realization.complex;
  Subdivision sub = subdivide(pcs, 2);
  const ReachabilityIndex reach(skeleton(sub.complex));
  const auto cells = all_cells(pcs);
  auto barycentre = [&](CellId c) {
    return sub.map.vertex_of(pcs, GridPoint{c, 2, std::vector<std::int64_t>(c.dim, 1)});
  };
  auto coords = [&](CellId c) {
    const auto& ec = out.realization.cells[c.dim][c.index];
    return nlohmann::json{{"base", ec.base}, {"extent", ec.extent}};
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::string> labels;
  std::vector<nlohmann::json> data;
  for (const CellId c : cells) {
    for (const CellId d : cells) {
      const auto x = barycentre(c), y = barycentre(d);
      if (!reach(x, y)) continue;
      out.objects.emplace_back(c, d);
      pairs.emplace_back(x, y);
      labels.push_back(pcs.label(c) + "|" + pcs.label(d));
      data.push_back({{"src", coords(c)}, {"dst", coords(d)}});
    }
  }
  out.paths = std::make_shared<const FundamentalCategory>(std::move(sub.complex));
  out.category = extension_category(out.paths, pairs, labels, std::move(data), budget);
  return out;
}

}  // namespace dipair
