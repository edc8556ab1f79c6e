#include "dipair/fundcat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dipair/errors.hpp"

namespace dipair {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// The two boundary routes of a 2-cell: first = d_1^- . d_2^+, second = d_2^- . d_1^+.
struct SquareRoutes {
  std::uint32_t a, b, c, d;
};

SquareRoutes routes(const PreCubicalSet& pcs, std::uint32_t square) {
  const CellId s{2, square};
  return {pcs.face(s, 1, Sign::minus).index, pcs.face(s, 2, Sign::plus).index, pcs.face(s, 2, Sign::minus).index,
          pcs.face(s, 1, Sign::plus).index};
}

}  // namespace

std::vector<EdgePath> enumerate_dipaths(const PreCubicalSet& pcs, std::uint32_t u, std::uint32_t v,
                                        std::uint64_t budget) {
  const DirectedSkeleton sk = skeleton(pcs);
  if (topological_order(sk).size() < sk.vertex_count) throw LoopsPresent();
  if (u >= sk.vertex_count || v >= sk.vertex_count) throw std::invalid_argument("vertex out of range");

  const VertexSet useful = past_set(pcs, VertexSet::of(sk.vertex_count, {v}));
  std::vector<EdgePath> paths;
  if (!useful.contains(u)) return paths;

  std::vector<std::uint32_t> arcs;
  // frames: (vertex, position in its out list)
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{u, 0}};
  while (!stack.empty()) {
    auto& [w, next] = stack.back();
    if (next == 0 && w == v) {
      if (paths.size() >= budget) throw BudgetExceeded(paths.size() + 1);
      paths.push_back({u, v, arcs});
    }
    if (next < sk.out[w].size()) {
      const std::uint32_t e = sk.out[w][next++];
      const std::uint32_t to = sk.arcs[e].to;
      if (useful.contains(to)) {
        arcs.push_back(e);
        stack.push_back({to, 0});
      }
    } else {
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
    }
  }
  return paths;
}

std::vector<DipathClass> square_classes(const PreCubicalSet& pcs, std::span<const EdgePath> paths) {
  if (paths.empty()) return {};
  for (const auto& p : paths) {
    if (p.source != paths.front().source || p.target != paths.front().target) {
      throw std::invalid_argument("paths do not share endpoints");
    }
  }
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i].arcs, i);

  std::multimap<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>> moves;
  for (std::uint32_t s = 0; s < pcs.count(2); ++s) {
    const SquareRoutes r = routes(pcs, s);
    moves.emplace(std::pair{r.a, r.b}, std::pair{r.c, r.d});
    moves.emplace(std::pair{r.c, r.d}, std::pair{r.a, r.b});
  }

  UnionFind uf(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& arcs = paths[i].arcs;
    for (std::size_t j = 0; j + 1 < arcs.size(); ++j) {
      auto [lo, hi] = moves.equal_range({arcs[j], arcs[j + 1]});
      for (auto it = lo; it != hi; ++it) {
        auto moved = arcs;
        moved[j] = it->second.first;
        moved[j + 1] = it->second.second;
        if (auto found = index.find(moved); found != index.end()) uf.unite(i, found->second);
      }
    }
  }

  std::map<std::size_t, DipathClass> by_root;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto [it, fresh] = by_root.try_emplace(uf.find(i), DipathClass{paths[i], 0});
    if (paths[i].arcs < it->second.canonical.arcs) it->second.canonical = paths[i];
    ++it->second.size;
  }
  std::vector<DipathClass> out;
  for (auto& [root, cls] : by_root) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.canonical.arcs < y.canonical.arcs; });
  return out;
}

PathClassTable::PathClassTable(const PreCubicalSet& pcs, const DirectedSkeleton& sk,
                               std::span<const std::uint32_t> topo, std::uint32_t source)
    : source_(source), sk_(&sk), classes_(sk.vertex_count), step_(sk.arcs.size()) {
  // squares grouped by their top corner
  std::vector<std::vector<SquareRoutes>> squares_at(sk.vertex_count);
  for (std::uint32_t s = 0; s < pcs.count(2); ++s) {
    const SquareRoutes r = routes(pcs, s);
    squares_at[sk.arcs[r.b].to].push_back(r);
  }

  classes_[source].push_back({{}, 1});
  bool started = false;
  for (std::uint32_t w : topo) {
    if (w == source) {
      started = true;
      continue;
    }
    if (!started) continue;

    // candidate (arc e, class c at source(e)) -> offset[e position] + c
    const auto& in = sk.in[w];
    std::vector<std::size_t> offset(in.size() + 1, 0);
    std::map<std::uint32_t, std::size_t> slot;
    for (std::size_t i = 0; i < in.size(); ++i) {
      slot[in[i]] = i;
      offset[i + 1] = offset[i] + classes_[sk.arcs[in[i]].from].size();
    }
    const std::size_t n = offset.back();
    if (n == 0) continue;

    UnionFind uf(n);
    for (const SquareRoutes& r : squares_at[w]) {
      const std::uint32_t corner = sk.arcs[r.a].from;
      for (std::uint32_t q = 0; q < classes_[corner].size(); ++q) {
        const std::uint32_t q1 = step_[r.a][q];
        const std::uint32_t q2 = step_[r.c][q];
        uf.unite(offset[slot[r.b]] + q1, offset[slot[r.d]] + q2);
      }
    }

    std::map<std::size_t, Entry> groups;
    std::vector<std::size_t> root_of(n);
    for (std::size_t i = 0; i < in.size(); ++i) {
      const std::uint32_t e = in[i];
      const auto& prev = classes_[sk.arcs[e].from];
      for (std::uint32_t c = 0; c < prev.size(); ++c) {
        const std::size_t cand = offset[i] + c;
        const std::size_t root = uf.find(cand);
        root_of[cand] = root;
        std::vector<std::uint32_t> path = prev[c].canonical;
        path.push_back(e);
        auto [it, fresh] = groups.try_emplace(root, Entry{path, 0});
        if (!fresh && path < it->second.canonical) it->second.canonical = std::move(path);
        it->second.paths = saturating_add(it->second.paths, prev[c].paths);
      }
    }

    std::vector<std::pair<std::size_t, Entry>> sorted(groups.begin(), groups.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.second.canonical < y.second.canonical; });
    std::map<std::size_t, std::uint32_t> id_of_root;
    for (std::uint32_t id = 0; id < sorted.size(); ++id) {
      id_of_root[sorted[id].first] = id;
      classes_[w].push_back(std::move(sorted[id].second));
    }
    for (std::size_t i = 0; i < in.size(); ++i) {
      const std::uint32_t e = in[i];
      auto& st = step_[e];
      st.resize(classes_[sk.arcs[e].from].size());
      for (std::uint32_t c = 0; c < st.size(); ++c) st[c] = id_of_root[root_of[offset[i] + c]];
    }
  }
}

std::uint64_t PathClassTable::total_paths(std::uint32_t v) const {
  std::uint64_t total = 0;
  for (const auto& e : classes_[v]) total = saturating_add(total, e.paths);
  return total;
}

std::uint32_t PathClassTable::extend(std::uint32_t start, std::uint32_t start_class,
                                     std::span<const std::uint32_t> arcs) const {
  std::uint32_t at = start, cls = start_class;
  for (std::uint32_t e : arcs) {
    if (e >= sk_->arcs.size() || sk_->arcs[e].from != at) throw std::invalid_argument("arcs do not form a path");
    if (cls >= step_[e].size()) throw std::invalid_argument("class out of range");
    cls = step_[e][cls];
    at = sk_->arcs[e].to;
  }
  return cls;
}

std::vector<DipathClass> PathClassTable::classes(std::uint32_t v) const {
  std::vector<DipathClass> out;
  for (const auto& e : classes_[v]) out.push_back({{source_, v, e.canonical}, e.paths});
  return out;
}

FundamentalCategory::FundamentalCategory(PreCubicalSet pcs) : pcs_(std::move(pcs)), sk_(dipair::skeleton(pcs_)) {
  topo_ = topological_order(sk_);
  if (topo_.size() < sk_.vertex_count) throw LoopsPresent();
  tables_.resize(sk_.vertex_count);
}

FundamentalCategory::~FundamentalCategory() = default;

const PathClassTable& FundamentalCategory::from(std::uint32_t u) const {
  if (u >= sk_.vertex_count) throw std::invalid_argument("vertex out of range");
  std::lock_guard lock(mutex_);
  if (!tables_[u]) tables_[u] = std::make_unique<PathClassTable>(pcs_, sk_, topo_, u);
  return *tables_[u];
}

std::vector<DipathClass> FundamentalCategory::classes(std::uint32_t u, std::uint32_t v) const {
  return from(u).classes(v);
}

ClassRef FundamentalCategory::class_of(const EdgePath& path) const {
  const std::uint32_t c = from(path.source).extend(path.source, 0, path.arcs);
  const std::uint32_t end = path.arcs.empty() ? path.source : sk_.arcs[path.arcs.back()].to;
  if (end != path.target) throw std::invalid_argument("path does not end at its target");
  return {path.source, path.target, c};
}

ClassRef FundamentalCategory::compose(ClassRef f, ClassRef g) const {
  if (f.to != g.from) throw std::invalid_argument("classes are not composable");
  const auto& tail = from(g.from).canonical(g.to, g.index);
  return {f.from, g.to, from(f.from).extend(f.to, f.index, tail)};
}

EdgePath FundamentalCategory::canonical(ClassRef c) const { return {c.from, c.to, from(c.from).canonical(c.to, c.index)}; }

std::vector<GridPoint> common_denominator(std::span<const GridPoint> points, std::int64_t at_least) {
  std::int64_t k = at_least;
  for (const auto& p : points) k = std::lcm(k, p.denom);
  std::vector<GridPoint> out;
  for (const auto& p : points) out.push_back(rescale(p, k));
  return out;
}

namespace {

void check_budget(std::uint64_t paths, std::uint64_t budget) {
  if (paths > budget) throw BudgetExceeded(paths);
}

}  // namespace

Pi0Result trace_pi0(const PreCubicalSet& pcs, const GridPoint& p, const GridPoint& q, std::uint64_t budget) {
  const GridPoint pts[] = {p, q};
  const auto scaled = common_denominator(pts);
  const auto k = static_cast<std::uint32_t>(scaled[0].denom);
  Subdivision sub = subdivide(pcs, k);
  Pi0Result r;
  r.factor = k;
  r.source = sub.map.vertex_of(pcs, scaled[0]);
  r.target = sub.map.vertex_of(pcs, scaled[1]);
  FundamentalCategory fc(std::move(sub.complex));
  r.path_count = fc.path_count(r.source, r.target);
  check_budget(r.path_count, budget);
  r.classes = fc.classes(r.source, r.target);
  return r;
}

namespace {

struct ExtContext {
  std::vector<GridPoint> points;  // x, y, x', y' over a common denominator
  Subdivision sub;
  std::vector<std::uint32_t> vertex;
};

ExtContext ext_context(const PreCubicalSet& pcs, std::span<const GridPoint> pts) {
  ExtContext ctx;
  ctx.points = common_denominator(pts);
  ctx.sub = subdivide(pcs, static_cast<std::uint32_t>(ctx.points[0].denom));
  for (const auto& p : ctx.points) ctx.vertex.push_back(ctx.sub.map.vertex_of(pcs, p));
  return ctx;
}

}  // namespace

std::vector<ExtMorphism> homset(const PreCubicalSet& pcs, const PointPair& src, const PointPair& dst,
                                std::uint64_t budget) {
  const GridPoint pts[] = {src.first, src.second, dst.first, dst.second};
  ExtContext ctx = ext_context(pcs, pts);
  FundamentalCategory fc(std::move(ctx.sub.complex));
  const auto &x = ctx.vertex[0], &y = ctx.vertex[1], &xb = ctx.vertex[2], &yb = ctx.vertex[3];
  check_budget(fc.path_count(xb, x), budget);
  check_budget(fc.path_count(y, yb), budget);
  const PointPair s{ctx.points[0], ctx.points[1]}, d{ctx.points[2], ctx.points[3]};
  std::vector<ExtMorphism> out;
  for (const auto& back : fc.classes(xb, x)) {
    for (const auto& fwd : fc.classes(y, yb)) out.push_back({s, d, back, fwd});
  }
  return out;
}

ExtMorphism compose(const PreCubicalSet& pcs, const ExtMorphism& m1, const ExtMorphism& m2) {
  if (!(m1.dst == m2.src)) throw std::invalid_argument("morphisms are not composable");
  const GridPoint pts[] = {m1.src.first, m1.src.second, m2.dst.first, m2.dst.second, m1.dst.first, m1.dst.second};
  ExtContext ctx = ext_context(pcs, pts);
  if (ctx.points[0].denom != m1.src.first.denom) {
    throw std::invalid_argument("morphisms must be expressed over one denominator");
  }
  FundamentalCategory fc(std::move(ctx.sub.complex));
  // back legs run x'' -> x' -> x, forward legs y -> y' -> y''
  const ClassRef back2 = fc.class_of(m2.back.canonical);
  const ClassRef back1 = fc.class_of(m1.back.canonical);
  const ClassRef fwd1 = fc.class_of(m1.fwd.canonical);
  const ClassRef fwd2 = fc.class_of(m2.fwd.canonical);
  const ClassRef back = fc.compose(back2, back1);
  const ClassRef fwd = fc.compose(fwd1, fwd2);
  auto as_class = [&](ClassRef c) {
    return DipathClass{fc.canonical(c), fc.from(c.from).path_count(c.to, c.index)};
  };
  return {m1.src, m2.dst, as_class(back), as_class(fwd)};
}

ExtMorphism identity(const PreCubicalSet& pcs, const PointPair& obj) {
  const GridPoint pts[] = {obj.first, obj.second};
  ExtContext ctx = ext_context(pcs, pts);
  const PointPair o{ctx.points[0], ctx.points[1]};
  return {o, o, DipathClass{{ctx.vertex[0], ctx.vertex[0], {}}, 1}, DipathClass{{ctx.vertex[1], ctx.vertex[1], {}}, 1}};
}

}  // namespace dipair
