#include "dipair/graphcomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dipair/errors.hpp"
#include "dipair/reach.hpp"

namespace dipair {

namespace {

bool is_graph(const PreCubicalSet& g) {
  for (std::uint32_t n = 2; n <= g.dims(); ++n) {
    if (g.count(n) > 0) return false;
  }
  return true;
}

constexpr std::uint32_t none = UINT32_MAX;

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool check_unique_path(const PreCubicalSet& g) {
  const DirectedSkeleton sk = skeleton(g);
  const auto topo = topological_order(sk);
  if (topo.size() < sk.vertex_count) return false;
  std::vector<std::uint32_t> paths(sk.vertex_count);
  for (std::uint32_t s = 0; s < sk.vertex_count; ++s) {
    std::fill(paths.begin(), paths.end(), 0);
    paths[s] = 1;
    for (std::uint32_t v : topo) {
      if (paths[v] == 0) continue;
      for (auto e : sk.out[v]) {
        const auto w = sk.arcs[e].to;
        if (++paths[w] > 1) return false;
      }
    }
  }
  return true;
}

GraphDecomposition decompose(const PreCubicalSet& g, GraphFlavor flavor) {
  if (!is_graph(g)) throw NotAGraph("graph components need a 1-dimensional complex");
  if (!check_unique_path(g)) throw UniquePathViolated("some pair of vertices is joined by more than one directed path");

  const DirectedSkeleton sk = skeleton(g);
  const std::uint32_t nv = sk.vertex_count;
  const auto ne = static_cast<std::uint32_t>(sk.arcs.size());
  const auto topo = topological_order(sk);

  GraphDecomposition d;
  d.vertex_piece.assign(nv, none);
  d.edge_piece.assign(ne, none);

  auto label = [&](std::uint32_t v) { return g.label({0, v}); };
  std::string rest_prefix;

  if (flavor == GraphFlavor::total) {
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (sk.out[v].size() > 1 || sk.in[v].size() > 1) d.branch.push_back(v);
    }
    for (auto b : d.branch) {
      d.vertex_piece[b] = static_cast<std::uint32_t>(d.pieces.size());
      d.pieces.push_back({label(b), {}});
    }
    rest_prefix = "R";
  } else {
    const bool future = flavor == GraphFlavor::future;
    // first branch vertex met when walking forward (backward for past)
    std::vector<std::uint32_t> first(nv, none);
    auto walk = [&](std::uint32_t v) {
      const auto& ahead = future ? sk.out[v] : sk.in[v];
      if (ahead.size() > 1) {
        first[v] = v;
      } else if (ahead.size() == 1) {
        const auto& arc = sk.arcs[ahead.front()];
        first[v] = first[future ? arc.to : arc.from];
      }
    };
    if (future) {
      for (auto it = topo.rbegin(); it != topo.rend(); ++it) walk(*it);
    } else {
      for (auto v : topo) walk(v);
    }
    std::map<std::uint32_t, std::uint32_t> piece_of_branch;
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (first[v] == v) {
        d.branch.push_back(v);
        piece_of_branch[v] = static_cast<std::uint32_t>(d.pieces.size());
        d.pieces.push_back({"G(" + label(v) + ")", {}});
      }
    }
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (first[v] != none) d.vertex_piece[v] = piece_of_branch[first[v]];
    }
    for (std::uint32_t e = 0; e < ne; ++e) {
      const std::uint32_t end = future ? sk.arcs[e].to : sk.arcs[e].from;
      if (first[end] != none) d.edge_piece[e] = piece_of_branch[first[end]];
    }
    rest_prefix = future ? "T" : "B";
  }

  // components of the unassigned cells; cell ids are vertices then edges
  Dsu dsu(nv + ne);
  for (std::uint32_t e = 0; e < ne; ++e) {
    if (d.edge_piece[e] != none) continue;
    for (auto v : {sk.arcs[e].from, sk.arcs[e].to}) {
      if (d.vertex_piece[v] == none) dsu.unite(nv + e, v);
    }
  }
  std::map<std::uint32_t, std::uint32_t> piece_of_root;
  auto assign = [&](std::uint32_t cell) {
    const auto root = dsu.find(cell);
    auto [it, fresh] = piece_of_root.try_emplace(root, static_cast<std::uint32_t>(d.pieces.size()));
    if (fresh) d.pieces.push_back({rest_prefix + std::to_string(piece_of_root.size()), {}});
    return it->second;
  };
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (d.vertex_piece[v] == none) d.vertex_piece[v] = assign(v);
  }
  for (std::uint32_t e = 0; e < ne; ++e) {
    if (d.edge_piece[e] == none) d.edge_piece[e] = assign(nv + e);
  }
  for (std::uint32_t v = 0; v < nv; ++v) d.pieces[d.vertex_piece[v]].cells.push_back({0, v});
  for (std::uint32_t e = 0; e < ne; ++e) d.pieces[d.edge_piece[e]].cells.push_back({1, e});
  return d;
}

GraphCategory graph_components(const PreCubicalSet& g, GraphFlavor flavor) {
  GraphCategory out;
  out.decomposition = decompose(g, flavor);
  const auto& d = out.decomposition;
  const DirectedSkeleton sk = skeleton(g);
  const ReachabilityIndex reach(sk);
  const std::uint32_t nv = sk.vertex_count;
  const auto nc = static_cast<std::uint32_t>(nv + sk.arcs.size());
  const auto np = static_cast<std::uint32_t>(d.pieces.size());

  // x <= y for vertices and points inside open edges
  auto le = [&](std::uint32_t x, std::uint32_t y) {
    const bool xv = x < nv, yv = y < nv;
    const std::uint32_t from = xv ? x : sk.arcs[x - nv].to;
    const std::uint32_t to = yv ? y : sk.arcs[y - nv].from;
    if (!xv && !yv && x == y) return true;
    return reach(from, to);
  };
  auto piece = [&](std::uint32_t x) { return x < nv ? d.vertex_piece[x] : d.edge_piece[x - nv]; };

  std::vector<std::vector<char>> below(nc, std::vector<char>(np, 0));  // pieces with an element <= x
  std::vector<std::vector<char>> above(nc, std::vector<char>(np, 0));  // pieces with an element >= y
  std::vector<char> reachable(static_cast<std::size_t>(np) * np, 0);
  for (std::uint32_t x = 0; x < nc; ++x) {
    for (std::uint32_t y = 0; y < nc; ++y) {
      if (!le(x, y)) continue;
      below[y][piece(x)] = 1;
      above[x][piece(y)] = 1;
      reachable[static_cast<std::size_t>(piece(x)) * np + piece(y)] = 1;
    }
  }

  std::vector<std::uint32_t> object_of(static_cast<std::size_t>(np) * np, none);
  for (std::uint32_t p = 0; p < np; ++p) {
    for (std::uint32_t q = 0; q < np; ++q) {
      if (!reachable[static_cast<std::size_t>(p) * np + q]) continue;
      object_of[static_cast<std::size_t>(p) * np + q] = static_cast<std::uint32_t>(out.objects.size());
      out.objects.emplace_back(p, q);
    }
  }
  const auto no = static_cast<std::uint32_t>(out.objects.size());
  std::vector<std::vector<char>> arrow(no, std::vector<char>(no, 0));
  for (std::uint32_t x = 0; x < nc; ++x) {
    for (std::uint32_t y = 0; y < nc; ++y) {
      if (!le(x, y)) continue;
      const auto src = object_of[static_cast<std::size_t>(piece(x)) * np + piece(y)];
      for (std::uint32_t p = 0; p < np; ++p) {
        if (!below[x][p]) continue;
        for (std::uint32_t q = 0; q < np; ++q) {
          if (above[y][q]) arrow[src][object_of[static_cast<std::size_t>(p) * np + q]] = 1;
        }
      }
    }
  }
  for (std::uint32_t k = 0; k < no; ++k) {
    for (std::uint32_t i = 0; i < no; ++i) {
      if (!arrow[i][k]) continue;
      for (std::uint32_t j = 0; j < no; ++j) arrow[i][j] |= arrow[k][j];
    }
  }

  for (auto [p, q] : out.objects) {
    out.category.add_object("(" + d.pieces[p].name + "," + d.pieces[q].name + ")",
                            nlohmann::json{{"pieces", {d.pieces[p].name, d.pieces[q].name}}});
  }
  for (std::uint32_t a = 0; a < no; ++a) {
    for (std::uint32_t b = 0; b < no; ++b) {
      if (!arrow[a][b]) continue;
      const auto m = out.category.add_morphism(a, b);
      if (a == b) out.category.set_identity(a, m);
    }
  }
  out.category.use_thin_composition();
  return out;
}

}  // namespace dipair
