#include "dipair/reach.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dipair {

DirectedSkeleton skeleton(const PreCubicalSet& pcs) {
  DirectedSkeleton sk;
  sk.vertex_count = pcs.vertex_count();
  sk.out.resize(sk.vertex_count);
  sk.in.resize(sk.vertex_count);
  for (std::uint32_t e = 0; e < pcs.count(1); ++e) {
    const std::uint32_t from = pcs.source(e), to = pcs.target(e);
    sk.arcs.push_back({from, to});
    sk.out[from].push_back(e);
    sk.in[to].push_back(e);
  }
  return sk;
}

VertexSet VertexSet::of(std::uint32_t universe, std::initializer_list<std::uint32_t> members) {
  VertexSet s(universe);
  for (auto v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<std::uint32_t> VertexSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet c = *this;
  for (auto& b : c.bits_) b ^= 1;
  return c;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !o.bits_[i]) return false;
  }
  return true;
}

std::vector<std::uint32_t> topological_order(const DirectedSkeleton& sk) {
  std::vector<std::uint32_t> indegree(sk.vertex_count, 0);
  for (const auto& a : sk.arcs) ++indegree[a.to];
  std::vector<std::uint32_t> order;
  std::deque<std::uint32_t> ready;
  for (std::uint32_t v = 0; v < sk.vertex_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const std::uint32_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto e : sk.out[v]) {
      if (--indegree[sk.arcs[e].to] == 0) ready.push_back(sk.arcs[e].to);
    }
  }
  return order;
}

bool has_directed_loop(const PreCubicalSet& pcs) {
  const DirectedSkeleton sk = skeleton(pcs);
  return topological_order(sk).size() < sk.vertex_count;
}

namespace {

VertexSet closure(const DirectedSkeleton& sk, const VertexSet& start, bool forward) {
  VertexSet seen = start;
  std::vector<std::uint32_t> stack = start.members();
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (auto e : forward ? sk.out[v] : sk.in[v]) {
      const std::uint32_t w = forward ? sk.arcs[e].to : sk.arcs[e].from;
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool reachable(const PreCubicalSet& pcs, std::uint32_t from, std::uint32_t to) {
  const DirectedSkeleton sk = skeleton(pcs);
  return closure(sk, VertexSet::of(sk.vertex_count, {from}), true).contains(to);
}

VertexSet past_set(const PreCubicalSet& pcs, const VertexSet& s) { return closure(skeleton(pcs), s, false); }

VertexSet future_set(const PreCubicalSet& pcs, const VertexSet& s) { return closure(skeleton(pcs), s, true); }

std::vector<CellId> branch_cubes(const PreCubicalSet& pcs, Flavor flavor) {
  const Sign side = flavor == Flavor::future ? Sign::minus : Sign::plus;
  std::set<CellId> is_face;
  for (std::uint32_t n = 1; n <= pcs.dims(); ++n) {
    for (std::uint32_t idx = 0; idx < pcs.count(n); ++idx) {
      for (std::uint32_t i = 1; i <= n; ++i) {
        is_face.insert(pcs.face({n, idx}, i, Sign::minus));
        is_face.insert(pcs.face({n, idx}, i, Sign::plus));
      }
    }
  }
  std::map<CellId, std::uint32_t> hits;
  for (std::uint32_t n = 0; n <= pcs.dims(); ++n) {
    for (std::uint32_t idx = 0; idx < pcs.count(n); ++idx) {
      const CellId top{n, idx};
      if (is_face.contains(top)) continue;
      std::set<CellId> lower{top};
      std::vector<CellId> stack{top};
      while (!stack.empty()) {
        const CellId c = stack.back();
        stack.pop_back();
        for (std::uint32_t i = 1; i <= c.dim; ++i) {
          const CellId f = pcs.face(c, i, side);
          if (lower.insert(f).second) stack.push_back(f);
        }
      }
      for (const CellId& c : lower) ++hits[c];
    }
  }
  std::vector<CellId> out;
  for (const auto& [c, count] : hits) {
    if (count > 1) out.push_back(c);
  }
  return out;
}

VertexSet e_region(const PreCubicalSet& pcs, std::uint32_t x, Flavor flavor) {
  const DirectedSkeleton sk = skeleton(pcs);
  const bool future = flavor == Flavor::future;
  // future: branch points above x count positively, regions are pasts
  const VertexSet from_x = closure(sk, VertexSet::of(sk.vertex_count, {x}), future);
  VertexSet region(sk.vertex_count, true);
  for (const CellId& b : branch_cubes(pcs, flavor)) {
    if (b.dim != 0) continue;
    const VertexSet cone = closure(sk, VertexSet::of(sk.vertex_count, {b.index}), !future);
    if (from_x.contains(b.index)) {
      region &= cone;
    } else {
      region &= cone.complement();
    }
  }
  return region;
}

ReachabilityIndex::ReachabilityIndex(const DirectedSkeleton& sk)
    : n_(sk.vertex_count), words_((sk.vertex_count + 63) / 64), rows_(static_cast<std::size_t>(n_) * words_, 0) {
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < n_; ++s) {
    std::uint64_t* row = &rows_[static_cast<std::size_t>(s) * words_];
    row[s / 64] |= std::uint64_t{1} << (s % 64);
    stack.assign(1, s);
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (auto e : sk.out[v]) {
        const std::uint32_t w = sk.arcs[e].to;
        const std::uint64_t bit = std::uint64_t{1} << (w % 64);
        if (!(row[w / 64] & bit)) {
          row[w / 64] |= bit;
          stack.push_back(w);
        }
      }
    }
  }
}

}  // namespace dipair
