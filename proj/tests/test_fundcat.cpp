#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dipair/builtins.hpp"
#include "dipair/errors.hpp"
#include "dipair/fundcat.hpp"
#include "dipair/io.hpp"
#include "dipair/reach.hpp"

using namespace dipair;

namespace {

using Path = std::vector<std::uint32_t>;

// Every edge path u -> v by plain recursion over 1-cells.
void all_paths(const PreCubicalSet& x, std::uint32_t at, std::uint32_t v, Path& cur, std::vector<Path>& out) {
  if (at == v) out.push_back(cur);
  for (std::uint32_t e = 0; e < x.count(1); ++e) {
    if (x.source(e) != at) continue;
    cur.push_back(e);
    all_paths(x, x.target(e), v, cur, out);
    cur.pop_back();
  }
}

std::vector<Path> all_paths(const PreCubicalSet& x, std::uint32_t u, std::uint32_t v) {
  std::vector<Path> out;
  Path cur;
  all_paths(x, u, v, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Square moves applied to one path.
std::vector<Path> moves(const PreCubicalSet& x, const Path& p) {
  std::vector<Path> out;
  for (std::uint32_t s = 0; s < x.count(2); ++s) {
    const CellId c{2, s};
    const std::uint32_t a = x.face(c, 1, Sign::minus).index, b = x.face(c, 2, Sign::plus).index;
    const std::uint32_t cc = x.face(c, 2, Sign::minus).index, d = x.face(c, 1, Sign::plus).index;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] == a && p[i + 1] == b) {
        Path q = p;
        q[i] = cc;
        q[i + 1] = d;
        out.push_back(q);
      }
      if (p[i] == cc && p[i + 1] == d) {
        Path q = p;
        q[i] = a;
        q[i + 1] = b;
        out.push_back(q);
      }
    }
  }
  return out;
}

// Classes as sets of paths, by flood fill over square moves.
std::vector<std::set<Path>> oracle_classes(const PreCubicalSet& x, std::uint32_t u, std::uint32_t v) {
  const auto paths = all_paths(x, u, v);
  std::set<Path> left(paths.begin(), paths.end());
  std::vector<std::set<Path>> out;
  while (!left.empty()) {
    std::set<Path> cls{*left.begin()};
    std::vector<Path> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      const Path p = stack.back();
      stack.pop_back();
      for (auto& q : moves(x, p)) {
        if (left.erase(q)) {
          cls.insert(q);
          stack.push_back(q);
        }
      }
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  return out;
}

std::uint32_t v(const PreCubicalSet& x, const char* name) { return x.find(name)->index; }

std::vector<std::string> loop_free_builtins() {
  return {"dubut", "letterM", "branching", "edge", "square", "cube(3)", "boundary_cube(2)", "boundary_cube(3)",
          "swiss_retract"};
}

// The same complex with its 1-cells numbered in reverse.
PreCubicalSet reverse_edge_order(const PreCubicalSet& x) {
  const std::uint32_t ne = x.count(1);
  PreCubicalSet::Builder b(x.counts());
  for (std::uint32_t n = 1; n <= x.dims(); ++n) {
    for (std::uint32_t i = 0; i < x.count(n); ++i) {
      const CellId c = n == 1 ? CellId{1, ne - 1 - i} : CellId{n, i};
      for (std::uint32_t a = 1; a <= n; ++a) {
        for (Sign s : {Sign::minus, Sign::plus}) {
          CellId f = x.face({n, i}, a, s);
          if (f.dim == 1) f.index = ne - 1 - f.index;
          b.set_face(c, a, s, f);
        }
      }
    }
  }
  return std::move(b).build();
}

GridPoint random_point(const PreCubicalSet& x, std::int64_t k, std::mt19937& rng) {
  std::uint32_t total = 0;
  for (std::uint32_t d = 0; d <= x.dims(); ++d) total += x.count(d);
  std::uint32_t pick = std::uniform_int_distribution<std::uint32_t>(0, total - 1)(rng);
  std::uint32_t d = 0;
  while (pick >= x.count(d)) pick -= x.count(d++);
  GridPoint p{{d, pick}, k, {}};
  for (std::uint32_t i = 0; i < d; ++i) p.coords.push_back(std::uniform_int_distribution<std::int64_t>(1, k - 1)(rng));
  return p;
}

}  // namespace

TEST_CASE("enumerate_dipaths") {
  const auto sq = builtins::cube(2);
  CHECK(enumerate_dipaths(sq, v(sq, "00"), v(sq, "11")).size() == 2);

  // monotone routes through the corners of a 3-cube: one per axis order
  const auto b3 = builtins::boundary_cube(3);
  const auto p3 = enumerate_dipaths(b3, v(b3, "000"), v(b3, "111"));
  CHECK(p3.size() == 6);
  CHECK(p3.size() == all_paths(b3, v(b3, "000"), v(b3, "111")).size());

  const auto m = builtins::letter_m();
  CHECK(enumerate_dipaths(m, v(m, "a"), v(m, "q")).empty());

  CHECK_THROWS_AS(enumerate_dipaths(builtins::circle(), 0, 0), LoopsPresent);
  try {
    enumerate_dipaths(b3, v(b3, "000"), v(b3, "111"), 4);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.count() == 5);
  }
  CHECK(enumerate_dipaths(b3, v(b3, "000"), v(b3, "111"), 6).size() == 6);

  for (const auto& n : loop_free_builtins()) {
    const auto x = subdivide(builtins::by_name(n), 2).complex;
    for (std::uint32_t a = 0; a < x.vertex_count(); a += 2) {
      for (std::uint32_t b = 0; b < x.vertex_count(); b += 3) {
        std::vector<Path> got;
        for (auto& p : enumerate_dipaths(x, a, b)) {
          CHECK(p.source == a);
          CHECK(p.target == b);
          got.push_back(p.arcs);
        }
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(got == all_paths(x, a, b));
      }
    }
  }
}

TEST_CASE("square_classes") {
  const auto sq = builtins::cube(2);
  const auto p = enumerate_dipaths(sq, v(sq, "00"), v(sq, "11"));
  CHECK(square_classes(sq, p).size() == 1);

  const auto b2 = builtins::boundary_cube(2);
  const auto q = enumerate_dipaths(b2, v(b2, "A"), v(b2, "C"));
  REQUIRE(q.size() == 2);
  CHECK(square_classes(b2, q).size() == 2);

  const auto b3 = builtins::boundary_cube(3);
  const auto r = enumerate_dipaths(b3, v(b3, "000"), v(b3, "111"));
  const auto rc = square_classes(b3, r);
  REQUIRE(rc.size() == 1);
  CHECK(rc[0].size == 6);
  CHECK(oracle_classes(b3, v(b3, "000"), v(b3, "111")).size() == 1);

  std::vector<EdgePath> mixed = {q[0], EdgePath{v(b2, "A"), v(b2, "A"), {}}};
  CHECK_THROWS_AS(square_classes(b2, mixed), std::invalid_argument);
}

TEST_CASE("class tables agree with enumeration and flood fill") {
  for (const auto& n : loop_free_builtins()) {
    for (const std::uint32_t k : {1u, 2u}) {
      const auto x = subdivide(builtins::by_name(n), k).complex;
      const FundamentalCategory fc(x);
      for (std::uint32_t a = 0; a < x.vertex_count(); ++a) {
        for (std::uint32_t b = 0; b < x.vertex_count(); ++b) {
          if (x.vertex_count() > 40 && (a + b) % 4 != 0) continue;
          const auto oracle = oracle_classes(x, a, b);
          const auto dp = fc.classes(a, b);
          const auto listed = square_classes(x, enumerate_dipaths(x, a, b));
          REQUIRE_MESSAGE(dp.size() == oracle.size(), n << " k=" << k << " " << a << "->" << b);
          CHECK(listed.size() == oracle.size());
          std::uint64_t total = 0;
          for (std::size_t i = 0; i < dp.size(); ++i) {
            CHECK(dp[i].canonical.arcs == *oracle[i].begin());
            CHECK(dp[i].size == oracle[i].size());
            CHECK(listed[i] == dp[i]);
            total += dp[i].size;
            for (const auto& member : oracle[i]) CHECK(fc.class_of({a, b, member}).index == i);
          }
          CHECK(fc.path_count(a, b) == total);
        }
      }
    }
  }
}

TEST_CASE("square moves keep endpoints and length") {
  const auto x = subdivide(builtins::dubut(), 2).complex;
  const auto sk = skeleton(x);
  for (std::uint32_t a = 0; a < x.vertex_count(); a += 3) {
    for (std::uint32_t b = 0; b < x.vertex_count(); b += 2) {
      for (const auto& p : all_paths(x, a, b)) {
        for (const auto& q : moves(x, p)) {
          CHECK(q.size() == p.size());
          std::uint32_t at = a;
          for (auto e : q) {
            CHECK(sk.arcs[e].from == at);
            at = sk.arcs[e].to;
          }
          CHECK(at == b);
        }
      }
    }
  }
}

TEST_CASE("partition does not depend on edge numbering") {
  for (const auto& n : loop_free_builtins()) {
    const auto x = subdivide(builtins::by_name(n), 2).complex;
    const auto y = reverse_edge_order(x);
    const std::uint32_t ne = x.count(1);
    const FundamentalCategory fx(x), fy(y);
    for (std::uint32_t a = 0; a < x.vertex_count(); a += 2) {
      for (std::uint32_t b = 0; b < x.vertex_count(); b += 2) {
        const auto paths = enumerate_dipaths(x, a, b);
        CHECK(fx.class_count(a, b) == fy.class_count(a, b));
        for (std::size_t i = 0; i < paths.size(); ++i) {
          for (std::size_t j = i + 1; j < paths.size() && j < i + 4; ++j) {
            auto flip = [&](EdgePath p) {
              for (auto& e : p.arcs) e = ne - 1 - e;
              return p;
            };
            const bool same_x = fx.class_of(paths[i]) == fx.class_of(paths[j]);
            const bool same_y = fy.class_of(flip(paths[i])) == fy.class_of(flip(paths[j]));
            CHECK(same_x == same_y);
          }
        }
      }
    }
  }
}

TEST_CASE("trace_pi0 on the Dubut complex") {
  const auto d = builtins::dubut();
  auto pi0 = [&](const char* p, const char* q) {
    return trace_pi0(d, io::parse_point(d, p), io::parse_point(d, q)).count();
  };
  CHECK(pi0("A@1/3,1/3", "C@2/3,2/3") == 2);
  CHECK(pi0("A@2/3,1/3", "C@1/3,2/3") == 1);
  CHECK(pi0("A@2/3,2/3", "C@1/3,1/3") == 0);
  CHECK_THROWS_AS(trace_pi0(builtins::circle(), GridPoint{{0, 0}, 1, {}}, GridPoint{{0, 0}, 1, {}}), LoopsPresent);
}

TEST_CASE("trace_pi0 budget") {
  // a chain of four boundary squares has 2^4 paths end to end
  PreCubicalSet::Builder b;
  std::vector<CellId> corner{b.add_vertex()};
  for (int i = 0; i < 4; ++i) {
    const CellId m1 = b.add_vertex(), m2 = b.add_vertex(), end = b.add_vertex();
    b.add_edge(corner.back(), m1);
    b.add_edge(corner.back(), m2);
    b.add_edge(m1, end);
    b.add_edge(m2, end);
    corner.push_back(end);
  }
  const auto chain = std::move(b).build();
  const GridPoint s{corner.front(), 1, {}}, t{corner.back(), 1, {}};
  CHECK(trace_pi0(chain, s, t).count() == 16);
  CHECK(trace_pi0(chain, s, t, 16).count() == 16);
  CHECK_THROWS_AS(trace_pi0(chain, s, t, 15), BudgetExceeded);
  // counts multiply through the cut vertices
  const FundamentalCategory fc(chain);
  for (std::size_t i = 0; i < corner.size(); ++i) {
    for (std::size_t j = i; j < corner.size(); ++j) {
      for (std::size_t m = i; m <= j; ++m) {
        CHECK(fc.class_count(corner[i].index, corner[j].index) ==
              fc.class_count(corner[i].index, corner[m].index) * fc.class_count(corner[m].index, corner[j].index));
      }
    }
  }
}

TEST_CASE("class counts multiply through a cut vertex") {
  // two boundary squares joined corner to corner
  using Cell = EuclideanCell;
  EuclideanComplex e{2, {}};
  for (std::int64_t o : {0, 1}) {
    e.top_cells.push_back(Cell{{o, o}, {1, 0}});
    e.top_cells.push_back(Cell{{o, o + 1}, {1, 0}});
    e.top_cells.push_back(Cell{{o, o}, {0, 1}});
    e.top_cells.push_back(Cell{{o + 1, o}, {0, 1}});
  }
  const auto r = from_euclidean(e);
  const auto& x = r.complex;
  auto vertex = [&](std::int64_t a, std::int64_t b) {
    for (std::uint32_t i = 0; i < x.vertex_count(); ++i) {
      if (r.cells[0][i].base == std::vector<std::int64_t>{a, b}) return i;
    }
    FAIL("no vertex");
    return 0u;
  };
  const FundamentalCategory fc(x);
  const auto u = vertex(0, 0), w = vertex(1, 1), z = vertex(2, 2);
  CHECK(fc.class_count(u, w) == 2);
  CHECK(fc.class_count(w, z) == 2);
  CHECK(fc.class_count(u, z) == 4);
  CHECK(oracle_classes(x, u, z).size() == 4);
}

TEST_CASE("trace_pi0 is subdivision invariant") {
  std::mt19937 rng(7);
  for (const auto& n : loop_free_builtins()) {
    const auto x = builtins::by_name(n);
    for (int trial = 0; trial < 20; ++trial) {
      const std::int64_t k = 2 + trial % 3;
      const GridPoint p = random_point(x, k, rng), q = random_point(x, k, rng);
      const auto a = trace_pi0(x, p, q).count();
      const auto b = trace_pi0(x, rescale(p, 2 * k), rescale(q, 2 * k)).count();
      CHECK_MESSAGE(a == b, n << " " << io::format_point(x, p) << " -> " << io::format_point(x, q));
    }
  }
}

TEST_CASE("homset") {
  const auto b2 = builtins::boundary_cube(2);
  const GridPoint A = io::parse_point(b2, "A"), C = io::parse_point(b2, "C");
  CHECK(homset(b2, {A, A}, {A, C}).size() == 2);
  const auto endo = homset(b2, {A, C}, {A, C});
  REQUIRE(endo.size() == 1);
  CHECK(endo[0] == identity(b2, {A, C}));

  const auto d = builtins::dubut();
  const GridPoint a = io::parse_point(d, "A@1/3,1/3"), c = io::parse_point(d, "C@2/3,2/3");
  CHECK(homset(d, {a, a}, {a, c}).size() == 2);
  // the back leg runs from x' to x
  CHECK(homset(d, {c, c}, {a, c}).size() == 2);
  CHECK(homset(d, {a, c}, {c, c}).empty());
}

TEST_CASE("composition of extension morphisms") {
  const auto b2 = builtins::boundary_cube(2);
  const GridPoint A = rescale(io::parse_point(b2, "A"), 2), C = rescale(io::parse_point(b2, "C"), 2);
  const GridPoint mid = io::parse_point(b2, "*0@1/2");
  const auto first = homset(b2, {A, A}, {A, mid});
  const auto second = homset(b2, {A, mid}, {A, C});
  REQUIRE(first.size() == 1);
  REQUIRE(second.size() == 1);
  const auto composite = compose(b2, first[0], second[0]);
  const auto direct = homset(b2, {A, A}, {A, C});
  REQUIRE(direct.size() == 2);
  CHECK(std::count(direct.begin(), direct.end(), composite) == 1);
  // the composite runs along the bottom edge, so it differs from the route over the top
  const auto sub = subdivide(b2, 2);
  const auto mid_vertex = sub.map.vertex_of(b2, rescale(mid, 2));
  auto passes = [&](const EdgePath& p) {
    for (auto e : p.arcs) {
      if (sub.complex.target(e) == mid_vertex) return true;
    }
    return false;
  };
  CHECK(passes(composite.fwd.canonical));

  for (const auto& m : direct) {
    CHECK(compose(b2, identity(b2, m.src), m) == m);
    CHECK(compose(b2, m, identity(b2, m.dst)) == m);
  }
  CHECK_THROWS_AS(compose(b2, second[0], first[0]), std::invalid_argument);
}

TEST_CASE("composition is associative on Dubut triples") {
  const auto d = builtins::dubut();
  auto pt = [&](const char* s) { return rescale(io::parse_point(d, s), 3); };
  const PointPair o0{pt("A@1/3,1/3"), pt("A@1/3,1/3")};
  const PointPair o1{pt("A@1/3,1/3"), pt("B1@1/3,1/3")};
  const PointPair o2{pt("A@1/3,1/3"), pt("C@2/3,2/3")};
  const PointPair o3{pt("A@0/1,0/1"), pt("C@1/1,1/1")};
  const auto h01 = homset(d, o0, o1), h12 = homset(d, o1, o2), h23 = homset(d, o2, o3);
  const auto h02 = homset(d, o0, o2), h03 = homset(d, o0, o3);
  REQUIRE_FALSE(h01.empty());
  REQUIRE_FALSE(h12.empty());
  REQUIRE_FALSE(h23.empty());
  CHECK(h02.size() == 2);
  for (const auto& f : h01) {
    for (const auto& g : h12) {
      const auto fg = compose(d, f, g);
      CHECK(std::count(h02.begin(), h02.end(), fg) == 1);
      for (const auto& h : h23) {
        const auto left = compose(d, fg, h);
        const auto right = compose(d, f, compose(d, g, h));
        CHECK(left == right);
        CHECK(std::count(h03.begin(), h03.end(), left) == 1);
      }
    }
  }
}

TEST_CASE("common_denominator") {
  const std::vector<GridPoint> pts = {GridPoint{{1, 0}, 2, {1}}, GridPoint{{1, 0}, 3, {1}}};
  const auto s = common_denominator(pts);
  CHECK(s[0].denom == 6);
  CHECK(s[0].coords == std::vector<std::int64_t>{3});
  CHECK(s[1].coords == std::vector<std::int64_t>{2});
  CHECK(common_denominator(pts, 4)[0].denom == 12);
}
