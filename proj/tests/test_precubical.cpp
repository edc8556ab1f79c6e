#include <doctest.h>

#include <set>

#include "dipair/builtins.hpp"
#include "dipair/errors.hpp"
#include "dipair/io.hpp"
#include "dipair/precubical.hpp"
#include "dipair/reach.hpp"

using namespace dipair;

namespace {

std::vector<std::string> all_builtins() {
  return {"dubut",  "letterM", "branching", "edge",     "square",  "cube(3)",        "boundary_cube(2)",
          "boundary_cube(3)", "swiss_retract", "circle", "torus(2)"};
}

// The unit square with the vertex endpoints of its left edge exchanged.
PreCubicalSet broken_square() {
  PreCubicalSet::Builder b;
  CellId v00 = b.add_vertex(), v10 = b.add_vertex(), v01 = b.add_vertex(), v11 = b.add_vertex();
  CellId bottom = b.add_edge(v00, v10), top = b.add_edge(v01, v11);
  CellId left = b.add_edge(v01, v00), right = b.add_edge(v10, v11);
  b.add_square(left, right, bottom, top);
  return std::move(b).build();
}

// Cells of a union of unit squares: every (corner, extent) face, by brute force.
std::vector<std::size_t> face_counts(const std::vector<std::pair<int, int>>& squares) {
  std::set<std::tuple<int, int, int, int>> cells;
  for (auto [x, y] : squares) {
    for (int ex = 0; ex < 2; ++ex) {
      for (int ey = 0; ey < 2; ++ey) {
        for (int ox = 0; ox <= 1 - ex; ++ox) {
          for (int oy = 0; oy <= 1 - ey; ++oy) cells.insert({x + ox, y + oy, ex, ey});
        }
      }
    }
  }
  std::vector<std::size_t> counts(3, 0);
  for (auto [x, y, ex, ey] : cells) ++counts[ex + ey];
  return counts;
}

}  // namespace

TEST_CASE("validate accepts builders and reports the offending relation") {
  CHECK(validate(builtins::boundary_cube(2)).empty());
  CHECK(validate(builtins::dubut()).empty());

  const auto report = validate(broken_square());
  REQUIRE_FALSE(report.empty());
  bool found = false;
  for (const auto& v : report) {
    found |= v.cell == CellId{2, 0} && v.i == 1 && v.j == 2 && v.alpha == Sign::minus && v.beta == Sign::minus;
  }
  CHECK(found);
}

TEST_CASE("validate reports dangling face references") {
  PreCubicalSet::Builder b(std::vector<std::uint32_t>{1, 1});
  b.set_face({1, 0}, 1, Sign::minus, {0, 0});
  b.set_face({1, 0}, 1, Sign::plus, {0, 5});
  const auto report = validate(std::move(b).build());
  REQUIRE(report.size() == 1);
  CHECK_FALSE(report[0].missing.empty());
}

TEST_CASE("dubut complex: gluing and counts") {
  const auto d = builtins::dubut();
  CHECK(d.count(2) == 4);
  CHECK(d.count(1) == 12);
  // the corner shared by B1, B2 and C is one vertex, so there are 8 not 9
  CHECK(d.vertex_count() == 8);
  const CellId A = *d.find("A"), B1 = *d.find("B1"), B2 = *d.find("B2"), C = *d.find("C");
  CHECK(d.face(A, 1, Sign::plus) == d.face(B1, 1, Sign::minus));
  CHECK(d.face(A, 2, Sign::plus) == d.face(B2, 2, Sign::minus));
  CHECK(d.face(B1, 1, Sign::plus) == d.face(C, 1, Sign::minus));
  CHECK(d.face(B2, 2, Sign::plus) == d.face(C, 2, Sign::minus));
}

TEST_CASE("builtins") {
  const auto br = builtins::branching();
  CHECK(br.vertex_count() == 3);
  CHECK(br.count(1) == 2);
  CHECK(br.source(0) == br.source(1));

  const auto b3 = builtins::boundary_cube(3);
  CHECK(b3.counts() == std::vector<std::uint32_t>{8, 12, 6});
  CHECK_THROWS_AS(builtins::by_name("klein_bottle"), ParseError);
  CHECK_THROWS_AS(builtins::by_name("torus"), ParseError);
  CHECK_THROWS_AS(builtins::by_name("boundary_cube(x)"), ParseError);
  for (const auto& n : all_builtins()) CHECK_MESSAGE(validate(builtins::by_name(n)).empty(), n);
}

TEST_CASE("subdivide counts") {
  const auto e = subdivide(builtins::edge(), 3).complex;
  CHECK(e.vertex_count() == 4);
  CHECK(e.count(1) == 3);

  const auto sq = subdivide(builtins::cube(2), 2).complex;
  CHECK(sq.counts() == std::vector<std::uint32_t>{9, 12, 4});

  const auto b2 = subdivide(builtins::boundary_cube(2), 2).complex;
  CHECK(b2.vertex_count() == 8);
  CHECK(b2.count(1) == 8);
  CHECK(b2.count(2) == 0);

  CHECK_THROWS_AS(subdivide(builtins::edge(), 0), std::invalid_argument);
}

TEST_CASE("subdivision properties on every builtin") {
  for (const auto& n : all_builtins()) {
    const auto x = builtins::by_name(n);
    for (std::uint32_t k = 1; k <= 5; ++k) {
      if (x.dims() >= 3 && k > 3) continue;
      const auto s = subdivide(x, k);
      CHECK_MESSAGE(validate(s.complex).empty(), n << " k=" << k);
      // n-cells are replaced by k^n cells; vertices come from every cell
      std::uint64_t top = 0, expected = 0;
      for (std::uint32_t d = 0; d <= x.dims(); ++d) {
        std::uint64_t p = 1;
        for (std::uint32_t i = 0; i < d; ++i) p *= k;
        expected += x.count(d) * p;
      }
      for (std::uint32_t d = 0; d <= s.complex.dims(); ++d) {
        for (std::uint32_t i = 0; i < s.complex.count(d); ++i) {
          if (s.map.origin({d, i}).original.dim == d) ++top;
        }
      }
      CHECK(top == expected);
    }
    const auto one = subdivide(x, 1).complex;
    CHECK_MESSAGE(one.counts() == x.counts(), n);
    CHECK_MESSAGE(one == x, n);
  }
}

TEST_CASE("subdivision maps every grid point to a distinct vertex") {
  const auto x = builtins::dubut();
  const std::uint32_t k = 3;
  const auto s = subdivide(x, k);
  std::set<std::uint32_t> seen;
  std::size_t points = 0;
  for (std::uint32_t d = 0; d <= 2; ++d) {
    for (std::uint32_t i = 0; i < x.count(d); ++i) {
      std::vector<std::int64_t> c(d, 1);
      while (true) {
        ++points;
        const auto v = s.map.vertex_of(x, GridPoint{{d, i}, k, c});
        seen.insert(v);
        CHECK(s.map.point_of(v) == GridPoint{{d, i}, k, c});
        std::size_t a = 0;
        while (a < d && c[a] == k - 1) c[a++] = 1;
        if (a == d) break;
        ++c[a];
      }
    }
  }
  CHECK(seen.size() == points);
  CHECK(points == s.complex.vertex_count());
}

TEST_CASE("make_point pushes boundary coordinates onto faces") {
  const auto sq = builtins::cube(2);
  const CellId top = *sq.find("**");
  const auto p = make_point(sq, top, 3, {0, 2});
  CHECK(p.carrier.dim == 1);
  CHECK(p.carrier == sq.face(top, 1, Sign::minus));
  CHECK(p.coords == std::vector<std::int64_t>{2});
  const auto q = make_point(sq, top, 3, {3, 0});
  CHECK(q.carrier.dim == 0);
  CHECK(q.carrier == *sq.find("10"));
  CHECK_THROWS_AS(make_point(sq, top, 3, {4, 1}), std::invalid_argument);
}

TEST_CASE("product") {
  const auto e2 = product(builtins::edge(), builtins::edge());
  CHECK(e2.counts() == std::vector<std::uint32_t>{4, 4, 1});
  CHECK(validate(e2).empty());

  PreCubicalSet::Builder pb;
  pb.add_vertex();
  const auto point = std::move(pb).build();
  for (const auto& n : {"dubut", "letterM", "boundary_cube(2)"}) {
    const auto x = builtins::by_name(n);
    CHECK(product(x, point).counts() == x.counts());
    CHECK(product(x, point) == x);
  }

  const auto t = product(builtins::circle(), builtins::circle());
  CHECK(t.counts() == std::vector<std::uint32_t>{1, 2, 1});

  const std::vector<std::string> names = {"branching", "edge", "boundary_cube(2)", "dubut", "letterM"};
  for (const auto& an : names) {
    for (const auto& bn : names) {
      const auto a = builtins::by_name(an), b = builtins::by_name(bn);
      const auto p = product(a, b);
      CHECK(validate(p).empty());
      for (std::uint32_t n = 0; n <= a.dims() + b.dims(); ++n) {
        std::uint64_t expected = 0;
        for (std::uint32_t q = 0; q <= n; ++q) expected += std::uint64_t{a.count(n - q)} * b.count(q);
        CHECK(p.count(n) == expected);
      }
      for (std::uint32_t n = 0; n <= p.dims(); ++n) {
        for (std::uint32_t i = 0; i < p.count(n); ++i) {
          const auto [ca, cb] = product_factors(a, b, {n, i});
          CHECK(ca.dim + cb.dim == n);
        }
      }
    }
  }
}

TEST_CASE("from_euclidean") {
  using Cell = EuclideanCell;
  const auto sq = from_euclidean({2, {Cell{{0, 0}, {1, 1}}}});
  CHECK(sq.complex.counts() == std::vector<std::uint32_t>{4, 4, 1});

  EuclideanComplex boundary{2, {Cell{{0, 0}, {1, 0}}, Cell{{0, 1}, {1, 0}}, Cell{{0, 0}, {0, 1}}, Cell{{1, 0}, {0, 1}}}};
  const auto b = from_euclidean(boundary);
  CHECK(b.complex.counts() == builtins::boundary_cube(2).counts());
  CHECK(b.complex == builtins::boundary_cube(2));

  const std::vector<std::pair<int, int>> l = {{0, 0}, {1, 0}, {0, 1}};
  EuclideanComplex lshape{2, {}};
  for (auto [x, y] : l) lshape.top_cells.push_back(Cell{{x, y}, {1, 1}});
  const auto expected = face_counts(l);
  const auto r = from_euclidean(lshape);
  CHECK(r.complex.count(0) == expected[0]);
  CHECK(r.complex.count(1) == expected[1]);
  CHECK(r.complex.count(2) == expected[2]);
  CHECK(r.complex.counts() == std::vector<std::uint32_t>{8, 10, 3});
  CHECK(validate(r.complex).empty());
  CHECK_FALSE(has_directed_loop(r.complex));

  CHECK_THROWS_AS(from_euclidean({2, {Cell{{0, 0}, {1, 1}}, Cell{{0, 0}, {1, 1}}}}), std::invalid_argument);
  CHECK_THROWS_AS(from_euclidean({2, {Cell{{0}, {1, 1}}}}), std::invalid_argument);
}

TEST_CASE("from_euclidean output is loop-free on random complexes") {
  std::uint64_t seed = 12345;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(seed >> 33);
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::set<EuclideanCell> cells;
    const std::uint32_t n = 1 + next() % 3;
    const int count = 1 + static_cast<int>(next() % 6);
    for (int c = 0; c < count; ++c) {
      EuclideanCell cell;
      for (std::uint32_t i = 0; i < n; ++i) {
        cell.base.push_back(static_cast<std::int64_t>(next() % 3) - 1);
        cell.extent.push_back(static_cast<std::uint8_t>(next() % 2));
      }
      cells.insert(cell);
    }
    const auto r = from_euclidean({n, std::vector<EuclideanCell>(cells.begin(), cells.end())});
    CHECK(validate(r.complex).empty());
    CHECK_FALSE(has_directed_loop(r.complex));
  }
}

TEST_CASE("reverse swaps the two faces on every axis") {
  const auto d = builtins::dubut();
  const auto r = reverse(d);
  CHECK(validate(r).empty());
  for (std::uint32_t i = 0; i < d.count(2); ++i) {
    for (std::uint32_t a = 1; a <= 2; ++a) CHECK(r.face({2, i}, a, Sign::plus) == d.face({2, i}, a, Sign::minus));
  }
  CHECK(reverse(r) == d);
}

TEST_CASE("JSON round trip for every builtin") {
  for (const auto& n : all_builtins()) {
    const auto x = builtins::by_name(n);
    const auto back = io::parse_precubical(nlohmann::json::parse(io::to_json(x).dump()));
    CHECK_MESSAGE(back == x, n);
    CHECK(back.names() == x.names());
    for (std::uint32_t d = 0; d <= x.dims(); ++d) {
      for (std::uint32_t i = 0; i < x.count(d); ++i) CHECK(back.label({d, i}) == x.label({d, i}));
    }
  }
}

TEST_CASE("malformed JSON is a parse error") {
  using nlohmann::json;
  CHECK_THROWS_AS(io::parse_precubical(json::parse(R"({"dims": 1})")), ParseError);
  CHECK_THROWS_AS(io::parse_precubical(json::parse(R"({"dims": 1, "cells": [2, 1], "faces": {}})")), ParseError);
  CHECK_THROWS_AS(io::parse_precubical(json::parse(R"({"cells": [2, 1], "faces": {"1:0": {"minus": ["0:0"], "plus": ["zero"]}}})")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_euclidean(json::parse(R"({"n": 2, "top_cells": [{"base": [0], "extent": [1, 1]}]})")),
                  ParseError);
  // faces pointing at missing cells parse, and validate reports them
  const auto x = io::parse_precubical(json::parse(R"({"cells": [2, 1], "faces": {"1:0": {"minus": ["0:0"], "plus": ["0:7"]}}})"));
  CHECK(validate(x).size() == 1);
}

TEST_CASE("point syntax") {
  const auto d = builtins::dubut();
  const auto p = io::parse_point(d, "A@1/3,2/3");
  CHECK(p.carrier == *d.find("A"));
  CHECK(p.denom == 3);
  CHECK(p.coords == std::vector<std::int64_t>{1, 2});
  CHECK(io::format_point(d, p) == "A@1/3,2/3");
  const auto q = io::parse_point(d, "A@1/2,1/3");
  CHECK(q.denom == 6);
  CHECK(q.coords == std::vector<std::int64_t>{3, 2});
  const auto corner = io::parse_point(d, "A@0/1,0/1");
  CHECK(corner.carrier == CellId{0, 0});
  CHECK(io::parse_point(d, "2:3@1/2,1/2").carrier == *d.find("C"));
  CHECK_THROWS_AS(io::parse_point(d, "Z@1/2,1/2"), ParseError);
  CHECK_THROWS_AS(io::parse_point(d, "A@1/2"), ParseError);
  CHECK_THROWS_AS(io::parse_point(d, "A@3/2,1/2"), ParseError);
  CHECK_THROWS_AS(io::parse_point(d, "A@1,1/2"), ParseError);
}
