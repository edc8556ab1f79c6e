#include "dipair/builtins.hpp"

#include <charconv>

#include "dipair/errors.hpp"

namespace dipair::builtins {

namespace {

std::string coordinate_name(const EuclideanCell& c) {
  std::string s;
  for (std::size_t i = 0; i < c.base.size(); ++i) s += c.extent[i] ? '*' : static_cast<char>('0' + c.base[i]);
  return s;
}

PreCubicalSet named_cube_complex(unsigned n, bool with_top) {
  EuclideanComplex e{n, {}};
  if (with_top) {
    e.top_cells.push_back({std::vector<std::int64_t>(n, 0), std::vector<std::uint8_t>(n, 1)});
  } else {
    for (unsigned i = 0; i < n; ++i) {
      for (std::int64_t side : {0, 1}) {
        EuclideanCell c{std::vector<std::int64_t>(n, 0), std::vector<std::uint8_t>(n, 1)};
        c.extent[i] = 0;
        c.base[i] = side;
        e.top_cells.push_back(std::move(c));
      }
    }
  }
  EuclideanRealization r = from_euclidean(e);
  PreCubicalSet::Builder b(std::move(r.complex));
  for (std::uint32_t d = 0; d < r.cells.size(); ++d) {
    for (std::uint32_t idx = 0; idx < r.cells[d].size(); ++idx) b.name({d, idx}, coordinate_name(r.cells[d][idx]));
  }
  if (n == 2) {
    for (std::uint32_t idx = 0; idx < r.cells[0].size(); ++idx) {
      const auto name = coordinate_name(r.cells[0][idx]);
      if (name == "00") b.name({0, idx}, "A");
      if (name == "11") b.name({0, idx}, "C");
    }
  }
  return std::move(b).build();
}

}  // namespace

PreCubicalSet dubut() {
  PreCubicalSet::Builder b;
  const char* vertex_names[] = {"A00", "A10", "A01", "a+", "c-", "C01", "C10", "c+"};
  CellId v[8];
  for (int i = 0; i < 8; ++i) {
    v[i] = b.add_vertex();
    b.name(v[i], vertex_names[i]);
  }
  // a+ is A's top-right corner, c- is C's bottom-left corner (shared by B1 and B2).
  const CellId a_left = b.add_edge(v[0], v[2]);
  const CellId a_bottom = b.add_edge(v[0], v[1]);
  const CellId a1 = b.add_edge(v[1], v[3]);
  const CellId a2 = b.add_edge(v[2], v[3]);
  const CellId b1_bottom = b.add_edge(v[1], v[4]);
  const CellId b1_right = b.add_edge(v[4], v[5]);
  const CellId b1 = b.add_edge(v[3], v[5]);
  const CellId b2_left = b.add_edge(v[2], v[4]);
  const CellId b2 = b.add_edge(v[3], v[6]);
  const CellId b2_top = b.add_edge(v[4], v[6]);
  const CellId c1 = b.add_edge(v[6], v[7]);
  const CellId c2 = b.add_edge(v[5], v[7]);
  b.name(a_left, "A_left");
  b.name(a_bottom, "A_bottom");
  b.name(a1, "a1");
  b.name(a2, "a2");
  b.name(b1_bottom, "B1_bottom");
  b.name(b1_right, "B1_right");
  b.name(b1, "b1");
  b.name(b2_left, "B2_left");
  b.name(b2, "b2");
  b.name(b2_top, "B2_top");
  b.name(c1, "c1");
  b.name(c2, "c2");
  b.name(b.add_square(a_left, a1, a_bottom, a2), "A");
  b.name(b.add_square(a1, b1_right, b1_bottom, b1), "B1");
  b.name(b.add_square(b2_left, b2, a2, b2_top), "B2");
  b.name(b.add_square(b1_right, c1, b2_top, c2), "C");
  return std::move(b).build();
}

PreCubicalSet letter_m() {
  PreCubicalSet::Builder b;
  CellId a = b.add_vertex(), bv = b.add_vertex(), m = b.add_vertex(), p = b.add_vertex(), q = b.add_vertex();
  b.name(a, "a");
  b.name(bv, "b");
  b.name(m, "m");
  b.name(p, "p");
  b.name(q, "q");
  b.name(b.add_edge(a, p), "ap");
  b.name(b.add_edge(m, p), "mp");
  b.name(b.add_edge(m, q), "mq");
  b.name(b.add_edge(bv, q), "bq");
  return std::move(b).build();
}

PreCubicalSet branching() {
  PreCubicalSet::Builder b;
  CellId o = b.add_vertex(), ta = b.add_vertex(), tb = b.add_vertex();
  b.name(o, "O");
  b.name(ta, "a+");
  b.name(tb, "b+");
  b.name(b.add_edge(o, ta), "a");
  b.name(b.add_edge(o, tb), "b");
  return std::move(b).build();
}

PreCubicalSet edge() {
  PreCubicalSet::Builder b;
  CellId v0 = b.add_vertex(), v1 = b.add_vertex();
  b.name(v0, "v0");
  b.name(v1, "v1");
  b.name(b.add_edge(v0, v1), "e");
  return std::move(b).build();
}

PreCubicalSet boundary_cube(unsigned n) {
  if (n == 0) throw ParseError("boundary_cube needs n >= 1");
  return named_cube_complex(n, false);
}

PreCubicalSet cube(unsigned n) { return named_cube_complex(n, true); }

PreCubicalSet swiss_retract() {
  PreCubicalSet::Builder b;
  const char* vertex_names[] = {"A", "X1", "X2", "D", "U", "Y1", "Y2", "C"};
  CellId v[8];
  for (int i = 0; i < 8; ++i) {
    v[i] = b.add_vertex();
    b.name(v[i], vertex_names[i]);
  }
  const CellId x1 = b.add_edge(v[0], v[1]);
  const CellId x2 = b.add_edge(v[0], v[2]);
  const CellId x1d = b.add_edge(v[1], v[3]);
  const CellId x2d = b.add_edge(v[2], v[3]);
  const CellId b1 = b.add_edge(v[1], v[5]);
  const CellId b2 = b.add_edge(v[2], v[6]);
  const CellId uy1 = b.add_edge(v[4], v[5]);
  const CellId uy2 = b.add_edge(v[4], v[6]);
  const CellId y1 = b.add_edge(v[5], v[7]);
  const CellId y2 = b.add_edge(v[6], v[7]);
  b.name(x1, "x1");
  b.name(x2, "x2");
  b.name(x1d, "X1D");
  b.name(x2d, "X2D");
  b.name(b1, "b1");
  b.name(b2, "b2");
  b.name(uy1, "UY1");
  b.name(uy2, "UY2");
  b.name(y1, "y1");
  b.name(y2, "y2");
  b.name(b.add_square(x1, x2d, x2, x1d), "d");
  b.name(b.add_square(uy1, y2, uy2, y1), "u");
  return std::move(b).build();
}

PreCubicalSet circle() {
  PreCubicalSet::Builder b;
  CellId v = b.add_vertex();
  b.name(v, "v");
  b.name(b.add_edge(v, v), "e");
  return std::move(b).build();
}

PreCubicalSet torus(unsigned n) {
  if (n == 0) throw ParseError("torus needs n >= 1");
  PreCubicalSet t = circle();
  for (unsigned i = 1; i < n; ++i) t = product(t, circle());
  return t;
}

PreCubicalSet by_name(const std::string& spec) {
  std::string name = spec;
  std::optional<unsigned> param;
  if (auto open = spec.find('('); open != std::string::npos) {
    if (spec.back() != ')') throw ParseError("malformed builtin '" + spec + "'");
    name = spec.substr(0, open);
    const std::string digits = spec.substr(open + 1, spec.size() - open - 2);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("builtin parameter must be a non-negative integer: '" + spec + "'");
    }
    param = value;
  }
  auto require = [&](bool takes_param) {
    if (takes_param && !param) throw ParseError("builtin '" + name + "' needs a parameter, e.g. " + name + "(2)");
    if (!takes_param && param) throw ParseError("builtin '" + name + "' takes no parameter");
  };
  if (name == "dubut") return require(false), dubut();
  if (name == "letterM") return require(false), letter_m();
  if (name == "branching") return require(false), branching();
  if (name == "edge") return require(false), edge();
  if (name == "swiss_retract") return require(false), swiss_retract();
  if (name == "circle") return require(false), circle();
  if (name == "square") return require(false), cube(2);
  if (name == "boundary_cube") {
    require(true);
    if (*param == 0 || *param > 8) throw ParseError("boundary_cube(n) needs 1 <= n <= 8");
    return boundary_cube(*param);
  }
  if (name == "cube") {
    require(true);
    if (*param > 8) throw ParseError("cube(n) needs n <= 8");
    return cube(*param);
  }
  if (name == "torus") {
    require(true);
    if (*param == 0 || *param > 6) throw ParseError("torus(n) needs 1 <= n <= 6");
    return torus(*param);
  }
  throw ParseError("unknown builtin '" + spec + "'");
}

std::vector<std::string> names() {
  return {"dubut",           "letterM",          "branching", "edge",     "square",  "cube(3)",
          "boundary_cube(2)", "boundary_cube(3)", "swiss_retract", "circle", "torus(2)"};
}

}  // namespace dipair::builtins
