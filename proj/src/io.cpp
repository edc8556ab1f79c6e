#include "dipair/io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dipair/builtins.hpp"
#include "dipair/errors.hpp"

namespace dipair::io {

using nlohmann::json;

namespace {

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::optional<CellId> parse_id(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  try {
    return CellId{parse_uint(s.substr(0, colon), "dimension"), parse_uint(s.substr(colon + 1), "index")};
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

CellId id_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("cell ids must be \"dim:index\" strings");
  auto id = parse_id(j.get<std::string>());
  if (!id) throw ParseError("bad cell id '" + j.get<std::string>() + "'");
  return *id;
}

}  // namespace

PreCubicalSet parse_precubical(const json& j) {
  try {
    if (!j.is_object() || !j.contains("cells")) throw ParseError("pre-cubical JSON needs a \"cells\" array");
    const auto counts = j.at("cells").get<std::vector<std::uint32_t>>();
    if (j.contains("dims") && j.at("dims").get<std::uint32_t>() + 1 != counts.size()) {
      throw ParseError("\"dims\" does not match the length of \"cells\"");
    }
    PreCubicalSet::Builder b(counts);
    const json faces = j.value("faces", json::object());
    for (std::uint32_t n = 1; n < counts.size(); ++n) {
      for (std::uint32_t i = 0; i < counts[n]; ++i) {
        const std::string key = std::to_string(n) + ":" + std::to_string(i);
        if (!faces.contains(key)) throw ParseError("missing faces for cell " + key);
        const auto& f = faces.at(key);
        const auto& minus = f.at("minus");
        const auto& plus = f.at("plus");
        if (minus.size() != n || plus.size() != n) {
          throw ParseError("cell " + key + " needs " + std::to_string(n) + " minus and plus faces");
        }
        for (std::uint32_t a = 0; a < n; ++a) {
          b.set_face({n, i}, a + 1, Sign::minus, id_from_json(minus[a]));
          b.set_face({n, i}, a + 1, Sign::plus, id_from_json(plus[a]));
        }
      }
    }
    for (const auto& [key, _] : faces.items()) {
      auto id = parse_id(key);
      if (!id || id->dim == 0 || id->dim >= counts.size() || id->index >= counts[id->dim]) {
        throw ParseError("faces given for unknown cell '" + key + "'");
      }
    }
    if (j.contains("names")) {
      const auto& names = j.at("names");
      auto add = [&](const std::string& name, const json& id) {
        const CellId c = id_from_json(id);
        if (c.dim >= counts.size() || c.index >= counts[c.dim]) throw ParseError("name '" + name + "' refers to an unknown cell");
        b.name(c, name);
      };
      if (names.is_array()) {
        for (const auto& entry : names) add(entry.at(0).get<std::string>(), entry.at(1));
      } else {
        for (const auto& [name, id] : names.items()) add(name, id);
      }
    }
    return std::move(b).build();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed pre-cubical JSON: ") + e.what());
  }
}

json to_json(const PreCubicalSet& pcs) {
  json faces = json::object();
  for (std::uint32_t n = 1; n <= pcs.dims(); ++n) {
    for (std::uint32_t i = 0; i < pcs.count(n); ++i) {
      json minus = json::array(), plus = json::array();
      for (std::uint32_t a = 1; a <= n; ++a) {
        minus.push_back(to_string(pcs.face({n, i}, a, Sign::minus)));
        plus.push_back(to_string(pcs.face({n, i}, a, Sign::plus)));
      }
      faces[std::to_string(n) + ":" + std::to_string(i)] = {{"minus", minus}, {"plus", plus}};
    }
  }
  // primary names first so that they stay primary when read back
  json names = json::array();
  for (std::uint32_t n = 0; n <= pcs.dims(); ++n) {
    for (std::uint32_t i = 0; i < pcs.count(n); ++i) {
      if (auto name = pcs.name_of({n, i})) names.push_back({*name, to_string(CellId{n, i})});
    }
  }
  for (const auto& [name, c] : pcs.names()) {
    if (pcs.name_of(c) != name) names.push_back({name, to_string(c)});
  }
  return {{"dims", pcs.dims()}, {"cells", pcs.counts()}, {"faces", faces}, {"names", names}};
}

bool looks_euclidean(const json& j) { return j.is_object() && j.contains("top_cells"); }

EuclideanComplex parse_euclidean(const json& j) {
  try {
    EuclideanComplex e;
    e.ambient_dim = j.at("n").get<std::uint32_t>();
    for (const auto& c : j.at("top_cells")) {
      EuclideanCell cell{c.at("base").get<std::vector<std::int64_t>>(), c.at("extent").get<std::vector<std::uint8_t>>()};
      if (cell.base.size() != e.ambient_dim || cell.extent.size() != e.ambient_dim) {
        throw ParseError("top cell has the wrong number of coordinates");
      }
      for (auto x : cell.extent) {
        if (x > 1) throw ParseError("extent entries must be 0 or 1");
      }
      e.top_cells.push_back(std::move(cell));
    }
    return e;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed Euclidean JSON: ") + ex.what());
  }
}

json to_json(const EuclideanComplex& e) {
  json cells = json::array();
  for (const auto& c : e.top_cells) cells.push_back({{"base", c.base}, {"extent", c.extent}});
  return {{"n", e.ambient_dim}, {"top_cells", cells}};
}

CellId parse_cell(const PreCubicalSet& pcs, std::string_view text) {
  const std::string s(text);
  if (auto c = pcs.find(s)) return *c;
  if (auto c = parse_id(s); c && pcs.contains(*c)) return *c;
  throw ParseError("unknown cell '" + s + "'");
}

GridPoint parse_point(const PreCubicalSet& pcs, std::string_view text) {
  const auto at = text.find('@');
  const CellId carrier = parse_cell(pcs, text.substr(0, at));
  std::vector<std::pair<std::int64_t, std::int64_t>> fractions;
  if (at != std::string_view::npos) {
    std::string_view rest = text.substr(at + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto slash = item.find('/');
      if (slash == std::string_view::npos) throw ParseError("coordinate '" + std::string(item) + "' is not a fraction a/b");
      const auto num = parse_int(item.substr(0, slash), "numerator");
      const auto den = parse_int(item.substr(slash + 1), "denominator");
      if (den <= 0) throw ParseError("denominator must be positive in '" + std::string(item) + "'");
      fractions.emplace_back(num, den);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (fractions.size() != carrier.dim) {
    throw ParseError("cell " + pcs.label(carrier) + " needs " + std::to_string(carrier.dim) + " coordinates");
  }
  std::int64_t k = 1;
  for (auto [n, d] : fractions) k = std::lcm(k, d);
  std::vector<std::int64_t> coords;
  for (auto [n, d] : fractions) {
    if (n < 0 || n > d) throw ParseError("coordinate " + std::to_string(n) + "/" + std::to_string(d) + " outside [0,1]");
    coords.push_back(n * (k / d));
  }
  return make_point(pcs, carrier, k, std::move(coords));
}

std::string format_point(const PreCubicalSet& pcs, const GridPoint& p) {
  std::string out = pcs.label(p.carrier);
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    out += i ? "," : "@";
    out += std::to_string(p.coords[i]) + "/" + std::to_string(p.denom);
  }
  return out;
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

EuclideanComplex builtin_euclidean(const std::string& name) {
  auto square = [](std::int64_t x, std::int64_t y) { return EuclideanCell{{x, y}, {1, 1}}; };
  if (name == "square") return {2, {square(0, 0)}};
  if (name == "lshape") return {2, {square(0, 0), square(1, 0), square(0, 1)}};
  if (name == "square_hole") {
    EuclideanComplex e{2, {}};
    for (std::int64_t x = 0; x < 3; ++x) {
      for (std::int64_t y = 0; y < 3; ++y) {
        if (x != 1 || y != 1) e.top_cells.push_back(square(x, y));
      }
    }
    return e;
  }
  throw ParseError("unknown Euclidean builtin '" + name + "' (square, lshape, square_hole)");
}

}  // namespace

PreCubicalSet load(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    const std::string name = source.substr(8);
    if (name == "lshape" || name == "square_hole") return from_euclidean(builtin_euclidean(name)).complex;
    return builtins::by_name(name);
  }
  const json j = read_json_file(source);
  if (looks_euclidean(j)) {
    try {
      return from_euclidean(parse_euclidean(j)).complex;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return parse_precubical(j);
}

EuclideanComplex load_euclidean(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return builtin_euclidean(source.substr(8));
  const json j = read_json_file(source);
  if (!looks_euclidean(j)) throw ParseError("'" + source + "' is not a Euclidean complex");
  return parse_euclidean(j);
}

}  // namespace dipair::io
