#include "dipair/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dipair/analytic.hpp"
#include "dipair/builtins.hpp"
#include "dipair/errors.hpp"
#include "dipair/fundcat.hpp"
#include "dipair/graphcomp.hpp"
#include "dipair/io.hpp"
#include "dipair/ordercomp.hpp"
#include "dipair/reach.hpp"

namespace dipair::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t budget = default_budget;
  std::int64_t denom = 0;
  std::string flavor;
  std::string out_file;
  bool verbose = false;
  std::string input;
  std::vector<std::string> src;
  std::vector<std::string> dst;
  bool loops = false;
  // analytic
  std::string kind;
  std::uint32_t n = 0;
  std::string e, f;
  // set by commands whose output reports a failed check
  bool failed = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Flavor parse_flavor(const std::string& s) {
  if (s.empty() || s == "future") return Flavor::future;
  if (s == "past") return Flavor::past;
  throw UsageError("--flavor must be future or past");
}

std::string vertex_list(const PreCubicalSet& pcs, const VertexSet& s) {
  std::string out;
  for (auto v : s.members()) {
    if (!out.empty()) out += ' ';
    out += pcs.label({0, v});
  }
  return out;
}

json vertex_json(const PreCubicalSet& pcs, const VertexSet& s) {
  json a = json::array();
  for (auto v : s.members()) a.push_back(pcs.label({0, v}));
  return a;
}

std::uint32_t parse_vertex(const PreCubicalSet& pcs, const std::string& text) {
  const CellId c = io::parse_cell(pcs, text);
  if (c.dim != 0) throw UsageError("'" + text + "' is not a vertex");
  return c.index;
}

std::vector<GridPoint> scaled(const std::vector<GridPoint>& pts, std::int64_t denom) {
  return common_denominator(pts, denom > 0 ? denom : 1);
}

json path_json(const EdgePath& p) { return p.arcs; }

std::string emit_category(const FiniteCategory& cat, const Options& o, const std::string& name) {
  if (o.format == "json") return to_json(cat).dump(2) + "\n";
  if (o.format == "dot") return to_dot(cat, name);
  return summary(cat, o.verbose);
}

std::string cmd_validate(Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  const auto report = validate(pcs);
  o.failed = !report.empty();
  if (o.format == "json") {
    json v = json::array();
    for (const auto& x : report) v.push_back(describe(x, pcs));
    return json{{"valid", report.empty()}, {"violations", v}, {"cells", pcs.counts()}}.dump(2) + "\n";
  }
  if (report.empty()) return "valid\n";
  std::string out = "invalid: " + std::to_string(report.size()) + " violations\n";
  for (const auto& x : report) out += describe(x, pcs) + "\n";
  return out;
}

std::string cmd_reach(const Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  if (o.loops) {
    const bool loop = has_directed_loop(pcs);
    return o.format == "json" ? json{{"loops", loop}}.dump() + "\n" : std::string(loop ? "true\n" : "false\n");
  }
  if (o.src.size() != 1) throw UsageError("reach needs one --src vertex (or --loops)");
  const auto u = parse_vertex(pcs, o.src[0]);
  if (!o.dst.empty()) {
    if (o.dst.size() != 1) throw UsageError("reach takes one --dst vertex");
    const bool r = reachable(pcs, u, parse_vertex(pcs, o.dst[0]));
    return o.format == "json" ? json{{"reachable", r}}.dump() + "\n" : std::string(r ? "true\n" : "false\n");
  }
  const VertexSet start = VertexSet::of(pcs.vertex_count(), {u});
  const VertexSet s = parse_flavor(o.flavor) == Flavor::future ? future_set(pcs, start) : past_set(pcs, start);
  return o.format == "json" ? vertex_json(pcs, s).dump() + "\n" : vertex_list(pcs, s) + "\n";
}

std::string cmd_branch(const Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  const auto cells = branch_cubes(pcs, parse_flavor(o.flavor));
  if (o.format == "json") {
    json a = json::array();
    for (auto c : cells) a.push_back(pcs.label(c));
    return a.dump() + "\n";
  }
  std::string out;
  for (auto c : cells) out += pcs.label(c) + "\n";
  return out;
}

std::string cmd_eregion(const Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  if (o.src.size() != 1) throw UsageError("eregion needs one --src point");
  const GridPoint p = scaled({io::parse_point(pcs, o.src[0])}, o.denom)[0];
  const Subdivision sub = subdivide(pcs, static_cast<std::uint32_t>(p.denom));
  const auto region = e_region(sub.complex, sub.map.vertex_of(pcs, p), parse_flavor(o.flavor));
  std::vector<std::string> names;
  for (auto v : region.members()) names.push_back(io::format_point(pcs, sub.map.point_of(v)));
  if (o.format == "json") return json(names).dump() + "\n";
  std::string out;
  for (const auto& s : names) out += s + "\n";
  return out;
}

std::string cmd_pi0(const Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  if (o.src.size() != 1 || o.dst.size() != 1) throw UsageError("pi0 needs one --src and one --dst point");
  const auto pts = scaled({io::parse_point(pcs, o.src[0]), io::parse_point(pcs, o.dst[0])}, o.denom);
  const Pi0Result r = trace_pi0(pcs, pts[0], pts[1], o.budget);
  if (o.format == "json") {
    json classes = json::array();
    for (const auto& c : r.classes) classes.push_back({{"canonical", path_json(c.canonical)}, {"size", c.size}});
    return json{{"count", r.count()}, {"denominator", r.factor}, {"paths", r.path_count}, {"classes", classes}}.dump(2) +
           "\n";
  }
  std::string out = std::to_string(r.count()) + "\n";
  if (o.verbose) {
    for (const auto& c : r.classes) out += json(path_json(c.canonical)).dump() + " (" + std::to_string(c.size) + " paths)\n";
  }
  return out;
}

std::string cmd_homset(const Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  if (o.src.size() != 2 || o.dst.size() != 2) throw UsageError("homset needs --src X Y and --dst X' Y'");
  const auto pts = scaled({io::parse_point(pcs, o.src[0]), io::parse_point(pcs, o.src[1]), io::parse_point(pcs, o.dst[0]),
                           io::parse_point(pcs, o.dst[1])},
                          o.denom);
  const auto homs = homset(pcs, {pts[0], pts[1]}, {pts[2], pts[3]}, o.budget);
  if (o.format == "json") {
    json a = json::array();
    for (const auto& m : homs) a.push_back({{"back", path_json(m.back.canonical)}, {"fwd", path_json(m.fwd.canonical)}});
    return json{{"count", homs.size()}, {"morphisms", a}}.dump(2) + "\n";
  }
  std::string out = std::to_string(homs.size()) + "\n";
  if (o.verbose) {
    for (const auto& m : homs) {
      out += "back " + json(path_json(m.back.canonical)).dump() + " fwd " + json(path_json(m.fwd.canonical)).dump() + "\n";
    }
  }
  return out;
}

std::string cmd_order_cat(const Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  return emit_category(order_category(pcs, o.budget).category, o, "order");
}

std::string cmd_cube_cat(const Options& o) {
  return emit_category(cube_pair_category(io::load_euclidean(o.input), o.budget).category, o, "cubes");
}

std::string cmd_graph_cat(const Options& o) {
  const PreCubicalSet pcs = io::load(o.input);
  GraphFlavor flavor = GraphFlavor::future;
  if (o.flavor == "past") {
    flavor = GraphFlavor::past;
  } else if (o.flavor == "total") {
    flavor = GraphFlavor::total;
  } else if (!o.flavor.empty() && o.flavor != "future") {
    throw UsageError("--flavor must be future, past or total");
  }
  return emit_category(graph_components(pcs, flavor).category, o, "graph");
}

std::vector<std::uint8_t> parse_bits(const std::string& s, std::uint32_t n) {
  std::vector<std::uint8_t> out;
  for (char c : s) {
    if (c == ',') continue;
    if (c != '0' && c != '1') throw UsageError("object '" + s + "' must be a word over {0,1}");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (out.size() != n) throw UsageError("object '" + s + "' must have length " + std::to_string(n));
  return out;
}

std::string cmd_analytic(const Options& o) {
  if (o.kind == "torus") {
    if (o.n == 0) throw UsageError("analytic torus needs --n >= 1");
    const auto cat = torus_category(o.n);
    if (!o.e.empty() || !o.f.empty()) {
      const auto d = parse_bits(o.e, o.n), e = parse_bits(o.f, o.n);
      const auto l = cat.lower_bound(d, e);
      if (o.format == "json") return json{{"lower_bound", l}, {"isomorphic", cat.is_isomorphic(d, e)}}.dump() + "\n";
      return json(l).dump() + "\n";
    }
    json homs = json::array();
    std::string text = "objects: " + std::to_string(cat.objects().size()) + "\n";
    auto word = [](const auto& d) {
      std::string w;
      for (auto b : d) w += static_cast<char>('0' + b);
      return w;
    };
    for (const auto& d : cat.objects()) {
      for (const auto& e : cat.objects()) {
        const auto l = cat.lower_bound(d, e);
        homs.push_back({{"src", word(d)}, {"dst", word(e)}, {"lower_bound", l}});
        text += word(d) + " -> " + word(e) + ": " + json(l).dump() + " + N^" + std::to_string(o.n) + "\n";
      }
    }
    return o.format == "json" ? json{{"n", o.n}, {"homs", homs}}.dump(2) + "\n" : text;
  }
  if (o.kind == "pn") {
    if (o.n < 1 || o.n > 6) throw UsageError("analytic pn needs 1 <= --n <= 6");
    return emit_category(pn_extension_category(o.n).category, o, "pn");
  }
  if (o.kind == "trace-type") {
    TraceType t;
    try {
      t = boundary_trace_type(o.n, o.e, o.f);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
    if (o.format == "json") {
      json j = {{"kind", t.to_string().substr(0, t.to_string().find('('))}};
      if (t.kind == TraceType::Kind::sphere) j["dim"] = t.dim;
      return j.dump() + "\n";
    }
    return t.to_string() + "\n";
  }
  throw UsageError("analytic needs one of: torus, pn, trace-type");
}

std::string cmd_builtin(const Options& o) {
  if (o.input.empty() || o.input == "list") {
    std::string out;
    for (const auto& n : builtins::names()) out += n + "\n";
    return out;
  }
  std::string name = o.input;
  if (name.rfind("builtin:", 0) != 0) name = "builtin:" + name;
  return io::to_json(io::load(name)).dump(2) + "\n";
}

std::uint64_t env_budget() {
  const char* v = std::getenv("DIPAIR_BUDGET");
  if (!v || !*v) return default_budget;
  std::uint64_t b = 0;
  const std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18 || (b = std::stoull(s)) == 0) {
    throw UsageError("DIPAIR_BUDGET must be a positive integer");
  }
  return b;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.budget = env_budget();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Reachability, trace-space components and pair component categories of pre-cubical sets", "dipair"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--budget", o.budget, "maximum number of dipaths per hom set")->check(CLI::PositiveNumber);
  app.add_option("--denom", o.denom, "common denominator for the given points")->check(CLI::PositiveNumber);
  app.add_option("--flavor", o.flavor, "future, past or total");
  app.add_option("--out", o.out_file, "write output to a file");
  app.add_flag("--verbose", o.verbose, "per-hom table or class listing");

  std::string command;
  auto sub = [&](const char* name, const char* help, bool needs_input = true) {
    CLI::App* s = app.add_subcommand(name, help);
    if (needs_input) s->add_option("input", o.input, "builtin:NAME or a JSON file")->required();
    s->callback([&command, name] { command = name; });
    return s;
  };
  sub("validate", "check the pre-cubical relations");
  auto* reach = sub("reach", "reachability, pasts and futures");
  reach->add_option("--src", o.src, "vertex");
  reach->add_option("--dst", o.dst, "vertex");
  reach->add_flag("--loops", o.loops, "report whether a directed loop exists");
  sub("branch", "future or past branch cubes");
  sub("eregion", "the region E(x) of a point")->add_option("--src", o.src, "point CELL@a/b,...");
  auto* pi0 = sub("pi0", "components of the trace space between two points");
  pi0->add_option("--src", o.src, "point CELL@a/b,...");
  pi0->add_option("--dst", o.dst, "point CELL@a/b,...");
  auto* hs = sub("homset", "extension category hom set");
  hs->add_option("--src", o.src, "source pair X Y")->expected(2);
  hs->add_option("--dst", o.dst, "target pair X' Y'")->expected(2);
  sub("order-cat", "order pair component category");
  sub("cube-cat", "cube pair component category of a Euclidean complex");
  sub("graph-cat", "pair component category of a unique-path graph");
  auto* an = sub("analytic", "closed-form categories", false);
  an->add_option("kind", o.kind, "torus, pn or trace-type")->required();
  an->add_option("--n", o.n, "dimension");
  an->add_option("--e", o.e, "source word");
  an->add_option("--f", o.f, "target word");
  sub("builtin", "emit a builtin complex as JSON (or 'list')", false)->add_option("input", o.input, "builtin name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  try {
    if (command == "validate") text = cmd_validate(o);
    if (command == "reach") text = cmd_reach(o);
    if (command == "branch") text = cmd_branch(o);
    if (command == "eregion") text = cmd_eregion(o);
    if (command == "pi0") text = cmd_pi0(o);
    if (command == "homset") text = cmd_homset(o);
    if (command == "order-cat") text = cmd_order_cat(o);
    if (command == "cube-cat") text = cmd_cube_cat(o);
    if (command == "graph-cat") text = cmd_graph_cat(o);
    if (command == "analytic") text = cmd_analytic(o);
    if (command == "builtin") text = cmd_builtin(o);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << o.out_file << "'\n";
      return 2;
    }
    return o.failed ? 1 : 0;
  }
  out << text;
  return o.failed ? 1 : 0;
}

}  // namespace dipair::cli
