#include "dipair/category.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dipair {

namespace {

const std::vector<std::uint32_t> empty_hom;
constexpr std::size_t max_failures = 20;
constexpr std::uint32_t no_identity = UINT32_MAX;

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::uint32_t FiniteCategory::add_object(std::string label, nlohmann::json data) {
  objects_.push_back(std::move(label));
  object_data_.push_back(std::move(data));
  identities_.push_back(no_identity);
  out_first_.push_back(0);
  out_count_.push_back(0);
  return object_count() - 1;
}

std::uint32_t FiniteCategory::add_morphism(std::uint32_t src, std::uint32_t dst, std::string label) {
  if (src >= object_count() || dst >= object_count()) throw std::invalid_argument("unknown object");
  const std::uint64_t k = key(src, dst);
  const auto id = morphism_count();
  if (!homs_.empty() && homs_.back().key > k) throw std::logic_error("morphisms added out of (src, dst) order");
  if (homs_.empty() || homs_.back().key != k) homs_.push_back({k, id, 0});
  ++homs_.back().count;
  if (out_count_[src]++ == 0) out_first_[src] = id;
  morphisms_.push_back({src, dst});
  ids_.push_back(id);
  if (!label.empty() && labels_.size() <= id) labels_.resize(id + 1);
  if (!label.empty()) labels_[id] = std::move(label);
  return id;
}

void FiniteCategory::set_identity(std::uint32_t object, std::uint32_t morphism) {
  identities_.at(object) = morphism;
}

void FiniteCategory::use_thin_composition() {
  composer_ = [](const FiniteCategory& cat, std::uint32_t f, std::uint32_t g) {
    const auto h = cat.hom(cat.morphism(f).src, cat.morphism(g).dst);
    if (h.size() != 1) throw std::logic_error("thin composition into a hom set of size " + std::to_string(h.size()));
    return h.front();
  };
}

std::span<const std::uint32_t> FiniteCategory::hom(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t k = key(a, b);
  auto it = std::lower_bound(homs_.begin(), homs_.end(), k, [](const HomEntry& e, std::uint64_t x) { return e.key < x; });
  if (it == homs_.end() || it->key != k) return {};
  return ids(it->first, it->count);
}

std::span<const std::uint32_t> FiniteCategory::out(std::uint32_t a) const { return ids(out_first_[a], out_count_[a]); }

std::uint32_t FiniteCategory::compose(std::uint32_t f, std::uint32_t g) const {
  if (morphisms_.at(f).dst != morphisms_.at(g).src) throw std::invalid_argument("morphisms are not composable");
  if (!composer_) throw std::logic_error("category has no composition");
  return composer_(*this, f, g);
}

std::uint64_t FiniteCategory::composable_pairs() const {
  std::uint64_t n = 0;
  for (const auto& m : morphisms_) n += out_count_[m.dst];
  return n;
}

std::vector<std::uint32_t> FiniteCategory::generators() const {
  std::vector<char> composite(morphism_count(), 0);
  for (std::uint32_t f = 0; f < morphism_count(); ++f) {
    if (is_identity(f)) continue;
    for (std::uint32_t g : out(morphisms_[f].dst)) {
      if (!is_identity(g)) composite[compose(f, g)] = 1;
    }
  }
  std::vector<std::uint32_t> gens;
  for (std::uint32_t m = 0; m < morphism_count(); ++m) {
    if (!is_identity(m) && !composite[m]) gens.push_back(m);
  }
  return gens;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FiniteCategory::nonempty_homs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& e : homs_) pairs.emplace_back(static_cast<std::uint32_t>(e.key >> 32), static_cast<std::uint32_t>(e.key));
  return pairs;
}

AxiomReport check_axioms(const FiniteCategory& cat) {
  AxiomReport r;
  auto fail = [&](std::string msg) {
    if (r.failures.size() < max_failures) r.failures.push_back(std::move(msg));
  };
  const std::uint32_t n = cat.object_count();
  for (std::uint32_t o = 0; o < n; ++o) {
    const std::uint32_t id = cat.identity(o);
    ++r.identity_checks;
    if (id >= cat.morphism_count() || cat.morphism(id).src != o || cat.morphism(id).dst != o) {
      fail("object " + std::to_string(o) + " has no identity");
    }
  }
  if (!r.ok()) return r;

  for (std::uint32_t f = 0; f < cat.morphism_count(); ++f) {
    const auto& mf = cat.morphism(f);
    r.identity_checks += 2;
    if (cat.compose(cat.identity(mf.src), f) != f) fail("id;f != f for f=" + std::to_string(f));
    if (cat.compose(f, cat.identity(mf.dst)) != f) fail("f;id != f for f=" + std::to_string(f));
  }

  for (std::uint32_t f = 0; f < cat.morphism_count(); ++f) {
    const auto& mf = cat.morphism(f);
    for (std::uint32_t g : cat.out(mf.dst)) {
      const auto& mg = cat.morphism(g);
      const std::uint32_t fg = cat.compose(f, g);
      ++r.composition_checks;
      if (fg >= cat.morphism_count() || cat.morphism(fg).src != mf.src || cat.morphism(fg).dst != mg.dst) {
        fail("f;g leaves its hom set for f=" + std::to_string(f) + " g=" + std::to_string(g));
        continue;
      }
      for (std::uint32_t h : cat.out(mg.dst)) {
        ++r.associativity_checks;
        if (cat.compose(fg, h) != cat.compose(f, cat.compose(g, h))) {
          fail("(f;g);h != f;(g;h) for f=" + std::to_string(f) + " g=" + std::to_string(g) +
               " h=" + std::to_string(h));
        }
      }
    }
  }
  return r;
}

nlohmann::json to_json(const FiniteCategory& cat, std::uint64_t composition_limit) {
  using nlohmann::json;
  json objects = json::array();
  for (std::uint32_t o = 0; o < cat.object_count(); ++o) {
    json obj = {{"id", o}, {"label", cat.object_label(o)}};
    if (!cat.object_data(o).is_null()) obj["data"] = cat.object_data(o);
    objects.push_back(std::move(obj));
  }
  json morphisms = json::array();
  for (std::uint32_t m = 0; m < cat.morphism_count(); ++m) {
    const auto& mm = cat.morphism(m);
    json entry = {{"id", m}, {"src", mm.src}, {"dst", mm.dst}};
    if (auto label = cat.morphism_label(m); !label.empty()) entry["label"] = label;
    morphisms.push_back(std::move(entry));
  }
  json homs = json::object();
  for (auto [a, b] : cat.nonempty_homs()) {
    const auto h = cat.hom(a, b);
    homs[std::to_string(a) + "," + std::to_string(b)] = std::vector<std::uint32_t>(h.begin(), h.end());
  }
  json identities = json::array();
  for (std::uint32_t o = 0; o < cat.object_count(); ++o) identities.push_back(cat.identity(o));

  json out = {{"objects", objects}, {"morphisms", morphisms}, {"homs", homs}, {"identities", identities}};
  if (cat.composable_pairs() <= composition_limit) {
    json triples = json::array();
    for (std::uint32_t f = 0; f < cat.morphism_count(); ++f) {
      for (std::uint32_t g : cat.out(cat.morphism(f).dst)) triples.push_back({f, g, cat.compose(f, g)});
    }
    out["composition"] = std::move(triples);
  } else {
    out["composition"] = nullptr;
  }
  return out;
}

std::string to_dot(const FiniteCategory& cat, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  for (std::uint32_t o = 0; o < cat.object_count(); ++o) {
    os << "  n" << o << " [label=\"" << dot_escape(cat.object_label(o)) << "\"];\n";
  }
  for (std::uint32_t m : cat.generators()) {
    const auto& mm = cat.morphism(m);
    os << "  n" << mm.src << " -> n" << mm.dst;
    if (auto label = cat.morphism_label(m); !label.empty()) os << " [label=\"" << dot_escape(label) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string summary(const FiniteCategory& cat, bool verbose) {
  std::ostringstream os;
  std::uint32_t ids = 0;
  for (std::uint32_t o = 0; o < cat.object_count(); ++o) {
    if (cat.identity(o) < cat.morphism_count()) ++ids;
  }
  os << "objects: " << cat.object_count() << ", morphisms: " << cat.morphism_count() << ", identities: " << ids
     << "\n";
  if (verbose) {
    for (auto [a, b] : cat.nonempty_homs()) {
      os << cat.object_label(a) << " -> " << cat.object_label(b) << ": " << cat.hom(a, b).size() << "\n";
    }
  }
  return os.str();
}

}  // namespace dipair
