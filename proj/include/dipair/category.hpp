#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace dipair {

/// An enumerated finite category. Morphisms are numbered densely and must be
/// added hom set by hom set in increasing (src, dst) order, so every hom set
/// and every set of morphisms leaving an object is a contiguous id range.
/// Composition is supplied as a function so that large categories need not
/// materialize their table.
class FiniteCategory {
 public:
  struct Morphism {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
  };

  /// compose(cat, f, g) is "f then g"; it is only called with dst(f) == src(g).
  using Composer = std::function<std::uint32_t(const FiniteCategory&, std::uint32_t f, std::uint32_t g)>;

  std::uint32_t add_object(std::string label, nlohmann::json data = nullptr);
  /// Throws std::logic_error when (src, dst) precedes the previous morphism's.
  std::uint32_t add_morphism(std::uint32_t src, std::uint32_t dst, std::string label = {});
  void set_identity(std::uint32_t object, std::uint32_t morphism);
  void set_composer(Composer c) { composer_ = std::move(c); }

  /// Composition of a thin category: the unique morphism src(f) -> dst(g).
  void use_thin_composition();

  std::uint32_t object_count() const { return static_cast<std::uint32_t>(objects_.size()); }
  std::uint32_t morphism_count() const { return static_cast<std::uint32_t>(morphisms_.size()); }
  const std::string& object_label(std::uint32_t o) const { return objects_[o]; }
  const nlohmann::json& object_data(std::uint32_t o) const { return object_data_[o]; }
  const Morphism& morphism(std::uint32_t m) const { return morphisms_[m]; }
  std::string morphism_label(std::uint32_t m) const { return m < labels_.size() ? labels_[m] : std::string(); }

  /// Morphism ids a -> b.
  std::span<const std::uint32_t> hom(std::uint32_t a, std::uint32_t b) const;
  /// Morphism ids leaving a.
  std::span<const std::uint32_t> out(std::uint32_t a) const;
  std::uint32_t identity(std::uint32_t o) const { return identities_[o]; }
  bool is_identity(std::uint32_t m) const { return identities_[morphisms_[m].src] == m; }

  /// f then g. Throws std::invalid_argument if dst(f) != src(g).
  std::uint32_t compose(std::uint32_t f, std::uint32_t g) const;

  /// Number of pairs (f, g) with dst(f) == src(g).
  std::uint64_t composable_pairs() const;

  /// Non-identity morphisms that are not a composite of two non-identity morphisms.
  std::vector<std::uint32_t> generators() const;

  /// Object pairs with a non-empty hom set, in increasing order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> nonempty_homs() const;

 private:
  struct HomEntry {
    std::uint64_t key = 0;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
  };

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }
  std::span<const std::uint32_t> ids(std::uint32_t first, std::uint32_t count) const {
    return {ids_.data() + first, count};
  }

  std::vector<std::string> objects_;
  std::vector<nlohmann::json> object_data_;
  std::vector<Morphism> morphisms_;
  std::vector<std::string> labels_;  // empty until a non-empty label is given
  std::vector<std::uint32_t> ids_;   // ids_[m] == m, backing the spans
  std::vector<std::uint32_t> identities_;
  std::vector<HomEntry> homs_;  // sorted by key
  std::vector<std::uint32_t> out_first_;
  std::vector<std::uint32_t> out_count_;
  Composer composer_;
};

struct AxiomReport {
  std::uint64_t identity_checks = 0;
  std::uint64_t composition_checks = 0;
  std::uint64_t associativity_checks = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return failures.empty(); }
};

/// Identity laws, closure of composition under hom sets, and associativity
/// over every composable triple.
AxiomReport check_axioms(const FiniteCategory& cat);

/// JSON dump: objects, morphisms, homs keyed "a,b", identities, and
/// composition triples [f, g, f;g] unless there are more than
/// composition_limit composable pairs (then "composition" is null).
nlohmann::json to_json(const FiniteCategory& cat, std::uint64_t composition_limit = 1'000'000);

/// One node per object, one edge per generating morphism.
std::string to_dot(const FiniteCategory& cat, const std::string& name = "category");

/// "objects: N, morphisms: M, identities: N", then one line per non-empty
/// hom set when verbose.
std::string summary(const FiniteCategory& cat, bool verbose = false);

}  // namespace dipair
