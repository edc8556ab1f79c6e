#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dipair/category.hpp"

namespace dipair {

/// Component category of the directed n-torus. Objects are bit vectors
/// (0 for the diagonal class Delta, 1 for Gamma on each circle factor). The
/// morphisms d -> d' are the integer vectors m >= L(d, d'), where L_i = 1
/// exactly when (d_i, d'_i) = (1, 0); composition adds vectors.
class MonoidShiftCategory {
 public:
  using Object = std::vector<std::uint8_t>;
  using Morphism = std::vector<std::int64_t>;

  explicit MonoidShiftCategory(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::vector<Object> objects() const;
  Morphism lower_bound(const Object& d, const Object& e) const;
  bool contains(const Object& d, const Object& e, const Morphism& m) const;
  Morphism identity(const Object& d) const { return Morphism(d.size(), 0); }
  /// m1 then m2 (coordinatewise sum).
  Morphism compose(const Morphism& m1, const Morphism& m2) const;
  /// Objects are isomorphic only when equal.
  bool is_isomorphic(const Object& d, const Object& e) const { return d == e; }

 private:
  void check(const Object& d) const;
  std::uint32_t n_;
};

/// Throws std::invalid_argument for n == 0.
MonoidShiftCategory torus_category(std::uint32_t n);

/// Elements of P_n are strings over {0, 1, *} of length n other than all *.
std::vector<std::string> pn_elements(std::uint32_t n);

/// Coordinatewise 0 <= * <= 1, except that an element with a single
/// determined coordinate 0 at position i is not below the element with a
/// single determined coordinate 1 at position i.
bool pn_leq(const std::string& e, const std::string& f);

struct PnExtension {
  std::uint32_t n = 0;
  std::vector<std::pair<std::string, std::string>> objects;  // e <= f
  FiniteCategory category;
};

/// Objects (e, f) with e <= f; one morphism (e, f) -> (e', f') when e' <= e
/// and f <= f'. Throws std::invalid_argument unless 1 <= n <= 6.
PnExtension pn_extension_category(std::uint32_t n);

struct TraceType {
  enum class Kind : std::uint8_t { empty, contractible, sphere };
  Kind kind = Kind::empty;
  std::int32_t dim = 0;  // sphere only

  /// Number of path components: 0, 1, 2 for S^0, 1 for higher spheres.
  std::uint32_t components() const;
  std::string to_string() const;
  friend bool operator==(const TraceType&, const TraceType&) = default;
};

/// Homotopy type of the space of traces from e to f in the boundary of the
/// n-cube. With * read as 1/2 and d = f - e: empty unless e <= f,
/// contractible if some d_i = 1/2, if some coordinate is 0 or 1 in both e and
/// f (the traces then stay in a solid facet), or if n(e,f) <= 1, where n(e,f)
/// counts the coordinates with d_i = 1; a sphere of dimension n(e,f) - 2
/// otherwise.
/// Throws std::invalid_argument on malformed input.
TraceType boundary_trace_type(std::uint32_t n, const std::string& e, const std::string& f);

/// One object, one identity.
FiniteCategory interval_category();

}  // namespace dipair
