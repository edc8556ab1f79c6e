#include "dipair/analytic.hpp"

#include <algorithm>
#include <stdexcept>

namespace dipair {

MonoidShiftCategory::MonoidShiftCategory(std::uint32_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("torus dimension must be at least 1");
}

std::vector<MonoidShiftCategory::Object> MonoidShiftCategory::objects() const {
  std::vector<Object> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n_); ++bits) {
    Object d(n_);
    for (std::uint32_t i = 0; i < n_; ++i) d[i] = (bits >> (n_ - 1 - i)) & 1u;
    out.push_back(std::move(d));
  }
  return out;
}

void MonoidShiftCategory::check(const Object& d) const {
  if (d.size() != n_) throw std::invalid_argument("object has the wrong length");
  for (auto b : d) {
    if (b > 1) throw std::invalid_argument("object entries must be 0 or 1");
  }
}

MonoidShiftCategory::Morphism MonoidShiftCategory::lower_bound(const Object& d, const Object& e) const {
  check(d);
  check(e);
  Morphism l(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) l[i] = (d[i] == 1 && e[i] == 0) ? 1 : 0;
  return l;
}

bool MonoidShiftCategory::contains(const Object& d, const Object& e, const Morphism& m) const {
  if (m.size() != n_) return false;
  const Morphism l = lower_bound(d, e);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (m[i] < l[i]) return false;
  }
  return true;
}

MonoidShiftCategory::Morphism MonoidShiftCategory::compose(const Morphism& m1, const Morphism& m2) const {
  if (m1.size() != n_ || m2.size() != n_) throw std::invalid_argument("morphism has the wrong length");
  Morphism out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = m1[i] + m2[i];
  return out;
}

MonoidShiftCategory torus_category(std::uint32_t n) { return MonoidShiftCategory(n); }

namespace {

void check_pn(const std::string& e) {
  if (e.empty() || e.find_first_not_of("01*") != std::string::npos) {
    throw std::invalid_argument("'" + e + "' is not a word over {0,1,*}");
  }
  if (e.find_first_not_of('*') == std::string::npos) throw std::invalid_argument("the all-* word is not a cell");
}

int level(char c) { return c == '0' ? 0 : c == '*' ? 1 : 2; }

// position of the only determined coordinate, or npos
std::size_t single_determined(const std::string& e) {
  const auto first = e.find_first_not_of('*');
  return e.find_first_not_of('*', first + 1) == std::string::npos ? first : std::string::npos;
}

}  // namespace

std::vector<std::string> pn_elements(std::uint32_t n) {
  static const char alphabet[] = {'0', '*', '1'};
  std::vector<std::string> out;
  std::string w(n, '0');
  std::vector<int> digit(n, 0);
  while (true) {
    for (std::uint32_t i = 0; i < n; ++i) w[i] = alphabet[digit[i]];
    if (w.find_first_not_of('*') != std::string::npos) out.push_back(w);
    std::uint32_t i = n;
    while (i > 0 && digit[i - 1] == 2) digit[--i] = 0;
    if (i == 0) break;
    ++digit[i - 1];
  }
  return out;
}

bool pn_leq(const std::string& e, const std::string& f) {
  check_pn(e);
  check_pn(f);
  if (e.size() != f.size()) throw std::invalid_argument("words of different length");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (level(e[i]) > level(f[i])) return false;
  }
  const auto i = single_determined(e);
  return !(i != std::string::npos && i == single_determined(f) && e[i] == '0' && f[i] == '1');
}

PnExtension pn_extension_category(std::uint32_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("pn_extension_category needs 1 <= n <= 6");
  PnExtension out;
  out.n = n;
  const auto elems = pn_elements(n);
  const auto m = static_cast<std::uint32_t>(elems.size());
  std::vector<std::vector<std::uint32_t>> up(m), down(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      if (pn_leq(elems[a], elems[b])) {
        up[a].push_back(b);
        down[b].push_back(a);
      }
    }
  }
  std::vector<std::uint32_t> object_of(static_cast<std::size_t>(m) * m, UINT32_MAX);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < m; ++a) {
    for (auto b : up[a]) {
      object_of[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint32_t>(pairs.size());
      pairs.emplace_back(a, b);
      out.objects.emplace_back(elems[a], elems[b]);
      out.category.add_object("(" + elems[a] + "," + elems[b] + ")");
    }
  }
  std::vector<std::uint32_t> targets;
  for (std::uint32_t o = 0; o < pairs.size(); ++o) {
    const auto [e, f] = pairs[o];
    targets.clear();
    for (auto e2 : down[e]) {
      for (auto f2 : up[f]) targets.push_back(object_of[static_cast<std::size_t>(e2) * m + f2]);
    }
    std::sort(targets.begin(), targets.end());
    for (auto t : targets) {
      const auto id = out.category.add_morphism(o, t);
      if (t == o) out.category.set_identity(o, id);
    }
  }
  out.category.use_thin_composition();
  return out;
}

std::uint32_t TraceType::components() const {
  switch (kind) {
    case Kind::empty:
      return 0;
    case Kind::contractible:
      return 1;
    case Kind::sphere:
      return dim == 0 ? 2 : 1;
  }
  return 0;
}

std::string TraceType::to_string() const {
  switch (kind) {
    case Kind::empty:
      return "empty";
    case Kind::contractible:
      return "contractible";
    case Kind::sphere:
      return "sphere(" + std::to_string(dim) + ")";
  }
  return {};
}

TraceType boundary_trace_type(std::uint32_t n, const std::string& e, const std::string& f) {
  if (e.size() != n || f.size() != n) throw std::invalid_argument("words must have length n");
  if (!pn_leq(e, f)) return {TraceType::Kind::empty, 0};
  std::int32_t full = 0;
  bool half = false;
  for (std::uint32_t i = 0; i < n; ++i) {
    const int d = level(f[i]) - level(e[i]);  // in halves
    if (d == 1) half = true;
    if (d == 2) ++full;
    // a coordinate pinned at 0 or 1 keeps every trace inside a solid facet
    if (d == 0 && e[i] != '*') half = true;
  }
  if (half || full <= 1) return {TraceType::Kind::contractible, 0};
  return {TraceType::Kind::sphere, full - 2};
}

FiniteCategory interval_category() {
  FiniteCategory cat;
  cat.add_object("I");
  cat.set_identity(0, cat.add_morphism(0, 0));
  cat.use_thin_composition();
  return cat;
}

}  // namespace dipair
