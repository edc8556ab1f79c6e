#include "dipair/precubical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dipair {

std::string to_string(CellId c) { return std::to_string(c.dim) + ":" + std::to_string(c.index); }

CellId PreCubicalSet::corner(CellId c, std::span<const Sign> signs) const {
  for (std::uint32_t axis = c.dim; axis >= 1; --axis) {
    c = face(c, axis, signs[axis - 1]);
  }
  return c;
}

std::optional<CellId> PreCubicalSet::find(const std::string& name) const {
  if (auto it = names_.find(name); it != names_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string> PreCubicalSet::name_of(CellId c) const {
  if (auto it = primary_names_.find(c); it != primary_names_.end()) return it->second;
  return std::nullopt;
}

std::string PreCubicalSet::label(CellId c) const { return name_of(c).value_or(to_string(c)); }

PreCubicalSet::Builder::Builder(std::vector<std::uint32_t> counts) {
  pcs_.counts_ = std::move(counts);
  pcs_.faces_.resize(pcs_.counts_.size());
  for (std::uint32_t d = 0; d < pcs_.counts_.size(); ++d) {
    pcs_.faces_[d].resize(static_cast<std::size_t>(pcs_.counts_[d]) * 2 * d);
  }
}

void PreCubicalSet::Builder::grow(std::uint32_t dim) {
  if (pcs_.counts_.size() <= dim) {
    pcs_.counts_.resize(dim + 1, 0);
    pcs_.faces_.resize(dim + 1);
  }
}

CellId PreCubicalSet::Builder::add_cell(std::uint32_t dim) {
  grow(dim);
  CellId c{dim, pcs_.counts_[dim]++};
  pcs_.faces_[dim].resize(static_cast<std::size_t>(pcs_.counts_[dim]) * 2 * dim);
  return c;
}

void PreCubicalSet::Builder::set_faces(CellId c, std::span<const CellId> faces) {
  if (faces.size() != 2 * static_cast<std::size_t>(c.dim)) {
    throw std::invalid_argument("cell " + to_string(c) + " needs " + std::to_string(2 * c.dim) + " faces");
  }
  std::copy(faces.begin(), faces.end(), pcs_.faces_[c.dim].begin() + static_cast<std::ptrdiff_t>(c.index) * 2 * c.dim);
}

void PreCubicalSet::Builder::set_face(CellId c, std::uint32_t axis, Sign sign, CellId f) {
  pcs_.faces_[c.dim][(static_cast<std::size_t>(c.index) * c.dim + (axis - 1)) * 2 + static_cast<std::size_t>(sign)] = f;
}

void PreCubicalSet::Builder::name(CellId c, const std::string& name) {
  pcs_.names_.emplace(name, c);
  pcs_.primary_names_.emplace(c, name);
}

CellId PreCubicalSet::Builder::add_edge(CellId from, CellId to) {
  CellId e = add_cell(1);
  const CellId faces[] = {from, to};
  set_faces(e, faces);
  return e;
}

CellId PreCubicalSet::Builder::add_square(CellId d1_minus, CellId d1_plus, CellId d2_minus, CellId d2_plus) {
  CellId s = add_cell(2);
  const CellId faces[] = {d1_minus, d1_plus, d2_minus, d2_plus};
  set_faces(s, faces);
  return s;
}

PreCubicalSet PreCubicalSet::Builder::build() && { return std::move(pcs_); }

ValidationReport validate(const PreCubicalSet& pcs) {
  ValidationReport report;
  bool references_ok = true;
  for (std::uint32_t n = 1; n <= pcs.dims(); ++n) {
    for (std::uint32_t idx = 0; idx < pcs.count(n); ++idx) {
      const CellId c{n, idx};
      for (std::uint32_t i = 1; i <= n; ++i) {
        for (Sign a : {Sign::minus, Sign::plus}) {
          const CellId f = pcs.face(c, i, a);
          if (f.dim != n - 1 || !pcs.contains(f)) {
            report.push_back({c, i, 0, a, Sign::minus, "face refers to missing cell " + to_string(f)});
            references_ok = false;
          }
        }
      }
    }
  }
  if (!references_ok) return report;

  for (std::uint32_t n = 2; n <= pcs.dims(); ++n) {
    for (std::uint32_t idx = 0; idx < pcs.count(n); ++idx) {
      const CellId c{n, idx};
      for (std::uint32_t j = 2; j <= n; ++j) {
        for (std::uint32_t i = 1; i < j; ++i) {
          for (Sign a : {Sign::minus, Sign::plus}) {
            for (Sign b : {Sign::minus, Sign::plus}) {
              const CellId lhs = pcs.face(pcs.face(c, j, b), i, a);
              const CellId rhs = pcs.face(pcs.face(c, i, a), j - 1, b);
              if (lhs != rhs) report.push_back({c, i, j, a, b, {}});
            }
          }
        }
      }
    }
  }
  return report;
}

std::string describe(const Violation& v, const PreCubicalSet& pcs) {
  auto sign = [](Sign s) { return s == Sign::minus ? "-" : "+"; };
  if (!v.missing.empty()) {
    return pcs.label(v.cell) + ": d_" + std::to_string(v.i) + sign(v.alpha) + " " + v.missing;
  }
  return pcs.label(v.cell) + ": d_" + std::to_string(v.i) + sign(v.alpha) + " d_" + std::to_string(v.j) +
         sign(v.beta) + " != d_" + std::to_string(v.j - 1) + sign(v.beta) + " d_" + std::to_string(v.i) +
         sign(v.alpha) + " (i=" + std::to_string(v.i) + ", j=" + std::to_string(v.j) + ")";
}

GridPoint make_point(const PreCubicalSet& pcs, CellId carrier, std::int64_t denom, std::vector<std::int64_t> coords) {
  if (denom <= 0) throw std::invalid_argument("denominator must be positive");
  if (!pcs.contains(carrier)) throw std::invalid_argument("unknown cell " + to_string(carrier));
  if (coords.size() != carrier.dim) {
    throw std::invalid_argument("cell " + pcs.label(carrier) + " has dimension " + std::to_string(carrier.dim) +
                                " but " + std::to_string(coords.size()) + " coordinates were given");
  }
  for (auto x : coords) {
    if (x < 0 || x > denom) throw std::invalid_argument("coordinate outside [0,1]");
  }
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] == 0 || coords[i] == denom) {
      carrier = pcs.face(carrier, static_cast<std::uint32_t>(i + 1), coords[i] == 0 ? Sign::minus : Sign::plus);
      coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return GridPoint{carrier, denom, std::move(coords)};
}

GridPoint rescale(const GridPoint& p, std::int64_t k) {
  if (k <= 0 || k % p.denom != 0) {
    throw std::invalid_argument("denominator " + std::to_string(k) + " is not a multiple of " + std::to_string(p.denom));
  }
  GridPoint q{p.carrier, k, p.coords};
  for (auto& x : q.coords) x *= k / p.denom;
  return q;
}

std::size_t SubdivisionMap::KeyHash::operator()(const std::vector<std::int32_t>& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : key) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

CellId SubdivisionMap::cell_at(const PreCubicalSet& original, CellId c, std::vector<std::int32_t> position) const {
  const auto top = static_cast<std::int32_t>(2 * factor_);
  for (std::size_t i = position.size(); i-- > 0;) {
    if (position[i] == 0 || position[i] == top) {
      c = original.face(c, static_cast<std::uint32_t>(i + 1), position[i] == 0 ? Sign::minus : Sign::plus);
      position.erase(position.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  std::vector<std::int32_t> key;
  key.reserve(position.size() + 2);
  key.push_back(static_cast<std::int32_t>(c.dim));
  key.push_back(static_cast<std::int32_t>(c.index));
  key.insert(key.end(), position.begin(), position.end());
  auto it = lookup_.find(key);
  if (it == lookup_.end()) throw std::out_of_range("position outside the subdivided cell " + to_string(c));
  return it->second;
}

std::uint32_t SubdivisionMap::vertex_of(const PreCubicalSet& original, const GridPoint& p) const {
  if (factor_ % p.denom != 0) {
    throw std::invalid_argument("point denominator " + std::to_string(p.denom) + " does not divide subdivision factor " +
                                std::to_string(factor_));
  }
  const auto scale = static_cast<std::int64_t>(factor_) / p.denom;
  std::vector<std::int32_t> position;
  position.reserve(p.coords.size());
  for (auto x : p.coords) position.push_back(static_cast<std::int32_t>(2 * x * scale));
  const CellId v = cell_at(original, p.carrier, std::move(position));
  return v.index;
}

GridPoint SubdivisionMap::point_of(std::uint32_t vertex) const {
  const auto& o = origin_[0][vertex];
  GridPoint p{o.original, factor_, {}};
  for (auto x : o.position) p.coords.push_back(x / 2);
  return p;
}

struct SubdivisionBuilder {
  static Subdivision run(const PreCubicalSet& pcs, std::uint32_t k) {
    Subdivision out;
    SubdivisionMap& map = out.map;
    map.factor_ = k;
    const std::uint32_t dims = pcs.dims();
    map.origin_.resize(pcs.counts().empty() ? 0 : dims + 1);
    const auto top = static_cast<std::int32_t>(2 * k);

    // Enumerate interior positions of every original cell.
    for (std::uint32_t n = 0; n <= dims && !pcs.counts().empty(); ++n) {
      for (std::uint32_t idx = 0; idx < pcs.count(n); ++idx) {
        std::vector<std::int32_t> pos(n, 1);
        while (true) {
          const auto d = static_cast<std::uint32_t>(std::count_if(pos.begin(), pos.end(), [](auto x) { return x % 2 == 1; }));
          const CellId fresh{d, static_cast<std::uint32_t>(map.origin_[d].size())};
          map.origin_[d].push_back({CellId{n, idx}, pos});
          std::vector<std::int32_t> key{static_cast<std::int32_t>(n), static_cast<std::int32_t>(idx)};
          key.insert(key.end(), pos.begin(), pos.end());
          map.lookup_.emplace(std::move(key), fresh);
          // lexicographic increment over {1..2k-1}^n
          std::size_t i = n;
          while (i > 0 && pos[i - 1] == top - 1) pos[--i] = 1;
          if (i == 0) break;
          ++pos[i - 1];
        }
      }
    }

    std::vector<std::uint32_t> counts;
    for (auto& cells : map.origin_) counts.push_back(static_cast<std::uint32_t>(cells.size()));
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    map.origin_.resize(counts.size());
    PreCubicalSet::Builder b(counts);
    std::vector<CellId> faces;
    for (std::uint32_t d = 1; d < counts.size(); ++d) {
      for (std::uint32_t idx = 0; idx < counts[d]; ++idx) {
        const SubdividedCell& sc = map.origin_[d][idx];
        faces.clear();
        for (std::size_t i = 0; i < sc.position.size(); ++i) {
          if (sc.position[i] % 2 == 0) continue;
          for (int delta : {-1, 1}) {
            auto pos = sc.position;
            pos[i] += delta;
            faces.push_back(map.cell_at(pcs, sc.original, std::move(pos)));
          }
        }
        b.set_faces(CellId{d, idx}, faces);
      }
    }
    out.complex = std::move(b).build();
    return out;
  }
};

Subdivision subdivide(const PreCubicalSet& pcs, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("subdivision factor must be positive");
  return SubdivisionBuilder::run(pcs, k);
}

PreCubicalSet product(const PreCubicalSet& a, const PreCubicalSet& b) {
  const std::uint32_t dims = a.dims() + b.dims();
  std::vector<std::uint32_t> counts(dims + 1, 0);
  // offset[n][p] = index of the first (p, n-p) cell in dimension n
  std::vector<std::vector<std::uint32_t>> offset(dims + 1);
  for (std::uint32_t n = 0; n <= dims; ++n) {
    offset[n].assign(n + 1, 0);
    for (std::uint32_t p = 0; p <= n; ++p) {
      offset[n][p] = counts[n];
      counts[n] += a.count(p) * b.count(n - p);
    }
  }
  auto id = [&](CellId x, CellId y) {
    const std::uint32_t n = x.dim + y.dim;
    return CellId{n, offset[n][x.dim] + x.index * b.count(y.dim) + y.index};
  };

  PreCubicalSet::Builder builder(counts);
  std::vector<CellId> faces;
  for (std::uint32_t n = 0; n <= dims; ++n) {
    for (std::uint32_t p = 0; p <= n; ++p) {
      const std::uint32_t q = n - p;
      for (std::uint32_t ia = 0; ia < a.count(p); ++ia) {
        for (std::uint32_t ib = 0; ib < b.count(q); ++ib) {
          const CellId x{p, ia}, y{q, ib};
          const CellId c = id(x, y);
          faces.clear();
          for (std::uint32_t i = 1; i <= p; ++i) {
            for (Sign s : {Sign::minus, Sign::plus}) faces.push_back(id(a.face(x, i, s), y));
          }
          for (std::uint32_t j = 1; j <= q; ++j) {
            for (Sign s : {Sign::minus, Sign::plus}) faces.push_back(id(x, b.face(y, j, s)));
          }
          if (n > 0) builder.set_faces(c, faces);
          auto nx = a.name_of(x);
          auto ny = b.name_of(y);
          if (nx && ny) builder.name(c, "(" + *nx + "," + *ny + ")");
        }
      }
    }
  }
  return std::move(builder).build();
}

std::pair<CellId, CellId> product_factors(const PreCubicalSet& a, const PreCubicalSet& b, CellId c) {
  std::uint32_t index = c.index;
  for (std::uint32_t p = 0; p <= c.dim; ++p) {
    const std::uint32_t q = c.dim - p;
    const std::uint32_t block = a.count(p) * b.count(q);
    if (index < block) return {CellId{p, index / b.count(q)}, CellId{q, index % b.count(q)}};
    index -= block;
  }
  throw std::out_of_range("cell " + to_string(c) + " is not a product cell");
}

std::uint32_t EuclideanCell::dim() const {
  return static_cast<std::uint32_t>(std::count(extent.begin(), extent.end(), std::uint8_t{1}));
}

EuclideanRealization from_euclidean(const EuclideanComplex& e) {
  std::set<EuclideanCell> closure;
  std::vector<EuclideanCell> stack;
  std::set<EuclideanCell> listed;
  for (const auto& c : e.top_cells) {
    if (c.base.size() != e.ambient_dim || c.extent.size() != e.ambient_dim) {
      throw std::invalid_argument("euclidean cell has wrong ambient dimension");
    }
    for (auto x : c.extent) {
      if (x > 1) throw std::invalid_argument("euclidean cell extent must be 0 or 1");
    }
    if (!listed.insert(c).second) throw std::invalid_argument("euclidean cell listed twice");
    stack.push_back(c);
  }
  while (!stack.empty()) {
    EuclideanCell c = std::move(stack.back());
    stack.pop_back();
    if (!closure.insert(c).second) continue;
    for (std::size_t i = 0; i < c.extent.size(); ++i) {
      if (!c.extent[i]) continue;
      EuclideanCell lo = c;
      lo.extent[i] = 0;
      EuclideanCell hi = lo;
      hi.base[i] += 1;
      stack.push_back(std::move(lo));
      stack.push_back(std::move(hi));
    }
  }

  EuclideanRealization out;
  std::uint32_t dims = 0;
  for (const auto& c : closure) dims = std::max(dims, c.dim());
  out.cells.resize(closure.empty() ? 0 : dims + 1);
  for (const auto& c : closure) out.cells[c.dim()].push_back(c);  // std::set order is (base, extent)
  std::vector<std::map<EuclideanCell, std::uint32_t>> index(out.cells.size());
  std::vector<std::uint32_t> counts;
  for (std::uint32_t d = 0; d < out.cells.size(); ++d) {
    counts.push_back(static_cast<std::uint32_t>(out.cells[d].size()));
    for (std::uint32_t i = 0; i < out.cells[d].size(); ++i) index[d].emplace(out.cells[d][i], i);
  }

  PreCubicalSet::Builder b(counts);
  std::vector<CellId> faces;
  for (std::uint32_t d = 1; d < out.cells.size(); ++d) {
    for (std::uint32_t idx = 0; idx < out.cells[d].size(); ++idx) {
      const EuclideanCell& c = out.cells[d][idx];
      faces.clear();
      for (std::size_t i = 0; i < c.extent.size(); ++i) {
        if (!c.extent[i]) continue;
        EuclideanCell lo = c;
        lo.extent[i] = 0;
        EuclideanCell hi = lo;
        hi.base[i] += 1;
        faces.push_back(CellId{d - 1, index[d - 1].at(lo)});
        faces.push_back(CellId{d - 1, index[d - 1].at(hi)});
      }
      b.set_faces(CellId{d, idx}, faces);
    }
  }
  out.complex = std::move(b).build();
  return out;
}

PreCubicalSet reverse(const PreCubicalSet& pcs) {
  PreCubicalSet::Builder b(pcs);
  for (std::uint32_t n = 1; n <= pcs.dims(); ++n) {
    for (std::uint32_t idx = 0; idx < pcs.count(n); ++idx) {
      const CellId c{n, idx};
      for (std::uint32_t i = 1; i <= n; ++i) {
        b.set_face(c, i, Sign::minus, pcs.face(c, i, Sign::plus));
        b.set_face(c, i, Sign::plus, pcs.face(c, i, Sign::minus));
      }
    }
  }
  return std::move(b).build();
}

}  // namespace dipair
