#include "ctv/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ctv/config.hpp"
#include "ctv/linalg.hpp"

namespace ctv::topology {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// c = a - f * b over F_p, columns sorted by row.
SparseColumn combine(const SparseColumn& a, std::uint64_t f, const SparseColumn& b, std::uint64_t p) {
  SparseColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      const std::uint64_t v = (p - mulmod(f, b[j].second, p)) % p;
      if (v != 0) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      const std::uint64_t v = (a[i].second + p - mulmod(f, b[j].second, p)) % p;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b, std::uint64_t cap, const char* what) {
  if (a != 0 && b > cap / a) {
    throw Error(ErrorKind::CapExceeded, std::string(what) + " exceeds cap " + std::to_string(cap));
  }
  return a * b;
}

// Every ridge (facet minus one vertex) with the facets containing it and the
// position of the removed vertex.
using RidgeMap = std::map<Face, std::vector<std::pair<std::size_t, std::size_t>>>;

RidgeMap ridges_of(const SimplicialComplex& complex) {
  RidgeMap ridges;
  const auto& facets = complex.facets();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t pos = 0; pos < facets[f].size(); ++pos) {
      Face ridge = facets[f];
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(pos));
      ridges[std::move(ridge)].emplace_back(f, pos);
    }
  }
  return ridges;
}

void injections(std::size_t from, std::size_t to, std::vector<std::size_t>& current, std::vector<bool>& used,
                std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == from) {
    out.push_back(current);
    return;
  }
  for (std::size_t t = 0; t < to; ++t) {
    if (used[t]) continue;
    used[t] = true;
    current.push_back(t);
    injections(from, to, current, used, out);
    current.pop_back();
    used[t] = false;
  }
}

std::vector<std::uint64_t> primes_from(std::uint64_t start, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = start; out.size() < count; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

// ---- SimplicialComplex ------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<Face> facets,
                                     std::vector<std::string> labels, std::size_t facet_cap)
    : num_vertices_(num_vertices), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != num_vertices) {
    throw Error(ErrorKind::InvalidParameter, "label count does not match vertex count");
  }
  if (facets.size() > facet_cap) {
    throw Error(ErrorKind::CapExceeded, "facet count exceeds cap " + std::to_string(facet_cap));
  }
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!f.empty() && f.back() >= num_vertices) {
      throw Error(ErrorKind::InvalidParameter, "facet uses vertex " + std::to_string(f.back()) + " out of range");
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  const bool uniform = std::all_of(facets.begin(), facets.end(),
                                   [&](const Face& f) { return f.size() == facets.front().size(); });
  if (!uniform) {
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return facets[a].size() > facets[b].size(); });
    std::vector<Face> kept;
    for (auto i : order) {
      const auto& f = facets[i];
      const bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& g) {
        return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
      });
      if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    facets = std::move(kept);
  }
  if (facets.empty()) facets.push_back(Face{});
  facets_ = std::move(facets);
}

std::string SimplicialComplex::label(std::size_t v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

int SimplicialComplex::dimension() const {
  std::size_t size = 0;
  for (const auto& f : facets_) size = std::max(size, f.size());
  return static_cast<int>(size) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

void SimplicialComplex::build_faces() const {
  if (faces_built_) return;
  const int dim = dimension();
  std::vector<std::vector<Face>> faces(static_cast<std::size_t>(dim + 2));
  std::size_t generated = 0;
  for (const auto& f : facets_) {
    if (f.size() >= 63) throw Error(ErrorKind::CapExceeded, "facet too large to enumerate faces");
    const std::uint64_t subsets = std::uint64_t{1} << f.size();
    generated += subsets;
    if (generated > 2 * kDefaultFaceCap) {
      throw Error(ErrorKind::CapExceeded, "face enumeration exceeds cap " + std::to_string(kDefaultFaceCap));
    }
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if ((mask >> i) & 1U) sub.push_back(f[i]);
      }
      faces[sub.size()].push_back(std::move(sub));
    }
  }
  std::size_t total = 0;
  for (auto& level : faces) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    total += level.size();
  }
  if (total > kDefaultFaceCap) {
    throw Error(ErrorKind::CapExceeded, "face count exceeds cap " + std::to_string(kDefaultFaceCap));
  }
  faces_ = std::move(faces);
  faces_built_ = true;
}

const std::vector<Face>& SimplicialComplex::faces(int dim) const {
  static const std::vector<Face> none;
  build_faces();
  const auto slot = static_cast<std::size_t>(dim + 1);
  if (dim < -1 || slot >= faces_.size()) return none;
  return faces_[slot];
}

std::size_t SimplicialComplex::face_index(const Face& face) const {
  const auto& level = faces(static_cast<int>(face.size()) - 1);
  const auto it = std::lower_bound(level.begin(), level.end(), face);
  if (it == level.end() || *it != face) throw Error(ErrorKind::InvalidParameter, "not a face of the complex");
  return static_cast<std::size_t>(it - level.begin());
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int i = 0; i <= dimension(); ++i) f.push_back(faces(i).size());
  return f;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  const auto f = f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  return chi;
}

bool SimplicialComplex::contains(const Face& face) const {
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
  });
}

// ---- constructions ----------------------------------------------------------

SimplicialComplex chessboard_complex(std::size_t rows, std::size_t cols, std::size_t facet_cap) {
  const std::size_t small = std::min(rows, cols);
  const std::size_t large = std::max(rows, cols);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < small; ++i) count = checked_product(count, large - i, facet_cap, "facet count");

  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> current;
  std::vector<bool> used(large, false);
  injections(small, large, current, used, maps);

  std::vector<Face> facets;
  facets.reserve(maps.size());
  for (const auto& m : maps) {
    Face f;
    for (std::size_t t = 0; t < small; ++t) {
      // cols <= rows: column t sits in row m[t]; otherwise row t sits in column m[t].
      f.push_back(cols <= rows ? m[t] * cols + t : t * cols + m[t]);
    }
    facets.push_back(std::move(f));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return SimplicialComplex(rows * cols, std::move(facets), std::move(labels), facet_cap);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, std::size_t facet_cap) {
  checked_product(a.facets().size(), b.facets().size(), facet_cap, "join facet count");
  const std::size_t shift = a.num_vertices();
  std::vector<Face> facets;
  facets.reserve(a.facets().size() * b.facets().size());
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) {
      Face f = fa;
      for (auto v : fb) f.push_back(v + shift);
      facets.push_back(std::move(f));
    }
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (std::size_t v = 0; v < a.num_vertices(); ++v) labels.push_back(a.label(v));
    for (std::size_t v = 0; v < b.num_vertices(); ++v) labels.push_back(b.label(v));
  }
  return SimplicialComplex(shift + b.num_vertices(), std::move(facets), std::move(labels), facet_cap);
}

SimplicialComplex chessboard_join(const std::vector<std::size_t>& cols, std::size_t rows, std::size_t facet_cap) {
  SimplicialComplex result;
  for (std::size_t f = 0; f < cols.size(); ++f) {
    auto factor = chessboard_complex(rows, cols[f], facet_cap);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < factor.num_vertices(); ++v) labels.push_back(std::to_string(f) + ":" + factor.label(v));
    factor = SimplicialComplex(factor.num_vertices(), factor.facets(), std::move(labels), facet_cap);
    result = join(result, factor, facet_cap);
  }
  return result;
}

// ---- homology ---------------------------------------------------------------

ChainComplexModP chain_complex_mod_p(const SimplicialComplex& complex, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 62)) throw Error(ErrorKind::InvalidParameter, "prime too large");
  ChainComplexModP cc;
  cc.p = p;
  const int dim = complex.dimension();
  for (int i = 0; i <= dim; ++i) cc.ranks.push_back(complex.faces(i).size());
  cc.boundary.resize(cc.ranks.size());
  for (int i = 1; i <= dim; ++i) {
    auto& cols = cc.boundary[static_cast<std::size_t>(i)];
    for (const auto& face : complex.faces(i)) {
      SparseColumn col;
      for (std::size_t j = 0; j < face.size(); ++j) {
        Face sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
        col.emplace_back(complex.face_index(sub), j % 2 == 0 ? 1 % p : p - 1);
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
  }
  for (std::size_t i = 2; i < cc.boundary.size(); ++i) {
    for (const auto& col : cc.boundary[i]) {
      std::map<std::size_t, std::uint64_t> acc;
      for (const auto& [row, v] : col) {
        for (const auto& [row2, w] : cc.boundary[i - 1][row]) acc[row2] = (acc[row2] + mulmod(v, w, p)) % p;
      }
      for (const auto& entry : acc) {
        if (entry.second != 0) throw std::logic_error("boundary of a boundary is nonzero");
      }
    }
  }
  return cc;
}

std::size_t rank_mod_p(std::vector<SparseColumn> columns, std::uint64_t p) {
  std::map<std::size_t, std::size_t> pivot_of;  // lowest row -> column
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      const auto low = col.back().first;
      const auto it = pivot_of.find(low);
      if (it == pivot_of.end()) {
        pivot_of.emplace(low, c);
        ++rank;
        break;
      }
      const auto& other = columns[it->second];
      const std::uint64_t f = mulmod(col.back().second, inverse_mod(other.back().second, p), p);
      col = combine(col, f, other, p);
    }
  }
  return rank;
}

std::vector<std::size_t> homology_mod_p(const SimplicialComplex& complex, std::uint64_t p) {
  const auto cc = chain_complex_mod_p(complex, p);
  const std::size_t n = cc.ranks.size();
  std::vector<std::size_t> ranks(n + 1, 0);  // ranks[i] = rank ∂_i
  for (std::size_t i = 1; i < n; ++i) ranks[i] = rank_mod_p(cc.boundary[i], p);
  std::vector<std::size_t> betti(n);
  for (std::size_t i = 0; i < n; ++i) betti[i] = cc.ranks[i] - ranks[i] - ranks[i + 1];
  return betti;
}

// ---- pseudo-manifolds and orientation --------------------------------------

PseudoManifoldReport is_pseudo_manifold(const SimplicialComplex& complex) {
  PseudoManifoldReport report;
  if (complex.dimension() < 0) {
    report.reason = "empty complex";
    return report;
  }
  if (!complex.is_pure()) {
    report.reason = "complex is not pure";
    return report;
  }
  const auto ridges = ridges_of(complex);
  const auto& facets = complex.facets();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, owners] : ridges) {
    if (owners.size() != 2) {
      report.reason = "ridge lies in " + std::to_string(owners.size()) + " facets";
      report.violating_ridge = ridge;
      return report;
    }
    parent[find(owners[0].first)] = find(owners[1].first);
  }
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (find(f) != find(0)) {
      report.reason = "facet adjacency graph is disconnected";
      return report;
    }
  }
  report.ok = true;
  return report;
}

std::optional<Orientation> orient(const SimplicialComplex& complex) {
  if (complex.dimension() < 0 || !complex.is_pure()) {
    throw Error(ErrorKind::Precondition, "orient needs a nonempty pure complex");
  }
  const auto ridges = ridges_of(complex);
  const auto& facets = complex.facets();
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacency(facets.size());  // (neighbor, relation)
  for (const auto& [ridge, owners] : ridges) {
    if (owners.size() > 2) {
      throw Error(ErrorKind::Precondition, "a ridge lies in more than two facets");
    }
    if (owners.size() < 2) continue;
    const auto [f1, p1] = owners[0];
    const auto [f2, p2] = owners[1];
    // Induced signs must cancel: s2 = -s1 (-1)^(p1 + p2).
    const int rel = (p1 + p2) % 2 == 0 ? -1 : 1;
    adjacency[f1].emplace_back(f2, rel);
    adjacency[f2].emplace_back(f1, rel);
  }
  Orientation o;
  o.signs.assign(facets.size(), 0);
  for (std::size_t start = 0; start < facets.size(); ++start) {
    if (o.signs[start] != 0) continue;
    o.signs[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const auto f = queue.front();
      queue.pop_front();
      for (const auto& [g, rel] : adjacency[f]) {
        const int want = rel * o.signs[f];
        if (o.signs[g] == 0) {
          o.signs[g] = want;
          queue.push_back(g);
        } else if (o.signs[g] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return o;
}

Verdict check_orientation(const SimplicialComplex& complex, const Orientation& orientation) {
  const auto& facets = complex.facets();
  if (orientation.signs.size() != facets.size()) return Verdict::fail("one sign per facet required");
  for (int s : orientation.signs) {
    if (s != 1 && s != -1) return Verdict::fail("signs must be +1 or -1");
  }
  for (const auto& [ridge, owners] : ridges_of(complex)) {
    if (owners.size() != 2) continue;
    const auto [f1, p1] = owners[0];
    const auto [f2, p2] = owners[1];
    const int induced1 = orientation.signs[f1] * (p1 % 2 == 0 ? 1 : -1);
    const int induced2 = orientation.signs[f2] * (p2 % 2 == 0 ? 1 : -1);
    if (induced1 + induced2 != 0) return Verdict::fail("induced orientations agree on a shared ridge");
  }
  return Verdict::pass();
}

// ---- group actions ----------------------------------------------------------

std::vector<std::vector<std::size_t>> PermutationAction::elements() const {
  for (const auto& g : generators) {
    std::vector<bool> seen(num_vertices, false);
    if (g.size() != num_vertices) throw Error(ErrorKind::InvalidParameter, "generator has wrong length");
    for (auto v : g) {
      if (v >= num_vertices || seen[v]) throw Error(ErrorKind::InvalidParameter, "generator is not a permutation");
      seen[v] = true;
    }
  }
  std::vector<std::size_t> identity(num_vertices);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<std::size_t>> out{identity};
  std::set<std::vector<std::size_t>> seen{identity};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<std::size_t> h(num_vertices);
      for (std::size_t v = 0; v < num_vertices; ++v) h[v] = g[out[i][v]];
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > 1'000'000) throw Error(ErrorKind::CapExceeded, "group order exceeds 10^6");
      }
    }
  }
  return out;
}

PermutationAction row_shift_action(std::size_t rows, std::size_t cols) {
  PermutationAction a;
  a.num_vertices = rows * cols;
  std::vector<std::size_t> g(a.num_vertices);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) g[i * cols + j] = ((i + 1) % rows) * cols + j;
  }
  a.generators.push_back(std::move(g));
  return a;
}

PermutationAction join_action(const PermutationAction& a, const PermutationAction& b) {
  if (a.generators.size() != b.generators.size()) {
    throw Error(ErrorKind::InvalidParameter, "join_action needs the same number of generators");
  }
  PermutationAction out;
  out.num_vertices = a.num_vertices + b.num_vertices;
  for (std::size_t t = 0; t < a.generators.size(); ++t) {
    auto g = a.generators[t];
    for (auto v : b.generators[t]) g.push_back(v + a.num_vertices);
    out.generators.push_back(std::move(g));
  }
  return out;
}

bool is_free_action(const SimplicialComplex& complex, const PermutationAction& action) {
  if (action.num_vertices != complex.num_vertices()) {
    throw Error(ErrorKind::ClosureViolation, "action and complex have different vertex counts");
  }
  const auto& facets = complex.facets();
  for (const auto& g : action.generators) {
    for (const auto& f : facets) {
      Face image;
      for (auto v : f) image.push_back(g.at(v));
      std::sort(image.begin(), image.end());
      if (!std::binary_search(facets.begin(), facets.end(), image)) {
        throw Error(ErrorKind::ClosureViolation, "a generator does not map facets to facets");
      }
    }
  }
  // An invariant nonempty face is a union of cycles, so it suffices to test single cycles.
  const auto elements = action.elements();
  for (std::size_t e = 1; e < elements.size(); ++e) {
    const auto& g = elements[e];
    std::vector<bool> visited(g.size(), false);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (visited[v]) continue;
      Face cycle;
      for (std::size_t w = v; !visited[w]; w = g[w]) {
        visited[w] = true;
        cycle.push_back(w);
      }
      if (complex.contains(cycle)) return false;
    }
  }
  return true;
}

// ---- test map degree --------------------------------------------------------

SimplicialComplex test_map_domain(std::size_t r, std::size_t d) {
  return chessboard_join(std::vector<std::size_t>(d + 1, r - 1), r);
}

PLMap test_map(std::size_t r, std::size_t d) {
  if (r < 2) throw Error(ErrorKind::InvalidParameter, "test map needs r >= 2");
  PLMap map;
  map.target_dim = (r - 1) * (d + 1);
  const std::size_t cols = r - 1;
  for (std::size_t f = 0; f <= d; ++f) {
    Vector u = zeros(d + 1);
    u[0] = 1;
    if (f == 0) {
      for (std::size_t a = 1; a <= d; ++a) u[a] = -1;
    } else {
      u[f] = 1;
    }
    for (std::size_t row = 0; row < r; ++row) {
      Vector w(r - 1);
      for (std::size_t b = 0; b + 1 < r; ++b) w[b] = (b == row ? Rational(static_cast<long>(r)) : Rational(0)) - 1;
      Vector image = zeros(map.target_dim);
      for (std::size_t a = 0; a <= d; ++a) {
        for (std::size_t b = 0; b + 1 < r; ++b) image[a * (r - 1) + b] = u[a] * w[b];
      }
      for (std::size_t c = 0; c < cols; ++c) map.images.push_back(image);
    }
  }
  return map;
}

std::optional<DegreeCount> pl_degree(const SimplicialComplex& complex, const Orientation& orientation,
                                     const PLMap& map, const Vector& value) {
  const auto& facets = complex.facets();
  if (orientation.signs.size() != facets.size()) {
    throw Error(ErrorKind::Precondition, "orientation does not match the complex");
  }
  if (map.images.size() != complex.num_vertices() || value.size() != map.target_dim) {
    throw Error(ErrorKind::DimensionMismatch, "map does not match the complex");
  }
  DegreeCount count;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto& facet = facets[f];
    if (facet.size() != map.target_dim) {
      throw Error(ErrorKind::Precondition, "facet dimension differs from the target dimension");
    }
    std::vector<Vector> cols;
    for (auto v : facet) cols.push_back(map.images[v]);
    const Matrix phi = Matrix::from_columns(cols, map.target_dim);
    const auto alpha = solve_square(phi, value);
    if (!alpha) {
      if (solve_any(phi, value)) return std::nullopt;
      continue;
    }
    const auto lowest = *std::min_element(alpha->begin(), alpha->end());
    if (lowest == 0) return std::nullopt;
    if (lowest < 0) continue;
    ++count.preimages;
    count.degree += orientation.signs[f] * determinant_sign(phi);
  }
  return count;
}

namespace {

struct RegularPick {
  DegreeCount count;
  Vector value;
  std::size_t perturbations = 0;
};

RegularPick pick_regular(const SimplicialComplex& complex, const Orientation& o, const PLMap& map, Vector value,
                         std::uint64_t first_prime) {
  constexpr std::size_t kMaxAttempts = 64;
  const auto primes = primes_from(first_prime, kMaxAttempts);
  for (std::size_t t = 0; t < kMaxAttempts; ++t) {
    if (auto c = pl_degree(complex, o, map, value)) return {*c, value, t};
    value[t % value.size()] += Rational(1, static_cast<unsigned long>(primes[t]));
  }
  throw Error(ErrorKind::DegenerateIntersection, "no regular value found by the perturbation schedule");
}

}  // namespace

DegreeReport test_map_degree(std::size_t r, std::size_t d, std::size_t facet_cap) {
  if (r < 2) throw Error(ErrorKind::InvalidParameter, "test map needs r >= 2");
  DegreeReport rep;
  rep.r = r;
  rep.d = d;
  const auto domain = chessboard_join(std::vector<std::size_t>(d + 1, r - 1), r, facet_cap);
  const auto o = orient(domain);
  if (!o) throw Error(ErrorKind::NonOrientable, "domain is not orientable");
  const auto map = test_map(r, d);
  const std::size_t n = map.target_dim;

  Vector primary = zeros(n);
  for (std::size_t b = 0; b + 1 < r; ++b) primary[b] = 1;
  const auto first = pick_regular(domain, *o, map, primary, 1009);

  // The second value starts past the primes used as its own coordinates.
  const auto coords = primes_from(1009, n);
  Vector secondary(n);
  for (std::size_t i = 0; i < n; ++i) secondary[i] = Rational(1, static_cast<unsigned long>(coords[i]));
  const auto second = pick_regular(domain, *o, map, secondary, coords.back() + 1);

  rep.degree = first.count.degree;
  rep.check_degree = second.count.degree;
  rep.preimages = first.count.preimages;
  rep.perturbations = first.perturbations;
  rep.regular_value = first.value;
  rep.facets = domain.facets().size();
  rep.abs_degree = static_cast<std::uint64_t>(rep.degree < 0 ? -rep.degree : rep.degree);
  const auto sr = static_cast<long long>(r);
  rep.residue = static_cast<std::uint64_t>(((rep.degree % sr) + sr) % sr);
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i < r; ++i) fact *= i;
  rep.expected = 1;
  for (std::size_t i = 0; i <= d; ++i) rep.expected = checked_product(rep.expected, fact, UINT64_MAX, "expected degree");

  PermutationAction action = row_shift_action(r, r - 1);
  PermutationAction diagonal = action;
  for (std::size_t i = 0; i < d; ++i) diagonal = join_action(diagonal, action);
  rep.free_action = is_free_action(domain, diagonal);
  return rep;
}

// ---- dimension bookkeeping --------------------------------------------------

DimsReport dims_report(const std::vector<std::size_t>& profile, std::size_t r, std::size_t d, std::size_t k,
                       std::size_t facet_cap) {
  if (r < 2) throw Error(ErrorKind::InvalidParameter, "r must be at least 2");
  if (k > d) throw Error(ErrorKind::InvalidParameter, "k must not exceed d");
  for (auto c : profile) {
    if (c > r - 1) throw Error(ErrorKind::InvalidParameter, "class sizes must be at most r-1");
  }
  DimsReport rep;
  rep.s = std::accumulate(profile.begin(), profile.end(), std::size_t{0});
  rep.dim_k = static_cast<long long>(rep.s) - 1;
  rep.dim_k_prime = static_cast<long long>((r - 1) * profile.size()) - 1;
  rep.n_sphere = (r - 1) * (d + 1);
  rep.rank_e = r * (d - k);
  rep.rank_delta = d - k;
  rep.rank_c = (r - 1) * (d - k);
  try {
    std::vector<std::size_t> complement;
    for (auto c : profile) complement.push_back(r - 1 - c);
    const auto K = chessboard_join(profile, r, facet_cap);
    const auto L = chessboard_join(complement, r, facet_cap);
    const auto Kp = chessboard_join(std::vector<std::size_t>(profile.size(), r - 1), r, facet_cap);
    rep.constructed = true;
    rep.consistent = K.dimension() == rep.dim_k && Kp.dimension() == rep.dim_k_prime &&
                     Kp.dimension() + 1 == (K.dimension() + 1) + (L.dimension() + 1);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  return rep;
}

}  // namespace ctv::topology
