#include "ctv/config.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace ctv {

void ColoredConfig::check() const {
  std::vector<int> seen(points.size(), 0);
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::InvalidParameter, "point of wrong dimension in config");
  }
  for (const auto& cls : classes) {
    if (cls.empty()) throw Error(ErrorKind::InvalidParameter, "empty color class");
    for (auto i : cls) {
      if (i >= points.size()) throw Error(ErrorKind::InvalidParameter, "color class index out of range");
      if (seen[i]++) throw Error(ErrorKind::InvalidParameter, "color classes overlap at point " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw Error(ErrorKind::InvalidParameter, "point " + std::to_string(i) + " has no color");
  }
}

std::vector<std::size_t> ColoredConfig::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(c.size());
  return sizes;
}

void ProblemInstance::check() const {
  if (k > d) throw Error(ErrorKind::InvalidParameter, "k exceeds d");
  if (collections.size() != k + 1) throw Error(ErrorKind::InvalidParameter, "expected k+1 collections");
  if (r.size() != collections.size()) throw Error(ErrorKind::InvalidParameter, "expected one r per collection");
  for (auto rl : r) {
    if (rl < 2) throw Error(ErrorKind::InvalidParameter, "every r must be at least 2");
  }
  for (const auto& c : collections) {
    if (c.dim != d) throw Error(ErrorKind::InvalidParameter, "collection dimension differs from d");
    c.check();
  }
}

bool PartitionTuple::has_empty_piece() const {
  return std::any_of(pieces.begin(), pieces.end(), [](const IndexSet& s) { return s.empty(); });
}

Verdict check_partition(const ColoredConfig& config, std::size_t r, const PartitionTuple& tuple) {
  if (tuple.pieces.size() != r) return Verdict::fail("expected " + std::to_string(r) + " pieces");
  std::vector<std::size_t> color(config.points.size(), 0);
  for (std::size_t c = 0; c < config.classes.size(); ++c) {
    for (auto i : config.classes[c]) {
      if (i < color.size()) color[i] = c;
    }
  }
  std::vector<int> used(config.points.size(), 0);
  for (std::size_t j = 0; j < tuple.pieces.size(); ++j) {
    std::vector<int> class_hits(config.classes.size(), 0);
    for (auto i : tuple.pieces[j]) {
      if (i >= config.points.size()) return Verdict::fail("piece index out of range");
      if (used[i]++) return Verdict::fail("point " + std::to_string(i) + " used twice");
      if (class_hits[color[i]]++) {
        return Verdict::fail("piece " + std::to_string(j) + " is not colorful (class " +
                             std::to_string(color[i]) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) return Verdict::fail("point " + std::to_string(i) + " not covered");
  }
  return Verdict::pass();
}

std::vector<std::vector<Point>> piece_points(const ColoredConfig& config, const PartitionTuple& tuple) {
  std::vector<std::vector<Point>> out;
  out.reserve(tuple.pieces.size());
  for (const auto& piece : tuple.pieces) {
    std::vector<Point> pts;
    pts.reserve(piece.size());
    for (auto i : piece) pts.push_back(config.points[i]);
    out.push_back(std::move(pts));
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::size_t required_size(std::size_t r, std::size_t d, std::size_t k) {
  return (r - 1) * (d - k + 1) + 1;
}

HypothesisReport validate(const ProblemInstance& instance) {
  HypothesisReport rep;
  const auto d = instance.d;
  const auto k = instance.k;
  for (std::size_t l = 0; l < instance.collections.size(); ++l) {
    const auto r = instance.r[l];
    const auto& col = instance.collections[l];
    const auto tag = "C^" + std::to_string(l) + ": ";
    const auto need = required_size(r, d, k);
    if (col.points.size() != need) {
      rep.size.ok = false;
      rep.size.message += tag + "|C| = " + std::to_string(col.points.size()) + ", need " + std::to_string(need) + "; ";
    }
    for (std::size_t i = 0; i < col.classes.size(); ++i) {
      if (col.classes[i].size() > r - 1) {
        rep.class_bound.ok = false;
        rep.class_bound.message += tag + "class " + std::to_string(i) + " has " +
                                   std::to_string(col.classes[i].size()) + " > r-1 = " +
                                   std::to_string(r - 1) + " points; ";
      }
    }
    if (k != 0 && (r * (d - k)) % 2 != 0) {
      rep.parity.ok = false;
      rep.parity.message += tag + "r(d-k) = " + std::to_string(r * (d - k)) + " is odd and k != 0; ";
    }
    if (!is_prime(r)) {
      rep.prime.ok = false;
      rep.prime.message += tag + "r = " + std::to_string(r) + " is not prime; ";
    }
    if (r != instance.r.front()) rep.uniform_r = false;
  }
  for (auto* f : {&rep.size, &rep.class_bound, &rep.parity, &rep.prime}) {
    if (f->ok) f->message = "ok";
  }
  return rep;
}

std::uint64_t colorful_partition_count(const std::vector<std::size_t>& class_sizes, std::size_t r) {
  std::uint64_t total = 1;
  for (auto c : class_sizes) {
    if (c > r) return 0;
    for (std::size_t f = r - c + 1; f <= r; ++f) {
      if (total > std::numeric_limits<std::uint64_t>::max() / f) {
        throw Error(ErrorKind::CapExceeded, "partition count overflows 64 bits");
      }
      total *= f;
    }
  }
  return total;
}

namespace {

// All injections [size] -> [r], lexicographic.
std::vector<std::vector<std::size_t>> injections(std::size_t size, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::vector<bool> used(r, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.push_back(j);
      self(self);
      cur.pop_back();
      used[j] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

ColorfulPartitionEnumerator::ColorfulPartitionEnumerator(const ColoredConfig& config, std::size_t r)
    : r_(r), classes_(config.classes) {
  for (const auto& cls : classes_) {
    injections_.push_back(injections(cls.size(), r));
    if (injections_.back().empty()) done_ = true;
  }
  odometer_.assign(classes_.size(), 0);
}

std::optional<PartitionTuple> ColorfulPartitionEnumerator::next() {
  if (done_) return std::nullopt;
  PartitionTuple t;
  t.pieces.resize(r_);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& inj = injections_[c][odometer_[c]];
    for (std::size_t i = 0; i < classes_[c].size(); ++i) t.pieces[inj[i]].push_back(classes_[c][i]);
  }
  for (auto& piece : t.pieces) std::sort(piece.begin(), piece.end());

  // Advance, last class fastest.
  std::size_t c = classes_.size();
  for (;;) {
    if (c == 0) {
      done_ = true;
      break;
    }
    --c;
    if (++odometer_[c] < injections_[c].size()) break;
    odometer_[c] = 0;
  }
  return t;
}

std::vector<PartitionTuple> nonempty_colorful_partitions(const ColoredConfig& config, std::size_t r) {
  std::vector<PartitionTuple> out;
  ColorfulPartitionEnumerator it(config, r);
  while (auto t = it.next()) {
    if (!t->has_empty_piece()) out.push_back(std::move(*t));
  }
  return out;
}

std::vector<std::size_t> extremal_profile(std::size_t r, std::size_t d, std::size_t k) {
  std::vector<std::size_t> profile(d - k + 1, r - 1);
  profile.push_back(1);
  return profile;
}

std::vector<std::size_t> singleton_profile(std::size_t n) { return std::vector<std::size_t>(n, 1); }

namespace {

std::vector<IndexSet> classes_from_profile(const std::vector<std::size_t>& profile) {
  std::vector<IndexSet> classes;
  std::size_t next = 0;
  for (auto size : profile) {
    IndexSet cls(size);
    std::iota(cls.begin(), cls.end(), next);
    next += size;
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

ProblemInstance random_instance(std::size_t d, std::size_t k, const std::vector<std::size_t>& r,
                                const std::vector<std::vector<std::size_t>>& profiles,
                                std::uint64_t seed, const RandomOptions& options) {
  if (k > d || r.size() != k + 1) throw Error(ErrorKind::InvalidParameter, "need 0 <= k <= d and k+1 values of r");
  if (!profiles.empty() && profiles.size() != r.size()) {
    throw Error(ErrorKind::ProfileMismatch, "need one class profile per collection");
  }
  ProblemInstance inst;
  inst.d = d;
  inst.k = k;
  inst.r = r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-options.grid_bound, options.grid_bound);
  for (std::size_t l = 0; l <= k; ++l) {
    if (r[l] < 2) throw Error(ErrorKind::InvalidParameter, "every r must be at least 2");
    const auto n = required_size(r[l], d, k);
    std::vector<std::size_t> profile;
    if (!profiles.empty()) {
      profile = profiles[l];
    } else if (k == 0) {
      profile = extremal_profile(r[l], d, k);
    } else {
      profile = singleton_profile(n);
    }
    std::size_t total = 0;
    for (auto s : profile) {
      if (s == 0 || s > r[l] - 1) {
        throw Error(ErrorKind::ProfileMismatch, "class sizes must lie in [1, r-1]");
      }
      total += s;
    }
    if (total != n) {
      throw Error(ErrorKind::ProfileMismatch, "class sizes sum to " + std::to_string(total) +
                                                  ", need " + std::to_string(n));
    }
    ColoredConfig cfg;
    cfg.dim = d;
    for (std::size_t i = 0; i < n; ++i) {
      Point p(d);
      for (std::size_t c = 0; c < d; ++c) {
        p[c] = coord(rng);
        if (options.jitter_den > 0) {
          std::uniform_int_distribution<long> jitter(0, options.jitter_den - 1);
          p[c] += Rational(jitter(rng), options.jitter_den);
          p[c].canonicalize();
        }
      }
      cfg.points.push_back(std::move(p));
    }
    cfg.classes = classes_from_profile(profile);
    inst.collections.push_back(std::move(cfg));
  }
  return inst;
}

ProblemInstance tightness_instance(std::size_t d, std::size_t k, const std::vector<std::size_t>& r,
                                   std::size_t oversized) {
  if (k + 1 > d) throw Error(ErrorKind::InvalidParameter, "tightness construction needs k <= d-1");
  if (r.size() != k + 1) throw Error(ErrorKind::InvalidParameter, "need k+1 values of r");
  if (oversized > k) throw Error(ErrorKind::InvalidParameter, "oversized collection index exceeds k");
  for (auto rl : r) {
    if (rl < 2) throw Error(ErrorKind::InvalidParameter, "every r must be at least 2");
  }
  const std::size_t m = d - k;  // flat dimension
  const Rational edge = 4;

  ProblemInstance inst;
  inst.d = d;
  inst.k = k;
  inst.r = r;
  for (std::size_t l = 0; l <= k; ++l) {
    // Coordinates: first k select the flat (vertex l of a k-simplex), last m lie in the flat.
    Point offset = zeros(k);
    if (l > 0) offset[l - 1] = 1;

    std::vector<Vector> verts;
    for (std::size_t v = 0; v <= m; ++v) {
      Vector u = zeros(m);
      if (v > 0) u[v - 1] = edge;
      if (l > 0) {
        // Break coincidences between flats with a small rational shift.
        for (std::size_t c = 0; c < m; ++c) {
          u[c] += Rational(static_cast<long>((l * (v + 2) * (c + 3)) % 13), 97);
        }
      }
      verts.push_back(std::move(u));
    }
    Vector center = zeros(m);
    for (const auto& v : verts) center = add(center, v);
    center = scale(Rational(1, static_cast<long>(m + 1)), center);

    auto embed = [&](const Vector& u) {
      Point p = offset;
      p.insert(p.end(), u.begin(), u.end());
      return p;
    };
    ColoredConfig cfg;
    cfg.dim = d;
    for (const auto& v : verts) {
      for (std::size_t copy = 0; copy + 1 < r[l]; ++copy) cfg.points.push_back(embed(v));
    }
    cfg.points.push_back(embed(center));

    const std::size_t n = cfg.points.size();
    if (l == oversized) {
      // All r-1 copies at vertex 0 plus one copy at vertex 1.
      IndexSet big(r[l]);
      std::iota(big.begin(), big.end(), 0);
      cfg.classes.push_back(std::move(big));
      for (std::size_t i = r[l]; i < n; ++i) cfg.classes.push_back({i});
    } else {
      for (std::size_t i = 0; i < n; ++i) cfg.classes.push_back({i});
    }
    inst.collections.push_back(std::move(cfg));
  }
  return inst;
}

Rational lift_epsilon() { return Rational(1, 1000); }

ProblemInstance lift_instance(const ProblemInstance& lower, std::size_t r_new) {
  lower.check();
  if (r_new < 2) throw Error(ErrorKind::InvalidParameter, "r must be at least 2");
  ProblemInstance up;
  up.d = lower.d + 1;
  up.k = lower.k + 1;
  up.r = lower.r;
  up.r.push_back(r_new);
  for (const auto& col : lower.collections) {
    ColoredConfig c = col;
    c.dim = up.d;
    for (auto& p : c.points) p.push_back(0);
    up.collections.push_back(std::move(c));
  }
  const Rational eps = lift_epsilon();
  ColoredConfig cluster;
  cluster.dim = up.d;
  const auto n = required_size(r_new, up.d, up.k);
  for (std::size_t i = 0; i < n; ++i) {
    Point p = zeros(up.d);
    p[up.d - 1] = 1;
    const Rational step = eps * static_cast<long>(i);
    if (up.d >= 2) {
      p[0] += step;
      p[up.d - 1] += step * step;
    } else {
      p[0] += step;
    }
    cluster.points.push_back(std::move(p));
    cluster.classes.push_back({i});
  }
  up.collections.push_back(std::move(cluster));
  return up;
}

}  // namespace ctv
