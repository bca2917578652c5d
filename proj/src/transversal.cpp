#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ctv/linalg.hpp"
#include "ctv/solver.hpp"

namespace ctv {

namespace {

constexpr std::size_t kBlockSize = 32;
constexpr std::size_t kMaxCombosPerSample = 4096;
constexpr std::size_t kMaxCriticalSubsets = 20000;
constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Exact radical inverse of n in the given base.
Rational halton(std::uint64_t n, unsigned base) {
  Rational value = 0;
  Rational weight(1, base);
  while (n > 0) {
    value += weight * static_cast<unsigned long>(n % base);
    weight /= base;
    n /= base;
  }
  return value;
}

using Params = std::vector<Rational>;

// Orthonormal rational frame from Givens rotations with tan-half-angle t = 2h - 1
// in the planes (i, j), i < m <= j; returns its first m columns.
Subspace subspace_from_params(const Params& h, std::size_t d, std::size_t m) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(unit(d, i));
  std::size_t p = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = m; j < d; ++j, ++p) {
      const Rational t = 2 * h[p] - 1;
      const Rational den = 1 + t * t;
      const Rational c = (1 - t * t) / den;
      const Rational s = 2 * t / den;
      Vector ci = add(scale(c, cols[i]), scale(s, cols[j]));
      Vector cj = sub(scale(c, cols[j]), scale(s, cols[i]));
      cols[i] = std::move(ci);
      cols[j] = std::move(cj);
    }
  }
  Subspace b;
  b.ambient_dim = d;
  b.projection_target = true;
  b.basis.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(m));
  return b;
}

std::vector<std::vector<double>> orthonormal_double(const std::vector<Vector>& basis) {
  std::vector<std::vector<double>> q;
  for (const auto& v : basis) {
    std::vector<double> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_d();
    for (const auto& u : q) {
      double proj = 0;
      for (std::size_t i = 0; i < w.size(); ++i) proj += u[i] * w[i];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= proj * u[i];
    }
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : w) x /= norm;
    q.push_back(std::move(w));
  }
  return q;
}

// m - tr(P_a P_b): zero iff the subspaces coincide.
double subspace_distance(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
  double overlap = 0;
  for (const auto& u : a) {
    for (const auto& v : b) {
      double dp = 0;
      for (std::size_t i = 0; i < u.size(); ++i) dp += u[i] * v[i];
      overlap += dp * dp;
    }
  }
  return static_cast<double>(a.size()) - overlap;
}

struct Evaluation {
  std::optional<TransversalCertificate> certificate;
  Rational gap;
};

class TransversalSearcher {
 public:
  TransversalSearcher(const ProblemInstance& inst, const SearchBudget& budget)
      : inst_(inst), budget_(budget), d_(inst.d), k_(inst.k), m_(inst.d - inst.k) {
    for (std::size_t l = 0; l <= k_; ++l) {
      parts_.push_back(nonempty_colorful_partitions(inst.collections[l], inst.r[l]));
    }
  }

  TransversalSearch run() {
    TransversalSearch out;
    for (const auto& p : parts_) {
      if (p.empty()) {
        out.report.exhausted = true;
        return out;
      }
    }
    build_critical();

    const std::size_t num_params = m_ * k_;
    const std::size_t samples = budget_.grassmannian_samples;
    const auto per_axis = static_cast<long>(std::ceil(std::pow(static_cast<double>(std::max<std::size_t>(samples, 1)),
                                                               1.0 / static_cast<double>(num_params))));
    base_step_ = Rational(1, std::max(per_axis, 1L));
    const std::uint64_t start = 1 + splitmix64(budget_.seed) % 65536;

    std::optional<std::pair<Rational, Params>> block_best;
    for (std::size_t s = 0; s < samples; ++s) {
      Params h(num_params);
      for (std::size_t p = 0; p < num_params; ++p) h[p] = halton(start + s, kPrimes[p % std::size(kPrimes)]);
      ++report_.sweep_samples;
      auto ev = evaluate(subspace_from_params(h, d_, m_));
      if (ev.certificate) return finish(std::move(ev.certificate));
      if (!block_best || ev.gap < block_best->first) block_best = {ev.gap, h};

      const bool block_end = (s + 1) % kBlockSize == 0 || s + 1 == samples;
      if (block_end && block_best && budget_.refinement_depth > 0) {
        if (auto cert = refine(block_best->second, block_best->first)) return finish(std::move(cert));
        block_best.reset();
      }
    }
    report_.exhausted = true;
    out.report = report_;
    return out;
  }

 private:
  TransversalSearch finish(std::optional<TransversalCertificate> cert) {
    TransversalSearch out;
    out.certificate = std::move(cert);
    out.report = report_;
    return out;
  }

  void note_gap(const Rational& gap) {
    if (!report_.best_gap || gap < *report_.best_gap) report_.best_gap = gap;
  }

  Evaluation evaluate(const Subspace& target) {
    Evaluation ev;
    std::vector<std::vector<Point>> projected;
    for (const auto& col : inst_.collections) projected.push_back(project(col.points, target));

    auto projected_pieces = [&](std::size_t l, const PartitionTuple& t) {
      std::vector<Piece> pieces;
      for (const auto& idx : t.pieces) {
        Piece piece;
        for (auto i : idx) piece.push_back(projected[l][i]);
        pieces.push_back(std::move(piece));
      }
      return pieces;
    };

    // Per-collection prefilter.
    std::vector<std::vector<std::size_t>> feasible(k_ + 1);
    Rational prefilter_gap = 0;
    bool blocked = false;
    for (std::size_t l = 0; l <= k_; ++l) {
      std::optional<Rational> best;
      for (std::size_t p = 0; p < parts_[l].size(); ++p) {
        ++report_.lps_solved;
        auto res = common_point_search(projected_pieces(l, parts_[l][p]));
        if (res.witness) {
          feasible[l].push_back(p);
        } else if (!best || res.gap < *best) {
          best = res.gap;
        }
      }
      if (feasible[l].empty()) {
        blocked = true;
        prefilter_gap += *best;
      }
    }
    if (blocked) {
      ev.gap = prefilter_gap;
      note_gap(ev.gap);
      return ev;
    }

    std::optional<Rational> best_joint;
    std::vector<std::size_t> odo(k_ + 1, 0);
    for (std::size_t combo = 0; combo < kMaxCombosPerSample; ++combo) {
      std::vector<Piece> all;
      for (std::size_t l = 0; l <= k_; ++l) {
        auto pieces = projected_pieces(l, parts_[l][feasible[l][odo[l]]]);
        all.insert(all.end(), pieces.begin(), pieces.end());
      }
      ++report_.lps_solved;
      auto res = common_point_search(all);
      if (res.witness) {
        ev.certificate = build_certificate(target, odo, feasible, *res.witness);
        return ev;
      }
      if (!best_joint || res.gap < *best_joint) best_joint = res.gap;

      std::size_t l = k_ + 1;
      bool wrapped = true;
      while (l > 0) {
        --l;
        if (++odo[l] < feasible[l].size()) {
          wrapped = false;
          break;
        }
        odo[l] = 0;
      }
      if (wrapped) break;
    }
    ev.gap = *best_joint;
    note_gap(ev.gap);
    return ev;
  }

  TransversalCertificate build_certificate(const Subspace& target, const std::vector<std::size_t>& odo,
                                           const std::vector<std::vector<std::size_t>>& feasible,
                                           const CommonPointWitness& joint) {
    TransversalCertificate cert;
    cert.plane = plane_from_projection(target, joint.point);
    std::size_t flat = 0;
    for (std::size_t l = 0; l <= k_; ++l) {
      const auto& part = parts_[l][feasible[l][odo[l]]];
      cert.partitions.push_back(part);
      std::vector<PieceWitness> ws;
      for (const auto& idx : part.pieces) {
        PieceWitness w;
        w.weights = joint.weights[flat++];
        Point x = zeros(d_);
        for (std::size_t i = 0; i < idx.size(); ++i) axpy(x, w.weights[i], inst_.collections[l].points[idx[i]]);
        auto params = plane_parameters(cert.plane, x);
        if (!params) throw Error(ErrorKind::Precondition, "reconstructed hull point misses the plane");
        w.plane_params = std::move(*params);
        ws.push_back(std::move(w));
      }
      cert.witnesses.push_back(std::move(ws));
    }
    return cert;
  }

  // Complements of the direction spaces of affine hulls of k+1 data points.
  void build_critical() {
    std::vector<Point> pts;
    for (const auto& col : inst_.collections) pts.insert(pts.end(), col.points.begin(), col.points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < k_ + 1) return;

    std::set<std::vector<Vector>> seen;
    std::vector<std::size_t> pick(k_ + 1);
    for (std::size_t i = 0; i <= k_; ++i) pick[i] = i;
    std::size_t visited = 0;
    for (;;) {
      if (++visited > kMaxCriticalSubsets) break;
      std::vector<Vector> diffs;
      for (std::size_t i = 1; i <= k_; ++i) diffs.push_back(sub(pts[pick[i]], pts[pick[0]]));
      auto key = rref_basis(diffs, d_);
      if (key.size() == k_ && seen.insert(key).second) {
        Subspace b;
        b.ambient_dim = d_;
        b.projection_target = true;
        b.basis = orthogonal_complement(key, d_);
        critical_frames_.push_back(orthonormal_double(b.basis));
        critical_.push_back(std::move(b));
      }
      // Next (k+1)-subset in lexicographic order.
      std::size_t i = k_ + 1;
      while (i > 0 && pick[i - 1] == pts.size() - (k_ + 1) + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j <= k_; ++j) pick[j] = pick[j - 1] + 1;
    }
    critical_tried_.assign(critical_.size(), false);
  }

  static Rational wrap_unit(Rational x) {
    while (x >= 1) x -= 1;
    while (x < 0) x += 1;
    return x;
  }

  // Halving descent on the near-miss gap, then snapping to the nearest untried
  // data-spanned subspaces.
  std::optional<TransversalCertificate> refine(Params h, Rational gap) {
    for (std::size_t level = 1; level <= budget_.refinement_depth; ++level) {
      Rational step = base_step_;
      for (std::size_t i = 0; i < level; ++i) step /= 2;
      std::optional<std::pair<Rational, Params>> best;
      for (std::size_t p = 0; p < h.size(); ++p) {
        for (int dir : {1, -1}) {
          Params cand = h;
          cand[p] = wrap_unit(cand[p] + dir * step);
          ++report_.refinement_samples;
          auto ev = evaluate(subspace_from_params(cand, d_, m_));
          if (ev.certificate) return ev.certificate;
          if (ev.gap < gap && (!best || ev.gap < best->first)) best = {ev.gap, std::move(cand)};
        }
      }
      if (best) {
        gap = best->first;
        h = std::move(best->second);
      }
    }

    const auto here = orthonormal_double(subspace_from_params(h, d_, m_).basis);
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t c = 0; c < critical_.size(); ++c) {
      if (!critical_tried_[c]) order.emplace_back(subspace_distance(here, critical_frames_[c]), c);
    }
    std::sort(order.begin(), order.end());
    const std::size_t snaps = std::min(order.size(), budget_.refinement_depth);
    for (std::size_t s = 0; s < snaps; ++s) {
      const auto c = order[s].second;
      critical_tried_[c] = true;
      ++report_.snapped_samples;
      auto ev = evaluate(critical_[c]);
      if (ev.certificate) return ev.certificate;
    }
    return std::nullopt;
  }

  const ProblemInstance& inst_;
  SearchBudget budget_;
  std::size_t d_, k_, m_;
  std::vector<std::vector<PartitionTuple>> parts_;
  std::vector<Subspace> critical_;
  std::vector<std::vector<std::vector<double>>> critical_frames_;
  std::vector<bool> critical_tried_;
  Rational base_step_;
  TransversalSearchReport report_;
};

TransversalSearch whole_space(const ProblemInstance& inst) {
  // k = d: P = R^d meets every nonempty hull; any colorful partition with nonempty pieces works.
  TransversalSearch out;
  TransversalCertificate cert;
  cert.plane.base = zeros(inst.d);
  for (std::size_t i = 0; i < inst.d; ++i) cert.plane.directions.push_back(unit(inst.d, i));
  for (std::size_t l = 0; l <= inst.k; ++l) {
    const auto& col = inst.collections[l];
    std::optional<PartitionTuple> chosen;
    ColorfulPartitionEnumerator it(col, inst.r[l]);
    while (auto t = it.next()) {
      if (!t->has_empty_piece()) {
        chosen = std::move(t);
        break;
      }
    }
    if (!chosen) {
      out.report.exhausted = true;
      return out;
    }
    std::vector<PieceWitness> ws;
    for (const auto& idx : chosen->pieces) {
      PieceWitness w;
      w.weights = zeros(idx.size());
      w.weights[0] = 1;
      w.plane_params = col.points[idx[0]];
      ws.push_back(std::move(w));
    }
    cert.partitions.push_back(std::move(*chosen));
    cert.witnesses.push_back(std::move(ws));
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

TransversalSearch solve_transversal(const ProblemInstance& instance, const SearchBudget& budget) {
  instance.check();
  if (instance.k == 0) throw Error(ErrorKind::InvalidParameter, "solve_transversal needs k >= 1");
  if (instance.k == instance.d) return whole_space(instance);
  return TransversalSearcher(instance, budget).run();
}

}  // namespace ctv
