#include <string>

#include "ctv/linalg.hpp"
#include "ctv/lp.hpp"
#include "ctv/solver.hpp"

namespace ctv {

namespace {

struct PieceRef {
  std::size_t collection;
  std::size_t index;
  std::vector<Point> points;
};

// Depth-first search over witness pairs (v-, v+) per piece for a fixed orthant of
// the normal vector a: a = sign * u with u >= 0, sum(u) = 1, and a.v- <= b <= a.v+.
class WitnessPairSearch {
 public:
  WitnessPairSearch(const std::vector<PieceRef>& pieces, std::size_t d, std::vector<int> orthant,
                    std::size_t& lps)
      : pieces_(pieces), d_(d), orthant_(std::move(orthant)), lps_(lps), problem_(d + 1) {
    problem_.free[d] = true;
    Vector norm_row = zeros(d + 1);
    for (std::size_t i = 0; i < d; ++i) norm_row[i] = 1;
    problem_.add(std::move(norm_row), lp::Relation::Equal, 1);
    choice_.resize(pieces.size());
  }

  bool run() { return descend(0); }

  [[nodiscard]] const Vector& solution() const { return solution_; }
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& choice() const { return choice_; }

 private:
  Vector row_for(const Point& v) const {
    Vector row = zeros(d_ + 1);
    for (std::size_t i = 0; i < d_; ++i) row[i] = orthant_[i] * v[i];
    row[d_] = -1;
    return row;
  }

  bool descend(std::size_t depth) {
    if (depth == pieces_.size()) return true;
    const auto& pts = pieces_[depth].points;
    for (std::size_t lo = 0; lo < pts.size(); ++lo) {
      for (std::size_t hi = 0; hi < pts.size(); ++hi) {
        problem_.add(row_for(pts[lo]), lp::Relation::LessEqual, 0);
        problem_.add(row_for(pts[hi]), lp::Relation::GreaterEqual, 0);
        ++lps_;
        auto res = lp::solve(problem_);
        bool found = false;
        if (res.feasible) {
          choice_[depth] = {lo, hi};
          solution_ = res.solution;
          found = descend(depth + 1);
        }
        problem_.constraints.pop_back();
        problem_.constraints.pop_back();
        if (found) return true;
      }
    }
    return false;
  }

  const std::vector<PieceRef>& pieces_;
  std::size_t d_;
  std::vector<int> orthant_;
  std::size_t& lps_;
  lp::Problem problem_;
  std::vector<std::pair<std::size_t, std::size_t>> choice_;
  Vector solution_;
};

}  // namespace

HyperplaneSearch search_hyperplane_transversal_exact(const ProblemInstance& instance, std::uint64_t cap) {
  instance.check();
  const std::size_t d = instance.d;
  const std::size_t k = instance.k;
  if (k == 0 || k + 1 != d) {
    throw Error(ErrorKind::InvalidParameter, "exact hyperplane solver needs 1 <= k = d-1");
  }
  HyperplaneSearch out;
  std::vector<std::vector<PartitionTuple>> parts;
  for (std::size_t l = 0; l <= k; ++l) {
    parts.push_back(nonempty_colorful_partitions(instance.collections[l], instance.r[l]));
    if (parts.back().empty()) return out;
  }

  std::vector<std::size_t> odo(k + 1, 0);
  for (;;) {
    ++out.combinations;
    std::vector<PieceRef> pieces;
    std::uint64_t choices = 1;
    for (std::size_t l = 0; l <= k; ++l) {
      const auto pts = piece_points(instance.collections[l], parts[l][odo[l]]);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const std::uint64_t n = pts[j].size();
        choices *= n * n;
        if (choices > cap) {
          throw Error(ErrorKind::CapExceeded, "witness-choice product exceeds cap " + std::to_string(cap));
        }
        pieces.push_back({l, j, pts[j]});
      }
    }

    // Orthants with a_0 >= 0 suffice: (a, b) and (-a, -b) describe the same hyperplane.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d - 1)); ++mask) {
      std::vector<int> orthant(d, 1);
      for (std::size_t i = 1; i < d; ++i) orthant[i] = ((mask >> (i - 1)) & 1U) ? -1 : 1;
      WitnessPairSearch search(pieces, d, orthant, out.lps_solved);
      if (!search.run()) continue;

      const auto& sol = search.solution();
      Vector normal(d);
      for (std::size_t i = 0; i < d; ++i) normal[i] = orthant[i] * sol[i];
      const Rational offset = sol[d];

      TransversalCertificate cert;
      cert.plane.base = scale(offset / dot(normal, normal), normal);
      cert.plane.directions = nullspace(Matrix::from_rows({normal}, d));
      for (std::size_t l = 0; l <= k; ++l) {
        cert.partitions.push_back(parts[l][odo[l]]);
        cert.witnesses.emplace_back();
      }
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        const auto& piece = pieces[p];
        const auto [lo, hi] = search.choice()[p];
        const Rational a_lo = dot(normal, piece.points[lo]);
        const Rational a_hi = dot(normal, piece.points[hi]);
        PieceWitness w;
        w.weights = zeros(piece.points.size());
        Point at = piece.points[lo];
        if (a_lo == a_hi) {
          w.weights[lo] = 1;
        } else {
          const Rational theta = (a_hi - offset) / (a_hi - a_lo);
          w.weights[lo] += theta;
          w.weights[hi] += 1 - theta;
          at = add(scale(theta, piece.points[lo]), scale(1 - theta, piece.points[hi]));
        }
        w.plane_params = *plane_parameters(cert.plane, at);
        cert.witnesses[piece.collection].push_back(std::move(w));
      }
      out.certificate = std::move(cert);
      return out;
    }

    std::size_t l = k + 1;
    for (;;) {
      if (l == 0) return out;
      --l;
      if (++odo[l] < parts[l].size()) break;
      odo[l] = 0;
    }
  }
}

std::optional<TransversalCertificate> solve_hyperplane_transversal_exact(const ProblemInstance& instance,
                                                                         std::uint64_t cap) {
  return search_hyperplane_transversal_exact(instance, cap).certificate;
}

}  // namespace ctv
