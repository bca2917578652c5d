#include "ctv/geometry.hpp"

#include <string>

#include "ctv/linalg.hpp"
#include "ctv/lp.hpp"

namespace ctv {

namespace {

std::size_t check_pieces(const std::vector<Piece>& pieces) {
  if (pieces.empty()) throw Error(ErrorKind::EmptyPiece, "no pieces given");
  std::size_t dim = 0;
  bool first = true;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (pieces[j].empty()) {
      throw Error(ErrorKind::EmptyPiece, "piece " + std::to_string(j) + " is empty");
    }
    for (const auto& p : pieces[j]) {
      if (first) {
        dim = p.size();
        first = false;
      } else if (p.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "points of differing dimension");
      }
    }
  }
  return dim;
}

}  // namespace

CommonPointSearch common_point_search(const std::vector<Piece>& pieces) {
  const std::size_t d = check_pieces(pieces);
  std::size_t n_weights = 0;
  for (const auto& piece : pieces) n_weights += piece.size();

  // Variables: the common point y (free), then one weight per (piece, point).
  lp::Problem prob(d + n_weights);
  for (std::size_t c = 0; c < d; ++c) prob.free[c] = true;
  std::size_t offset = d;
  for (const auto& piece : pieces) {
    for (std::size_t c = 0; c < d; ++c) {
      Vector row = zeros(prob.num_vars);
      row[c] = -1;
      for (std::size_t i = 0; i < piece.size(); ++i) row[offset + i] = piece[i][c];
      prob.add(std::move(row), lp::Relation::Equal, 0);
    }
    Vector sum_row = zeros(prob.num_vars);
    for (std::size_t i = 0; i < piece.size(); ++i) sum_row[offset + i] = 1;
    prob.add(std::move(sum_row), lp::Relation::Equal, 1);
    offset += piece.size();
  }

  auto res = lp::solve(prob);
  CommonPointSearch out;
  out.gap = res.infeasibility;
  if (!res.feasible) return out;

  CommonPointWitness w;
  w.point.assign(res.solution.begin(), res.solution.begin() + static_cast<std::ptrdiff_t>(d));
  offset = d;
  for (const auto& piece : pieces) {
    w.weights.emplace_back(res.solution.begin() + static_cast<std::ptrdiff_t>(offset),
                           res.solution.begin() + static_cast<std::ptrdiff_t>(offset + piece.size()));
    offset += piece.size();
  }
  out.witness = std::move(w);
  return out;
}

std::optional<CommonPointWitness> lp_feasible_common_point(const std::vector<Piece>& pieces) {
  return common_point_search(pieces).witness;
}

std::vector<Point> project(const std::vector<Point>& points, const Subspace& target) {
  const std::size_t d = target.ambient_dim;
  const std::size_t m = target.basis.size();
  for (const auto& b : target.basis) {
    if (b.size() != d) throw Error(ErrorKind::DimensionMismatch, "basis vector has wrong length");
  }
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from subspace ambient dimension");
  }
  if (rank(target.basis, d) != m) throw Error(ErrorKind::RankDeficient, "subspace basis is linearly dependent");

  Matrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = dot(target.basis[i], target.basis[j]);
  }
  // Columns of the inverse Gram matrix, computed once.
  std::vector<Vector> inv_cols;
  inv_cols.reserve(m);
  for (std::size_t j = 0; j < m; ++j) inv_cols.push_back(*solve_square(gram, unit(m, j)));

  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Point coords = zeros(m);
    for (std::size_t j = 0; j < m; ++j) axpy(coords, dot(target.basis[j], p), inv_cols[j]);
    out.push_back(std::move(coords));
  }
  return out;
}

std::size_t affine_dim(const std::vector<Point>& points) {
  if (points.size() <= 1) return 0;
  std::vector<Vector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(diffs, points[0].size());
}

Verdict verify_common_point_witness(const std::vector<Piece>& pieces,
                                    const CommonPointWitness& witness) {
  if (witness.weights.size() != pieces.size()) return Verdict::fail("weight list count differs from piece count");
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const auto& piece = pieces[j];
    const auto& weights = witness.weights[j];
    if (piece.empty()) return Verdict::fail("piece " + std::to_string(j) + " is empty");
    if (weights.size() != piece.size()) return Verdict::fail("piece " + std::to_string(j) + ": weight count mismatch");
    Rational total = 0;
    Point sum = zeros(witness.point.size());
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (weights[i] < 0) return Verdict::fail("piece " + std::to_string(j) + ": negative weight");
      if (piece[i].size() != witness.point.size()) return Verdict::fail("dimension mismatch");
      total += weights[i];
      axpy(sum, weights[i], piece[i]);
    }
    if (total != 1) return Verdict::fail("piece " + std::to_string(j) + ": weights sum to " + to_string(total));
    if (sum != witness.point) return Verdict::fail("piece " + std::to_string(j) + ": weighted sum differs from witness point");
  }
  return Verdict::pass();
}

std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vectors, std::size_t n) {
  if (vectors.empty()) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit(n, i));
    return basis;
  }
  return nullspace(Matrix::from_rows(vectors, n));
}

}  // namespace ctv
