#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ctv/error.hpp"
#include "ctv/rational.hpp"

namespace ctv {

/// A linear subspace of R^ambient_dim given by a linearly independent rational basis.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vector> basis;
  /// Set when this subspace is the projection target of a transversal search,
  /// i.e. the orthogonal complement of the candidate k-plane directions.
  bool projection_target = false;

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

/// Convex-combination certificate for a point shared by several convex hulls.
struct CommonPointWitness {
  std::vector<Vector> weights;  // weights[j][i] multiplies pieces[j][i]
  Point point;
};

using Piece = std::vector<Point>;

/// Witness together with the phase-1 gap (total violation) of the underlying LP.
struct CommonPointSearch {
  std::optional<CommonPointWitness> witness;
  Rational gap;
};

/// Decides whether conv(piece_0) ∩ ... ∩ conv(piece_{r-1}) is nonempty.
/// Throws Error{DimensionMismatch} or Error{EmptyPiece}.
std::optional<CommonPointWitness> lp_feasible_common_point(const std::vector<Piece>& pieces);

/// As above but also reports the infeasibility gap when no common point exists.
CommonPointSearch common_point_search(const std::vector<Piece>& pieces);

/// Coordinates of the orthogonal projection of each point onto span(target.basis),
/// expressed in that basis. Throws Error{RankDeficient} or Error{DimensionMismatch}.
std::vector<Point> project(const std::vector<Point>& points, const Subspace& target);

/// Dimension of the affine hull of a nonempty point list.
std::size_t affine_dim(const std::vector<Point>& points);

/// Exact check of all CommonPointWitness invariants against the pieces.
Verdict verify_common_point_witness(const std::vector<Piece>& pieces,
                                    const CommonPointWitness& witness);

/// Rational basis of the orthogonal complement of span(vectors) in R^n.
std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vectors, std::size_t n);

}  // namespace ctv
