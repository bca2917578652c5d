#include <string>

#include "ctv/linalg.hpp"
#include "ctv/solver.hpp"

namespace ctv {

std::optional<Vector> plane_parameters(const KPlane& plane, const Point& point) {
  const std::size_t d = plane.base.size();
  if (point.size() != d) return std::nullopt;
  const Vector rhs = sub(point, plane.base);
  if (plane.directions.empty()) {
    if (!is_zero(rhs)) return std::nullopt;
    return Vector{};
  }
  return solve_any(Matrix::from_columns(plane.directions, d), rhs);
}

KPlane plane_from_projection(const Subspace& target, const Point& t) {
  const std::size_t d = target.ambient_dim;
  KPlane plane;
  plane.base = zeros(d);
  for (std::size_t j = 0; j < target.basis.size(); ++j) axpy(plane.base, t[j], target.basis[j]);
  plane.directions = orthogonal_complement(target.basis, d);
  return plane;
}

Verdict verify_transversal(const ProblemInstance& instance, const TransversalCertificate& cert) {
  try {
    instance.check();
  } catch (const Error& e) {
    return Verdict::fail(std::string("malformed instance: ") + e.what());
  }
  const std::size_t d = instance.d;
  const std::size_t k = instance.k;
  const auto& plane = cert.plane;
  if (plane.base.size() != d) return Verdict::fail("plane base has wrong dimension");
  if (plane.directions.size() != k) return Verdict::fail("plane must have exactly k directions");
  for (const auto& dir : plane.directions) {
    if (dir.size() != d) return Verdict::fail("plane direction has wrong dimension");
  }
  if (k > 0 && rank(plane.directions, d) != k) return Verdict::fail("plane directions are dependent");
  if (cert.partitions.size() != k + 1 || cert.witnesses.size() != k + 1) {
    return Verdict::fail("need one partition and witness list per collection");
  }

  for (std::size_t l = 0; l <= k; ++l) {
    const auto& col = instance.collections[l];
    const auto& part = cert.partitions[l];
    const auto tag = "collection " + std::to_string(l) + ": ";
    if (auto v = check_partition(col, instance.r[l], part); !v) return Verdict::fail(tag + v.reason);
    if (cert.witnesses[l].size() != part.pieces.size()) return Verdict::fail(tag + "witness count mismatch");
    for (std::size_t j = 0; j < part.pieces.size(); ++j) {
      const auto& piece = part.pieces[j];
      const auto& w = cert.witnesses[l][j];
      const auto ptag = tag + "piece " + std::to_string(j) + ": ";
      if (piece.empty()) return Verdict::fail(ptag + "empty piece");
      if (w.weights.size() != piece.size()) return Verdict::fail(ptag + "weight count mismatch");
      if (w.plane_params.size() != k) return Verdict::fail(ptag + "need k plane parameters");
      Rational total = 0;
      Point hull_point = zeros(d);
      for (std::size_t i = 0; i < piece.size(); ++i) {
        if (w.weights[i] < 0) return Verdict::fail(ptag + "negative weight");
        total += w.weights[i];
        axpy(hull_point, w.weights[i], col.points[piece[i]]);
      }
      if (total != 1) return Verdict::fail(ptag + "weights sum to " + to_string(total));
      Point plane_point = plane.base;
      for (std::size_t t = 0; t < k; ++t) axpy(plane_point, w.plane_params[t], plane.directions[t]);
      if (hull_point != plane_point) return Verdict::fail(ptag + "hull point does not lie on the plane");
    }
  }
  return Verdict::pass();
}

TransversalCertificate restrict_solution(const TransversalCertificate& lifted) {
  const auto& plane = lifted.plane;
  const std::size_t d = plane.base.size();
  const std::size_t k = plane.directions.size();
  if (d == 0 || k == 0 || lifted.partitions.size() != k + 1) {
    throw Error(ErrorKind::InvalidParameter, "restrict_solution needs a lifted certificate with k >= 1");
  }
  const std::size_t last = d - 1;
  std::size_t pivot = k;
  for (std::size_t t = 0; t < k; ++t) {
    if (plane.directions[t][last] != 0) {
      pivot = t;
      break;
    }
  }
  if (pivot == k) {
    throw Error(ErrorKind::DegenerateIntersection, "plane is parallel to the hyperplane x_d = 0");
  }
  const auto& u = plane.directions[pivot];
  Point base = plane.base;
  axpy(base, -base[last] / u[last], u);
  std::vector<Vector> dirs;
  for (std::size_t t = 0; t < k; ++t) {
    if (t == pivot) continue;
    Vector v = plane.directions[t];
    axpy(v, -v[last] / u[last], u);
    v.pop_back();
    dirs.push_back(std::move(v));
  }
  base.pop_back();

  TransversalCertificate out;
  out.plane = KPlane{std::move(base), std::move(dirs)};
  out.partitions.assign(lifted.partitions.begin(), lifted.partitions.end() - 1);
  out.witnesses.assign(lifted.witnesses.begin(), lifted.witnesses.end() - 1);
  // A witness on x_d = 0 keeps its other coordinates; the pivot coordinate is absorbed
  // by the shifted base and directions.
  for (auto& per_collection : out.witnesses) {
    for (auto& w : per_collection) {
      if (w.plane_params.size() != k) {
        throw Error(ErrorKind::InvalidParameter, "witness has wrong number of plane parameters");
      }
      w.plane_params.erase(w.plane_params.begin() + static_cast<std::ptrdiff_t>(pivot));
    }
  }
  return out;
}

}  // namespace ctv
