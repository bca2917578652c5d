#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ctv/rational.hpp"

namespace ctv::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  Vector coeffs;
  Relation relation = Relation::Equal;
  Rational rhs;
};

/// Feasibility problem over variables that are nonnegative unless flagged free.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<bool> free;  // empty means "all nonnegative"
  std::vector<Constraint> constraints;

  explicit Problem(std::size_t n = 0) : num_vars(n), free(n, false) {}

  void add(Vector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

struct Result {
  bool feasible = false;
  /// A feasible point when `feasible`; otherwise the phase-1 optimum point.
  Vector solution;
  /// Minimal total constraint violation (phase-1 optimum); zero iff feasible.
  Rational infeasibility;
  std::size_t pivots = 0;
};

/// Exact phase-1 simplex with Bland's smallest-index rule. Deterministic.
Result solve(const Problem& problem);

}  // namespace ctv::lp
