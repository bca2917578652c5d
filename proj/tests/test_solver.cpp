#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctv/linalg.hpp"
#include "ctv/solver.hpp"
#include "oracles.hpp"

using namespace ctv;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

ColoredConfig square() {
  ColoredConfig c;
  c.dim = 2;
  c.points = {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})};
  c.classes = {{0}, {1}, {2}, {3}};
  return c;
}

std::vector<std::size_t> color_of(const ColoredConfig& c) {
  std::vector<std::size_t> color(c.points.size());
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    for (auto i : c.classes[k]) color[i] = k;
  }
  return color;
}

// Does any colorful r-partition of `c` have intersecting hulls?
bool brute_force_feasible(const ColoredConfig& c, std::size_t r) {
  for (const auto& parts : oracle::colorful_assignments(color_of(c), r)) {
    std::vector<std::vector<oracle::Vec>> pieces;
    bool empty = false;
    for (const auto& idx : parts) {
      if (idx.empty()) empty = true;
      std::vector<oracle::Vec> piece;
      for (auto i : idx) piece.push_back(c.points[i]);
      pieces.push_back(piece);
    }
    if (!empty && oracle::hulls_intersect(pieces)) return true;
  }
  return false;
}

// Merges the first two singleton classes of collection 0 into one class.
ProblemInstance merge_first_classes(ProblemInstance inst) {
  auto& classes = inst.collections[0].classes;
  classes[0].insert(classes[0].end(), classes[1].begin(), classes[1].end());
  std::sort(classes[0].begin(), classes[0].end());
  classes.erase(classes.begin() + 1);
  return inst;
}

}  // namespace

TEST_CASE("Radon square yields the crossing diagonals") {
  const auto c = square();
  const auto res = search_tverberg(c, 2);
  REQUIRE(res.certificate);
  CHECK(res.certificate->witness.point == Vector{Rational(1, 2), Rational(1, 2)});
  CHECK(verify_tverberg(c, 2, *res.certificate));

  auto tampered = *res.certificate;
  std::swap(tampered.partition.pieces[0][0], tampered.partition.pieces[1][0]);
  CHECK_FALSE(verify_tverberg(c, 2, tampered));

  auto recolored = c;
  recolored.classes = {{0, 2}, {1}, {3}};
  CHECK_FALSE(verify_tverberg(recolored, 2, *res.certificate));
  CHECK_FALSE(solve_tverberg(recolored, 2));
}

TEST_CASE("the oversized-class configuration has no colorful partition") {
  const auto t = tightness_instance(2, 0, {3}, 0);
  const auto res = search_tverberg(t.collections[0], 3);
  CHECK_FALSE(res.certificate);
  CHECK(res.tuples_examined == 486);
  CHECK_FALSE(brute_force_feasible(t.collections[0], 3));
}

TEST_CASE("exhaustive partition search is complete against the brute-force oracle") {
  std::mt19937_64 rng(11);
  std::size_t feasible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    ColoredConfig c;
    c.dim = 2;
    const std::size_t n = 4 + rng() % 2;
    for (std::size_t i = 0; i < n; ++i) {
      c.points.push_back(pt({static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4}));
    }
    // One pair shares a color.
    c.classes = {{0, 1}};
    for (std::size_t i = 2; i < n; ++i) c.classes.push_back({i});
    const std::size_t r = 2 + trial % 2;
    const auto found = solve_tverberg(c, r);
    CHECK(static_cast<bool>(found) == brute_force_feasible(c, r));
    if (found) {
      ++feasible;
      CHECK(verify_tverberg(c, r, *found));
    }
  }
  CHECK(feasible > 0);
  CHECK(feasible < 40);
}

TEST_CASE("k = d transversal is the whole space") {
  const auto inst = random_instance(2, 2, {2, 2, 2}, {}, 9);
  const auto res = solve_transversal(inst);
  REQUIRE(res.certificate);
  CHECK(res.certificate->plane.k() == 2);
  CHECK(verify_transversal(inst, *res.certificate));
  CHECK_THROWS_AS(solve_transversal(random_instance(2, 0, {3}, {}, 1)), Error);
}

TEST_CASE("sampled search finds verifying transversals") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto line = random_instance(2, 1, {2, 2}, {}, seed);
    const auto res = solve_transversal(line, SearchBudget{2000, 6, seed});
    REQUIRE(res.certificate);
    CHECK(verify_transversal(line, *res.certificate));
  }
  // Lines meeting four segments in space are isolated, so sampling may miss them.
  // Anything it does return must still verify.
  const auto space_line = random_instance(3, 1, {2, 2}, {}, 4);
  const auto a = solve_transversal(space_line, SearchBudget{200, 2, 1});
  if (a.certificate) {
    CHECK(verify_transversal(space_line, *a.certificate));
  } else {
    CHECK(a.report.exhausted);
  }

  const auto space_plane = random_instance(3, 2, {2, 2, 2}, {}, 4);
  const auto b = solve_transversal(space_plane, SearchBudget{4000, 6, 1});
  REQUIRE(b.certificate);
  CHECK(verify_transversal(space_plane, *b.certificate));
}

TEST_CASE("sampled search on an infeasible instance exhausts its budget") {
  const auto t = tightness_instance(2, 1, {2, 2}, 0);
  const auto res = solve_transversal(t, SearchBudget{64, 2, 0});
  CHECK_FALSE(res.certificate);
  CHECK(res.report.exhausted);
  CHECK(res.report.sweep_samples == 64);
  REQUIRE(res.report.best_gap);
  CHECK(*res.report.best_gap > 0);
}

TEST_CASE("exact hyperplane solver") {
  const auto t = tightness_instance(2, 1, {2, 2}, 0);
  const auto none = search_hyperplane_transversal_exact(t);
  CHECK_FALSE(none.certificate);
  CHECK(none.combinations > 0);

  const auto inst = random_instance(3, 2, {2, 2, 2}, {}, 2);
  const auto found = solve_hyperplane_transversal_exact(inst);
  REQUIRE(found);
  CHECK(verify_transversal(inst, *found));

  try {
    search_hyperplane_transversal_exact(random_instance(2, 1, {2, 2}, {}, 1), 3);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(search_hyperplane_transversal_exact(random_instance(3, 1, {2, 2}, {}, 1)), Error);
}

TEST_CASE("sampled and exact solvers agree, including on infeasible instances") {
  std::size_t infeasible = 0;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    auto inst = random_instance(2, 1, {2, 2}, {}, 100 + seed);
    if (seed % 2 == 1) inst = merge_first_classes(inst);
    const auto exact = solve_hyperplane_transversal_exact(inst);
    const auto sampled = solve_transversal(inst, SearchBudget{2000, 6, seed});
    CHECK(static_cast<bool>(exact) == static_cast<bool>(sampled.certificate));
    if (!exact) ++infeasible;
  }
  MESSAGE("infeasible instances: " << infeasible);
}

TEST_CASE("plane parametrization round trip") {
  Subspace b;
  b.ambient_dim = 3;
  b.basis = {pt({1, 1, 0})};
  const auto plane = plane_from_projection(b, pt({2}));
  CHECK(plane.k() == 2);
  for (const auto& dir : plane.directions) CHECK(dot(dir, b.basis[0]) == 0);
  const auto p = add(plane.base, add(scale(3, plane.directions[0]), scale(-1, plane.directions[1])));
  const auto params = plane_parameters(plane, p);
  REQUIRE(params);
  CHECK(*params == Vector{Rational(3), Rational(-1)});
  CHECK_FALSE(plane_parameters(plane, pt({0, 0, 0})));
}

TEST_CASE("transversal verifier rejects tampering") {
  const auto inst = random_instance(2, 1, {2, 2}, {}, 3);
  const auto cert = solve_hyperplane_transversal_exact(inst);
  REQUIRE(cert);
  REQUIRE(verify_transversal(inst, *cert));

  auto moved = *cert;
  moved.plane.base[0] += 1;
  CHECK_FALSE(verify_transversal(inst, moved));

  auto flat = *cert;
  flat.plane.directions.clear();
  CHECK_FALSE(verify_transversal(inst, flat));

  auto negative = *cert;
  for (auto& per : negative.witnesses) {
    for (auto& w : per) {
      if (w.weights.size() >= 2) {
        w.weights[0] = -1;
        w.weights[1] = 2;
      }
    }
  }
  CHECK_FALSE(verify_transversal(inst, negative));

  auto swapped = *cert;
  std::swap(swapped.partitions[0].pieces[0], swapped.partitions[0].pieces[1]);
  CHECK_FALSE(verify_transversal(inst, swapped));
}

TEST_CASE("lift, solve, restrict") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto lower = random_instance(1, 0, {2}, {}, seed);
    const auto up = lift_instance(lower, 2);
    const auto cert = solve_hyperplane_transversal_exact(up);
    REQUIRE(cert);
    REQUIRE(verify_transversal(up, *cert));
    const auto down = restrict_solution(*cert);
    CHECK(down.plane.k() == 0);
    CHECK(verify_transversal(lower, down));
  }
}

TEST_CASE("a Tverberg certificate is a 0-plane transversal") {
  const auto c = square();
  const auto cert = solve_tverberg(c, 2);
  REQUIRE(cert);
  ProblemInstance inst{2, 0, {2}, {c}};
  CHECK(verify_transversal(inst, as_transversal(*cert, c)));
}

TEST_CASE("sweeps are deterministic across thread counts") {
  SweepParams params;
  params.d = 2;
  params.k = 1;
  params.r = {2, 2};
  params.budget.grassmannian_samples = 500;
  const auto one = sweep(params, 6, 77, 1);
  const auto three = sweep(params, 6, 77, 3);
  REQUIRE(one.trials.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(one.trials[i].seed == three.trials[i].seed);
    CHECK(one.trials[i].outcome == three.trials[i].outcome);
    CHECK(one.trials[i].lps_solved == three.trials[i].lps_solved);
    REQUIRE(one.trials[i].transversal.has_value() == three.trials[i].transversal.has_value());
    if (one.trials[i].transversal) CHECK(one.trials[i].transversal->plane.base == three.trials[i].transversal->plane.base);
  }
  const auto replay = run_trial(params, trial_seed(77, 4), 4);
  CHECK(replay.lps_solved == one.trials[4].lps_solved);
  CHECK(one.found == one.verified);
  CHECK_FALSE(one.beyond_proven);

  SweepParams odd = params;
  odd.r = {3, 3};
  odd.budget.grassmannian_samples = 50;
  CHECK(sweep(odd, 1, 1, 1).beyond_proven);
}
