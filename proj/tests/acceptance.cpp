// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ctv/solver.hpp"
#include "ctv/topology.hpp"
#include "oracles.hpp"

using namespace ctv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    o.pass = false;
    o.detail += " [over time limit]";
  }
  if (!o.pass) ++failures;
  std::printf("[%d] %-44s %s  %s (%.2fs, limit %.0fs)\n", number, title, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
              secs, limit_seconds);
  std::fflush(stdout);
}

Outcome degree_reproduction() {
  using topology::test_map_degree;
  Outcome o;
  std::ostringstream s;
  for (const auto& [r, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    std::uint64_t expected = 1;
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i < r; ++i) fact *= i;
    for (std::size_t i = 0; i <= d; ++i) expected *= fact;
    const auto rep = test_map_degree(r, d);
    const bool residue_ok = rep.residue == 1 % r || rep.residue == r - 1;
    const bool ok = rep.abs_degree == expected && residue_ok && rep.check_degree == rep.degree;
    o.pass = o.pass && ok;
    s << "(" << r << "," << d << "):|deg|=" << rep.abs_degree << (ok ? " " : "! ");
  }
  o.detail = s.str();
  return o;
}

Outcome pseudo_manifolds() {
  Outcome o;
  std::ostringstream s;
  for (std::size_t r = 2; r <= 5; ++r) {
    const auto c = topology::chessboard_complex(r, r - 1);
    const bool pm = static_cast<bool>(topology::is_pseudo_manifold(c));
    const auto orientation = topology::orient(c);
    const bool ok = pm && orientation && topology::check_orientation(c, *orientation);
    o.pass = o.pass && ok;
    s << "r=" << r << (ok ? ":ok " : ":FAIL ");
  }
  o.detail = s.str();
  return o;
}

Outcome homology_goldens() {
  // Frozen from the integral Smith-normal-form oracle.
  const std::vector<std::size_t> circle{1, 1};
  const std::vector<std::size_t> torus{1, 2, 1};
  Outcome o;
  std::ostringstream s;
  for (const auto& [r, n, golden] : std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>>{
           {3, 2, circle}, {4, 3, torus}}) {
    const auto c = topology::chessboard_complex(r, n);
    for (unsigned p : {2U, 3U}) {
      const auto betti = topology::homology_mod_p(c, p);
      long long chi = 0;
      for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(betti[i]);
      const bool ok = betti == golden && chi == c.euler_characteristic();
      o.pass = o.pass && ok;
      s << "D" << r << n << "/p" << p << (ok ? ":ok " : ":FAIL ");
    }
  }
  o.detail = s.str();
  return o;
}

Outcome planar_sweep() {
  SweepParams params;
  params.d = 2;
  params.k = 0;
  params.r = {3};
  params.profiles = {{2, 2, 2, 1}};
  const auto rep = sweep(params, 100, 2024);
  std::size_t max_lps = 0;
  for (const auto& t : rep.trials) max_lps = std::max(max_lps, t.lps_solved);
  Outcome o;
  o.pass = rep.found == 100 && rep.verified == 100 && max_lps <= 648;
  o.detail = std::to_string(rep.verified) + "/100 verified, max LPs " + std::to_string(max_lps);
  return o;
}

Outcome tightness() {
  const auto planar = tightness_instance(2, 0, {3}, 0);
  const auto p = search_tverberg(planar.collections[0], 3);
  const auto lines = tightness_instance(2, 1, {2, 2}, 0);
  const auto h = search_hyperplane_transversal_exact(lines);
  Outcome o;
  o.pass = !p.certificate && !h.certificate;
  o.detail = "partitions: " + std::to_string(p.tuples_examined) + " tuples exhausted; lines: " +
             std::to_string(h.combinations) + " combinations exhausted";
  return o;
}

Outcome line_transversals() {
  SweepParams params;
  params.d = 2;
  params.k = 1;
  params.r = {2, 2};
  const auto rep = sweep(params, 50, 2024);
  Outcome o;
  o.pass = rep.found >= 45 && rep.verified == rep.found;
  o.detail = std::to_string(rep.found) + "/50 found, " + std::to_string(rep.verified) + " verified";
  return o;
}

Outcome lift_round_trip() {
  std::size_t ok = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto lower = random_instance(1, 0, {2}, {}, trial_seed(2024, i));
    const auto up = lift_instance(lower, 2);
    const auto cert = solve_hyperplane_transversal_exact(up);
    if (!cert || !verify_transversal(up, *cert)) continue;
    if (verify_transversal(lower, restrict_solution(*cert))) ++ok;
  }
  return {ok == 20, std::to_string(ok) + "/20 restricted certificates verify"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(2024);
  std::size_t agree = 0;
  std::size_t feasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const std::size_t r = 2 + rng() % 2;
    const std::size_t n = r + rng() % (9 - r);
    std::vector<Piece> pieces(r);
    for (std::size_t i = 0; i < n; ++i) {
      Point p;
      for (std::size_t c = 0; c < d; ++c) p.emplace_back(static_cast<long>(rng() % 9) - 4);
      pieces[i < r ? i : rng() % r].push_back(p);
    }
    const auto w = lp_feasible_common_point(pieces);
    const bool truth = oracle::hulls_intersect(pieces);
    const bool witness_ok = !w || verify_common_point_witness(pieces, *w);
    agree += (static_cast<bool>(w) == truth && witness_ok);
    feasible += truth;
  }

  // Half the instances get one oversized color class so that some are infeasible.
  std::size_t solver_agree = 0;
  std::size_t infeasible = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto inst = random_instance(2, 1, {2, 2}, {}, trial_seed(77, i));
    if (i % 2 == 1) {
      auto& classes = inst.collections[0].classes;
      classes[0].insert(classes[0].end(), classes[1].begin(), classes[1].end());
      classes.erase(classes.begin() + 1);
    }
    const auto exact = solve_hyperplane_transversal_exact(inst);
    SearchBudget budget;
    budget.seed = i;
    const auto sampled = solve_transversal(inst, budget);
    solver_agree += static_cast<bool>(exact) == static_cast<bool>(sampled.certificate);
    infeasible += !exact;
  }
  Outcome o;
  o.pass = agree == 500 && solver_agree == 50;
  o.detail = "LP " + std::to_string(agree) + "/500 (" + std::to_string(feasible) + " feasible); solvers " +
             std::to_string(solver_agree) + "/50 (" + std::to_string(infeasible) + " infeasible)";
  return o;
}

}  // namespace

int main() {
  criterion(1, "test-map degree (r-1)!^(d+1), +-1 mod r", 60, degree_reproduction);
  criterion(2, "chessboard pseudo-manifold + orientation", 30, pseudo_manifolds);
  criterion(3, "chessboard homology goldens + Euler", 30, homology_goldens);
  criterion(4, "planar colorful partitions 100/100", 300, planar_sweep);
  criterion(5, "oversized class is infeasible", 60, tightness);
  criterion(6, "line transversals >= 45/50", 600, line_transversals);
  criterion(7, "lift -> exact -> restrict 20/20", 120, lift_round_trip);
  criterion(8, "oracle equivalences", 600, oracle_equivalence);
  std::printf("%d failure(s)\n", failures);
  return failures;
}
