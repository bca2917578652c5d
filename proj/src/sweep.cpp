#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "ctv/solver.hpp"

namespace ctv {

const char* to_string(TrialOutcome outcome) {
  switch (outcome) {
    case TrialOutcome::Found: return "found";
    case TrialOutcome::Exhausted: return "exhausted";
    case TrialOutcome::ProvenInfeasible: return "proven-infeasible";
  }
  return "unknown";
}

std::uint64_t trial_seed(std::uint64_t sweep_seed, std::size_t trial) {
  std::uint64_t x = sweep_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TrialRecord run_trial(const SweepParams& params, std::uint64_t seed, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = seed;
  const auto inst = random_instance(params.d, params.k, params.r, params.profiles, seed, params.random);
  rec.beyond_proven = !validate(inst).theorem_applies();

  if (params.k == 0) {
    auto res = search_tverberg(inst.collections[0], inst.r[0]);
    rec.lps_solved = res.lps_solved;
    if (res.certificate) {
      rec.outcome = TrialOutcome::Found;
      rec.verified = static_cast<bool>(verify_tverberg(inst.collections[0], inst.r[0], *res.certificate));
      rec.tverberg = std::move(res.certificate);
    } else {
      rec.outcome = TrialOutcome::ProvenInfeasible;
    }
    return rec;
  }

  if (params.exact_hyperplane && params.k + 1 == params.d) {
    auto res = search_hyperplane_transversal_exact(inst);
    rec.lps_solved = res.lps_solved;
    rec.outcome = res.certificate ? TrialOutcome::Found : TrialOutcome::ProvenInfeasible;
    rec.transversal = std::move(res.certificate);
  } else {
    SearchBudget budget = params.budget;
    budget.seed = seed;
    auto res = solve_transversal(inst, budget);
    rec.lps_solved = res.report.lps_solved;
    rec.outcome = res.certificate ? TrialOutcome::Found : TrialOutcome::Exhausted;
    rec.transversal = std::move(res.certificate);
  }
  if (rec.transversal) rec.verified = static_cast<bool>(verify_transversal(inst, *rec.transversal));
  return rec;
}

SweepReport sweep(const SweepParams& params, std::size_t trials, std::uint64_t seed, std::size_t threads) {
  SweepReport report;
  report.params = params;
  report.seed = seed;
  report.trials.resize(trials);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(trials, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](std::size_t w) {
    try {
      for (std::size_t i = next++; i < trials; i = next++) {
        report.trials[i] = run_trial(params, trial_seed(seed, i), i);
      }
    } catch (...) {
      errors[w] = std::current_exception();
      next = trials;
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const auto& t : report.trials) {
    switch (t.outcome) {
      case TrialOutcome::Found: ++report.found; break;
      case TrialOutcome::Exhausted: ++report.exhausted; break;
      case TrialOutcome::ProvenInfeasible: ++report.proven_infeasible; break;
    }
    if (t.verified) ++report.verified;
    report.beyond_proven = report.beyond_proven || t.beyond_proven;
  }
  return report;
}

}  // namespace ctv
