#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ctv/io.hpp"

namespace {

using namespace ctv;

enum Exit : int { kOk = 0, kExhausted = 1, kViolated = 2, kUsage = 3, kCap = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    io::write_file_atomic(path, contents);
  }
}

ProblemInstance load_instance(const std::string& path) {
  auto inst = io::parse_instance(io::read_file(path));
  inst.check();
  return inst;
}

template <class T>
std::string tuple_text(const std::vector<T>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

std::string residue_text(std::uint64_t residue, std::size_t r) {
  if (residue == 1) return "1";
  if (residue + 1 == r) return "-1";
  return std::to_string(residue);
}

void print_flag(const char* name, const HypothesisFlag& f) {
  std::cout << (f.ok ? "ok   " : "FAIL ") << name << ": " << f.message << "\n";
}

// ---- subcommands ------------------------------------------------------------

int cmd_validate(const std::string& path) {
  const auto inst = load_instance(path);
  const auto rep = validate(inst);
  print_flag("size", rep.size);
  print_flag("class-bound", rep.class_bound);
  print_flag("parity", rep.parity);
  print_flag("prime", rep.prime);
  std::cout << (rep.uniform_r ? "ok   " : "FAIL ") << "uniform-r: "
            << (rep.uniform_r ? "all r equal" : "r differs between collections") << "\n";
  return rep.theorem_applies() ? kOk : kViolated;
}

int cmd_partition(const std::string& path, const std::string& out) {
  const auto inst = load_instance(path);
  if (inst.k != 0) throw UsageError("partition needs a k = 0 instance; use transversal for k >= 1");
  const auto res = search_tverberg(inst.collections[0], inst.r[0]);
  if (!res.certificate) {
    std::cerr << "infeasible, " << res.tuples_examined << " tuples exhausted (" << res.lps_solved << " LPs)\n";
    return kViolated;
  }
  std::cerr << "found after " << res.tuples_examined << " tuples, common point "
            << to_string(res.certificate->witness.point) << "\n";
  emit(out, io::emit_certificate(*res.certificate));
  return kOk;
}

struct TransversalOptions {
  std::string path;
  std::string out;
  std::size_t samples = SearchBudget{}.grassmannian_samples;
  std::size_t refine = SearchBudget{}.refinement_depth;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultWitnessCap;
  bool exact = false;
};

int cmd_transversal(const TransversalOptions& o, bool budget_given) {
  const auto inst = load_instance(o.path);
  if (inst.k == 0) throw UsageError("transversal needs k >= 1; use partition for k = 0");
  if (o.exact) {
    if (budget_given) throw UsageError("--exact-hyperplane conflicts with --samples/--refine");
    if (inst.k + 1 != inst.d) throw UsageError("--exact-hyperplane needs k = d - 1");
    const auto res = search_hyperplane_transversal_exact(inst, o.cap);
    if (!res.certificate) {
      std::cerr << "infeasible: no hyperplane over " << res.combinations << " partition combinations ("
                << res.lps_solved << " LPs)\n";
      return kViolated;
    }
    std::cerr << "found a hyperplane (" << res.lps_solved << " LPs)\n";
    emit(o.out, io::emit_certificate(*res.certificate));
    return kOk;
  }
  SearchBudget budget;
  budget.grassmannian_samples = o.samples;
  budget.refinement_depth = o.refine;
  budget.seed = o.seed;
  const auto res = solve_transversal(inst, budget);
  const auto& r = res.report;
  if (!res.certificate) {
    std::cerr << "budget exhausted: " << r.sweep_samples << " samples, " << r.refinement_samples << " refinement, "
              << r.snapped_samples << " snapped, " << r.lps_solved << " LPs";
    if (r.best_gap) std::cerr << ", best gap " << to_string(*r.best_gap) << " (~" << r.best_gap->get_d() << ")";
    std::cerr << "\n";
    return kExhausted;
  }
  std::cerr << "found a " << inst.k << "-plane after " << r.sweep_samples << " samples (" << r.lps_solved
            << " LPs)\n";
  emit(o.out, io::emit_certificate(*res.certificate));
  return kOk;
}

struct TopologyOptions {
  std::size_t r = 3;
  std::size_t n = 2;
  std::size_t d = 1;
  std::size_t k = 0;
  std::uint64_t p = 2;
  std::size_t cap = topology::kDefaultFacetCap;
  std::vector<std::size_t> profile;
};

int cmd_topology(const std::string& sub, const TopologyOptions& o) {
  using namespace topology;
  if (sub == "degree") {
    const auto rep = test_map_degree(o.r, o.d, o.cap);
    std::cout << "|deg|=" << rep.abs_degree << ", ≡" << residue_text(rep.residue, o.r) << " mod " << o.r << "\n"
              << "expected (r-1)!^(d+1) = " << rep.expected << "\n"
              << "preimage facets " << rep.preimages << " of " << rep.facets << ", perturbations "
              << rep.perturbations << "\n"
              << "second regular value " << (rep.check_degree == rep.degree ? "agrees" : "DISAGREES") << "\n"
              << "Z_" << o.r << " action " << (rep.free_action ? "free" : "NOT free") << "\n";
    return rep.abs_degree == rep.expected && rep.check_degree == rep.degree ? kOk : kViolated;
  }
  if (sub == "dims") {
    const auto profile = o.profile.empty() ? extremal_profile(o.r, o.d, o.k) : o.profile;
    const auto rep = dims_report(profile, o.r, o.d, o.k, o.cap);
    std::cout << "s = " << rep.s << "\n"
              << "dim K = " << rep.dim_k << "\n"
              << "dim K' = " << rep.dim_k_prime << "\n"
              << "N = " << rep.n_sphere << "\n"
              << "rank E = " << rep.rank_e << "\n"
              << "rank Delta = " << rep.rank_delta << "\n"
              << "rank C = " << rep.rank_c << "\n"
              << "cross-check: " << (rep.constructed ? (rep.consistent ? "consistent" : "INCONSISTENT") : "skipped (cap)")
              << "\n";
    return rep.consistent ? kOk : kViolated;
  }

  const auto complex = chessboard_complex(o.r, o.n, o.cap);
  if (sub == "fvector") {
    std::cout << tuple_text(complex.f_vector()) << "\n";
    return kOk;
  }
  if (sub == "homology") {
    const auto betti = homology_mod_p(complex, o.p);
    std::cout << "β=" << tuple_text(betti) << "\n";
    return kOk;
  }
  if (sub == "pseudo") {
    const auto rep = is_pseudo_manifold(complex);
    if (rep) {
      std::cout << "pseudo-manifold\n";
      return kOk;
    }
    std::cout << "not a pseudo-manifold: " << rep.reason;
    if (rep.violating_ridge) {
      std::cout << " {";
      for (std::size_t i = 0; i < rep.violating_ridge->size(); ++i) {
        std::cout << (i ? " " : "") << complex.label((*rep.violating_ridge)[i]);
      }
      std::cout << "}";
    }
    std::cout << "\n";
    return kViolated;
  }
  if (sub == "orient") {
    const auto orientation = orient(complex);
    if (!orientation) {
      std::cout << "non-orientable\n";
      return kViolated;
    }
    std::cout << "orientable\n";
    for (std::size_t f = 0; f < complex.facets().size(); ++f) {
      std::cout << (orientation->signs[f] > 0 ? "+ " : "- ");
      for (auto v : complex.facets()[f]) std::cout << complex.label(v);
      std::cout << "\n";
    }
    return kOk;
  }
  if (sub == "free") {
    const bool free = is_free_action(complex, row_shift_action(o.r, o.n));
    std::cout << "Z_" << o.r << " row shift " << (free ? "acts freely" : "does not act freely") << "\n";
    return free ? kOk : kViolated;
  }
  throw UsageError("unknown topology subcommand " + sub);
}

struct TightnessOptions {
  std::size_t d = 2;
  std::size_t k = 0;
  std::vector<std::size_t> r{3};
  std::size_t oversized = 0;
  std::string out;
  bool verify = false;
};

int cmd_tightness(const TightnessOptions& o) {
  const auto inst = tightness_instance(o.d, o.k, o.r, o.oversized);
  emit(o.out, io::emit_instance(inst));
  if (!o.verify) return kOk;
  if (inst.k == 0) {
    const auto res = search_tverberg(inst.collections[0], inst.r[0]);
    if (res.certificate) {
      std::cerr << "unexpected: found a colorful partition\n";
      return kCap;
    }
    std::cerr << "infeasible, " << res.tuples_examined << " tuples exhausted\n";
    return kOk;
  }
  if (inst.k + 1 == inst.d) {
    const auto res = search_hyperplane_transversal_exact(inst);
    if (res.certificate) {
      std::cerr << "unexpected: found a transversal hyperplane\n";
      return kCap;
    }
    std::cerr << "infeasible, " << res.combinations << " partition combinations exhausted by the exact solver\n";
    return kOk;
  }
  const auto res = solve_transversal(inst);
  if (res.certificate) {
    std::cerr << "unexpected: found a transversal\n";
    return kCap;
  }
  std::cerr << "no transversal within the sampling budget (not a proof for this k)\n";
  return kExhausted;
}

struct SweepOptions {
  SweepParams params;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  long replay = -1;
  std::string out;
};

int cmd_sweep(SweepOptions o) {
  if (o.params.profiles.size() == 1 && o.params.k > 0) {
    o.params.profiles.assign(o.params.k + 1, o.params.profiles.front());
  }
  if (o.params.r.size() == 1 && o.params.k > 0) o.params.r.assign(o.params.k + 1, o.params.r.front());
  if (o.replay >= 0) {
    const auto idx = static_cast<std::size_t>(o.replay);
    const auto t = run_trial(o.params, trial_seed(o.seed, idx), idx);
    std::cerr << "trial " << idx << " seed " << t.seed << ": " << to_string(t.outcome)
              << (t.verified ? ", verified" : "") << "\n";
    if (t.tverberg) emit(o.out, io::emit_certificate(*t.tverberg));
    if (t.transversal) emit(o.out, io::emit_certificate(*t.transversal));
    return t.outcome == TrialOutcome::Found ? kOk
           : t.outcome == TrialOutcome::Exhausted ? kExhausted
                                                   : kViolated;
  }
  const auto rep = sweep(o.params, o.trials, o.seed, o.threads);
  emit(o.out, io::emit_sweep_report(rep));
  std::cerr << rep.found << "/" << o.trials << " found, " << rep.verified << " verified, " << rep.exhausted
            << " exhausted, " << rep.proven_infeasible << " proven infeasible"
            << (rep.beyond_proven ? " [inconclusive: outside the proven range]" : "") << "\n";
  if (rep.proven_infeasible > 0) return kViolated;
  if (rep.exhausted > 0) return kExhausted;
  return rep.verified == rep.found ? kOk : kViolated;
}

int cmd_plot(const std::string& path, const std::string& cert_path, const std::string& out) {
  const auto inst = load_instance(path);
  if (inst.d != 2) throw UsageError("plot needs d = 2");
  std::optional<io::Certificate> cert;
  if (!cert_path.empty()) cert = io::parse_certificate(io::read_file(cert_path));
  emit(out, io::render_svg(inst, cert ? &*cert : nullptr));
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& cert_path) {
  const auto inst = load_instance(path);
  const auto cert = io::parse_certificate(io::read_file(cert_path));
  const auto v = io::verify_certificate(inst, cert);
  if (v) {
    std::cout << "certificate verified\n";
    return kOk;
  }
  std::cout << "certificate rejected: " << v.reason << "\n";
  return kViolated;
}

int cmd_random(std::size_t d, std::size_t k, std::vector<std::size_t> r,
               std::vector<std::size_t> profile, std::uint64_t seed, const std::string& out) {
  if (r.size() == 1) r.assign(k + 1, r.front());
  std::vector<std::vector<std::size_t>> profiles;
  if (!profile.empty()) profiles.assign(k + 1, profile);
  emit(out, io::emit_instance(random_instance(d, k, r, profiles, seed)));
  return kOk;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CapExceeded: return kCap;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorful Tverberg partitions and Tverberg-Vrecica transversals with exact arithmetic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string instance_path, cert_path, out;
  std::function<int()> action;

  auto* validate_cmd = app.add_subcommand("validate", "Check the hypotheses of the transversal theorem");
  validate_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(instance_path); }; });

  auto* partition_cmd = app.add_subcommand("partition", "Exhaustive colorful Tverberg search (k = 0)");
  partition_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  partition_cmd->add_option("--out", out, "Certificate path (stdout if omitted)");
  partition_cmd->callback([&] { action = [&] { return cmd_partition(instance_path, out); }; });

  TransversalOptions topt;
  auto* transversal_cmd = app.add_subcommand("transversal", "Colorful k-plane transversal search (k >= 1)");
  transversal_cmd->add_option("instance", topt.path, "Instance JSON")->required();
  transversal_cmd->add_option("--out", topt.out, "Certificate path (stdout if omitted)");
  auto* samples_opt = transversal_cmd->add_option("--samples", topt.samples, "Grassmannian samples");
  auto* refine_opt = transversal_cmd->add_option("--refine", topt.refine, "Refinement depth");
  transversal_cmd->add_option("--seed", topt.seed, "Sampling seed");
  transversal_cmd->add_option("--cap", topt.cap, "Witness-choice cap for --exact-hyperplane");
  transversal_cmd->add_flag("--exact-hyperplane", topt.exact, "Complete solver for k = d - 1");
  transversal_cmd->callback([&] {
    const bool budget_given = samples_opt->count() > 0 || refine_opt->count() > 0;
    action = [&, budget_given] { return cmd_transversal(topt, budget_given); };
  });

  TopologyOptions popt;
  std::string topology_sub;
  auto* topology_cmd = app.add_subcommand("topology", "Chessboard complexes and the test-map degree");
  topology_cmd->require_subcommand(1);
  auto add_board = [&](CLI::App* c) {
    c->add_option("--r", popt.r, "Rows")->required();
    c->add_option("--n", popt.n, "Columns")->required();
    c->add_option("--cap", popt.cap, "Facet cap");
  };
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"fvector", "f-vector of Δ_{r,n}"},
           {"homology", "Betti numbers of Δ_{r,n} over F_p"},
           {"pseudo", "Pseudo-manifold check for Δ_{r,n}"},
           {"orient", "Orientation of Δ_{r,n}"},
           {"free", "Freeness of the Z_r row shift on Δ_{r,n}"}}) {
    auto* c = topology_cmd->add_subcommand(name, help);
    add_board(c);
    if (name == "homology") c->add_option("--p", popt.p, "Prime")->required();
    c->callback([&, name] { topology_sub = name; });
  }
  auto* degree_cmd = topology_cmd->add_subcommand("degree", "Degree of the test map on (Δ_{r,r-1})^{*(d+1)}");
  degree_cmd->add_option("--r", popt.r, "Parts")->required();
  degree_cmd->add_option("--d", popt.d, "Dimension")->required();
  degree_cmd->add_option("--cap", popt.cap, "Facet cap");
  degree_cmd->callback([&] { topology_sub = "degree"; });
  auto* dims_cmd = topology_cmd->add_subcommand("dims", "Dimension and rank bookkeeping");
  dims_cmd->add_option("--r", popt.r, "Parts")->required();
  dims_cmd->add_option("--d", popt.d, "Dimension")->required();
  dims_cmd->add_option("--k", popt.k, "Plane dimension");
  dims_cmd->add_option("--profile", popt.profile, "Class sizes (default: extremal)")->delimiter(',');
  dims_cmd->add_option("--cap", popt.cap, "Facet cap");
  dims_cmd->callback([&] { topology_sub = "dims"; });
  topology_cmd->callback([&] { action = [&] { return cmd_topology(topology_sub, popt); }; });

  TightnessOptions tight;
  auto* tightness_cmd = app.add_subcommand("tightness", "Emit the standard infeasible configuration");
  tightness_cmd->add_option("--d", tight.d, "Dimension")->required();
  tightness_cmd->add_option("--k", tight.k, "Plane dimension")->required();
  tightness_cmd->add_option("--r", tight.r, "Parts per collection (one value or k+1)")->required()->delimiter(',');
  tightness_cmd->add_option("--oversized", tight.oversized, "Collection with the oversized class");
  tightness_cmd->add_option("--out", tight.out, "Instance path (stdout if omitted)");
  tightness_cmd->add_flag("--verify", tight.verify, "Prove infeasibility with a complete solver");
  tightness_cmd->callback([&] {
    if (tight.r.size() == 1) tight.r.assign(tight.k + 1, tight.r.front());
    action = [&] { return cmd_tightness(tight); };
  });

  SweepOptions sopt;
  std::vector<std::size_t> sweep_profile;
  auto* sweep_cmd = app.add_subcommand("sweep", "Seeded random trials with a JSON report");
  sweep_cmd->add_option("--d", sopt.params.d, "Dimension")->required();
  sweep_cmd->add_option("--k", sopt.params.k, "Plane dimension")->required();
  sweep_cmd->add_option("--r", sopt.params.r, "Parts per collection")->required()->delimiter(',');
  sweep_cmd->add_option("--profile", sweep_profile, "Class sizes for every collection")->delimiter(',');
  sweep_cmd->add_option("--trials", sopt.trials, "Number of trials");
  sweep_cmd->add_option("--seed", sopt.seed, "Sweep seed");
  sweep_cmd->add_option("--samples", sopt.params.budget.grassmannian_samples, "Grassmannian samples");
  sweep_cmd->add_option("--refine", sopt.params.budget.refinement_depth, "Refinement depth");
  sweep_cmd->add_option("--grid", sopt.params.random.grid_bound, "Coordinate bound");
  sweep_cmd->add_flag("--exact-hyperplane", sopt.params.exact_hyperplane, "Complete solver for k = d - 1");
  sweep_cmd->add_option("--threads", sopt.threads, "Worker threads (0: hardware)");
  sweep_cmd->add_option("--replay", sopt.replay, "Rerun one trial by index and print its certificate");
  sweep_cmd->add_option("--out", sopt.out, "Report path (stdout if omitted)");
  sweep_cmd->callback([&] {
    if (!sweep_profile.empty()) sopt.params.profiles = {sweep_profile};
    action = [&] { return cmd_sweep(sopt); };
  });

  auto* plot_cmd = app.add_subcommand("plot", "SVG drawing of a planar instance");
  plot_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  plot_cmd->add_option("--cert", cert_path, "Certificate JSON");
  plot_cmd->add_option("--out", out, "SVG path (stdout if omitted)");
  plot_cmd->callback([&] { action = [&] { return cmd_plot(instance_path, cert_path, out); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Independent exact certificate check");
  verify_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  verify_cmd->add_option("certificate", cert_path, "Certificate JSON")->required();
  verify_cmd->callback([&] { action = [&] { return cmd_verify(instance_path, cert_path); }; });

  std::size_t rd = 2, rk = 0;
  std::uint64_t rseed = 0;
  std::vector<std::size_t> rr{3}, rprofile;
  auto* random_cmd = app.add_subcommand("random", "Emit a seeded random instance");
  random_cmd->add_option("--d", rd, "Dimension")->required();
  random_cmd->add_option("--k", rk, "Plane dimension")->required();
  random_cmd->add_option("--r", rr, "Parts per collection")->required()->delimiter(',');
  random_cmd->add_option("--profile", rprofile, "Class sizes for every collection")->delimiter(',');
  random_cmd->add_option("--seed", rseed, "Seed");
  random_cmd->add_option("--out", out, "Instance path (stdout if omitted)");
  random_cmd->callback([&] { action = [&] { return cmd_random(rd, rk, rr, rprofile, rseed, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
