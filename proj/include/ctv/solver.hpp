#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctv/config.hpp"
#include "ctv/geometry.hpp"

namespace ctv {

struct TverbergCertificate {
  PartitionTuple partition;
  CommonPointWitness witness;
};

/// Affine k-plane base + span(directions).
struct KPlane {
  Point base;
  std::vector<Vector> directions;

  [[nodiscard]] std::size_t k() const noexcept { return directions.size(); }
};

/// A point of conv(piece) ∩ P, given twice: as hull weights and as plane parameters.
struct PieceWitness {
  Vector weights;
  Vector plane_params;
};

struct TransversalCertificate {
  KPlane plane;
  std::vector<PartitionTuple> partitions;           // one per collection
  std::vector<std::vector<PieceWitness>> witnesses;  // [collection][piece]
};

struct SearchBudget {
  std::size_t grassmannian_samples = 10000;
  std::size_t refinement_depth = 6;
  std::uint64_t seed = 0;
};

// ---- k = 0 ------------------------------------------------------------------

struct TverbergSearch {
  std::optional<TverbergCertificate> certificate;
  std::size_t tuples_examined = 0;
  std::size_t lps_solved = 0;
};

/// Exhaustive search over ordered colorful r-tuples; the first tuple (enumeration
/// order) whose hulls share a point wins. An empty result proves non-existence.
TverbergSearch search_tverberg(const ColoredConfig& config, std::size_t r);

std::optional<TverbergCertificate> solve_tverberg(const ColoredConfig& config, std::size_t r);

Verdict verify_tverberg(const ColoredConfig& config, std::size_t r, const TverbergCertificate& cert);

// ---- k >= 1 -----------------------------------------------------------------

struct TransversalSearchReport {
  std::size_t sweep_samples = 0;
  std::size_t refinement_samples = 0;
  std::size_t snapped_samples = 0;
  std::size_t lps_solved = 0;
  std::optional<Rational> best_gap;  // smallest joint-LP violation seen
  bool exhausted = false;
};

struct TransversalSearch {
  std::optional<TransversalCertificate> certificate;
  TransversalSearchReport report;
};

/// Sound but incomplete search: projects along sampled rational (d-k)-subspaces and
/// decides each partition combination by one joint LP. An empty result only means
/// the budget ran out. Throws Error{InvalidParameter} for k = 0.
TransversalSearch solve_transversal(const ProblemInstance& instance, const SearchBudget& budget = {});

constexpr std::uint64_t kDefaultWitnessCap = 1'000'000;

struct HyperplaneSearch {
  std::optional<TransversalCertificate> certificate;
  std::size_t combinations = 0;
  std::size_t lps_solved = 0;
};

/// Complete search for k = d-1: an empty result proves that no hyperplane meets all
/// pieces for any colorful partition choice. Throws Error{CapExceeded} when one
/// combination has more witness choices than `cap`, Error{InvalidParameter} unless
/// 1 <= k = d-1.
HyperplaneSearch search_hyperplane_transversal_exact(const ProblemInstance& instance,
                                                     std::uint64_t cap = kDefaultWitnessCap);

std::optional<TransversalCertificate> solve_hyperplane_transversal_exact(
    const ProblemInstance& instance, std::uint64_t cap = kDefaultWitnessCap);

/// Independent exact checker for transversal certificates (any k, including k = 0).
Verdict verify_transversal(const ProblemInstance& instance, const TransversalCertificate& cert);

/// Plane parameters t with base + sum t_i dir_i = point, or nullopt if point is off the plane.
std::optional<Vector> plane_parameters(const KPlane& plane, const Point& point);

/// The plane {x : proj_b(x) = t} for the projection target b and a point t in b-coordinates.
KPlane plane_from_projection(const Subspace& target, const Point& t);

/// Restricts a certificate of a lifted instance to the hyperplane x_d = 0, dropping
/// the appended collection. Throws Error{DegenerateIntersection} if the plane does
/// not cross x_d = 0 transversally.
TransversalCertificate restrict_solution(const TransversalCertificate& lifted);

/// View of a k = 0 instance's single collection result as a 0-plane certificate.
TransversalCertificate as_transversal(const TverbergCertificate& cert, const ColoredConfig& config);

// ---- sweeps -----------------------------------------------------------------

struct SweepParams {
  std::size_t d = 2;
  std::size_t k = 0;
  std::vector<std::size_t> r{3};
  std::vector<std::vector<std::size_t>> profiles;  // empty: default profile
  SearchBudget budget;
  bool exact_hyperplane = false;
  RandomOptions random;
};

enum class TrialOutcome { Found, Exhausted, ProvenInfeasible };

const char* to_string(TrialOutcome outcome);

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  TrialOutcome outcome = TrialOutcome::Exhausted;
  bool verified = false;      // certificate passed the independent checker
  bool beyond_proven = false;  // instance lies outside the theorem's hypotheses
  std::size_t lps_solved = 0;
  std::optional<TverbergCertificate> tverberg;
  std::optional<TransversalCertificate> transversal;
};

struct SweepReport {
  SweepParams params;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;
  std::size_t found = 0;
  std::size_t exhausted = 0;
  std::size_t proven_infeasible = 0;
  std::size_t verified = 0;
  bool beyond_proven = false;
};

std::uint64_t trial_seed(std::uint64_t sweep_seed, std::size_t trial);

/// Runs one trial on random_instance(..., seed). Deterministic.
TrialRecord run_trial(const SweepParams& params, std::uint64_t seed, std::size_t index = 0);

/// Trials may run on several threads; results are stored in trial order.
SweepReport sweep(const SweepParams& params, std::size_t trials, std::uint64_t seed,
                  std::size_t threads = 0);

}  // namespace ctv
