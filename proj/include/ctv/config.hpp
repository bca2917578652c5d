#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctv/error.hpp"
#include "ctv/rational.hpp"

namespace ctv {

using IndexSet = std::vector<std::size_t>;

/// Finite rational point multiset in R^dim with a partition of its indices into color classes.
struct ColoredConfig {
  std::size_t dim = 0;
  std::vector<Point> points;
  std::vector<IndexSet> classes;

  /// Throws Error{InvalidParameter} unless classes are nonempty, disjoint and covering
  /// and every point has length `dim`.
  void check() const;

  [[nodiscard]] std::vector<std::size_t> class_sizes() const;
};

/// k+1 colored collections in R^d together with the part count r_l of each.
struct ProblemInstance {
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<std::size_t> r;
  std::vector<ColoredConfig> collections;

  /// Structural well-formedness (0 <= k <= d, k+1 collections, r_l >= 2, dims agree).
  void check() const;
};

/// Ordered tuple of r index sets (each sorted ascending).
struct PartitionTuple {
  std::vector<IndexSet> pieces;

  [[nodiscard]] bool has_empty_piece() const;
  bool operator==(const PartitionTuple&) const = default;
};

/// Disjointness, cover and colorfulness of `tuple` as an r-partition of `config`.
Verdict check_partition(const ColoredConfig& config, std::size_t r, const PartitionTuple& tuple);

/// The points of each piece.
std::vector<std::vector<Point>> piece_points(const ColoredConfig& config, const PartitionTuple& tuple);

struct HypothesisFlag {
  bool ok = true;
  std::string message;
};

struct HypothesisReport {
  HypothesisFlag size;         // |C^l| = (r_l - 1)(d - k + 1) + 1
  HypothesisFlag class_bound;  // |C_i^l| <= r_l - 1
  HypothesisFlag parity;       // r_l (d - k) even, or k = 0
  HypothesisFlag prime;        // every r_l prime
  bool uniform_r = true;       // all r_l equal

  [[nodiscard]] bool all_ok() const {
    return size.ok && class_bound.ok && parity.ok && prime.ok;
  }
  /// Inside the proven range of the colorful transversal theorem (needs a common prime r).
  [[nodiscard]] bool theorem_applies() const { return all_ok() && uniform_r; }
};

HypothesisReport validate(const ProblemInstance& instance);

bool is_prime(std::uint64_t n);

/// (r - 1)(d - k + 1) + 1
std::size_t required_size(std::size_t r, std::size_t d, std::size_t k);

/// Number of ordered colorful r-tuples: prod_i r!/(r - c_i)!, zero if some c_i > r.
std::uint64_t colorful_partition_count(const std::vector<std::size_t>& class_sizes, std::size_t r);

/// Lazy enumeration of every ordered assignment of points to r pieces with at most one
/// point of each class per piece. Order is lexicographic in the per-class injections,
/// first class slowest. Tuples with empty pieces are included.
class ColorfulPartitionEnumerator {
 public:
  ColorfulPartitionEnumerator(const ColoredConfig& config, std::size_t r);

  std::optional<PartitionTuple> next();

 private:
  std::size_t r_;
  std::vector<IndexSet> classes_;
  std::vector<std::vector<std::vector<std::size_t>>> injections_;  // per class
  std::vector<std::size_t> odometer_;
  bool done_ = false;
};

/// All tuples with nonempty pieces, in enumeration order.
std::vector<PartitionTuple> nonempty_colorful_partitions(const ColoredConfig& config, std::size_t r);

/// Extremal class profile for one collection: (d-k+1) classes of size r-1 plus a singleton.
std::vector<std::size_t> extremal_profile(std::size_t r, std::size_t d, std::size_t k);
std::vector<std::size_t> singleton_profile(std::size_t n);

struct RandomOptions {
  long grid_bound = 1000;  // integer coordinates in [-grid_bound, grid_bound]
  long jitter_den = 0;     // when > 0, add j / jitter_den with j uniform in [0, jitter_den)
};

/// Seeded random instance; `profiles` holds one class-size list per collection, or is
/// empty for the default (extremal for k = 0, singletons otherwise).
/// Throws Error{ProfileMismatch}.
ProblemInstance random_instance(std::size_t d, std::size_t k, const std::vector<std::size_t>& r,
                                const std::vector<std::vector<std::size_t>>& profiles,
                                std::uint64_t seed, const RandomOptions& options = {});

/// Standard configuration that admits no colorful transversal: collection `oversized`
/// gets one color class of size r. Throws Error{InvalidParameter}.
ProblemInstance tightness_instance(std::size_t d, std::size_t k, const std::vector<std::size_t>& r,
                                   std::size_t oversized);

/// Embeds a (d-1, k-1) instance into the hyperplane x_d = 0 of R^d and appends a new
/// collection clustered at (0,...,0,1), each point its own color.
ProblemInstance lift_instance(const ProblemInstance& lower, std::size_t r_new);

/// Cluster spacing used by lift_instance.
Rational lift_epsilon();

}  // namespace ctv
