#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctv/error.hpp"
#include "ctv/rational.hpp"

namespace ctv::topology {

/// Sorted vertex ids.
using Face = std::vector<std::size_t>;

constexpr std::size_t kDefaultFacetCap = 10'000'000;
constexpr std::size_t kDefaultFaceCap = 50'000'000;

/// Finite simplicial complex on vertices 0..n-1 stored by its inclusion-maximal
/// facets. The complex with no vertices is {∅} and has dimension -1.
class SimplicialComplex {
 public:
  SimplicialComplex() : facets_{Face{}} {}

  /// Sorts, deduplicates and drops non-maximal facets. Throws Error{InvalidParameter}
  /// for vertex ids >= num_vertices and Error{CapExceeded} above `facet_cap` facets.
  SimplicialComplex(std::size_t num_vertices, std::vector<Face> facets,
                    std::vector<std::string> labels = {}, std::size_t facet_cap = kDefaultFacetCap);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
  [[nodiscard]] const std::vector<Face>& facets() const noexcept { return facets_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::string label(std::size_t v) const;

  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool is_pure() const;

  /// All faces of dimension `dim` in lexicographic order (dim -1 gives {∅}).
  /// Throws Error{CapExceeded} past kDefaultFaceCap faces in total.
  [[nodiscard]] const std::vector<Face>& faces(int dim) const;
  [[nodiscard]] std::size_t face_index(const Face& face) const;  // within faces(|face| - 1)

  /// (f_0, ..., f_dim)
  [[nodiscard]] std::vector<std::size_t> f_vector() const;
  [[nodiscard]] long long euler_characteristic() const;

  [[nodiscard]] bool contains(const Face& face) const;

 private:
  void build_faces() const;

  std::size_t num_vertices_ = 0;
  std::vector<Face> facets_;
  std::vector<std::string> labels_;
  mutable std::vector<std::vector<Face>> faces_;  // by dimension
  mutable bool faces_built_ = false;
};

/// Δ_{r,n}: rook placements on an r × n board; vertex (i, j) has id i*n + j.
SimplicialComplex chessboard_complex(std::size_t rows, std::size_t cols,
                                     std::size_t facet_cap = kDefaultFacetCap);

/// Join with B's vertices shifted past A's. Throws Error{CapExceeded}.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       std::size_t facet_cap = kDefaultFacetCap);

/// Δ_{r,c_0} * ... * Δ_{r,c_m}
SimplicialComplex chessboard_join(const std::vector<std::size_t>& cols, std::size_t rows,
                                  std::size_t facet_cap = kDefaultFacetCap);

// ---- homology ---------------------------------------------------------------

/// Sparse column: (row index, value mod p), rows ascending.
using SparseColumn = std::vector<std::pair<std::size_t, std::uint64_t>>;

struct ChainComplexModP {
  std::uint64_t p = 2;
  std::vector<std::size_t> ranks;                  // dim C_i, i = 0..dim
  std::vector<std::vector<SparseColumn>> boundary;  // boundary[i]: C_i -> C_{i-1}; boundary[0] empty
};

/// Throws Error{NotPrime}. Asserts ∂∂ = 0 (std::logic_error on failure).
ChainComplexModP chain_complex_mod_p(const SimplicialComplex& complex, std::uint64_t p);

/// Rank over F_p of a matrix given by sparse columns.
std::size_t rank_mod_p(std::vector<SparseColumn> columns, std::uint64_t p);

/// Betti numbers β_0..β_dim (unreduced) over F_p. Throws Error{NotPrime}.
std::vector<std::size_t> homology_mod_p(const SimplicialComplex& complex, std::uint64_t p);

// ---- pseudo-manifolds and orientation --------------------------------------

struct PseudoManifoldReport {
  bool ok = false;
  std::string reason;
  std::optional<Face> violating_ridge;

  explicit operator bool() const noexcept { return ok; }
};

PseudoManifoldReport is_pseudo_manifold(const SimplicialComplex& complex);

/// Sign per facet, aligned with complex.facets(); each facet is read in sorted vertex order.
struct Orientation {
  std::vector<int> signs;
};

/// Consistent orientation by propagation across shared ridges, or nullopt when none
/// exists. Throws Error{Precondition} for non-pure complexes or a ridge in more than
/// two facets.
std::optional<Orientation> orient(const SimplicialComplex& complex);

Verdict check_orientation(const SimplicialComplex& complex, const Orientation& orientation);

// ---- group actions ----------------------------------------------------------

/// Group generated by vertex permutations.
struct PermutationAction {
  std::size_t num_vertices = 0;
  std::vector<std::vector<std::size_t>> generators;

  /// Every group element, identity first. Throws Error{InvalidParameter} for non-permutations.
  [[nodiscard]] std::vector<std::vector<std::size_t>> elements() const;
  [[nodiscard]] std::size_t order() const { return elements().size(); }
};

/// Z_r shifting the rows of Δ_{r,n}: (i, j) -> (i+1 mod r, j).
PermutationAction row_shift_action(std::size_t rows, std::size_t cols);

/// Diagonal action on a join: generators are paired positionally.
PermutationAction join_action(const PermutationAction& a, const PermutationAction& b);

/// True iff no nontrivial element maps a nonempty face onto itself.
/// Throws Error{ClosureViolation} if some generator does not map facets to facets.
bool is_free_action(const SimplicialComplex& complex, const PermutationAction& action);

// ---- test map degree --------------------------------------------------------

/// Image point per vertex.
struct PLMap {
  std::size_t target_dim = 0;
  std::vector<Vector> images;
};

/// (Δ_{r,r-1})^{*(d+1)}
SimplicialComplex test_map_domain(std::size_t r, std::size_t d);

/// Vertex (factor i, row j, col c) goes to u_i ⊗ w_j with u_0 = (1,-1,...,-1),
/// u_i = (1, e_i) and w_j the first r-1 coordinates of r e_j - (1,...,1).
PLMap test_map(std::size_t r, std::size_t d);

struct DegreeCount {
  long long degree = 0;
  std::size_t preimages = 0;
};

/// Signed count of facets whose image cone contains the ray through `value`, or
/// nullopt when `value` is not regular (hits a lower-dimensional cone).
std::optional<DegreeCount> pl_degree(const SimplicialComplex& complex, const Orientation& orientation,
                                     const PLMap& map, const Vector& value);

struct DegreeReport {
  std::size_t r = 0;
  std::size_t d = 0;
  long long degree = 0;           // sign depends on the chosen orientation
  long long check_degree = 0;     // from a second regular value
  std::uint64_t abs_degree = 0;
  std::uint64_t residue = 0;      // degree mod r in [0, r)
  std::uint64_t expected = 0;     // (r-1)!^{d+1}
  std::size_t preimages = 0;
  std::size_t facets = 0;
  std::size_t perturbations = 0;  // re-picks needed for the primary value
  Vector regular_value;
  bool free_action = false;
};

/// Throws Error{NonOrientable} (never expected) and Error{InvalidParameter} for r < 2.
DegreeReport test_map_degree(std::size_t r, std::size_t d, std::size_t facet_cap = kDefaultFacetCap);

// ---- dimension bookkeeping --------------------------------------------------

struct DimsReport {
  std::size_t s = 0;
  long long dim_k = 0;        // s - 1
  long long dim_k_prime = 0;  // (r-1)(m+1) - 1, m+1 classes
  std::size_t n_sphere = 0;   // (r-1)(d+1)
  std::size_t rank_e = 0;     // r(d-k)
  std::size_t rank_delta = 0; // d-k
  std::size_t rank_c = 0;     // (r-1)(d-k)
  bool constructed = false;   // complexes were small enough to build
  bool consistent = true;     // constructed dimensions match the formulas
};

/// Throws Error{InvalidParameter} for class sizes above r-1, r < 2 or k > d.
DimsReport dims_report(const std::vector<std::size_t>& profile, std::size_t r, std::size_t d, std::size_t k,
                       std::size_t facet_cap = kDefaultFacetCap);

}  // namespace ctv::topology
