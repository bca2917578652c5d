#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctv/topology.hpp"
#include "oracles.hpp"

using namespace ctv;
using namespace ctv::topology;

namespace {

long long euler_from_betti(const std::vector<std::size_t>& betti) {
  long long chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[i]);
  return chi;
}

SimplicialComplex mobius_strip() {
  // Five triangles around a strip; the ends are glued with a twist.
  return SimplicialComplex(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
}

std::uint64_t falling(std::size_t n, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= n - i;
  return out;
}

}  // namespace

TEST_CASE("chessboard f-vectors") {
  CHECK(chessboard_complex(3, 2).f_vector() == std::vector<std::size_t>{6, 6});
  const auto d43 = chessboard_complex(4, 3);
  CHECK(d43.f_vector() == std::vector<std::size_t>{12, 36, 24});
  CHECK(d43.euler_characteristic() == 0);
  const auto s0 = chessboard_complex(2, 1);
  CHECK(s0.f_vector() == std::vector<std::size_t>{2});
  CHECK(s0.facets().size() == 2);
  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t n = 1; n <= r; ++n) CHECK(chessboard_complex(r, n).facets().size() == falling(r, n));
  }
  CHECK(chessboard_complex(2, 3).facets().size() == 6);
}

TEST_CASE("normalization keeps maximal facets only") {
  const SimplicialComplex c(4, {{2, 1}, {1, 2, 3}, {0}, {3, 1}});
  CHECK(c.facets() == std::vector<Face>{{0}, {1, 2, 3}});
  CHECK_FALSE(c.is_pure());
  CHECK(c.dimension() == 2);
  CHECK_THROWS_AS(SimplicialComplex(2, {{0, 2}}), Error);
}

TEST_CASE("joins") {
  const auto s0 = chessboard_complex(2, 1);
  const auto circle = join(s0, s0);
  CHECK(circle.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(homology_mod_p(circle, 2) == std::vector<std::size_t>{1, 1});
  const auto hex = chessboard_complex(3, 2);
  CHECK(join(hex, hex).dimension() == 3);
  CHECK(chessboard_join({2, 2, 2, 1}, 3).dimension() == 6);
  CHECK(join(join(s0, hex), s0).f_vector() == join(s0, join(hex, s0)).f_vector());
  CHECK(join(SimplicialComplex(), hex).f_vector() == hex.f_vector());
}

TEST_CASE("Betti numbers agree with the Smith normal form oracle") {
  const std::vector<std::pair<std::size_t, std::size_t>> boards{{3, 2}, {4, 3}, {2, 2}, {3, 3}, {4, 2}, {5, 2}, {2, 1}};
  for (const auto& [r, n] : boards) {
    const auto c = chessboard_complex(r, n);
    for (unsigned p : {2U, 3U, 5U}) {
      const auto betti = homology_mod_p(c, p);
      CHECK(betti == oracle::betti_via_snf(c.facets(), p));
      CHECK(euler_from_betti(betti) == c.euler_characteristic());
    }
  }
  CHECK(homology_mod_p(chessboard_complex(3, 2), 3) == std::vector<std::size_t>{1, 1});
  CHECK(homology_mod_p(chessboard_complex(4, 3), 2) == std::vector<std::size_t>{1, 2, 1});
  CHECK(homology_mod_p(chessboard_complex(4, 3), 3) == std::vector<std::size_t>{1, 2, 1});
  CHECK(homology_mod_p(SimplicialComplex(1, {{0}}), 2) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(homology_mod_p(chessboard_complex(3, 2), 4), Error);
}

TEST_CASE("projective plane separates coefficients") {
  // Six-vertex real projective plane: torsion shows up mod 2 only.
  const SimplicialComplex rp2(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                  {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
  CHECK(homology_mod_p(rp2, 2) == std::vector<std::size_t>{1, 1, 1});
  CHECK(homology_mod_p(rp2, 3) == std::vector<std::size_t>{1, 0, 0});
  CHECK(oracle::betti_via_snf(rp2.facets(), 2) == std::vector<std::size_t>{1, 1, 1});
  CHECK(is_pseudo_manifold(rp2));
  CHECK_FALSE(orient(rp2));
}

TEST_CASE("suspension shifts homology up by one") {
  const auto s0 = chessboard_complex(2, 1);
  for (const auto& x : {chessboard_complex(2, 1), chessboard_complex(3, 2)}) {
    auto reduced = homology_mod_p(x, 3);
    reduced[0] -= 1;
    auto susp = homology_mod_p(join(s0, x), 3);
    susp[0] -= 1;
    CHECK(susp[0] == 0);
    for (std::size_t i = 0; i < reduced.size(); ++i) CHECK(susp[i + 1] == reduced[i]);
  }
}

TEST_CASE("pseudo-manifolds and orientations") {
  for (std::size_t r = 2; r <= 5; ++r) {
    const auto c = chessboard_complex(r, r - 1);
    CHECK(is_pseudo_manifold(c));
    const auto o = orient(c);
    REQUIRE(o);
    CHECK(check_orientation(c, *o));
  }
  const auto torus = chessboard_complex(4, 3);
  REQUIRE(orient(torus));

  const SimplicialComplex dangling(5, {{0, 1, 2}, {1, 2, 3}, {3, 4}});
  const auto rep = is_pseudo_manifold(dangling);
  CHECK_FALSE(rep);
  CHECK(rep.reason.find("pure") != std::string::npos);

  const SimplicialComplex open_disk(4, {{0, 1, 2}, {1, 2, 3}});
  const auto disk_rep = is_pseudo_manifold(open_disk);
  CHECK_FALSE(disk_rep);
  CHECK(disk_rep.violating_ridge.has_value());

  CHECK_FALSE(orient(mobius_strip()));
  CHECK_THROWS_AS(orient(dangling), Error);

  auto flipped = *orient(chessboard_complex(3, 2));
  flipped.signs[0] = -flipped.signs[0];
  CHECK_FALSE(check_orientation(chessboard_complex(3, 2), flipped));
}

TEST_CASE("free actions") {
  const auto hex = chessboard_complex(3, 2);
  CHECK(row_shift_action(3, 2).order() == 3);
  CHECK(is_free_action(hex, row_shift_action(3, 2)));
  CHECK(is_free_action(chessboard_complex(2, 2), row_shift_action(2, 2)));
  CHECK(is_free_action(hex, PermutationAction{6, {}}));

  // Swapping rows and columns together maps the facet {(0,0),(1,1)} onto itself.
  PermutationAction both{4, {{3, 2, 1, 0}}};
  CHECK_FALSE(is_free_action(chessboard_complex(2, 2), both));

  PermutationAction broken{6, {{1, 0, 2, 3, 4, 5}}};
  CHECK_THROWS_AS(is_free_action(hex, broken), Error);
}

TEST_CASE("test map degree") {
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 0}};
  for (const auto& [r, d] : cases) {
    const auto rep = test_map_degree(r, d);
    CHECK(rep.abs_degree == rep.expected);
    CHECK(rep.check_degree == rep.degree);
    CHECK((rep.residue == 1 || rep.residue == r - 1));
    CHECK(rep.free_action);
  }
  CHECK(test_map_degree(3, 1).abs_degree == 4);
  CHECK(test_map_degree(3, 0).abs_degree == 2);
  CHECK(test_map_degree(2, 1).abs_degree == 1);

  const auto domain = test_map_domain(3, 1);
  const auto map = test_map(3, 1);
  const auto o = orient(domain);
  REQUIRE(o);
  const Vector on_wall = map.images[0];  // a vertex image lies on cone boundaries
  CHECK_FALSE(pl_degree(domain, *o, map, on_wall));
}

TEST_CASE("dimension bookkeeping") {
  const auto rep = dims_report({2, 2, 2, 1}, 3, 2, 0);
  CHECK(rep.s == 7);
  CHECK(rep.dim_k == 6);
  CHECK(rep.n_sphere == 6);
  CHECK(rep.constructed);
  CHECK(rep.consistent);
  CHECK(dims_report({1, 1, 1}, 2, 3, 1).rank_c == 2);
  CHECK(dims_report({1}, 3, 2, 2).rank_c == 0);
  CHECK_THROWS_AS(dims_report({3}, 3, 2, 0), Error);
}
