#include <doctest.h>

#include <random>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "toricflex/cone_geometry.hpp"
#include "toricflex/errors.hpp"

using namespace toricflex;

namespace {

IntVector v(std::initializer_list<long> e) { return make_vector(e); }

std::set<IntVector> as_set(const std::vector<IntVector>& vs) { return {vs.begin(), vs.end()}; }

void check_normals_dual(const std::vector<IntVector>& gens) {
  const auto normals = facet_normals(gens);
  REQUIRE(normals.size() == gens.size());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    CHECK(content(normals[i]) == 1);
    std::size_t zeros = 0, positive = 0;
    for (const auto& g : gens) {
      const int s = sgn(dot(normals[i], g));
      zeros += s == 0;
      positive += s > 0;
    }
    CHECK(zeros == gens.size() - 1);
    CHECK(positive == 1);
    CHECK(sgn(dot(normals[i], gens[i])) > 0);
  }
}

std::vector<IntVector> random_independent(std::mt19937& rng, std::size_t count, std::size_t n, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (;;) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < count; ++i) {
      IntVector g(n);
      for (auto& e : g) e = entry(rng);
      if (content(g) == 0) break;
      gens.push_back(primitivize(g));
    }
    if (gens.size() == count && oracle::minor_rank(IntMatrix::from_rows(gens)) == count) return gens;
  }
}

}  // namespace

TEST_CASE("facet normals of worked cones") {
  CHECK(as_set(facet_normals(std::vector{v({1, 0}), v({0, 1})})) == as_set({v({1, 0}), v({0, 1})}));

  const std::vector cone{v({1, 0}), v({1, 2})};
  CHECK(as_set(facet_normals(cone)) == as_set({v({2, -1}), v({0, 1})}));
  check_normals_dual(cone);

  // Dual to (0,1) is (-1,1) and dual to (-1,-1) is (-1,0).
  const std::vector p2_cone{v({0, 1}), v({-1, -1})};
  CHECK(facet_normals(p2_cone) == std::vector{v({-1, 1}), v({-1, 0})});
  check_normals_dual(p2_cone);
}

TEST_CASE("facet normals of lower-dimensional cones stay in the span") {
  const std::vector<IntVector> ray{v({2, 1, 0})};
  CHECK(facet_normals(ray) == std::vector<IntVector>{v({2, 1, 0})});
  const std::vector plane{v({1, 0, 0}), v({1, 1, 0})};
  check_normals_dual(plane);
  for (const auto& n : facet_normals(plane)) CHECK(n[2] == 0);
  CHECK(facet_normals(std::vector<IntVector>{}).empty());
}

TEST_CASE("facet normal duality on random simplicial cones") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    check_normals_dual(random_independent(rng, dim, 3, 4));
  }
}

TEST_CASE("cone_contains") {
  const Fan f(2, {v({1, 0}), v({0, 1})}, {Cone{0, 1}});
  CHECK(cone_contains(f, Cone{0, 1}, v({3, 5})));
  CHECK_FALSE(cone_contains(f, Cone{0, 1}, v({-1, 0})));
  CHECK(cone_contains(f, Cone{0}, v({2, 0})));
  CHECK_FALSE(cone_contains(f, Cone{0}, v({2, 1})));
  CHECK(cone_contains(f, Cone{}, v({0, 0})));
  CHECK_FALSE(cone_contains(f, Cone{}, v({0, 1})));
  CHECK_THROWS_AS(cone_contains(f, Cone{0}, v({1, 0, 0})), Error);
}

TEST_CASE("generators are in the cone and their negatives are not") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto gens = random_independent(rng, 1 + trial % 3, 3, 5);
    for (const auto& g : gens) {
      CHECK(cone_contains(gens, g));
      IntVector neg(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
      CHECK_FALSE(cone_contains(gens, neg));
    }
  }
}

TEST_CASE("face lattice") {
  const FaceLattice two = face_lattice(Cone{3, 7});
  REQUIRE(two.faces.size() == 4);
  std::vector<std::size_t> dims;
  for (const auto& f : two.faces) dims.push_back(f.dim);
  CHECK(dims == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(two.faces.front().cone.empty());
  CHECK(two.faces.back().cone == Cone{3, 7});

  CHECK(face_lattice(Cone{}).faces.size() == 1);
  const FaceLattice three = face_lattice(Cone{0, 1, 2});
  CHECK(three.faces.size() == 8);
  std::set<Cone> distinct;
  for (const auto& f : three.faces) {
    CHECK(f.cone.is_subset_of(Cone{0, 1, 2}));
    CHECK(orbit_codim(f.cone) == f.dim);
    CHECK(f.dim == f.cone.size());
    distinct.insert(f.cone);
  }
  CHECK(distinct.size() == 8);
}

TEST_CASE("orbit codimension") {
  CHECK(orbit_codim(Cone{}) == 0);
  CHECK(orbit_codim(Cone{4}) == 1);
  CHECK(orbit_codim(Cone{0, 1, 2}) == 3);
}

TEST_CASE("quotient groups") {
  const Fan f(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, 1, 0}), v({1, 0, 1}), v({0, 1, 1})},
              {Cone{0, 1, 2}, Cone{3, 4, 5}});
  CHECK(quotient_group(f, Cone{0, 1, 2}).trivial());
  CHECK(quotient_group(f, Cone{0, 1, 2}).order == 1);

  const IntMatrix m{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  REQUIRE(oracle::minor_gcd(m, 2) == 1);
  REQUIRE(abs(oracle::cofactor_det(oracle::rows_of(m))) == 2);
  const QuotientGroup g = quotient_group(f, Cone{3, 4, 5});
  CHECK(g.invariant_factors == make_vector({2}));
  CHECK(g.order == 2);

  const std::vector rank2{v({1, 0}), v({1, 2})};
  CHECK(quotient_group(rank2, 2).invariant_factors == make_vector({2}));
  CHECK(quotient_group(rank2, 2).order == 2);

  const std::vector non_cyclic{v({2, 0}), v({0, 2})};
  CHECK(quotient_group(non_cyclic, 2).invariant_factors == make_vector({2, 2}));
  CHECK(quotient_group(non_cyclic, 2).order == 4);

  try {
    quotient_group(f, Cone{0, 1});
    FAIL("expected NotFullDimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFullDimensional);
  }
}

TEST_CASE("quotient order equals |det| on random full-dimensional cones") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto gens = random_independent(rng, 3, 3, 6);
    const QuotientGroup g = quotient_group(gens, 3);
    CHECK(g.order == abs(det(IntMatrix::from_rows(gens))));
    CHECK(g.order == abs(oracle::cofactor_det(gens)));
    for (const auto& d : g.invariant_factors) CHECK(d > 1);
  }
}

TEST_CASE("smooth iff unimodular iff trivial quotient, rank 2") {
  std::vector<IntVector> prim;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      if (std::gcd(a, b) == 1) prim.push_back(v({a, b}));
  for (const auto& a : prim)
    for (const auto& b : prim) {
      const std::vector pair{a, b};
      const Integer d = oracle::cofactor_det(pair);
      if (d == 0) continue;
      const bool unimodular = abs(d) == 1;
      CHECK(extends_to_z_basis(pair, 2) == unimodular);
      CHECK(quotient_group(pair, 2).trivial() == unimodular);
    }
}

TEST_CASE("pairwise intersection test") {
  SUBCASE("projective plane cones meet along shared rays") {
    const Fan f(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {Cone{0, 1}, Cone{1, 2}, Cone{0, 2}});
    CHECK(meet_in_common_face(f, Cone{0, 1}, Cone{1, 2}));
    CHECK(meet_in_common_face(f, Cone{0, 1}, Cone{0, 2}));
    CHECK(meet_in_common_face(f, Cone{1, 2}, Cone{0, 2}));
  }
  SUBCASE("overlapping planar cones") {
    const Fan f(2, {v({1, 0}), v({0, 1}), v({1, 1}), v({-1, 2})}, {Cone{0, 1}, Cone{2, 3}});
    CHECK_FALSE(meet_in_common_face(f, Cone{0, 1}, Cone{2, 3}));
  }
  SUBCASE("cones sharing a ray but overlapping beyond it") {
    const Fan f(2, {v({1, 0}), v({0, 1}), v({1, 1})}, {Cone{0, 1}, Cone{0, 2}});
    CHECK_FALSE(meet_in_common_face(f, Cone{0, 1}, Cone{0, 2}));
  }
  SUBCASE("crossing cones with no generator inside the other") {
    const Fan f(3, {v({1, 0, 0}), v({0, 1, 0}), v({1, 1, 1}), v({1, 1, -1})}, {Cone{0, 1}, Cone{2, 3}});
    CHECK_FALSE(cone_contains(f, Cone{0, 1}, v({1, 1, 1})));
    CHECK_FALSE(meet_in_common_face(f, Cone{0, 1}, Cone{2, 3}));
  }
  SUBCASE("opposite rays") {
    const Fan f(2, {v({1, 0}), v({-1, 0})}, {Cone{0}, Cone{1}});
    CHECK(meet_in_common_face(f, Cone{0}, Cone{1}));
  }
  SUBCASE("skew planes meeting at the origin only") {
    const Fan f(4, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0}), v({0, 0, 0, 1})}, {Cone{0, 1}, Cone{2, 3}});
    CHECK(meet_in_common_face(f, Cone{0, 1}, Cone{2, 3}));
  }
}
