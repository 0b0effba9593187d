#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricflex/errors.hpp"
#include "toricflex/int_matrix.hpp"

using namespace toricflex;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return make_vector(v); }

void check_snf_invariants(const IntMatrix& m) {
  const SnfResult s = snf(m);
  REQUIRE(s.U.rows() == m.rows());
  REQUIRE(s.V.cols() == m.cols());
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(oracle::cofactor_det(oracle::rows_of(s.U))) == 1);
  CHECK(abs(oracle::cofactor_det(oracle::rows_of(s.V))) == 1);
  CHECK(oracle::is_diagonal(s.D));
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    CHECK(s.invariant_factors[i] > 0);
    CHECK(s.D(i, i) == s.invariant_factors[i]);
    if (i + 1 < s.invariant_factors.size())
      CHECK(mpz_divisible_p(s.invariant_factors[i + 1].get_mpz_t(), s.invariant_factors[i].get_mpz_t()));
  }
  for (std::size_t i = s.invariant_factors.size(); i < std::min(m.rows(), m.cols()); ++i) CHECK(s.D(i, i) == 0);
}

}  // namespace

TEST_CASE("snf: worked examples") {
  SUBCASE("identity") {
    const SnfResult s = snf(IntMatrix{{1, 0}, {0, 1}});
    CHECK(s.D == IntMatrix{{1, 0}, {0, 1}});
    CHECK(s.invariant_factors == ints({1, 1}));
  }
  SUBCASE("[[2,4],[6,8]]") {
    const IntMatrix m{{2, 4}, {6, 8}};
    // d1 = gcd of entries = 2, d1 * d2 = |det| = 8.
    REQUIRE(oracle::invariant_factors(m) == ints({2, 4}));
    CHECK(snf(m).invariant_factors == ints({2, 4}));
    check_snf_invariants(m);
  }
  SUBCASE("rank one") {
    CHECK(snf(IntMatrix{{1, 0}, {0, 0}}).invariant_factors == ints({1}));
  }
  SUBCASE("zero matrix has no factors") {
    const IntMatrix z(2, 3);
    CHECK(snf(z).invariant_factors.empty());
    check_snf_invariants(z);
  }
  SUBCASE("rectangular") {
    const IntMatrix m{{1, 1, 0}, {0, 2, 0}};
    CHECK(snf(m).invariant_factors == oracle::invariant_factors(m));
    check_snf_invariants(m);
  }
}

TEST_CASE("snf: empty matrix is rejected") {
  CHECK_THROWS_AS(snf(IntMatrix{}), Error);
}

TEST_CASE("snf: deterministic for a fixed input") {
  const IntMatrix m{{4, -6, 9}, {3, 3, -7}, {8, 0, 2}};
  const SnfResult a = snf(m);
  const SnfResult b = snf(m);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
  CHECK(a.D == b.D);
}

TEST_CASE("snf: entries outgrow machine words") {
  IntMatrix m(3, 3);
  const Integer big("123456789012345678901234567890");
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(1, 0) = big * big;
  m(1, 1) = 7;
  m(2, 2) = big - 3;
  check_snf_invariants(m);
  CHECK(abs(det(m)) == [&] {
    Integer p = 1;
    for (const auto& d : snf(m).invariant_factors) p *= d;
    return p;
  }());
}

TEST_CASE("snf properties on random matrices") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 9);
    CAPTURE(to_string(m));
    check_snf_invariants(m);
    const SnfResult s = snf(m);
    CHECK(s.invariant_factors == oracle::invariant_factors(m));
    CHECK(rank(m) == s.invariant_factors.size());
    if (m.rows() == m.cols() && s.invariant_factors.size() == m.rows()) {
      Integer product = 1;
      for (const auto& d : s.invariant_factors) product *= d;
      CHECK(abs(det(m)) == product);
    }
  }
}

TEST_CASE("rank") {
  CHECK(rank(IntMatrix{{1, 0}, {0, 1}}) == 2);
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  const IntMatrix m{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  REQUIRE(oracle::cofactor_det(oracle::rows_of(m)) == -2);
  CHECK(rank(m) == 3);
  CHECK(rank(IntMatrix(3, 2)) == 0);
  CHECK(rank(IntMatrix{{0, 0, 5}, {0, 3, 1}, {0, 6, 2}}) == 2);
}

TEST_CASE("rank agrees with the minor oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    // Small entries make rank drops common.
    const IntMatrix m = oracle::random_matrix(rng, 4, 1);
    CAPTURE(to_string(m));
    CHECK(rank(m) == oracle::minor_rank(m));
  }
}

TEST_CASE("det") {
  CHECK(det(IntMatrix{{1, 0}, {0, 1}}) == 1);
  CHECK(det(IntMatrix{{0, 1}, {-1, -1}}) == 1);
  CHECK(det(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}) == -2);
  CHECK(det(IntMatrix{{0, 2}, {3, 0}}) == -6);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det(IntMatrix{{1, 2, 3}}), Error);
  try {
    det(IntMatrix{{1, 2, 3}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSquare);
  }

  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(rng);
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
    CHECK(det(m) == oracle::cofactor_det(oracle::rows_of(m)));
  }
}

TEST_CASE("primitivize") {
  CHECK(primitivize(ints({2, 4})) == ints({1, 2}));
  CHECK(primitivize(ints({1, 0})) == ints({1, 0}));
  CHECK(primitivize(ints({-3, -6, -9})) == ints({-1, -2, -3}));
  CHECK(primitivize(ints({0, -5})) == ints({0, -1}));
  try {
    primitivize(ints({0, 0}));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroVector);
  }

  std::mt19937 rng(3);
  std::uniform_int_distribution<long> entry(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v{entry(rng), entry(rng), entry(rng)};
    if (content(v) == 0) continue;
    const IntVector p = primitivize(v);
    CHECK(content(p) == 1);
    CHECK(primitivize(p) == p);
    // Same direction: v = g * p with g > 0.
    const Integer g = content(v);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == g * p[i]);
  }
}

TEST_CASE("extends_to_z_basis") {
  const std::vector<IntVector> basis{ints({1, 0}), ints({0, 1})};
  CHECK(extends_to_z_basis(basis, 2));
  const std::vector<IntVector> index_two{ints({1, 0}), ints({1, 2})};
  REQUIRE(oracle::invariant_factors(IntMatrix::from_rows(index_two)) == ints({1, 2}));
  CHECK_FALSE(extends_to_z_basis(index_two, 2));
  const std::vector<IntVector> single{ints({2, 3})};
  CHECK(extends_to_z_basis(single, 2));
  const std::vector<IntVector> dependent{ints({1, 0, 0}), ints({2, 0, 0})};
  CHECK_FALSE(extends_to_z_basis(dependent, 3));
  const std::vector<IntVector> ragged{ints({1, 0}), ints({0, 1, 0})};
  try {
    extends_to_z_basis(ragged, 2);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("a single primitive vector always extends to a basis") {
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 && b == 0) continue;
      const std::vector<IntVector> v{primitivize(ints({a, b}))};
      CHECK(extends_to_z_basis(v, 2));
    }
}

TEST_CASE("extends_to_z_basis matches the maximal-minor criterion") {
  // Part of a Z-basis iff the maximal minors are coprime.
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntVector> vecs(2, IntVector(3));
    for (auto& v : vecs)
      for (auto& e : v) e = entry(rng);
    const bool expected = oracle::minor_gcd(IntMatrix::from_rows(vecs), 2) == 1;
    CHECK(extends_to_z_basis(vecs, 3) == expected);
  }
}
