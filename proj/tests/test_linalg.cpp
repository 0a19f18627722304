#include <doctest.h>

#include "fano/linalg.hpp"
#include "fano/quintic.hpp"
#include "fano/sampling.hpp"
#include "support/oracles.hpp"

using namespace fano;

namespace {

RationalMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> r;
  for (auto row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return RationalMatrix::from_rows(r);
}

RationalMatrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols, std::size_t target_rank) {
  RationalMatrix a(rows, target_rank), b(target_rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < target_rank; ++j) a(i, j) = s.rational(9);
  for (std::size_t i = 0; i < target_rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = s.rational(9);
  return a * b;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank examples") {
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix(4, 5)) == 0);
    CHECK(rank(M({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(RationalMatrix()) == 0);
  }

  TEST_CASE("rank with fractional entries") {
    RationalMatrix m(2, 2);
    m(0, 0) = Rational(1, 3);
    m(0, 1) = Rational(1, 2);
    m(1, 0) = Rational(2, 3);
    m(1, 1) = Rational(1);
    CHECK(rank(m) == 1);
  }

  TEST_CASE("nullspace examples") {
    CHECK(nullspace(RationalMatrix::identity(3)).empty());
    CHECK(nullspace(RationalMatrix(2, 3)).size() == 3);
    const auto k = nullspace(M({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK_FALSE(k[0][0].is_zero());
  }

  TEST_CASE("reduced row echelon form") {
    const auto [r, pivots] = reduced_row_echelon(M({{2, 4, 2}, {1, 2, 3}}));
    CHECK(pivots == std::vector<std::size_t>{0, 2});
    CHECK(r(0, 0) == Rational(1));
    CHECK(r(0, 1) == Rational(2));
    CHECK(r(1, 2) == Rational(1));
    CHECK(r(0, 2).is_zero());
  }

  TEST_CASE("solve_coordinates examples") {
    const std::vector<RationalVector> e{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    const auto c = solve_coordinates(e, {Rational(3), Rational(-1)});
    REQUIRE(c.has_value());
    CHECK(*c == RationalVector{Rational(3), Rational(-1)});
    const std::vector<RationalVector> line{{Rational(1), Rational(1), Rational(0)}};
    CHECK_FALSE(solve_coordinates(line, {Rational(1), Rational(0), Rational(0)}).has_value());
    const std::vector<RationalVector> dependent{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(solve_coordinates(dependent, {Rational(1), Rational(2)}), Error);
  }

  TEST_CASE("bracket coordinates in the restricted quadric basis") {
    const auto basis = quintic::anticanonical_basis_quintic();
    std::vector<std::vector<Polynomial>> items;
    for (const auto& q : basis) items.push_back({q.value});
    ChartForm half = schouten_bivector_bivector(quintic::restrict(epsilon(2, 3)), quintic::restrict(epsilon(5, 8)));
    half *= Polynomial(Rational(1, 2));
    items.push_back({half.value()});
    const auto system = CoordinateSystem::spanning(items);
    std::vector<RationalVector> vectors;
    for (std::size_t n = 0; n + 1 < items.size(); ++n) vectors.push_back(system.coordinates(items[n]));
    const auto c = solve_coordinates(vectors, system.coordinates(items.back()));
    REQUIRE(c.has_value());
    for (std::size_t n = 0; n < basis.size(); ++n) {
      const auto pair = std::pair{basis[n].i, basis[n].j};
      Rational expected;
      if (pair == std::pair{0, 1}) expected = Rational(-5);
      if (pair == std::pair{2, 3}) expected = Rational(-1);
      if (pair == std::pair{5, 8}) expected = Rational(2);
      CHECK((*c)[n] == expected);
    }
  }

  TEST_CASE("rank properties on random matrices") {
    Sampler s(31);
    for (int t = 0; t < 30; ++t) {
      const std::size_t rows = 2 + static_cast<std::size_t>(s.integer(0, 5));
      const std::size_t cols = 2 + static_cast<std::size_t>(s.integer(0, 5));
      const std::size_t r = static_cast<std::size_t>(s.integer(0, static_cast<long>(std::min(rows, cols))));
      const RationalMatrix m = random_matrix(s, rows, cols, r);
      const std::size_t got = rank(m);
      CHECK(got == rank(m.transpose()));
      CHECK(got == oracle::gauss_rank(m));
      if (rows <= 5 && cols <= 5) CHECK(got == oracle::minor_rank(m));
      const auto kernel = nullspace(m);
      CHECK(got + kernel.size() == cols);
      for (const auto& v : kernel) CHECK(is_zero(m * v));
    }
  }

  TEST_CASE("solve_coordinates round trip") {
    Sampler s(32);
    for (int t = 0; t < 20; ++t) {
      std::vector<RationalVector> basis;
      for (int k = 0; k < 3; ++k) {
        RationalVector v(6);
        for (auto& x : v) x = s.rational(9);
        basis.push_back(v);
      }
      RationalMatrix cols = RationalMatrix::from_columns(basis, 6);
      if (rank(cols) < 3) continue;
      RationalVector coeffs{s.rational(), s.rational(), s.rational()};
      const RationalVector target = cols * coeffs;
      const auto got = solve_coordinates(basis, target);
      REQUIRE(got.has_value());
      CHECK(*got == coeffs);
    }
  }

  TEST_CASE("coordinate system over polynomial tuples") {
    const Polynomial x = parse_polynomial("x"), y = parse_polynomial("y");
    const std::vector<std::vector<Polynomial>> items{{x, Polynomial()}, {Polynomial(), x + y}, {x, x + y}};
    const auto system = CoordinateSystem::spanning(items);
    CHECK(system.keys.size() == 3);
    CHECK(rank(system.matrix(items)) == 2);
    CHECK_FALSE(system.try_coordinates({parse_polynomial("z"), Polynomial()}).has_value());
  }
}
