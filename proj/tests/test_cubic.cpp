#include <doctest.h>

#include "fano/cubic.hpp"
#include "fano/sampling.hpp"
#include "support/oracles.hpp"

using namespace fano;
using namespace fano::cubic;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

So5Coeffs coeffs(std::initializer_list<std::tuple<int, int, long>> entries) {
  So5Coeffs a;
  for (auto [i, j, v] : entries) a.set(i, j, Rational(v));
  return a;
}

RationalVector as_vector(const So5Coeffs& a) { return {a.values().begin(), a.values().end()}; }

}  // namespace

TEST_SUITE("cubic") {
  TEST_CASE("cubic form validation") {
    CHECK_THROWS_AS(CubicForm(P("Z_0^3 + Z_1^2")), Error);
    CHECK_THROWS_AS(CubicForm{Polynomial()}, Error);
    CHECK_THROWS_AS(CubicForm(P("Z_0^3 + Z_5^3")), Error);
    CHECK(CubicForm::fermat().partials_rank() == 5);
    const CubicForm degenerate(P("Z_0^3"));
    CHECK(degenerate.partials_rank() == 1);
    CHECK_FALSE(degenerate.has_independent_partials());
  }

  TEST_CASE("partials rank against the minor oracle") {
    Sampler s(41);
    for (int t = 0; t < 5; ++t) {
      const CubicForm f = s.cubic();
      std::vector<RationalVector> rows;
      for (const auto& p : f.partials()) rows.push_back(quadric_coordinates(p));
      CHECK(oracle::gauss_rank(RationalMatrix::from_rows(rows)) == f.partials_rank());
    }
  }

  TEST_CASE("epsilon basis") {
    const auto basis = epsilon_basis_cubic();
    CHECK(basis.size() == 10);
    CHECK(basis[0].i == 0);
    CHECK(basis[0].j == 1);
    CHECK(basis[0].form.components.at(0) == P("Z_1"));
    CHECK(basis[0].form.components.at(1) == P("-Z_0"));
    for (const auto& e : basis) {
      ProjectiveForm sum = epsilon(e.i, e.j);
      for (const auto& [k, g] : epsilon(e.j, e.i).components) sum.components[k] += g;
      for (const auto& [k, g] : sum.components) CHECK(g.is_zero());
    }
  }

  TEST_CASE("closed-form bracket table") {
    const auto t = bracket_table_cubic(CubicForm::fermat());
    CHECK(t.at(0, 1, 2, 3) == P("3*Z_4^2"));
    CHECK(t.at(0, 2, 3, 4) == P("-3*Z_1^2"));
    CHECK(t.at(0, 1, 2, 4) == P("-3*Z_3^2"));
    CHECK(t.at(0, 1, 3, 4) == P("3*Z_2^2"));
    CHECK(t.at(1, 2, 3, 4) == P("3*Z_0^2"));
    CHECK((t.at(0, 1, 2, 3) + t.at(1, 0, 2, 3)).is_zero());
    CHECK(t.at(3, 2, 1, 0) == t.at(0, 1, 2, 3));
    CHECK(t.at(0, 0, 2, 3).is_zero());
  }

  TEST_CASE("chart verification of the table") {
    const auto fermat = verify_bracket_table_chart(CubicForm::fermat());
    CHECK(fermat.chart_index == 0);
    CHECK(fermat.entries.size() == 5);
    CHECK(fermat.all_passed());
    CHECK(verify_bracket_table_chart(CubicForm(P("Z_0^3+Z_1^3+Z_2^3+Z_3^3+Z_4^3+Z_0*Z_1*Z_2"))).all_passed());
  }

  TEST_CASE("fault injection in the table") {
    const CubicForm f = CubicForm::fermat();
    auto table = bracket_table_cubic(f);
    table.set_sorted_entry({0, 1, 2, 3}, -table.sorted_entry({0, 1, 2, 3}));
    const auto report = verify_bracket_table_chart(f, table);
    for (const auto& e : report.entries) CHECK(e.passed == (e.indices != Quadruple{0, 1, 2, 3}));
  }

  TEST_CASE("every dehomogenization gives the same brackets") {
    const CubicForm f(P("Z_0^3+Z_1^3+Z_2^3+Z_3^3+Z_4^3+Z_0*Z_1*Z_2"));
    Sampler s(42);
    const So5Coeffs a = s.so5(), b = s.so5();
    for (int k = 0; k < 5; ++k) CHECK(chart_bracket_agrees(f, CubicChart::at(f, k), a, b));
  }

  TEST_CASE("chart fallback when the first chart degenerates") {
    const CubicForm f(P("Z_0^3+Z_1^3+Z_2^3+Z_3^3"));
    const CubicChart chart = CubicChart::choose(f);
    CHECK(chart.dehomogenized_index() == 4);
    CHECK(verify_bracket_table_chart(f).chart_index == 4);
    CHECK(verify_bracket_table_chart(f).all_passed());
    CHECK_THROWS_AS(CubicChart::at(f, 0), Error);
    CHECK_THROWS_AS(CubicChart::choose(CubicForm(P("Z_0^3"))), Error);
  }

  TEST_CASE("plucker alphas") {
    for (const auto& x : plucker_alphas(coeffs({{0, 1, 1}}))) CHECK(x.is_zero());
    const auto al = plucker_alphas(coeffs({{0, 1, 1}, {2, 3, 1}}));
    CHECK(al[0] == Rational(1));
    for (int n = 1; n < 5; ++n) CHECK(al[n].is_zero());
    std::array<Rational, 5> u{1, 0, 0, 0, 0}, v{0, 1, 1, 0, 0};
    for (const auto& x : plucker_alphas(So5Coeffs::decomposable(u, v))) CHECK(x.is_zero());
  }

  TEST_CASE("Poisson test examples") {
    const CubicForm f = CubicForm::fermat();
    CHECK(is_poisson_cubic(f, coeffs({{0, 1, 1}})));
    const So5Coeffs b = coeffs({{0, 1, 1}, {2, 3, 1}});
    CHECK_FALSE(is_poisson_cubic(f, b));
    CHECK(bracket(bracket_table_cubic(f), b, b) == P("12*Z_4^2"));
    Sampler s(43);
    for (int t = 0; t < 10; ++t) CHECK(is_poisson_cubic(f, s.decomposable_so5()));
  }

  TEST_CASE("Poisson test with dependent partials uses only the expansion") {
    const CubicForm f(P("Z_0^3"));
    const auto check = check_poisson_cubic(f, coeffs({{1, 2, 1}, {0, 3, 1}}));
    CHECK_FALSE(check.plucker_applicable);
    CHECK_FALSE(check.alphas_vanish);
    CHECK(check.expansion_vanishes);
    CHECK(check.poisson);
  }

  TEST_CASE("expansion identity for random bivectors") {
    Sampler s(44);
    const CubicForm f = s.cubic();
    const auto table = bracket_table_cubic(f);
    for (int t = 0; t < 30; ++t) {
      const So5Coeffs a = s.so5();
      CHECK(bracket(table, a, a) == alpha_expansion(f, a));
    }
  }

  TEST_CASE("direct chart bracket agrees with the table bracket") {
    Sampler s(45);
    const CubicForm f = s.cubic();
    const CubicChart chart = CubicChart::choose(f);
    for (int t = 0; t < 5; ++t) CHECK(chart_bracket_agrees(f, chart, s.so5(), s.so5()));
  }

  TEST_CASE("c matrix examples") {
    const CubicForm f = CubicForm::fermat();
    const RationalMatrix c = c_matrix(f, coeffs({{0, 1, 1}}));
    CHECK(c.rows() == 15);
    CHECK(c.cols() == 10);
    auto column_of = [&](int k, int l) { return c.column(So5Coeffs::pair_position(k, l)); };
    CHECK(column_of(2, 3) == quadric_coordinates(P("3*Z_4^2")));
    CHECK(column_of(2, 4) == quadric_coordinates(P("-3*Z_3^2")));
    CHECK(column_of(3, 4) == quadric_coordinates(P("3*Z_2^2")));
    for (const auto& [k, l] : So5Coeffs::pairs())
      if (!(k >= 2 && l >= 3)) CHECK(is_zero(column_of(k, l)));
    CHECK(c_matrix(f, So5Coeffs()).is_zero());
  }

  TEST_CASE("quadric monomial order") {
    const auto& m = quadric_monomials();
    CHECK(m.size() == 15);
    CHECK(m.front() == Monomial(homogeneous(0), 2));
    CHECK(m[1] == Monomial::from_factors({{homogeneous(0), 1}, {homogeneous(1), 1}}));
    CHECK(m.back() == Monomial(homogeneous(4), 2));
  }

  TEST_CASE("cohomology of the Fermat cubic at a01 = 1") {
    const CubicForm f = CubicForm::fermat();
    const So5Coeffs a = coeffs({{0, 1, 1}});
    const RationalMatrix c = c_matrix(f, a);
    std::vector<RationalVector> nonzero;
    for (auto [k, l] : {std::pair{2, 3}, {2, 4}, {3, 4}}) nonzero.push_back(c.column(So5Coeffs::pair_position(k, l)));
    CHECK(oracle::minor_rank(RationalMatrix::from_columns(nonzero, 15)) == 3);
    const auto report = cohomology_dims_cubic(f, a);
    CHECK(report.dims == std::array<long, 4>{1, 0, 17, 12});
    CHECK(report.ranks.front().second == 3);
    CHECK(cohomology_dims_cubic(f, a.scaled(Rational(7))).dims == report.dims);
  }

  TEST_CASE("cohomology preconditions") {
    const CubicForm f = CubicForm::fermat();
    CHECK_THROWS_AS(cohomology_dims_cubic(f, So5Coeffs()), Error);
    try {
      cohomology_dims_cubic(f, coeffs({{0, 1, 1}, {2, 3, 1}}));
      FAIL("expected NotPoisson");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPoisson);
    }
  }

  TEST_CASE("decomposable samples: self-annihilation, Euler characteristic, scale invariance") {
    Sampler s(46);
    for (const CubicForm& f : {CubicForm::fermat(), s.cubic()}) {
      for (int t = 0; t < 10; ++t) {
        const So5Coeffs a = s.decomposable_so5();
        CHECK(is_zero(c_matrix(f, a) * as_vector(a)));
        const auto report = cohomology_dims_cubic(f, a);
        CHECK(report.euler_characteristic() == 6);
        CHECK(oracle::gauss_rank(c_matrix(f, a)) == report.ranks.front().second);
        CHECK(cohomology_dims_cubic(f, a.scaled(Rational(-3, 7))).dims == report.dims);
      }
    }
  }
}
