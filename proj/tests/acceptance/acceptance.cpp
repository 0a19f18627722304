// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fano/cubic.hpp"
#include "fano/quintic.hpp"
#include "fano/sampling.hpp"
#include "support/oracles.hpp"

using namespace fano;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0 means untimed
  std::function<Outcome()> run;
};

Polynomial P(const char* s) { return parse_polynomial(s); }

Outcome fail(std::string why) { return {false, std::move(why)}; }

// ---------------------------------------------------------------------------

Outcome cubic_table_on_charts() {
  Sampler s(1001);
  std::vector<cubic::CubicForm> forms{cubic::CubicForm::fermat()};
  for (int n = 0; n < 3; ++n) forms.push_back(s.cubic());
  // Closed forms of the five sorted entries, as signed partials F_m.
  const std::vector<std::pair<Quadruple, std::pair<int, int>>> closed{
      {{0, 1, 2, 3}, {1, 4}}, {{0, 1, 2, 4}, {-1, 3}}, {{0, 1, 3, 4}, {1, 2}},
      {{0, 2, 3, 4}, {-1, 1}}, {{1, 2, 3, 4}, {1, 0}}};
  for (const auto& f : forms) {
    const auto table = cubic::bracket_table_cubic(f);
    for (const auto& [q, sign_index] : closed) {
      const Polynomial expected = derivative(f.polynomial(), homogeneous(sign_index.second)) * Rational(sign_index.first);
      if (table.sorted_entry(q) != expected) return fail("closed-form entry mismatch");
    }
    const auto report = cubic::verify_bracket_table_chart(f);
    if (report.entries.size() != 5 || !report.all_passed()) return fail("chart verification failed for " + f.polynomial().str());
  }
  return {true, std::to_string(forms.size()) + " cubics x 5 entries"};
}

Outcome cubic_bracket_identity() {
  Sampler s(1002);
  const auto f = cubic::CubicForm::fermat();
  const auto table = cubic::bracket_table_cubic(f);
  const auto chart = cubic::CubicChart::choose(f);
  const std::array<Quadruple, 5> q{{{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}}};
  const int sign[5] = {1, -1, 1, -1, 1};
  for (int t = 0; t < 100; ++t) {
    const So5Coeffs a = s.so5();
    Polynomial expected;
    for (int m = 0; m < 5; ++m)
      expected += derivative(f.polynomial(), homogeneous(m)) * Rational(4 * sign[m]) * a.alpha(q[m][0], q[m][1], q[m][2], q[m][3]);
    if (cubic::bracket(table, a, a) != expected) return fail("expansion mismatch at sample " + std::to_string(t));
    if (t < 10 && !cubic::chart_bracket_agrees(f, chart, a, a)) return fail("chart bracket mismatch");
  }
  return {true, "100/100 samples"};
}

Outcome cubic_fermat_instance() {
  const auto f = cubic::CubicForm::fermat();
  So5Coeffs a;
  a.set(0, 1, 1);
  const RationalMatrix c = cubic::c_matrix(f, a);
  std::vector<RationalVector> nonzero;
  for (std::size_t j = 0; j < c.cols(); ++j)
    if (!is_zero(c.column(j))) nonzero.push_back(c.column(j));
  if (nonzero.size() != 3) return fail("expected three nonzero quadric columns");
  const std::size_t brute = oracle::minor_rank(RationalMatrix::from_columns(nonzero, c.rows()));
  if (brute != 3) return fail("oracle rank " + std::to_string(brute));
  const auto report = cubic::cohomology_dims_cubic(f, a);
  if (report.ranks.at(0).second != 3) return fail("library rank differs from oracle");
  if (report.dims != std::array<long, 4>{1, 0, 17, 12}) return fail("dims differ");
  return {true, "rank 3, dims (1, 0, 17, 12)"};
}

Outcome quintic_model() {
  for (const auto& p : quintic::quadrics())
    if (!quintic::restrict(p).is_zero()) return fail("quadric does not vanish");
  for (const auto& l : quintic::hyperplanes())
    if (!quintic::restrict(l).is_zero()) return fail("hyperplane does not vanish");
  return {true, "5 quadrics, 3 hyperplanes"};
}

Outcome quintic_bases() {
  const char* reference[3][3] = {
      {"-2*x_1", "-x_3", "-3*x_4"},
      {"x_1*x_3+3*x_4", "x_3^2-5*x_1", "-(2*x_1^2+x_3*x_4)"},
      {"x_3", "3", "-2*x_1"},
  };
  for (int i = 0; i < 3; ++i) {
    const ChartMultivector v = quintic::restrict(quintic::vector_fields()[i]);
    for (int c = 0; c < 3; ++c)
      if (v.coefficient(1u << c) != P(reference[i][c])) return fail("vector field chart form differs");
  }
  const auto tangency = quintic::check_vector_fields();
  if (!tangency.all_passed()) return fail("tangency check failed");
  std::vector<std::vector<Polynomial>> eps;
  for (const auto& e : quintic::bivector_basis_quintic())
    eps.push_back({e.form.coefficient(1), e.form.coefficient(2), e.form.coefficient(4)});
  const std::size_t eps_rank = rank(CoordinateSystem::spanning(eps).matrix(eps));
  std::vector<std::vector<Polynomial>> zs;
  for (const auto& z : quintic::anticanonical_basis_quintic()) zs.push_back({z.value});
  const std::size_t z_rank = rank(CoordinateSystem::spanning(zs).matrix(zs));
  if (eps_rank != 21 || z_rank != 23) return fail("ranks " + std::to_string(eps_rank) + ", " + std::to_string(z_rank));
  return {true, "fields match, tangent, ranks 21 and 23"};
}

Outcome quintic_tables() {
  const auto report = quintic::verify_tables_quintic();
  if (report.a_entries.size() != 63 || report.b_entries.size() != 35) return fail("wrong entry counts");
  std::size_t a_ok = 0, b_ok = 0;
  for (const auto& e : report.a_entries) a_ok += e.passed;
  for (const auto& e : report.b_entries) b_ok += e.passed;
  Outcome out{a_ok == 63 && b_ok == 35, "A " + std::to_string(a_ok) + "/63, B " + std::to_string(b_ok) + "/35"};
  return out;
}

Outcome quintic_equation_equivalence() {
  Sampler s(1007);
  auto agree = [](const So7Coeffs& a) {
    bool equations = true;
    for (const auto& r : quintic::poisson_equations_quintic(a)) equations = equations && r.value.is_zero();
    return equations == is_zero(quintic::bracket_square(a));
  };
  int random_ok = 0;
  for (int t = 0; t < 100; ++t) random_ok += agree(s.so7());
  int structured_ok = 0;
  for (int t = 0; t < 20; ++t) {
    structured_ok += agree(s.decomposable_so7());
    structured_ok += agree(quintic::conic_embed(s.conic_point()));
  }
  return {random_ok == 100 && structured_ok == 40,
          std::to_string(random_ok) + "/100 random, " + std::to_string(structured_ok) + "/40 Poisson samples"};
}

Outcome quintic_conic() {
  Sampler s(1008);
  std::vector<quintic::ConicPoint> points{{4, 2, 9}, {0, 1, 0}, {0, 0, 1}};
  for (int t = 0; t < 20; ++t) points.push_back(s.conic_point());
  for (const auto& c : points) {
    const So7Coeffs a = quintic::conic_embed(c);
    if (!is_zero(quintic::bracket_square(a))) return fail("bracket does not vanish");
    const Rational a2358 = a.alpha(2, 3, 5, 8), a0345 = a.alpha(0, 3, 4, 5), a0134 = a.alpha(0, 1, 3, 4);
    if (a2358 != Rational(45, 8) * c.a23 * c.a23 || a0345 != Rational(-5) * c.a35 * c.a35 ||
        a0134 != Rational(25, 3) * c.a28 * c.a28)
      return fail("closed forms differ");
    if (a2358.is_zero() && a0345.is_zero() && a0134.is_zero()) return fail("point lies on the Grassmannian");
    const auto d = quintic::conic_diagnostics(c);
    if (d.alpha_2358 != a2358 || d.alpha_0345 != a0345 || d.alpha_0134 != a0134 || !d.closed_forms_match)
      return fail("diagnostics disagree");
  }
  const auto d = quintic::conic_diagnostics({4, 2, 9});
  if (d.alpha_2358 != Rational(90) || d.alpha_0345 != Rational(-405) || d.alpha_0134 != Rational(100, 3))
    return fail("(4,2,9) values");
  return {true, std::to_string(points.size()) + " conic points"};
}

Outcome cohomology_properties() {
  Sampler s(1009);
  auto quintic_ok = [](const So7Coeffs& a) {
    const RationalMatrix am = quintic::a_matrix(a), bm = quintic::b_matrix(a);
    const RationalVector v(a.values().begin(), a.values().end());
    return (bm * am).is_zero() && is_zero(bm * v) && quintic::cohomology_dims_quintic(a).euler_characteristic() == -4;
  };
  for (int t = 0; t < 50; ++t)
    if (!quintic_ok(s.decomposable_so7())) return fail("quintic decomposable sample");
  for (int t = 0; t < 20; ++t)
    if (!quintic_ok(quintic::conic_embed(s.conic_point()))) return fail("quintic conic sample");
  const auto f = cubic::CubicForm::fermat();
  for (int t = 0; t < 50; ++t) {
    const So5Coeffs a = s.decomposable_so5();
    const RationalVector v(a.values().begin(), a.values().end());
    if (!is_zero(cubic::c_matrix(f, a) * v)) return fail("cubic C a != 0");
    if (cubic::cohomology_dims_cubic(f, a).euler_characteristic() != 6) return fail("cubic Euler characteristic");
  }
  return {true, "70 quintic and 50 cubic samples"};
}

Outcome bondal_agreement() {
  Sampler s(1010);
  const ChartPtr& ctx = quintic::chart();
  auto random_bivector = [&] {
    ChartMultivector b(ctx, 2);
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
      b += ChartMultivector::monomial(ctx, {i, j}, s.polynomial(ctx->basis(), 3, 5));
    return b;
  };
  for (int t = 0; t < 100; ++t) {
    const ChartMultivector a = random_bivector(), b = random_bivector();
    const ChartForm bondal = schouten_bondal_oracle(a, b);
    const ChartForm formula = schouten_bivector_bivector(form_from_bivector(a), form_from_bivector(b));
    if (!bondal.structurally_equal(formula)) return fail("pair " + std::to_string(t) + " differs");
  }
  return {true, "100/100 pairs"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cubic bracket table equals closed forms on charts", 5, cubic_table_on_charts},
      {2, "cubic [w,w] equals the alpha expansion", 5, cubic_bracket_identity},
      {3, "Fermat cubic, a01 = 1: rank 3 and dims (1,0,17,12)", 0, cubic_fermat_instance},
      {4, "quintic model vanishes on the chart", 0, quintic_model},
      {5, "quintic vector fields, tangency and basis ranks", 5, quintic_bases},
      {6, "quintic A and B tables verified on the chart", 30, quintic_tables},
      {7, "quintic equation list matches the z expansion", 0, quintic_equation_equivalence},
      {8, "conic points are Poisson with matching diagnostics", 0, quintic_conic},
      {9, "cohomology complex properties on samples", 60, cohomology_properties},
      {10, "Bondal bracket equals the form formula", 0, bondal_agreement},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      out.passed = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += !out.passed;
    std::printf("[%s] criterion %2d: %s: %s (%.3f s)\n", out.passed ? "PASS" : "FAIL", c.number, c.name,
                out.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
