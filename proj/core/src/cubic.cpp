#include "fano/cubic.hpp"

#include <algorithm>

namespace fano::cubic {

namespace {

const std::array<int, 5> kComplement{4, 3, 2, 1, 0};
const std::array<int, 5> kTableSign{1, -1, 1, -1, 1};

std::size_t quadruple_position(const Quadruple& q) {
  const auto& all = So5Coeffs::quadruples();
  auto it = std::find(all.begin(), all.end(), q);
  if (it == all.end()) throw Error(ErrorCode::InvalidInput, "quadruple outside 0..4");
  return static_cast<std::size_t>(it - all.begin());
}

bool uses_only_z04(const Polynomial& p) {
  for (Var v : p.variables())
    if (v.id() > homogeneous(4).id()) return false;
  return true;
}

ChartForm restricted_epsilon(const CubicChart& chart, int i, int j) { return chart.restrict(epsilon(i, j)); }

ChartForm restricted_omega(const CubicChart& chart, const So5Coeffs& a) {
  ChartForm out(chart.context(), 1);
  for (const auto& [i, j] : So5Coeffs::pairs()) {
    const Rational c = a(i, j);
    if (!c.is_zero()) out += restricted_epsilon(chart, i, j) * Polynomial(c);
  }
  return out;
}

}  // namespace

CubicForm::CubicForm(Polynomial f) : f_(std::move(f)) {
  if (f_.is_zero()) throw Error(ErrorCode::InvalidInput, "cubic form is zero");
  if (!f_.is_homogeneous() || f_.total_degree() != 3)
    throw Error(ErrorCode::InvalidInput, "cubic form must be homogeneous of degree 3");
  if (!uses_only_z04(f_)) throw Error(ErrorCode::InvalidInput, "cubic form must only involve Z_0..Z_4");
  std::vector<RationalVector> rows;
  for (int m = 0; m < 5; ++m) {
    partials_[m] = derivative(f_, homogeneous(m));
    rows.push_back(quadric_coordinates(partials_[m]));
  }
  partials_rank_ = rank(RationalMatrix::from_rows(rows));
}

CubicForm CubicForm::fermat() {
  Polynomial f;
  for (int i = 0; i < 5; ++i) f += Polynomial(homogeneous(i)).pow(3);
  return CubicForm(f);
}

std::vector<EpsilonForm> epsilon_basis_cubic() {
  std::vector<EpsilonForm> out;
  for (const auto& [i, j] : So5Coeffs::pairs()) out.push_back({i, j, epsilon(i, j)});
  return out;
}

Polynomial CubicBracketTable::at(int i, int j, int k, int l) const {
  Quadruple sorted{};
  const int sign = quadruple_sign({i, j, k, l}, &sorted);
  if (sign == 0) return Polynomial();
  const Polynomial& entry = entries_[quadruple_position(sorted)];
  return sign > 0 ? entry : -entry;
}

const Polynomial& CubicBracketTable::sorted_entry(const Quadruple& q) const { return entries_[quadruple_position(q)]; }

void CubicBracketTable::set_sorted_entry(const Quadruple& q, Polynomial value) {
  entries_[quadruple_position(q)] = std::move(value);
}

CubicBracketTable bracket_table_cubic(const CubicForm& f) {
  CubicBracketTable table;
  const auto& quads = So5Coeffs::quadruples();
  for (std::size_t n = 0; n < quads.size(); ++n)
    table.set_sorted_entry(quads[n], scale(f.partials()[kComplement[n]], Rational(kTableSign[n])));
  return table;
}

CubicChart::CubicChart(int k, std::map<Var, Polynomial> images, ChartPtr context, std::vector<ChartForm> dz)
    : k_(k), dehomogenize_(std::move(images)), dz_(std::move(dz)), context_(std::move(context)) {}

CubicChart CubicChart::at(const CubicForm& f, int k) {
  if (k < 0 || k > 4) throw Error(ErrorCode::InvalidInput, "chart index must be in 0..4");
  std::map<Var, Polynomial> images;
  std::vector<Var> coords;
  images[homogeneous(k)] = Polynomial(1);
  for (int m = 0, n = 1; m < 5; ++m) {
    if (m == k) continue;
    coords.push_back(cubic_affine(n));
    images[homogeneous(m)] = Polynomial(cubic_affine(n++));
  }
  ChartPtr ctx = ChartContext::hypersurface(coords, substitute(f.polynomial(), images), k % 2 == 0 ? 1 : -1);
  std::vector<ChartForm> dz;
  for (int m = 0, n = 1; m < 5; ++m) {
    if (m == k) {
      dz.emplace_back(ctx, 1);
    } else {
      dz.push_back(coordinate_differential(ctx, cubic_affine(n++)));
    }
  }
  return CubicChart(k, std::move(images), std::move(ctx), std::move(dz));
}

CubicChart CubicChart::choose(const CubicForm& f) {
  for (int k = 0; k < 5; ++k) {
    try {
      return at(f, k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ChartDegenerate) throw;
    }
  }
  throw Error(ErrorCode::ChartDegenerate, "no dehomogenization with a nonvanishing dependent derivative");
}

Polynomial CubicChart::restrict(const Polynomial& homogeneous) const { return substitute(homogeneous, dehomogenize_); }

ChartForm CubicChart::restrict(const ProjectiveForm& form) const {
  ChartForm out(context_, 1);
  for (const auto& [m, g] : form.components) {
    if (m < 0 || m > 4) throw Error(ErrorCode::InvalidInput, "form component outside Z_0..Z_4");
    out += dz_[m] * restrict(g);
  }
  return out;
}

bool CubicChart::agrees(const ChartForm& value, const Polynomial& homogeneous) const {
  return equal_mod_relation(value, ChartForm::scalar(context_, restrict(homogeneous)));
}

bool TableVerification::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const EntryCheck& e) { return e.passed; });
}

TableVerification verify_bracket_table_chart(const CubicForm& f, const CubicBracketTable& table) {
  const CubicChart chart = CubicChart::choose(f);
  TableVerification report;
  report.chart_index = chart.dehomogenized_index();
  for (const auto& q : So5Coeffs::quadruples()) {
    ChartForm bracket =
        schouten_bivector_bivector(restricted_epsilon(chart, q[0], q[1]), restricted_epsilon(chart, q[2], q[3]));
    bracket *= Polynomial(Rational(1, 2));
    report.entries.push_back({q, chart.agrees(bracket, table.sorted_entry(q))});
  }
  return report;
}

TableVerification verify_bracket_table_chart(const CubicForm& f) {
  return verify_bracket_table_chart(f, bracket_table_cubic(f));
}

std::array<Rational, 5> plucker_alphas(const So5Coeffs& a) {
  std::array<Rational, 5> out;
  const auto& quads = So5Coeffs::quadruples();
  for (std::size_t n = 0; n < quads.size(); ++n) out[n] = a.alpha(quads[n][0], quads[n][1], quads[n][2], quads[n][3]);
  return out;
}

Polynomial bracket(const CubicBracketTable& table, const So5Coeffs& a, const So5Coeffs& b) {
  Polynomial out;
  for (const auto& [i, j] : So5Coeffs::pairs()) {
    const Rational aij = a(i, j);
    if (aij.is_zero()) continue;
    for (const auto& [k, l] : So5Coeffs::pairs()) {
      const Rational bkl = b(k, l);
      if (!bkl.is_zero()) out += scale(table.at(i, j, k, l), 2 * aij * bkl);
    }
  }
  return out;
}

Polynomial alpha_expansion(const CubicForm& f, const So5Coeffs& a) {
  const auto alphas = plucker_alphas(a);
  Polynomial out;
  for (std::size_t n = 0; n < 5; ++n) out += scale(f.partials()[kComplement[n]], 4 * kTableSign[n] * alphas[n]);
  return out;
}

bool chart_bracket_agrees(const CubicForm& f, const CubicChart& chart, const So5Coeffs& a, const So5Coeffs& b) {
  const ChartForm direct = schouten_bivector_bivector(restricted_omega(chart, a), restricted_omega(chart, b));
  return chart.agrees(direct, bracket(bracket_table_cubic(f), a, b));
}

PoissonCheck check_poisson_cubic(const CubicForm& f, const So5Coeffs& a) {
  PoissonCheck check;
  const Polynomial square = bracket(bracket_table_cubic(f), a, a);
  check.expansion_vanishes = square.is_zero();
  const auto alphas = plucker_alphas(a);
  check.alphas_vanish = std::all_of(alphas.begin(), alphas.end(), [](const Rational& x) { return x.is_zero(); });
  check.partials_rank = f.partials_rank();
  check.plucker_applicable = f.has_independent_partials();
  if (check.plucker_applicable && check.expansion_vanishes != check.alphas_vanish)
    throw Error(ErrorCode::InconsistentCheck, "bracket expansion and Plucker test disagree");
  check.poisson = check.expansion_vanishes;
  return check;
}

bool is_poisson_cubic(const CubicForm& f, const So5Coeffs& a) { return check_poisson_cubic(f, a).poisson; }

const std::vector<Monomial>& quadric_monomials() {
  static const std::vector<Monomial> basis = [] {
    std::vector<Monomial> out;
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) out.push_back(Monomial::from_factors({{homogeneous(i), 1}, {homogeneous(j), 1}}));
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
  }();
  return basis;
}

RationalVector quadric_coordinates(const Polynomial& q) {
  const auto& basis = quadric_monomials();
  RationalVector out(basis.size());
  for (const auto& [m, c] : q.terms()) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw Error(ErrorCode::InvalidInput, "not a quadric in Z_0..Z_4: " + q.str());
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

RationalMatrix c_matrix(const CubicForm& f, const So5Coeffs& a) {
  const CubicBracketTable table = bracket_table_cubic(f);
  const auto& pairs = So5Coeffs::pairs();
  RationalMatrix m(quadric_monomials().size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const auto [k, l] = pairs[col];
    Polynomial image;
    for (const auto& [i, j] : pairs) {
      const Rational aij = a(i, j);
      if (!aij.is_zero()) image += scale(table.at(i, j, k, l), aij);
    }
    m.set_column(col, quadric_coordinates(image));
  }
  return m;
}

CohomologyReport cohomology_dims_cubic(const CubicForm& f, const So5Coeffs& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "the zero bivector is not a point of P(so(5))");
  if (!is_poisson_cubic(f, a)) throw Error(ErrorCode::NotPoisson, "[w, w] does not vanish");
  const auto r = static_cast<long>(rank(c_matrix(f, a)));
  CohomologyReport report;
  report.ranks = {{"rank_C", static_cast<std::size_t>(r)}};
  report.dims = {1, 0, 20 - r, 15 - r};
  return report;
}

}  // namespace fano::cubic
