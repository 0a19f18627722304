#include "fano/quintic.hpp"

#include <algorithm>
#include <cctype>

namespace fano::quintic {

namespace {

constexpr std::array<int, 3> kFree{1, 3, 4};
constexpr std::array<int, 6> kDependent{0, 2, 5, 6, 7, 9};

const std::map<Var, Polynomial>& chart_images() {
  static const std::map<Var, Polynomial> images = [] {
    std::map<Var, Polynomial> m;
    m[homogeneous(8)] = Polynomial(1);
    for (int i : kFree) m[homogeneous(i)] = Polynomial(quintic_affine(i));
    for (const auto& [i, r] : chart_relations()) m[homogeneous(i)] = r;
    return m;
  }();
  return images;
}

const std::array<ChartForm, 10>& restricted_differentials() {
  static const std::array<ChartForm, 10> dz = [] {
    const ChartPtr& ctx = chart();
    std::array<ChartForm, 10> out{ChartForm(ctx, 1), ChartForm(ctx, 1), ChartForm(ctx, 1), ChartForm(ctx, 1),
                                  ChartForm(ctx, 1), ChartForm(ctx, 1), ChartForm(ctx, 1), ChartForm(ctx, 1),
                                  ChartForm(ctx, 1), ChartForm(ctx, 1)};
    for (int i : kFree) out[i] = coordinate_differential(ctx, quintic_affine(i));
    for (const auto& [i, r] : chart_relations()) out[i] = differential(ctx, r);
    return out;
  }();
  return dz;
}

const ChartForm& restricted_epsilon(int i, int j) {
  static const std::map<IndexPair, ChartForm> cache = [] {
    std::map<IndexPair, ChartForm> m;
    for (const auto& p : So7Coeffs::pairs()) m.emplace(p, restrict(epsilon(p.first, p.second)));
    return m;
  }();
  return cache.at({i, j});
}

std::vector<Polynomial> form_components(const ChartForm& w) {
  std::vector<Polynomial> out;
  for (int b = 0; b < 3; ++b) out.push_back(w.coefficient(1u << b));
  return out;
}

ChartForm epsilon_combination(const Combination& c) {
  ChartForm out(chart(), 1);
  for (const auto& [coef, pair] : c) {
    const auto [i, j] = pair;
    if (i == j) continue;
    out += i < j ? restricted_epsilon(i, j) * Polynomial(coef) : restricted_epsilon(j, i) * Polynomial(-coef);
  }
  return out;
}

Polynomial z_combination(const Combination& c) {
  Polynomial out;
  for (const auto& [coef, pair] : c) out += scale(restrict(quadric(pair.first, pair.second)), coef);
  return out;
}

Combination negated(Combination c) {
  for (auto& term : c) term.first = -term.first;
  return c;
}

struct Equation {
  std::string label;
  std::vector<std::pair<Rational, Quadruple>> terms;
};

// Parses "2 alpha_0128 + alpha_1234 = 3 alpha_0358 + alpha_1458" into LHS - RHS.
Equation parse_equation(const std::string& label) {
  Equation eq{label, {}};
  int side = 1;
  int sign = 1;
  long coefficient = 0;
  bool has_coefficient = false;
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorCode::ParseError, "bad equation: " + label); };
  while (pos < label.size()) {
    const char c = label[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == '=') {
      side = -1;
      sign = 1;
      ++pos;
    } else if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      coefficient = 0;
      while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos])))
        coefficient = coefficient * 10 + (label[pos++] - '0');
      has_coefficient = true;
    } else if (label.compare(pos, 6, "alpha_") == 0 && pos + 10 <= label.size()) {
      Quadruple q{};
      for (int n = 0; n < 4; ++n) q[n] = label[pos + 6 + n] - '0';
      const long k = has_coefficient ? coefficient : 1;
      eq.terms.emplace_back(Rational(side * sign * k), q);
      pos += 10;
      sign = 1;
      has_coefficient = false;
    } else {
      fail();
    }
  }
  return eq;
}

const std::vector<Equation>& equations() {
  static const std::vector<Equation> list = [] {
    const char* labels[] = {
        "alpha_0348 = 0",
        "alpha_0125 = 0",
        "alpha_0138 = 0",
        "alpha_1348 = 0",
        "alpha_0245 = 0",
        "alpha_1238 = 0",
        "alpha_0235 = 0",
        "alpha_1245 = 0",
        "alpha_0123 = alpha_2358",
        "alpha_0145 = 5 alpha_2345",
        "alpha_0148 = 5 alpha_2348",
        "alpha_0258 = -2 alpha_2345",
        "alpha_1358 = 2 alpha_2348",
        "alpha_0345 + 3 alpha_1235 = 2 alpha_2458",
        "alpha_0248 + 6 alpha_2358 = 2 alpha_0158 + alpha_1345",
        "2 alpha_0128 + alpha_1234 = 3 alpha_0358 + alpha_1458",
        "alpha_0134 - alpha_0238 - 2 alpha_1248 + alpha_3458 = 0",
        "-2 alpha_0135 + alpha_0234 - alpha_0458 + 3 alpha_1258 = 0",
        "alpha_0124 + 2 alpha_0345 + alpha_1235 + alpha_2458 = 0",
        "alpha_0128 = 4 alpha_0358 + alpha_1234 + alpha_1458",
        "alpha_0135 + alpha_0234 + alpha_0458 - 4 alpha_1258 = 0",
        "alpha_0248 + 2 alpha_0158 - alpha_1345 - 2 alpha_2358 = 0",
        "alpha_1248 = -3 alpha_0238 - 2 alpha_3458",
    };
    std::vector<Equation> out;
    for (const char* l : labels) out.push_back(parse_equation(l));
    return out;
  }();
  return list;
}

}  // namespace

const ChartPtr& chart() {
  static const ChartPtr ctx = ChartContext::affine({quintic_affine(1), quintic_affine(3), quintic_affine(4)});
  return ctx;
}

Polynomial restrict(const Polynomial& homogeneous) { return substitute(homogeneous, chart_images()); }

ChartForm restrict(const ProjectiveForm& form) {
  ChartForm out(chart(), 1);
  for (const auto& [i, g] : form.components) {
    if (i < 0 || i > 9) throw Error(ErrorCode::InvalidInput, "form component outside Z_0..Z_9");
    if (i == 8) continue;
    out += restricted_differentials()[i] * restrict(g);
  }
  return out;
}

ChartMultivector restrict(const ProjectiveVectorField& field) {
  auto component = [&](int i) {
    auto it = field.components.find(i);
    return it == field.components.end() ? Polynomial() : restrict(it->second);
  };
  const Polynomial c8 = component(8);
  ChartMultivector out(chart(), 1);
  for (int n = 0; n < 3; ++n)
    out += ChartMultivector::monomial(chart(), {n}, component(kFree[n]) - Polynomial(quintic_affine(kFree[n])) * c8);
  return out;
}

bool ModelCheck::all_passed() const {
  return std::all_of(quadrics_vanish.begin(), quadrics_vanish.end(), [](bool b) { return b; }) &&
         std::all_of(hyperplanes_vanish.begin(), hyperplanes_vanish.end(), [](bool b) { return b; });
}

ModelCheck check_model() {
  ModelCheck check;
  for (std::size_t j = 0; j < 5; ++j) check.quadrics_vanish[j] = restrict(quadrics()[j]).is_zero();
  for (std::size_t k = 0; k < 3; ++k) check.hyperplanes_vanish[k] = restrict(hyperplanes()[k]).is_zero();
  return check;
}

bool TangencyReport::all_passed() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!chart_forms[i]) return false;
    for (bool b : hyperplanes[i])
      if (!b) return false;
    for (bool b : relations[i])
      if (!b) return false;
  }
  return chart_rank == 3;
}

TangencyReport check_vector_fields() {
  TangencyReport report;
  std::vector<std::vector<Polynomial>> chart_components;
  for (std::size_t i = 0; i < 3; ++i) {
    const ProjectiveVectorField& v = vector_fields()[i];
    for (std::size_t k = 0; k < 3; ++k) report.hyperplanes[i][k] = v.apply(hyperplanes()[k]).is_zero();
    for (std::size_t j = 0; j < 5; ++j)
      if (v.apply(quadrics()[j]).is_zero()) report.identically_tangent.emplace_back(int(i) + 1, int(j) + 1);

    const ChartMultivector restricted = restrict(v);
    std::vector<Polynomial> free_parts;
    for (int n = 0; n < 3; ++n) free_parts.push_back(restricted.coefficient(1u << n));
    chart_components.push_back(free_parts);

    auto component = [&](int index) {
      auto it = v.components.find(index);
      return it == v.components.end() ? Polynomial() : restrict(it->second);
    };
    const Polynomial c8 = component(8);
    for (std::size_t n = 0; n < kDependent.size(); ++n) {
      const int d = kDependent[n];
      const Polynomial& r = chart_relations().at(d);
      Polynomial residual = component(d) - r * c8;
      for (int f = 0; f < 3; ++f) residual -= free_parts[f] * derivative(r, quintic_affine(kFree[f]));
      report.relations[i][n] = residual.is_zero();
    }
    const auto& reference = vector_field_chart_forms()[i];
    report.chart_forms[i] = std::equal(free_parts.begin(), free_parts.end(), reference.begin());
  }
  const auto system = CoordinateSystem::spanning(chart_components);
  report.chart_rank = rank(system.matrix(chart_components));
  return report;
}

TangencyReport vector_basis_quintic() {
  TangencyReport report = check_vector_fields();
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string name = "v_" + std::to_string(i + 1);
    for (std::size_t k = 0; k < 3; ++k)
      if (!report.hyperplanes[i][k])
        throw Error(ErrorCode::TangencyFailure, name + " does not kill lambda_" + std::to_string(k + 1));
    for (std::size_t n = 0; n < kDependent.size(); ++n)
      if (!report.relations[i][n])
        throw Error(ErrorCode::TangencyFailure,
                    name + " is not tangent along the relation for x_" + std::to_string(kDependent[n]));
    if (!report.chart_forms[i])
      throw Error(ErrorCode::TangencyFailure, name + " differs from its chart expression");
  }
  if (report.chart_rank != 3) throw Error(ErrorCode::IndependenceFailure, "v_1, v_2, v_3 are dependent on the chart");
  return report;
}

const std::vector<IndexPair>& z_pairs() {
  static const std::vector<IndexPair> pairs = [] {
    std::vector<IndexPair> out;
    const auto& idx = So7Indices::values;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a; b < idx.size(); ++b) {
        if (idx[b] == 4 && idx[a] <= 4) continue;
        out.emplace_back(idx[a], idx[b]);
      }
    return out;
  }();
  return pairs;
}

std::size_t z_position(int i, int j) {
  if (i > j) std::swap(i, j);
  const auto& p = z_pairs();
  auto it = std::find(p.begin(), p.end(), IndexPair{i, j});
  if (it == p.end())
    throw Error(ErrorCode::InvalidInput, "z_" + std::to_string(i) + std::to_string(j) + " is not a basis quadric");
  return static_cast<std::size_t>(it - p.begin());
}

std::vector<RestrictedEpsilon> bivector_basis_quintic() {
  std::vector<RestrictedEpsilon> out;
  std::vector<std::vector<Polynomial>> items;
  for (const auto& [i, j] : So7Coeffs::pairs()) {
    out.push_back({i, j, restricted_epsilon(i, j)});
    items.push_back(form_components(out.back().form));
  }
  if (rank(CoordinateSystem::spanning(items).matrix(items)) != out.size())
    throw Error(ErrorCode::IndependenceFailure, "restricted epsilon forms are dependent");
  return out;
}

std::vector<RestrictedQuadric> anticanonical_basis_quintic() {
  std::vector<RestrictedQuadric> out;
  std::vector<std::vector<Polynomial>> items;
  for (const auto& [i, j] : z_pairs()) {
    out.push_back({i, j, restrict(quadric(i, j))});
    items.push_back({out.back().value});
  }
  if (rank(CoordinateSystem::spanning(items).matrix(items)) != out.size())
    throw Error(ErrorCode::IndependenceFailure, "restricted quadrics are dependent");
  return out;
}

Combination QuinticTables::a_entry(int i, int j, int k) const {
  if (j == k) return {};
  if (j > k) return negated(a_entry(i, k, j));
  auto it = a_.find({i, j, k});
  if (it == a_.end()) throw Error(ErrorCode::InvalidInput, "no A entry for these indices");
  return it->second;
}

Combination QuinticTables::b_entry(int i, int j, int k, int l) const {
  Quadruple sorted{};
  const int sign = quadruple_sign({i, j, k, l}, &sorted);
  if (sign == 0) return {};
  auto it = b_.find(sorted);
  if (it == b_.end()) throw Error(ErrorCode::InvalidInput, "no B entry for these indices");
  return sign > 0 ? it->second : negated(it->second);
}

RationalVector QuinticTables::a_vector(int i, int j, int k) const {
  RationalVector out(So7Coeffs::kSize);
  for (const auto& [c, pair] : a_entry(i, j, k)) {
    const auto [p, q] = pair;
    if (p < q) {
      out[So7Coeffs::pair_position(p, q)] += c;
    } else if (p > q) {
      out[So7Coeffs::pair_position(q, p)] -= c;
    }
  }
  return out;
}

RationalVector QuinticTables::b_vector(int i, int j, int k, int l) const {
  RationalVector out(z_pairs().size());
  for (const auto& [c, pair] : b_entry(i, j, k, l)) out[z_position(pair.first, pair.second)] += c;
  return out;
}

void QuinticTables::set_a(int i, int j, int k, Combination value) {
  if (i < 1 || i > 3 || j >= k || !So7Coeffs::contains(j) || !So7Coeffs::contains(k))
    throw Error(ErrorCode::InvalidInput, "A keys need i in 1..3 and j < k in I");
  a_[{i, j, k}] = std::move(value);
}

void QuinticTables::set_b(const Quadruple& q, Combination value) {
  Quadruple sorted{};
  if (quadruple_sign(q, &sorted) != 1 || sorted != q ||
      !std::all_of(q.begin(), q.end(), [](int x) { return So7Coeffs::contains(x); }))
    throw Error(ErrorCode::InvalidInput, "B keys need a sorted quadruple from I");
  b_[q] = std::move(value);
}

bool TablesReport::all_passed() const {
  return std::all_of(a_entries.begin(), a_entries.end(), [](const AEntryCheck& e) { return e.passed; }) &&
         std::all_of(b_entries.begin(), b_entries.end(), [](const BEntryCheck& e) { return e.passed; });
}

TablesReport verify_tables_quintic(const QuinticTables& tables) {
  TablesReport report;
  std::array<ChartMultivector, 3> fields{restrict(vector_fields()[0]), restrict(vector_fields()[1]),
                                         restrict(vector_fields()[2])};
  for (const auto& [key, value] : tables.a_table()) {
    const auto [i, j, k] = key;
    const ChartMultivector bracket =
        schouten_vector_bivector(fields[i - 1], bivector_from_form(restricted_epsilon(j, k)));
    report.a_entries.push_back({i, j, k, equal_mod_relation(form_from_bivector(bracket), epsilon_combination(value))});
  }
  for (const auto& [q, value] : tables.b_table()) {
    ChartForm half = schouten_bivector_bivector(restricted_epsilon(q[0], q[1]), restricted_epsilon(q[2], q[3]));
    half *= Polynomial(Rational(1, 2));
    report.b_entries.push_back({q, equal_mod_relation(half, ChartForm::scalar(chart(), z_combination(value)))});
  }
  return report;
}

TablesReport verify_tables_quintic() { return verify_tables_quintic(QuinticTables::standard()); }

std::vector<Rational> alphas(const So7Coeffs& a) {
  std::vector<Rational> out;
  for (const auto& q : So7Coeffs::quadruples()) out.push_back(a.alpha(q[0], q[1], q[2], q[3]));
  return out;
}

std::vector<Residual> poisson_equations_quintic(const So7Coeffs& a) {
  std::vector<Residual> out;
  for (const auto& eq : equations()) {
    Rational value;
    for (const auto& [c, q] : eq.terms) value += c * a.alpha(q[0], q[1], q[2], q[3]);
    out.push_back({eq.label, value});
  }
  return out;
}

RationalVector bracket_square(const So7Coeffs& a, const QuinticTables& tables) {
  RationalVector out(z_pairs().size());
  for (const auto& q : So7Coeffs::quadruples()) {
    const Rational alpha = a.alpha(q[0], q[1], q[2], q[3]);
    if (alpha.is_zero()) continue;
    const RationalVector b = tables.b_vector(q[0], q[1], q[2], q[3]);
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += 4 * alpha * b[n];
  }
  return out;
}

QuinticPoissonCheck check_poisson_quintic(const So7Coeffs& a) {
  QuinticPoissonCheck check;
  check.expansion_vanishes = is_zero(bracket_square(a));
  const auto residuals = poisson_equations_quintic(a);
  check.equations_vanish =
      std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.value.is_zero(); });
  if (check.expansion_vanishes != check.equations_vanish)
    throw Error(ErrorCode::InconsistentCheck, "bracket expansion and the equation list disagree");
  check.poisson = check.expansion_vanishes;
  return check;
}

bool is_poisson_quintic(const So7Coeffs& a) { return check_poisson_quintic(a).poisson; }

bool on_conic(const ConicPoint& c) { return 9 * c.a23 * c.a23 == 8 * c.a28 * c.a35; }

ConicPoint conic_point(const Rational& s, const Rational& t) { return {4 * s * t, 2 * s * s, 9 * t * t}; }

So7Coeffs conic_embed(const ConicPoint& c) {
  if (c.a23.is_zero() && c.a28.is_zero() && c.a35.is_zero())
    throw Error(ErrorCode::InvalidInput, "the zero point is not a point of the plane");
  if (!on_conic(c)) throw Error(ErrorCode::NotOnConic, "9 a23^2 != 8 a28 a35");
  So7Coeffs a;
  a.set(2, 3, c.a23);
  a.set(2, 8, c.a28);
  a.set(3, 5, c.a35);
  a.set(0, 1, Rational(5, 2) * c.a23);
  a.set(5, 8, Rational(9, 2) * c.a23);
  a.set(1, 2, Rational(5, 3) * c.a35);
  a.set(0, 4, 5 * c.a35);
  a.set(0, 3, Rational(5, 3) * c.a28);
  a.set(1, 4, -5 * c.a28);
  return a;
}

ConicDiagnostics conic_diagnostics(const ConicPoint& c) {
  const So7Coeffs a = conic_embed(c);
  ConicDiagnostics d;
  d.alpha_2358 = a.alpha(2, 3, 5, 8);
  d.alpha_0345 = a.alpha(0, 3, 4, 5);
  d.alpha_0134 = a.alpha(0, 1, 3, 4);
  d.closed_forms_match = d.alpha_2358 == Rational(45, 8) * c.a23 * c.a23 && d.alpha_0345 == -5 * c.a35 * c.a35 &&
                         d.alpha_0134 == Rational(25, 3) * c.a28 * c.a28;
  if (d.alpha_2358.is_zero() && d.alpha_0345.is_zero() && d.alpha_0134.is_zero())
    throw Error(ErrorCode::DisjointnessFailure, "conic point lies on the Grassmannian");
  return d;
}

RationalMatrix a_matrix(const So7Coeffs& a, const QuinticTables& tables) {
  RationalMatrix m(So7Coeffs::kSize, 3);
  for (int i = 1; i <= 3; ++i) {
    RationalVector column(So7Coeffs::kSize);
    for (const auto& [j, k] : So7Coeffs::pairs()) {
      const Rational ajk = a(j, k);
      if (ajk.is_zero()) continue;
      const RationalVector entry = tables.a_vector(i, j, k);
      for (std::size_t n = 0; n < column.size(); ++n) column[n] += ajk * entry[n];
    }
    m.set_column(static_cast<std::size_t>(i - 1), column);
  }
  return m;
}

RationalMatrix b_matrix(const So7Coeffs& a, const QuinticTables& tables) {
  const auto& pairs = So7Coeffs::pairs();
  RationalMatrix m(z_pairs().size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const auto [i, j] = pairs[col];
    RationalVector column(z_pairs().size());
    for (const auto& [k, l] : pairs) {
      const Rational akl = a(k, l);
      if (akl.is_zero()) continue;
      const RationalVector entry = tables.b_vector(i, j, k, l);
      for (std::size_t n = 0; n < column.size(); ++n) column[n] += 2 * akl * entry[n];
    }
    m.set_column(col, column);
  }
  return m;
}

CohomologyReport cohomology_dims_quintic(const So7Coeffs& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "the zero bivector is not a point of P(so(7))");
  if (!is_poisson_quintic(a)) throw Error(ErrorCode::NotPoisson, "[w, w] does not vanish");
  const RationalMatrix am = a_matrix(a);
  const RationalMatrix bm = b_matrix(a);
  if (!(bm * am).is_zero()) throw Error(ErrorCode::ComplexFailure, "B_w A_w is not zero");
  const auto ra = static_cast<long>(rank(am));
  const auto rb = static_cast<long>(rank(bm));
  CohomologyReport report;
  report.ranks = {{"rank_A", static_cast<std::size_t>(ra)}, {"rank_B", static_cast<std::size_t>(rb)}};
  report.dims = {1, 3 - ra, 21 - ra - rb, 23 - rb};
  return report;
}

}  // namespace fano::quintic
