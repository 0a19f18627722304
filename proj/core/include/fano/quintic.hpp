#pragma once

// The del Pezzo quintic threefold X = G(2,5) cut by three hyperplanes in P^9,
// its affine chart Z_8 = 1 with coordinates x_1, x_3, x_4, the bracket tables
// A (vector field with bivector) and B (bivector with bivector), the variety of
// Poisson structures and Poisson cohomology.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fano/exterior.hpp"
#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"
#include "fano/projective.hpp"
#include "fano/skew.hpp"

namespace fano::quintic {

/// p_1..p_5.
const std::array<Polynomial, 5>& quadrics();
/// lambda_1..lambda_3.
const std::array<Polynomial, 3>& hyperplanes();
/// Dependent chart coordinates x_0, x_2, x_5, x_6, x_7, x_9 as polynomials in
/// x_1, x_3, x_4, keyed by index.
const std::map<int, Polynomial>& chart_relations();
/// The affine chart x_1, x_3, x_4 with Vol = dx_1 ^ dx_3 ^ dx_4.
const ChartPtr& chart();

/// Z_8 -> 1, Z_i -> x_i, then the chart relations.
Polynomial restrict(const Polynomial& homogeneous);
/// Chain rule through the chart relations; dZ_8 restricts to 0.
ChartForm restrict(const ProjectiveForm& form);
/// Components c_i - x_i c_8 on x_1, x_3, x_4.
ChartMultivector restrict(const ProjectiveVectorField& field);

struct ModelCheck {
  std::array<bool, 5> quadrics_vanish{};
  std::array<bool, 3> hyperplanes_vanish{};
  bool all_passed() const;
};
ModelCheck check_model();

// ---------------------------------------------------------------------------
// Bases

/// v_1, v_2, v_3 on P^9.
const std::array<ProjectiveVectorField, 3>& vector_fields();
/// Reference chart forms of v_1, v_2, v_3 as (d/dx_1, d/dx_3, d/dx_4) components.
const std::array<std::array<Polynomial, 3>, 3>& vector_field_chart_forms();

struct TangencyReport {
  /// [i][k]: v_{i+1}(lambda_{k+1}) == 0 in Z.
  std::array<std::array<bool, 3>, 3> hyperplanes{};
  /// [i][n]: induced derivation kills the n-th dependent relation on the chart.
  std::array<std::array<bool, 6>, 3> relations{};
  /// [i]: restriction equals the reference chart form.
  std::array<bool, 3> chart_forms{};
  /// Pairs (i, j), 1-based, with v_i(p_j) == 0 identically in Z.
  std::vector<std::pair<int, int>> identically_tangent;
  std::size_t chart_rank = 0;
  bool all_passed() const;
};

/// Throws Error(TangencyFailure) naming the first violated check.
TangencyReport vector_basis_quintic();
/// Same checks without throwing.
TangencyReport check_vector_fields();

struct RestrictedEpsilon {
  int i;
  int j;
  ChartForm form;
};
struct RestrictedQuadric {
  int i;
  int j;
  Polynomial value;
};

/// The 23 pairs i <= j over I indexing z_ij, with (k,4) dropped for k in 0..4.
const std::vector<IndexPair>& z_pairs();
std::size_t z_position(int i, int j);

/// Restricted epsilon_ij for the 21 pairs of I. Throws IndependenceFailure
/// unless they span a 21-dimensional space.
std::vector<RestrictedEpsilon> bivector_basis_quintic();
/// Restricted z_ij = Z_iZ_j for z_pairs(). Throws IndependenceFailure unless
/// their rank is 23.
std::vector<RestrictedQuadric> anticanonical_basis_quintic();

// ---------------------------------------------------------------------------
// Tables

/// Sparse combination sum c * basis(i, j).
using Combination = std::vector<std::pair<Rational, IndexPair>>;

class QuinticTables {
 public:
  using AKey = std::tuple<int, int, int>;

  /// The stored tables.
  static const QuinticTables& standard();

  /// A_ijk for i in 1..3 and (j, k) in I, read antisymmetrically in (j, k).
  Combination a_entry(int i, int j, int k) const;
  /// B_ijkl for any four indices of I, extended by total antisymmetry.
  Combination b_entry(int i, int j, int k, int l) const;

  /// Coordinates over the 21 epsilon pairs.
  RationalVector a_vector(int i, int j, int k) const;
  /// Coordinates over the 23 z pairs.
  RationalVector b_vector(int i, int j, int k, int l) const;

  /// Sorted keys only.
  void set_a(int i, int j, int k, Combination value);
  void set_b(const Quadruple& q, Combination value);

  const std::map<AKey, Combination>& a_table() const { return a_; }
  const std::map<Quadruple, Combination>& b_table() const { return b_; }

 private:
  std::map<AKey, Combination> a_;
  std::map<Quadruple, Combination> b_;
};

/// Parses "-2e03 + 3e48" (epsilon) or "2z08 + z11" (z) combinations.
Combination parse_combination(std::string_view text, char basis_letter);

struct AEntryCheck {
  int i, j, k;
  bool passed;
};
struct BEntryCheck {
  Quadruple indices;
  bool passed;
};
struct TablesReport {
  std::vector<AEntryCheck> a_entries;
  std::vector<BEntryCheck> b_entries;
  bool all_passed() const;
};

/// [v_i, eps_jk] and (1/2)[eps_ij, eps_kl] recomputed on the chart and
/// compared with the restricted table values.
TablesReport verify_tables_quintic(const QuinticTables& tables);
TablesReport verify_tables_quintic();

// ---------------------------------------------------------------------------
// Variety of Poisson structures

/// alpha_q for So7Coeffs::quadruples().
std::vector<Rational> alphas(const So7Coeffs& a);

struct Residual {
  std::string label;
  Rational value;
};

/// The 23 defining relations as residuals LHS - RHS, in a fixed order.
std::vector<Residual> poisson_equations_quintic(const So7Coeffs& a);

/// z coordinates of [w, w] = 4 sum alpha_ijkl B_ijkl.
RationalVector bracket_square(const So7Coeffs& a, const QuinticTables& tables = QuinticTables::standard());

struct QuinticPoissonCheck {
  bool expansion_vanishes = false;
  bool equations_vanish = false;
  bool poisson = false;
};
/// Throws Error(InconsistentCheck) if the two tests disagree.
QuinticPoissonCheck check_poisson_quintic(const So7Coeffs& a);
bool is_poisson_quintic(const So7Coeffs& a);

struct ConicPoint {
  Rational a23;
  Rational a28;
  Rational a35;
};

bool on_conic(const ConicPoint& c);
/// Rational point (4st, 2s^2, 9t^2) of 9 a23^2 = 8 a28 a35.
ConicPoint conic_point(const Rational& s, const Rational& t);
/// Throws NotOnConic, or InvalidInput for the zero point.
So7Coeffs conic_embed(const ConicPoint& c);

struct ConicDiagnostics {
  Rational alpha_2358;
  Rational alpha_0345;
  Rational alpha_0134;
  bool closed_forms_match = false;
};
/// Throws DisjointnessFailure if all three alphas vanish.
ConicDiagnostics conic_diagnostics(const ConicPoint& c);

// ---------------------------------------------------------------------------
// Cohomology

/// 21 x 3, column i = sum a_jk A_ijk.
RationalMatrix a_matrix(const So7Coeffs& a, const QuinticTables& tables = QuinticTables::standard());
/// 23 x 21, column (i,j) = sum a_kl 2 B_ijkl.
RationalMatrix b_matrix(const So7Coeffs& a, const QuinticTables& tables = QuinticTables::standard());

/// (1, 3 - rA, 21 - rA - rB, 23 - rB). Throws InvalidInput for a = 0,
/// NotPoisson, or ComplexFailure when B_w A_w != 0.
CohomologyReport cohomology_dims_quintic(const So7Coeffs& a);

}  // namespace fano::quintic
