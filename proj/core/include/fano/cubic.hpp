#pragma once

// Smooth cubic threefolds X = {F = 0} in P^4: epsilon basis of bivectors,
// bracket table, Poisson variety and Poisson cohomology.

#include <array>
#include <optional>
#include <vector>

#include "fano/exterior.hpp"
#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"
#include "fano/projective.hpp"
#include "fano/skew.hpp"

namespace fano::cubic {

class CubicForm {
 public:
  /// Throws Error(InvalidInput) unless F is a nonzero homogeneous cubic in Z_0..Z_4.
  explicit CubicForm(Polynomial f);

  static CubicForm fermat();

  const Polynomial& polynomial() const { return f_; }
  /// dF/dZ_m, m = 0..4.
  const std::array<Polynomial, 5>& partials() const { return partials_; }
  /// Rank of the 5 partials as vectors in the 15-dimensional space of quadrics.
  std::size_t partials_rank() const { return partials_rank_; }
  /// Necessary condition for smoothness; the Plucker description relies on it.
  bool has_independent_partials() const { return partials_rank_ == 5; }

 private:
  Polynomial f_;
  std::array<Polynomial, 5> partials_;
  std::size_t partials_rank_ = 0;
};

struct EpsilonForm {
  int i;
  int j;
  ProjectiveForm form;
};

/// The ten forms Z_j dZ_i - Z_i dZ_j, i < j, in So5Coeffs::pairs() order.
std::vector<EpsilonForm> epsilon_basis_cubic();

/// C_ijkl = (1/2)[eps_ij, eps_kl], stored for sorted quadruples and extended
/// by total antisymmetry.
class CubicBracketTable {
 public:
  CubicBracketTable() = default;

  /// Entry for any four indices in 0..4; zero when an index repeats.
  Polynomial at(int i, int j, int k, int l) const;
  const Polynomial& sorted_entry(const Quadruple& q) const;
  void set_sorted_entry(const Quadruple& q, Polynomial value);

 private:
  std::array<Polynomial, 5> entries_;  // So5Coeffs::quadruples() order
};

/// C_0123 = F_4, C_0124 = -F_3, C_0134 = F_2, C_0234 = -F_1, C_1234 = F_0.
CubicBracketTable bracket_table_cubic(const CubicForm& f);

/// Affine chart Z_k = 1 with coordinates X_1..X_4 (the remaining Z's in order),
/// relation f = F|_{Z_k=1}, X_4 dependent and Vol = (-1)^k dX_1^dX_2^dX_3 / f_4.
class CubicChart {
 public:
  /// First k in 0..4 whose chart has df/dX_4 != 0. Throws ChartDegenerate.
  static CubicChart choose(const CubicForm& f);
  static CubicChart at(const CubicForm& f, int k);

  int dehomogenized_index() const { return k_; }
  const ChartPtr& context() const { return context_; }

  Polynomial restrict(const Polynomial& homogeneous) const;
  ChartForm restrict(const ProjectiveForm& form) const;
  /// value == restriction of `homogeneous` modulo the chart relation.
  bool agrees(const ChartForm& value, const Polynomial& homogeneous) const;

 private:
  int k_ = 0;
  std::map<Var, Polynomial> dehomogenize_;
  std::vector<ChartForm> dz_;  // d(Z_m) on the chart, m = 0..4
  ChartPtr context_;
  CubicChart(int k, std::map<Var, Polynomial> images, ChartPtr context, std::vector<ChartForm> dz);
};

struct EntryCheck {
  Quadruple indices;
  bool passed;
};

struct TableVerification {
  int chart_index = 0;
  std::vector<EntryCheck> entries;

  bool all_passed() const;
};

/// Recomputes (1/2)[eps_ij, eps_kl] on a chart and compares each sorted entry
/// of `table` modulo the chart relation.
TableVerification verify_bracket_table_chart(const CubicForm& f, const CubicBracketTable& table);
TableVerification verify_bracket_table_chart(const CubicForm& f);

/// (alpha_0123, alpha_0124, alpha_0134, alpha_0234, alpha_1234).
std::array<Rational, 5> plucker_alphas(const So5Coeffs& a);

/// [w_a, w_b] = sum a_ij b_kl [eps_ij, eps_kl] = 2 sum a_ij b_kl C_ijkl.
Polynomial bracket(const CubicBracketTable& table, const So5Coeffs& a, const So5Coeffs& b);
/// 4 (alpha_1234 F_0 - alpha_0234 F_1 + alpha_0134 F_2 - alpha_0124 F_3 + alpha_0123 F_4).
Polynomial alpha_expansion(const CubicForm& f, const So5Coeffs& a);
/// [w_a, w_b] computed directly on the chart, compared with bracket(table, a, b).
bool chart_bracket_agrees(const CubicForm& f, const CubicChart& chart, const So5Coeffs& a, const So5Coeffs& b);

struct PoissonCheck {
  bool expansion_vanishes = false;
  bool alphas_vanish = false;
  std::size_t partials_rank = 0;
  /// False when the partials are dependent; then only the expansion decides.
  bool plucker_applicable = false;
  bool poisson = false;
};

/// Throws Error(InconsistentCheck) if the two tests disagree although the
/// partials are independent.
PoissonCheck check_poisson_cubic(const CubicForm& f, const So5Coeffs& a);
bool is_poisson_cubic(const CubicForm& f, const So5Coeffs& a);

/// The 15 monomials Z_iZ_j (i <= j) in graded-lex order.
const std::vector<Monomial>& quadric_monomials();
RationalVector quadric_coordinates(const Polynomial& q);

/// 15 x 10 matrix of d_w(nu) = (1/2)[w, nu]; column (k,l) holds d_w(eps_kl).
RationalMatrix c_matrix(const CubicForm& f, const So5Coeffs& a);

/// (1, 0, 20 - r, 15 - r), r = rank C_w. Throws InvalidInput for a = 0 and
/// NotPoisson when [w,w] != 0.
CohomologyReport cohomology_dims_cubic(const CubicForm& f, const So5Coeffs& a);

}  // namespace fano::cubic
