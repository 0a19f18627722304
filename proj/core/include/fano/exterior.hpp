#pragma once

// Forms and multivector fields on a 3-dimensional affine chart.
//
// Two kinds of chart are supported:
//  * an affine chart whose coordinates are all independent (the quintic chart
//    x_1, x_3, x_4 with Vol = dx_1 ^ dx_3 ^ dx_4);
//  * a hypersurface chart f(Y_1..Y_4) = 0 where dY_4 is eliminated through
//    dY_4 = -(f_1 dY_1 + f_2 dY_2 + f_3 dY_3) / f_4 and
//    Vol = sign * dY_1 ^ dY_2 ^ dY_3 / f_4.
//
// Coefficients are polynomials over a power f_4^e of the single chart
// denominator; reduction modulo (f) happens only in equal_mod_relation.
//
// Sign conventions. Basis k-vectors and k-forms are indexed by increasing
// differential index. The interior product of a k-vector d_{i1} ^ ... ^ d_{ik}
// (i1 < ... < ik) inserts d_{i1} first, then d_{i2}, and so on:
//   contract(d_i ^ d_j, w) = i_{d_j}(i_{d_i} w).
// With Vol = dx_1 ^ dx_3 ^ dx_4 this gives form_from_bivector(A) = i_A(Vol):
//   d_3 ^ d_4 -> dx_1,  d_1 ^ d_4 -> -dx_3,  d_1 ^ d_3 -> dx_4,
// and contract(d_1 ^ d_3, dx_1 ^ dx_3) = 1.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fano/errors.hpp"
#include "fano/polynomial.hpp"

namespace fano {

class ChartContext;
using ChartPtr = std::shared_ptr<const ChartContext>;

class ChartContext {
 public:
  static ChartPtr affine(std::vector<Var> coordinates);
  /// `coordinates` are the four chart coordinates; the last one is dependent.
  static ChartPtr hypersurface(std::vector<Var> coordinates, Polynomial relation, int volume_sign = 1);

  /// Variables the coefficient polynomials live in.
  std::span<const Var> coordinates() const { return coordinates_; }
  /// Coordinates whose differentials form the basis of one-forms.
  std::span<const Var> basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  bool has_relation() const { return relation_.has_value(); }
  const std::optional<Polynomial>& relation() const { return relation_; }
  std::optional<Var> dependent() const { return dependent_; }
  /// f_4, or 1 on an affine chart.
  const Polynomial& denominator() const { return denominator_; }
  int volume_sign() const { return volume_sign_; }

  /// Components of denominator() * dp in the basis differentials.
  std::vector<Polynomial> scaled_gradient(const Polynomial& p) const;
  /// Index of v among basis(), or nullopt.
  std::optional<int> basis_index(Var v) const;

 private:
  ChartContext() = default;

  std::vector<Var> coordinates_;
  std::vector<Var> basis_;
  std::optional<Polynomial> relation_;
  std::optional<Var> dependent_;
  Polynomial denominator_{1};
  std::vector<Polynomial> relation_gradient_;  // f_1 .. f_4
  int volume_sign_ = 1;
};

struct FormKind {};
struct MultivectorKind {};

/// Homogeneous element of degree k: sum over sorted k-subsets (bit masks over
/// basis indices) of polynomial coefficients, divided by denominator()^e.
template <class Kind>
class Graded {
 public:
  using Mask = std::uint32_t;
  using Coefficients = std::map<Mask, Polynomial>;

  Graded(ChartPtr context, int degree, int denominator_exponent = 0);

  static Graded scalar(ChartPtr context, Polynomial value, int denominator_exponent = 0);
  /// coefficient * e_{i1} ^ ... ^ e_{ik} for basis positions in any order;
  /// the sign of the sorting permutation is applied.
  static Graded monomial(ChartPtr context, std::vector<int> positions, Polynomial coefficient);

  const ChartPtr& context() const { return context_; }
  int degree() const { return degree_; }
  int denominator_exponent() const { return exponent_; }
  const Coefficients& coefficients() const { return coefficients_; }
  Polynomial coefficient(Mask mask) const;
  /// Degree-0 numerator.
  Polynomial value() const { return coefficient(0); }
  bool is_zero() const { return coefficients_.empty(); }

  void add(Mask mask, const Polynomial& p);

  /// Same element rewritten over denominator()^e, e >= current exponent.
  Graded raised_to(int exponent) const;
  /// Cancels common factors of the chart denominator where exact.
  Graded reduced() const;
  /// Numerators over denominator()^e equal (ignores the relation).
  bool structurally_equal(const Graded& other) const;

  Graded operator-() const;
  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  Graded& operator*=(const Polynomial& factor);
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(Graded a, const Polynomial& p) { return a *= p; }
  friend Graded operator*(const Polynomial& p, Graded a) { return a *= p; }

  std::string str() const;

 private:
  ChartPtr context_;
  int degree_ = 0;
  int exponent_ = 0;
  Coefficients coefficients_;
};

using ChartForm = Graded<FormKind>;
using ChartMultivector = Graded<MultivectorKind>;

extern template class Graded<FormKind>;
extern template class Graded<MultivectorKind>;

/// Names of the basis variables in `mask`, in increasing order.
std::vector<std::string> mask_names(const ChartContext& context, std::uint32_t mask);

ChartForm volume_form(const ChartPtr& context);
/// d of a function; the dependent differential is eliminated.
ChartForm differential(const ChartPtr& context, const Polynomial& p);
/// d(v) for a chart coordinate v, dependent or not.
ChartForm coordinate_differential(const ChartPtr& context, Var v);

ChartForm wedge(const ChartForm& a, const ChartForm& b);
ChartForm exterior_derivative(const ChartForm& a);
ChartForm contract(const ChartMultivector& a, const ChartForm& w);
/// Top-degree form divided by the chart volume form.
ChartForm divide_by_volume(const ChartForm& top);

ChartMultivector bivector_from_form(const ChartForm& w);
ChartForm form_from_bivector(const ChartMultivector& a);

/// [v, B] for a vector field and a bivector on an affine chart.
ChartMultivector schouten_vector_bivector(const ChartMultivector& v, const ChartMultivector& b);
/// (w_A ^ dw_B + dw_A ^ w_B) / Vol for the one-forms attached to two bivectors.
ChartForm schouten_bivector_bivector(const ChartForm& a, const ChartForm& b);

/// [A,B](w) = (-1)^{m(n-1)} A(d B(w)) + (-1)^n B(d A(w)) - A B(dw) for A of
/// degree n, B of degree m and w of degree n+m-1.
ChartForm bondal_evaluate(const ChartMultivector& a, const ChartMultivector& b, const ChartForm& w);
/// The bivector-bivector bracket evaluated on Vol, built from contraction
/// and d only.
ChartForm schouten_bondal_oracle(const ChartMultivector& a, const ChartMultivector& b);

/// Equality on the chart: after clearing denominators, each coefficient of
/// the difference is divisible by the relation (or is zero on affine charts).
bool equal_mod_relation(const ChartForm& a, const ChartForm& b);
bool equal_mod_relation(const ChartMultivector& a, const ChartMultivector& b);

}  // namespace fano
