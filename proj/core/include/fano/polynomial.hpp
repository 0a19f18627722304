#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fano/rational.hpp"
#include "fano/variables.hpp"

namespace fano {

/// Product of powers of variables. Stored sparsely, sorted by variable, with
/// no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and may repeat variables; zero exponents dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::uint32_t exponent(Var v) const;
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Quotient when `other` divides this monomial.
  std::optional<Monomial> divide(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded-lex: higher total degree first, then the larger exponent on the
/// earliest variable in the global order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in descending graded-lex order, so the first term is the leading term
/// and structural equality is mathematical equality.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(const Rational& constant);                          // NOLINT
  Polynomial(Var v);                                             // NOLINT
  Polynomial(const Monomial& m, const Rational& coefficient);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Variables that occur, in global order.
  std::vector<Var> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial pow(unsigned exponent) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  std::string str() const;

 private:
  Terms terms_;
};

Polynomial scale(const Polynomial& p, const Rational& s);
Polynomial derivative(const Polynomial& p, Var v);
/// Simultaneous substitution; unmapped variables are left alone.
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images);
/// Quotient r with p = q*r, or nullopt when q does not divide p.
/// Throws Error(DivisionByZero) for q = 0.
std::optional<Polynomial> exact_division(const Polynomial& p, const Polynomial& q);
bool divides(const Polynomial& q, const Polynomial& p);

/// Parses expressions such as "3*Z_4^2 - 1/2*Z_0*Z_7 + (x_1+1)^2".
/// Identifiers are interned as variables.
Polynomial parse_polynomial(std::string_view text);

}  // namespace fano
