#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fano/polynomial.hpp"
#include "fano/rational.hpp"

namespace fano {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  void set_column(std::size_t c, const RationalVector& values);
  RationalMatrix transpose() const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Fraction-free (Bareiss) elimination over Z after clearing row denominators.
/// Pivot: first nonzero entry in column order.
std::size_t rank(const RationalMatrix& m);

/// Reduced row echelon form over Q; also returns the pivot columns.
std::pair<RationalMatrix, std::vector<std::size_t>> reduced_row_echelon(const RationalMatrix& m);

/// Basis of the right kernel, one vector per free column (free entry 1).
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Coefficients c with sum c_i basis_i = target, or nullopt if the target is
/// outside the span. Throws Error(DependentBasis) for a dependent basis.
std::optional<RationalVector> solve_coordinates(std::span<const RationalVector> basis, const RationalVector& target);

bool is_zero(const RationalVector& v);

/// Coordinates of tuples of polynomials over the sorted (component, monomial)
/// keys that occur in any of them. Columns follow the input order.
struct CoordinateSystem {
  using Key = std::pair<std::size_t, Monomial>;

  static CoordinateSystem spanning(std::span<const std::vector<Polynomial>> items);

  RationalVector coordinates(const std::vector<Polynomial>& item) const;
  /// nullopt when the item uses a key outside this system.
  std::optional<RationalVector> try_coordinates(const std::vector<Polynomial>& item) const;
  RationalMatrix matrix(std::span<const std::vector<Polynomial>> items) const;

  std::vector<Key> keys;
};

}  // namespace fano
