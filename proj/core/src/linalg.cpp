#include "fano/linalg.hpp"

#include <algorithm>

#include "fano/errors.hpp"

namespace fano {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void RationalMatrix::set_column(std::size_t c, const RationalVector& values) {
  if (values.size() != rows_) throw Error(ErrorCode::InvalidInput, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix product dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::InvalidInput, "matrix-vector dimension mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpz_class d = m(r, c).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
  }

  std::size_t pivot_row = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    const mpz_class& piv = a[pivot_row][c];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = piv * a[r][j] - a[r][c] * a[pivot_row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[r][j] = std::move(v);
      }
      a[r][c] = 0;
    }
    previous = piv;
    ++pivot_row;
  }
  return pivot_row;
}

std::pair<RationalMatrix, std::vector<std::size_t>> reduced_row_echelon(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational inv = Rational(1) / a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const auto [r, pivots] = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_coordinates(std::span<const RationalVector> basis, const RationalVector& target) {
  const std::size_t n = target.size();
  const std::size_t k = basis.size();
  RationalMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw Error(ErrorCode::InvalidInput, "basis vector length mismatch");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = target[i];
  const auto [r, pivots] = reduced_row_echelon(aug);
  const auto basis_rank = static_cast<std::size_t>(
      std::count_if(pivots.begin(), pivots.end(), [k](std::size_t c) { return c < k; }));
  if (basis_rank != k) throw Error(ErrorCode::DependentBasis, "basis vectors are linearly dependent");
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RationalVector coeffs(k);
  for (std::size_t i = 0; i < k; ++i) coeffs[pivots[i]] = r(i, k);
  return coeffs;
}

CoordinateSystem CoordinateSystem::spanning(std::span<const std::vector<Polynomial>> items) {
  CoordinateSystem cs;
  for (const auto& item : items)
    for (std::size_t comp = 0; comp < item.size(); ++comp)
      for (const auto& [mono, coeff] : item[comp].terms()) cs.keys.emplace_back(comp, mono);
  std::sort(cs.keys.begin(), cs.keys.end(), [](const Key& a, const Key& b) {
    if (a.first != b.first) return a.first < b.first;
    return GrlexGreater{}(a.second, b.second);
  });
  cs.keys.erase(std::unique(cs.keys.begin(), cs.keys.end()), cs.keys.end());
  return cs;
}

std::optional<RationalVector> CoordinateSystem::try_coordinates(const std::vector<Polynomial>& item) const {
  RationalVector out(keys.size());
  std::size_t used = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& [comp, mono] = keys[i];
    if (comp >= item.size()) continue;
    out[i] = item[comp].coefficient(mono);
    if (!out[i].is_zero()) ++used;
  }
  std::size_t total = 0;
  for (const auto& p : item) total += p.size();
  if (used != total) return std::nullopt;
  return out;
}

RationalVector CoordinateSystem::coordinates(const std::vector<Polynomial>& item) const {
  auto v = try_coordinates(item);
  if (!v) throw Error(ErrorCode::InvalidInput, "polynomial uses a monomial outside the coordinate system");
  return *v;
}

RationalMatrix CoordinateSystem::matrix(std::span<const std::vector<Polynomial>> items) const {
  RationalMatrix m(keys.size(), items.size());
  for (std::size_t j = 0; j < items.size(); ++j) m.set_column(j, coordinates(items[j]));
  return m;
}

}  // namespace fano
