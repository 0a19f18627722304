#pragma once

// Test-only reference computations, written independently of the library
// algorithms they check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"

namespace oracle {

using fano::Rational;
using fano::RationalMatrix;

/// Determinant by permutation expansion (Leibniz).
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    if (!f(idx)) return;
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// Largest k with a nonzero k x k minor. Only for small matrices.
inline std::size_t minor_rank(const RationalMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        found = !leibniz_det(sub).is_zero();
        return !found;
      });
      return !found;
    });
    if (found) return k;
  }
  return 0;
}

/// Textbook Gaussian elimination over Q with row swaps.
inline std::size_t gauss_rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Evaluates a polynomial term by term at a point given per variable.
inline Rational evaluate(const fano::Polynomial& p, const std::map<fano::Var, Rational>& point) {
  Rational total;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [v, e] : m.factors())
      for (std::uint32_t k = 0; k < e; ++k) term *= point.at(v);
    total += term;
  }
  return total;
}

}  // namespace oracle
