#pragma once

#include <cstdint>
#include <random>

#include "fano/cubic.hpp"
#include "fano/quintic.hpp"
#include "fano/skew.hpp"

namespace fano {

/// Seeded source of small-height rationals and random structures built on them.
class Sampler {
 public:
  static constexpr long kDefaultHeight = 100;

  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Numerator in [-height, height], denominator in [1, height].
  Rational rational(long height = kDefaultHeight);
  Rational nonzero_rational(long height = kDefaultHeight);
  long integer(long lo, long hi);

  /// All ten coefficients random.
  So5Coeffs so5();
  So7Coeffs so7();
  /// u ^ v for random u, v; retried until nonzero.
  So5Coeffs decomposable_so5();
  So7Coeffs decomposable_so7();

  /// sum c_i Z_i^3 plus `extra_terms` random cubic monomials, retried until the
  /// partials are independent. Coefficients have height <= 9.
  cubic::CubicForm cubic(std::size_t extra_terms = 6);
  /// conic_point(s, t) for random (s, t) != (0, 0).
  quintic::ConicPoint conic_point();

  /// Random polynomial in `vars` of total degree <= max_degree with at most
  /// `terms` terms.
  Polynomial polynomial(std::span<const Var> vars, int max_degree, std::size_t terms);

  std::mt19937_64& engine() { return engine_; }

 private:
  template <class Coeffs>
  Coeffs decomposable();

  std::mt19937_64 engine_;
};

}  // namespace fano
