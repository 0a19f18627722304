#include "fano/sampling.hpp"

namespace fano {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Rational Sampler::rational(long height) {
  const long num = integer(-height, height);
  const long den = integer(1, height);
  return Rational(num, den);
}

Rational Sampler::nonzero_rational(long height) {
  for (;;) {
    Rational r = rational(height);
    if (!r.is_zero()) return r;
  }
}

So5Coeffs Sampler::so5() {
  So5Coeffs a;
  for (auto& x : a.values()) x = rational();
  return a;
}

So7Coeffs Sampler::so7() {
  So7Coeffs a;
  for (auto& x : a.values()) x = rational();
  return a;
}

template <class Coeffs>
Coeffs Sampler::decomposable() {
  for (;;) {
    std::array<Rational, Coeffs::kIndexCount> u, v;
    for (auto& x : u) x = rational();
    for (auto& x : v) x = rational();
    Coeffs a = Coeffs::decomposable(u, v);
    if (!a.is_zero()) return a;
  }
}

So5Coeffs Sampler::decomposable_so5() { return decomposable<So5Coeffs>(); }
So7Coeffs Sampler::decomposable_so7() { return decomposable<So7Coeffs>(); }

cubic::CubicForm Sampler::cubic(std::size_t extra_terms) {
  const std::vector<Var> z = homogeneous_range(5);
  for (;;) {
    Polynomial f;
    for (Var v : z) f += Polynomial(v).pow(3) * nonzero_rational(9);
    for (std::size_t n = 0; n < extra_terms; ++n) {
      std::vector<Monomial::Factor> factors;
      for (int d = 0; d < 3; ++d) factors.emplace_back(z[static_cast<std::size_t>(integer(0, 4))], 1);
      f += Polynomial(Monomial::from_factors(factors), nonzero_rational(9));
    }
    if (f.is_zero() || f.total_degree() != 3) continue;
    cubic::CubicForm form(f);
    if (form.has_independent_partials()) return form;
  }
}

quintic::ConicPoint Sampler::conic_point() {
  for (;;) {
    const Rational s = rational(12);
    const Rational t = rational(12);
    if (!s.is_zero() || !t.is_zero()) return quintic::conic_point(s, t);
  }
}

Polynomial Sampler::polynomial(std::span<const Var> vars, int max_degree, std::size_t terms) {
  Polynomial p;
  for (std::size_t n = 0; n < terms; ++n) {
    const int degree = static_cast<int>(integer(0, max_degree));
    std::vector<Monomial::Factor> factors;
    for (int d = 0; d < degree; ++d)
      factors.emplace_back(vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))], 1);
    p += Polynomial(Monomial::from_factors(factors), rational(9));
  }
  return p;
}

}  // namespace fano
