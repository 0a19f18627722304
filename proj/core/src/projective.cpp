#include "fano/projective.hpp"

namespace fano {

Polynomial ProjectiveVectorField::apply(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [i, c] : components) out += c * derivative(p, homogeneous(i));
  return out;
}

ProjectiveForm epsilon(int i, int j) {
  ProjectiveForm f;
  if (i == j) return f;
  f.components.emplace(i, Polynomial(homogeneous(j)));
  f.components.emplace(j, -Polynomial(homogeneous(i)));
  return f;
}

Polynomial quadric(int i, int j) { return Polynomial(homogeneous(i)) * Polynomial(homogeneous(j)); }

}  // namespace fano
