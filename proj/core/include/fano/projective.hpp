#pragma once

#include <map>
#include <string>

#include "fano/polynomial.hpp"

namespace fano {

/// sum_i g_i dZ_i on the ambient projective space, keyed by coordinate index.
struct ProjectiveForm {
  std::map<int, Polynomial> components;

  friend bool operator==(const ProjectiveForm&, const ProjectiveForm&) = default;
};

/// sum_i c_i d/dZ_i, keyed by coordinate index.
struct ProjectiveVectorField {
  std::map<int, Polynomial> components;

  /// The derivation applied to p.
  Polynomial apply(const Polynomial& p) const;
};

/// Z_j dZ_i - Z_i dZ_j. For i > j this is -epsilon(j, i); zero when i == j.
ProjectiveForm epsilon(int i, int j);

/// Quadric monomial Z_i Z_j.
Polynomial quadric(int i, int j);

}  // namespace fano
