#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fano {

/// Interned variable identifier. The interning order is the global variable
/// order used by the graded-lex term order. Z_0..Z_9, X_1..X_4 and x_0..x_9 are
/// registered first, in that order.
class Var {
 public:
  constexpr Var() = default;

  /// Looks the name up, registering it at the end of the order if unseen.
  explicit Var(std::string_view name);

  static constexpr Var from_id(std::uint32_t id) { return Var(id, 0); }

  std::uint32_t id() const { return id_; }
  std::string_view name() const;

  friend bool operator==(Var a, Var b) = default;
  friend auto operator<=>(Var a, Var b) = default;

 private:
  constexpr Var(std::uint32_t id, int) : id_(id) {}
  std::uint32_t id_ = 0;
};

/// Z_i, homogeneous coordinate i of the ambient projective space.
Var homogeneous(int index);
/// X_i, affine coordinate of the cubic chart (1..4).
Var cubic_affine(int index);
/// x_i, affine coordinate of the quintic chart Z_8 = 1.
Var quintic_affine(int index);

std::vector<Var> homogeneous_range(int count);

}  // namespace fano
