#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fano/errors.hpp"
#include "fano/rational.hpp"

namespace fano {

struct So5Indices {
  static constexpr std::array<int, 5> values{0, 1, 2, 3, 4};
};
struct So7Indices {
  static constexpr std::array<int, 7> values{0, 1, 2, 3, 4, 5, 8};
};

using IndexPair = std::pair<int, int>;
using Quadruple = std::array<int, 4>;

/// Sign of the permutation sorting four distinct indices; 0 if any repeat.
int quadruple_sign(Quadruple q, Quadruple* sorted = nullptr);

/// Coordinates a_ij (i < j over an ordered index set) of a bivector in the
/// epsilon basis, read antisymmetrically: a_ji = -a_ij, a_ii = 0.
template <class Indices>
class SkewCoeffs {
 public:
  static constexpr std::size_t kIndexCount = Indices::values.size();
  static constexpr std::size_t kSize = kIndexCount * (kIndexCount - 1) / 2;

  SkewCoeffs() = default;

  /// Pairs i < j in index order; this is also the epsilon basis order.
  static const std::vector<IndexPair>& pairs() {
    static const std::vector<IndexPair> p = [] {
      std::vector<IndexPair> out;
      for (std::size_t a = 0; a < kIndexCount; ++a)
        for (std::size_t b = a + 1; b < kIndexCount; ++b) out.emplace_back(Indices::values[a], Indices::values[b]);
      return out;
    }();
    return p;
  }

  static const std::vector<Quadruple>& quadruples() {
    static const std::vector<Quadruple> q = [] {
      std::vector<Quadruple> out;
      const auto& v = Indices::values;
      for (std::size_t a = 0; a < kIndexCount; ++a)
        for (std::size_t b = a + 1; b < kIndexCount; ++b)
          for (std::size_t c = b + 1; c < kIndexCount; ++c)
            for (std::size_t d = c + 1; d < kIndexCount; ++d) out.push_back({v[a], v[b], v[c], v[d]});
      return out;
    }();
    return q;
  }

  static bool contains(int index) {
    return std::find(Indices::values.begin(), Indices::values.end(), index) != Indices::values.end();
  }

  /// Position of (i, j), i < j, in pairs().
  static std::size_t pair_position(int i, int j) {
    const auto& p = pairs();
    auto it = std::find(p.begin(), p.end(), IndexPair{i, j});
    if (it == p.end()) throw Error(ErrorCode::InvalidInput, "index pair outside the index set");
    return static_cast<std::size_t>(it - p.begin());
  }

  /// u ^ v: a_ij = u_i v_j - u_j v_i, with u, v indexed like Indices::values.
  static SkewCoeffs decomposable(const std::array<Rational, kIndexCount>& u,
                                 const std::array<Rational, kIndexCount>& v) {
    SkewCoeffs out;
    std::size_t n = 0;
    for (std::size_t a = 0; a < kIndexCount; ++a)
      for (std::size_t b = a + 1; b < kIndexCount; ++b) out.values_[n++] = u[a] * v[b] - u[b] * v[a];
    return out;
  }

  Rational operator()(int i, int j) const {
    if (i == j) return Rational(0);
    if (i > j) return -(*this)(j, i);
    return values_[pair_position(i, j)];
  }

  void set(int i, int j, const Rational& value) {
    if (i == j) throw Error(ErrorCode::InvalidInput, "diagonal coefficient");
    if (i > j) {
      values_[pair_position(j, i)] = -value;
    } else {
      values_[pair_position(i, j)] = value;
    }
  }

  const std::array<Rational, kSize>& values() const { return values_; }
  std::array<Rational, kSize>& values() { return values_; }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  SkewCoeffs scaled(const Rational& s) const {
    SkewCoeffs out = *this;
    for (auto& x : out.values_) x *= s;
    return out;
  }

  /// a_ij a_kl - a_ik a_jl + a_il a_jk.
  Rational alpha(int i, int j, int k, int l) const {
    const auto& a = *this;
    return a(i, j) * a(k, l) - a(i, k) * a(j, l) + a(i, l) * a(j, k);
  }

  friend bool operator==(const SkewCoeffs&, const SkewCoeffs&) = default;

 private:
  std::array<Rational, kSize> values_{};
};

using So5Coeffs = SkewCoeffs<So5Indices>;
using So7Coeffs = SkewCoeffs<So7Indices>;

/// Dimensions of H^0..H^3 of the Poisson complex and the ranks behind them.
struct CohomologyReport {
  std::vector<std::pair<std::string, std::size_t>> ranks;
  std::array<long, 4> dims{};

  long euler_characteristic() const { return dims[0] - dims[1] + dims[2] - dims[3]; }
};

}  // namespace fano
