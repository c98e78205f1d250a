// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_LINSOLVE_HPP
#define G2JAC_LINSOLVE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>

namespace g2jac {

/// Augmented 4x4 system `matrix * x = rhs`. Works for FieldElement and for
/// double (the figure renderer).
template <class T>
struct System4 {
  std::array<std::array<T, 4>, 4> matrix;
  std::array<T, 4> rhs;

  friend bool operator==(const System4&, const System4&) = default;
};

template <class T>
using Solution4 = std::optional<std::array<T, 4>>;

namespace detail {

inline bool scalar_is_zero(double x) { return std::fabs(x) < 1e-12; }

template <class T>
bool scalar_is_zero(const T& x) {
  return x.is_zero();
}

inline double reciprocal(double x) { return 1.0 / x; }

template <class T>
T reciprocal(const T& x) {
  return x.inv();
}

}  // namespace detail

/// Gauss-Jordan elimination. Returns nullopt when the matrix is singular.
///
/// Over a finite field the pivot is the first nonzero entry scanning down
/// the column, which keeps the elimination order deterministic. For
/// floating point the largest-magnitude entry is used instead.
template <class T>
Solution4<T> solve(System4<T> sys) {
  auto& a = sys.matrix;
  auto& b = sys.rhs;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = 4;
    if constexpr (std::is_floating_point_v<T>) {
      T best = 0;
      for (std::size_t row = col; row < 4; ++row) {
        if (std::fabs(a[row][col]) > best) {
          best = std::fabs(a[row][col]);
          pivot = row;
        }
      }
      if (pivot != 4 && detail::scalar_is_zero(best)) pivot = 4;
    } else {
      for (std::size_t row = col; row < 4; ++row) {
        if (!detail::scalar_is_zero(a[row][col])) {
          pivot = row;
          break;
        }
      }
    }
    if (pivot == 4) return std::nullopt;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    const T inv_pivot = detail::reciprocal(a[col][col]);
    for (std::size_t k = col; k < 4; ++k) a[col][k] = a[col][k] * inv_pivot;
    b[col] = b[col] * inv_pivot;
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == col || detail::scalar_is_zero(a[row][col])) continue;
      const T factor = a[row][col];
      for (std::size_t k = col; k < 4; ++k) a[row][k] = a[row][k] - factor * a[col][k];
      b[row] = b[row] - factor * b[col];
    }
  }
  return b;
}

}  // namespace g2jac

#endif  // G2JAC_LINSOLVE_HPP
