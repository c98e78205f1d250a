// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_INTERPOLATION_HPP
#define G2JAC_INTERPOLATION_HPP

// Scalar-generic construction of the 4x4 systems whose solution is the
// interpolating cubic L(x) = p3 x^3 + p2 x^2 + p1 x + p0. Instantiated over
// F_p by the explicit addition law and over double by the figure renderer.

#include "g2jac/linsolve.hpp"

namespace g2jac {

/// Weight-2 Mumford data: u = x^2 + a x + b, v = c x + d.
template <class T>
struct QuadraticForm {
  T a;
  T b;
  T c;
  T d;
};

namespace detail {

inline double one_like(double) { return 1.0; }

template <class T>
T one_like(const T& like) {
  return like.lift(1);
}

}  // namespace detail

/// Two rows per operand, from reducing L - v modulo u:
///   x^3 = (a^2 - b) x + ab  (mod u),  x^2 = -a x - b  (mod u),
/// so the x- and 1-coefficients of (L - v) mod u vanish iff
///   [a^2-b, -a, 1, 0 | c] and [ab, -b, 0, 1 | d] hold.
template <class T>
System4<T> case1_system(const QuadraticForm<T>& first, const QuadraticForm<T>& second) {
  const T zero = first.a - first.a;
  const T one = detail::one_like(first.a);
  const QuadraticForm<T>& f = first;
  const QuadraticForm<T>& g = second;
  return {{{{f.a * f.a - f.b, -f.a, one, zero},
            {f.a * f.b, -f.b, zero, one},
            {g.a * g.a - g.b, -g.a, one, zero},
            {g.a * g.b, -g.b, zero, one}}},
          {f.c, f.d, g.c, g.d}};
}

/// <(x - x0)^2, slope (x - x0) + y0>
template <class T>
QuadraticForm<T> tangent_form(const T& x0, const T& y0, const T& slope) {
  return {-(x0 + x0), x0 * x0, slope, y0 - slope * x0};
}

/// <(x - x1)(x - x2), line through both points>. Requires x1 != x2.
template <class T>
QuadraticForm<T> chord_form(const T& x1, const T& y1, const T& x2, const T& y2) {
  const T dx = x1 - x2;
  return {-(x1 + x2), x1 * x2, (y1 - y2) / dx, (x1 * y2 - x2 * y1) / dx};
}

/// Doubling rows written out directly: tangent conditions at two points.
template <class T>
System4<T> tangent_pair_system(const T& mu_x, const T& mu_y, const T& mu_slope, const T& om_x, const T& om_y,
                               const T& om_slope) {
  const T zero = mu_x - mu_x;
  const T one = detail::one_like(mu_x);
  const T mu2 = mu_x * mu_x;
  const T om2 = om_x * om_x;
  return {{{{mu2 + mu2 + mu2, mu_x + mu_x, one, zero},
            {-(mu2 * mu_x + mu2 * mu_x), -mu2, zero, one},
            {om2 + om2 + om2, om_x + om_x, one, zero},
            {-(om2 * om_x + om2 * om_x), -om2, zero, one}}},
          {mu_slope, mu_y - mu_slope * mu_x, om_slope, om_y - om_slope * om_x}};
}

/// Shared-place rows written out directly: tangent at (s, t), chord through
/// mu and omega.
template <class T>
System4<T> tangent_chord_system(const T& s, const T& t, const T& slope, const T& mu_x, const T& mu_y, const T& om_x,
                                const T& om_y) {
  const T zero = s - s;
  const T one = detail::one_like(s);
  const T s2 = s * s;
  const T sum = mu_x + om_x;
  const T prod = mu_x * om_x;
  const T dx = mu_x - om_x;
  return {{{{s2 + s2 + s2, s + s, one, zero},
            {-(s2 * s + s2 * s), -s2, zero, one},
            {mu_x * mu_x + om_x * sum, sum, one, zero},
            {-(mu_x * mu_x * om_x) - mu_x * om_x * om_x, -prod, zero, one}}},
          {slope, t - slope * s, (mu_y - om_y) / dx, (mu_x * om_y - om_x * mu_y) / dx}};
}

}  // namespace g2jac

#endif  // G2JAC_INTERPOLATION_HPP
