// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_EXPLICIT_ADD_HPP
#define G2JAC_EXPLICIT_ADD_HPP

// Base-field-only addition on the genus-2 Jacobian by cubic interpolation.
//
// Every non-degenerate sum D1 + D2 is found by fitting a cubic
// L(x) = p3 x^3 + p2 x^2 + p1 x + p0 to the four support places (with
// multiplicity), intersecting y = L(x) with the curve, and negating the two
// residual places:
//
//   u'' = monic((L^2 - f) / (u1 u2)),   v'' = -L mod u''.
//
// Three configurations are handled by explicit 4x4 systems:
//   DisjointGeneric  gcd(u1, u2) = 1; rows come straight from (D1, D2).
//   Doubling         D1 = D2 = mu + omega; tangent conditions at mu, omega.
//   SharedPlace      D1 = P + mu, D2 = P + omega; tangent at P plus the
//                    chord through mu and omega.
// Everything else (weight < 2, Weierstrass tangents, involution-paired
// overlaps, irreducible u under doubling) is delegated to Cantor.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2jac/curve.hpp"
#include "g2jac/interpolation.hpp"
#include "g2jac/linsolve.hpp"
#include "g2jac/mumford.hpp"
#include "g2jac/op_counters.hpp"

namespace g2jac {

using FieldSystem = System4<FieldElement>;

struct InterpolationCubic {
  FieldElement p3;
  FieldElement p2;
  FieldElement p1;
  FieldElement p0;

  static InterpolationCubic from_solution(const std::array<FieldElement, 4>& x) { return {x[0], x[1], x[2], x[3]}; }
  Poly poly() const;

  friend bool operator==(const InterpolationCubic&, const InterpolationCubic&) = default;
};

struct AdditionCase {
  CaseKind kind = CaseKind::Fallback;
  std::optional<SharedPlaceDecomposition> shared;
  std::string reason;  // set for Fallback only
};

/// Weight-2 divisor as (a, b, c, d) with u = x^2 + a x + b, v = c x + d.
QuadraticForm<FieldElement> quadratic_form(const MumfordDivisor& d);

/// Throws std::invalid_argument for an operand of weight < 2.
FieldSystem build_case1_system(const MumfordDivisor& d1, const MumfordDivisor& d2);

/// f'(x) / (2y). Throws std::domain_error at a Weierstrass point.
FieldElement tangent_slope(const Curve& curve, const AffinePoint& p);

/// <(x - Px)^2, slope (x - Px) + Py>, the class of 2P.
MumfordDivisor tangent_divisor(const Curve& curve, const AffinePoint& p);

/// Throws std::invalid_argument unless mu, omega are non-Weierstrass with
/// distinct x-coordinates.
FieldSystem build_case2_system(const Curve& curve, const AffinePoint& mu, const AffinePoint& omega);

/// gcd(u1, u2) when it has positive degree. Both operands must have weight 2.
std::optional<Poly> detect_shared_place(const MumfordDivisor& d1, const MumfordDivisor& d2);

/// Throws std::invalid_argument when the shared place is Weierstrass or the
/// chord through mu and omega is vertical.
FieldSystem build_case3_system(const Curve& curve, const SharedPlaceDecomposition& dec);

/// Residual intersection of y = L(x) with the curve, negated. Throws
/// std::logic_error if u1 u2 does not divide L^2 - f.
MumfordDivisor compose_from_cubic(const Curve& curve, const InterpolationCubic& cubic, const Poly& u1,
                                  const Poly& u2);

AdditionCase classify(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2);

/// Everything an addition produced, for verification.
struct AdditionTrace {
  AdditionCase addition_case;
  MumfordDivisor result;
  /// Set on the three explicit paths.
  std::optional<InterpolationCubic> cubic;
  /// The two weight-2 divisors L was fitted to (tangent/chord forms for
  /// Doubling and SharedPlace); empty for Fallback.
  std::vector<MumfordDivisor> fitted;
};

/// Operands must be valid divisors on `curve`. Counts field operations and
/// the case taken into `counters` when non-null.
AdditionTrace add_traced(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2,
                         OpCounters* counters = nullptr);

MumfordDivisor add(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2,
                   OpCounters* counters = nullptr);

MumfordDivisor double_divisor(const Curve& curve, const MumfordDivisor& d, OpCounters* counters = nullptr);

}  // namespace g2jac

#endif  // G2JAC_EXPLICIT_ADD_HPP
