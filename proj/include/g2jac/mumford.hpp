// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_MUMFORD_HPP
#define G2JAC_MUMFORD_HPP

#include <optional>
#include <string>
#include <vector>

#include "g2jac/curve.hpp"
#include "g2jac/poly.hpp"

namespace g2jac {

/// Mumford pair <u, v> of a reduced divisor class P1 + ... + Pr - r*inf,
/// r = deg u <= 2. A value of this type is not necessarily valid; call
/// validate() on anything that did not come out of this library.
struct MumfordDivisor {
  Poly u;
  Poly v;

  static MumfordDivisor identity(const FieldModulus& modulus);

  int weight() const { return u.degree(); }
  bool is_identity() const { return u.is_one() && v.is_zero(); }

  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

/// A shared place P of two weight-2 supports together with the two
/// remaining points: D1 = P + mu, D2 = P + omega.
struct SharedPlaceDecomposition {
  AffinePoint shared;
  AffinePoint mu;
  AffinePoint omega;
};

/// u = (x - Px)(x - Qx), v the line through P and Q. Rejects Q = P and
/// Q = involute(P); equal-x pairs are exactly those two cases.
MumfordDivisor from_points(const Curve& curve, const AffinePoint& p, const AffinePoint& q);

/// <x - Px, Py>
MumfordDivisor from_single(const Curve& curve, const AffinePoint& p);

/// u monic with deg u <= 2, deg v < deg u, and u | v^2 - f.
bool validate(const Curve& curve, const MumfordDivisor& d);

/// <u, -v mod u>
MumfordDivisor negate(const MumfordDivisor& d);

/// Roots of u paired with v-values; nullopt when u has no root in F_p.
/// The identity yields an empty list.
std::optional<std::vector<AffinePoint>> support_points(const Curve& curve, const MumfordDivisor& d);

/// Roots in F_p of a polynomial of degree <= 2, ascending, with
/// multiplicity. nullopt for an irreducible quadratic.
std::optional<std::vector<FieldElement>> roots_upto_quadratic(const Poly& u);

}  // namespace g2jac

#endif  // G2JAC_MUMFORD_HPP
