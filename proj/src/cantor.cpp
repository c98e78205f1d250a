// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/cantor.hpp"

#include <optional>

namespace g2jac {

ComposedPair cantor_compose(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2) {
  const Poly& u1 = d1.u;
  const Poly& u2 = d2.u;
  const Poly& v1 = d1.v;
  const Poly& v2 = d2.v;

  // d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2), via two xgcds.
  const Xgcd first = xgcd(u1, u2);
  const Xgcd second = xgcd(first.g, v1 + v2);
  const Poly& d = second.g;
  const Poly s1 = second.s * first.s;
  const Poly s2 = second.s * first.t;
  const Poly& s3 = second.t;

  const Poly u = exact_div(u1 * u2, d * d);
  const Poly numerator = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + curve.f());
  const Poly v = exact_div(numerator, d) % u;
  return {u, v};
}

MumfordDivisor cantor_reduce(const Curve& curve, Poly u, Poly v) {
  while (u.degree() > 2) {
    Poly next_u = exact_div(curve.f() - v * v, u);
    v = (-v) % next_u;
    u = std::move(next_u);
  }
  u = u.monic();
  v = v % u;
  return {std::move(u), std::move(v)};
}

MumfordDivisor cantor_add(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2, FieldOpTally* tally) {
  std::optional<ScopedFieldTally> scope;
  if (tally != nullptr) scope.emplace(tally);
  ComposedPair composed = cantor_compose(curve, d1, d2);
  return cantor_reduce(curve, std::move(composed.u), std::move(composed.v));
}

}  // namespace g2jac
