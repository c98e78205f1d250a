// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/mumford.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2jac {

MumfordDivisor MumfordDivisor::identity(const FieldModulus& modulus) {
  return {Poly::constant(FieldElement::one(modulus)), Poly(modulus)};
}

MumfordDivisor from_points(const Curve& curve, const AffinePoint& p, const AffinePoint& q) {
  if (!curve.is_on_curve(p) || !curve.is_on_curve(q)) throw std::invalid_argument("from_points: point not on curve");
  if (p == q) throw std::invalid_argument("from_points: P = Q; use the doubling representation");
  if (q == involute(p)) throw std::invalid_argument("from_points: Q is the involution of P (principal pair)");
  const Poly u = Poly::linear_from_root(p.x) * Poly::linear_from_root(q.x);
  const FieldElement slope = (p.y - q.y) / (p.x - q.x);
  const Poly v(curve.field(), std::vector<FieldElement>{p.y - slope * p.x, slope});
  return {u, v};
}

MumfordDivisor from_single(const Curve& curve, const AffinePoint& p) {
  if (!curve.is_on_curve(p)) throw std::invalid_argument("from_single: point not on curve");
  return {Poly::linear_from_root(p.x), Poly::constant(p.y)};
}

bool validate(const Curve& curve, const MumfordDivisor& d) {
  const FieldModulus& m = curve.field();
  if (!(d.u.modulus() == m) || !(d.v.modulus() == m)) return false;
  if (d.u.is_zero() || d.u.degree() > 2 || d.u.leading().value() != 1) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  return ((d.v * d.v - curve.f()) % d.u).is_zero();
}

MumfordDivisor negate(const MumfordDivisor& d) { return {d.u, (-d.v) % d.u}; }

std::optional<std::vector<FieldElement>> roots_upto_quadratic(const Poly& u) {
  std::vector<FieldElement> roots;
  switch (u.degree()) {
    case 0:
      return roots;
    case 1:
      roots.push_back(-u.coeff(0) / u.coeff(1));
      return roots;
    case 2: {
      const Poly mu = u.monic();
      // x^2 + a x + b: roots (-a +- sqrt(a^2 - 4b)) / 2
      const FieldElement a = mu.coeff(1);
      const FieldElement b = mu.coeff(0);
      const FieldElement disc = a * a - b.lift(4) * b;
      const std::vector<FieldElement> s = disc.sqrt();
      if (s.empty()) return std::nullopt;
      const FieldElement half = a.lift(2).inv();
      const FieldElement r1 = (-a + s.front()) * half;
      const FieldElement r2 = (-a - s.front()) * half;
      roots.push_back(r1);
      roots.push_back(r2);
      std::sort(roots.begin(), roots.end(),
                [](const FieldElement& l, const FieldElement& r) { return l.value() < r.value(); });
      return roots;
    }
    default:
      throw std::invalid_argument("roots_upto_quadratic: degree " + std::to_string(u.degree()));
  }
}

std::optional<std::vector<AffinePoint>> support_points(const Curve& curve, const MumfordDivisor& d) {
  (void)curve;
  auto roots = roots_upto_quadratic(d.u);
  if (!roots) return std::nullopt;
  std::vector<AffinePoint> out;
  for (const FieldElement& x : *roots) out.push_back({x, d.v.eval(x)});
  return out;
}

}  // namespace g2jac
