// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/curve.hpp"

#include <stdexcept>
#include <string>

namespace g2jac {

bool is_valid_curve_polynomial(const Poly& f) {
  return f.degree() == 5 && f.leading().value() == 1 && gcd(f, f.derivative()).degree() == 0;
}

Curve Curve::validate(const Poly& f) {
  if (f.degree() != 5) {
    throw std::invalid_argument("curve polynomial must have degree 5, got " +
                                (f.is_zero() ? std::string("zero polynomial") : std::to_string(f.degree())));
  }
  if (f.leading().value() != 1) throw std::invalid_argument("curve polynomial must be monic: " + f.to_string());
  if (gcd(f, f.derivative()).degree() != 0) {
    throw std::invalid_argument("curve polynomial is not squarefree: " + f.to_string());
  }
  return Curve(f);
}

bool Curve::is_on_curve(const AffinePoint& candidate) const {
  return candidate.y * candidate.y == f_.eval(candidate.x);
}

AffinePoint Curve::point(const FieldElement& x, const FieldElement& y) const {
  AffinePoint pt{x, y};
  if (!is_on_curve(pt)) throw std::invalid_argument("(" + x.to_string() + "," + y.to_string() + ") is not on the curve");
  return pt;
}

AffinePoint Curve::point(std::int64_t x, std::int64_t y) const {
  return point(FieldElement::from_integer(field(), x), FieldElement::from_integer(field(), y));
}

std::vector<AffinePoint> Curve::lift_x(const FieldElement& x0) const {
  std::vector<AffinePoint> out;
  for (const FieldElement& y : f_.eval(x0).sqrt()) out.push_back({x0, y});
  return out;
}

std::vector<AffinePoint> Curve::enumerate_points(std::uint64_t bound) const {
  if (field().value() > bound) {
    throw std::out_of_range("p=" + to_decimal(field().value()) + " exceeds the enumeration bound " +
                            std::to_string(bound));
  }
  std::vector<AffinePoint> out;
  const auto p = static_cast<std::uint64_t>(field().value());
  for (std::uint64_t x = 0; x < p; ++x) {
    for (AffinePoint& pt : lift_x(FieldElement(field(), x))) out.push_back(std::move(pt));
  }
  return out;
}

AffinePoint Curve::random_point(std::mt19937_64& rng) const {
  for (;;) {
    std::vector<AffinePoint> above = lift_x(FieldElement::random(field(), rng));
    if (above.empty()) continue;
    return above[above.size() == 1 ? 0 : rng() % 2];
  }
}

Curve random_curve(const FieldModulus& modulus, std::mt19937_64& rng) {
  for (;;) {
    std::vector<FieldElement> coeffs;
    for (int i = 0; i < 5; ++i) coeffs.push_back(FieldElement::random(modulus, rng));
    coeffs.push_back(FieldElement::one(modulus));
    Poly f(modulus, std::move(coeffs));
    if (is_valid_curve_polynomial(f)) return Curve::validate(f);
  }
}

}  // namespace g2jac
