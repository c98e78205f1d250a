// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_CURVE_HPP
#define G2JAC_CURVE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "g2jac/field.hpp"
#include "g2jac/poly.hpp"

namespace g2jac {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1000;

/// An affine point (x, y). The single point at infinity of the odd-degree
/// model is never materialised.
struct AffinePoint {
  FieldElement x;
  FieldElement y;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

inline AffinePoint involute(const AffinePoint& point) { return {point.x, -point.y}; }

/// Genus-2 curve y^2 = f(x) with f monic, squarefree, of degree exactly 5.
class Curve {
 public:
  /// Throws std::invalid_argument naming the violated condition.
  static Curve validate(const Poly& f);

  const Poly& f() const { return f_; }
  const FieldModulus& field() const { return f_.modulus(); }

  bool is_on_curve(const AffinePoint& candidate) const;
  /// Checked construction; throws std::invalid_argument off the curve.
  AffinePoint point(const FieldElement& x, const FieldElement& y) const;
  AffinePoint point(std::int64_t x, std::int64_t y) const;

  /// Points above x0: two (ascending y), one when f(x0) = 0, none when
  /// f(x0) is a non-residue.
  std::vector<AffinePoint> lift_x(const FieldElement& x0) const;

  /// All affine points ordered by x, then y. Throws std::out_of_range when
  /// p exceeds `bound`.
  std::vector<AffinePoint> enumerate_points(std::uint64_t bound = kDefaultEnumerationBound) const;

  /// Uniformly random affine point (rejection on x).
  AffinePoint random_point(std::mt19937_64& rng) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  explicit Curve(Poly f) : f_(std::move(f)) {}

  Poly f_;
};

/// True iff f is monic of degree 5 and gcd(f, f') = 1.
bool is_valid_curve_polynomial(const Poly& f);

/// Draws monic quintics until one is squarefree.
Curve random_curve(const FieldModulus& modulus, std::mt19937_64& rng);

}  // namespace g2jac

#endif  // G2JAC_CURVE_HPP
