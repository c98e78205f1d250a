// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_POLY_HPP
#define G2JAC_POLY_HPP

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "g2jac/field.hpp"

namespace g2jac {

/// Dense univariate polynomial over F_p, coefficients in ascending degree.
/// The highest stored coefficient is always nonzero; the zero polynomial
/// stores nothing.
class Poly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  explicit Poly(const FieldModulus& modulus) : modulus_(modulus) {}
  Poly(const FieldModulus& modulus, std::vector<FieldElement> coeffs);
  Poly(const FieldModulus& modulus, std::initializer_list<std::int64_t> coeffs);

  static Poly constant(const FieldElement& c);
  /// x - root
  static Poly linear_from_root(const FieldElement& root);
  /// c * x^k
  static Poly monomial(const FieldElement& c, int k);

  const FieldModulus& modulus() const { return modulus_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].value() == 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the stored degree.
  FieldElement coeff(int i) const;
  /// Throws std::domain_error on the zero polynomial.
  const FieldElement& leading() const;

  FieldElement eval(const FieldElement& x) const;
  Poly derivative() const;
  /// Throws std::domain_error on the zero polynomial.
  Poly monic() const;
  Poly scaled(const FieldElement& c) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Ascending bracket list, e.g. "[1,0,0,0,0,1]" for x^5 + 1.
  std::string to_string() const;

 private:
  void trim();

  FieldModulus modulus_;
  std::vector<FieldElement> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Long division; throws std::domain_error when b is zero.
DivRem divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Quotient of an exact division. Throws std::logic_error when the
/// remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; throws std::domain_error when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g;  // monic
  Poly s;
  Poly t;
};

/// s*a + t*b = g with g monic. Throws std::domain_error when both are zero.
Xgcd xgcd(const Poly& a, const Poly& b);

}  // namespace g2jac

#endif  // G2JAC_POLY_HPP
