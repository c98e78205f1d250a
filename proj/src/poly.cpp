// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace g2jac {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!(a.modulus() == b.modulus())) throw std::invalid_argument("polynomials over different moduli");
}

}  // namespace

Poly::Poly(const FieldModulus& modulus, std::vector<FieldElement> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.modulus() == modulus_)) throw std::invalid_argument("coefficient over a different modulus");
  }
  trim();
}

Poly::Poly(const FieldModulus& modulus, std::initializer_list<std::int64_t> coeffs) : modulus_(modulus) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.push_back(FieldElement::from_integer(modulus_, c));
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.modulus(), std::vector<FieldElement>{c}); }

Poly Poly::linear_from_root(const FieldElement& root) {
  return Poly(root.modulus(), std::vector<FieldElement>{-root, root.lift(1)});
}

Poly Poly::monomial(const FieldElement& c, int k) {
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(k) + 1, c.lift(0));
  coeffs.back() = c;
  return Poly(c.modulus(), std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElement::zero(modulus_);
  return coeffs_[static_cast<std::size_t>(i)];
}

const FieldElement& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

FieldElement Poly::eval(const FieldElement& x) const {
  if (!(x.modulus() == modulus_)) throw std::invalid_argument("evaluation point over a different modulus");
  FieldElement acc = FieldElement::zero(modulus_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(modulus_);
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * FieldElement::from_integer(modulus_, static_cast<std::int64_t>(i)));
  }
  return Poly(modulus_, std::move(out));
}

Poly Poly::monic() const {
  const FieldElement& lc = leading();
  if (lc.value() == 1) return *this;
  return scaled(lc.inv());
}

Poly Poly::scaled(const FieldElement& c) const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return Poly(modulus_, std::move(out));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  const Poly& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const Poly& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  Poly out = longer;
  for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) out.coeffs_[i] += shorter.coeffs_[i];
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.modulus_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.modulus_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.modulus_, std::move(out));
}

std::string Poly::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ',';
    out += coeffs_[i].to_string();
  }
  out += ']';
  return out;
}

DivRem divrem(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldModulus& m = a.modulus();
  if (a.degree() < b.degree()) return {Poly(m), a};
  const FieldElement lead_inv = b.leading().inv();
  std::vector<FieldElement> rem = a.coeffs();
  const std::vector<FieldElement>& div = b.coeffs();
  const std::size_t db = div.size() - 1;
  std::vector<FieldElement> quot(rem.size() - db, FieldElement::zero(m));
  for (std::size_t k = rem.size(); k-- > db;) {
    const FieldElement q = rem[k] * lead_inv;
    quot[k - db] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * div[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
  return {Poly(m, std::move(quot)), Poly(m, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  DivRem qr = divrem(a, b);
  if (!qr.remainder.is_zero()) {
    throw std::logic_error("inexact polynomial division: " + a.to_string() + " / " + b.to_string());
  }
  return std::move(qr.quotient);
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("xgcd of two zero polynomials");
  const FieldModulus& m = a.modulus();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(FieldElement::one(m)), s1(m);
  Poly t0(m), t1 = Poly::constant(FieldElement::one(m));
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const FieldElement lc_inv = r0.leading().inv();
  return {r0.scaled(lc_inv), s0.scaled(lc_inv), t0.scaled(lc_inv)};
}

}  // namespace g2jac
