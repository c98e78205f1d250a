// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_FIELD_HPP
#define G2JAC_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace g2jac {

using u128 = unsigned __int128;

std::string to_decimal(u128 value);

/// Parses an unsigned decimal integer that fits in 128 bits. Throws
/// std::invalid_argument on malformed input or overflow.
u128 parse_decimal(std::string_view text);

/// Miller-Rabin. Deterministic below 3.3e24 (first twelve prime bases),
/// probabilistic with 24 extra fixed-seed bases above that.
bool is_probable_prime(u128 n);

/// An odd prime p >= 5. Construction validates; copies are cheap.
class FieldModulus {
 public:
  explicit FieldModulus(u128 p);

  u128 value() const { return p_; }
  bool wide() const { return (p_ >> 64) != 0; }

  friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

 private:
  u128 p_;
};

class FieldElement;

/// Accumulates field multiplications and inversions performed on the
/// calling thread while a ScopedFieldTally is alive.
struct FieldOpTally {
  std::uint64_t mults = 0;
  std::uint64_t invs = 0;

  FieldOpTally& operator+=(const FieldOpTally& other) {
    mults += other.mults;
    invs += other.invs;
    return *this;
  }
  friend bool operator==(const FieldOpTally&, const FieldOpTally&) = default;
};

/// Routes counts into `sink` for the lifetime of this object. Nested scopes
/// restore the outer sink on exit; every thread has its own slot.
class ScopedFieldTally {
 public:
  explicit ScopedFieldTally(FieldOpTally* sink);
  ~ScopedFieldTally();
  ScopedFieldTally(const ScopedFieldTally&) = delete;
  ScopedFieldTally& operator=(const ScopedFieldTally&) = delete;

 private:
  FieldOpTally* previous_;
};

/// Canonical residue in [0, p). Elements over different moduli never mix;
/// any attempt throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(const FieldModulus& modulus, u128 value);

  static FieldElement from_integer(const FieldModulus& modulus, std::int64_t n);
  static FieldElement zero(const FieldModulus& modulus) { return {modulus, 0}; }
  static FieldElement one(const FieldModulus& modulus) { return {modulus, 1}; }
  static FieldElement random(const FieldModulus& modulus, std::mt19937_64& rng);

  u128 value() const { return value_; }
  const FieldModulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  /// Element of the same field holding `n` reduced mod p.
  FieldElement lift(std::int64_t n) const { return from_integer(modulus_, n); }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }

  /// Throws std::domain_error for zero.
  FieldElement inv() const;
  FieldElement pow(u128 exponent) const;

  /// Both square roots in ascending order ({0} for zero, empty for a
  /// non-residue).
  std::vector<FieldElement> sqrt() const;

  /// Euler's criterion: 1 for residues, -1 for non-residues, 0 for zero.
  int legendre() const;

  std::string to_string() const { return to_decimal(value_); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  struct Raw {};
  FieldElement(Raw, const FieldModulus& modulus, u128 value) : modulus_(modulus), value_(value) {}

  FieldModulus modulus_;
  u128 value_;
};

inline FieldElement add(const FieldElement& x, const FieldElement& y) { return x + y; }
inline FieldElement sub(const FieldElement& x, const FieldElement& y) { return x - y; }
inline FieldElement mul(const FieldElement& x, const FieldElement& y) { return x * y; }
inline FieldElement neg(const FieldElement& x) { return -x; }
inline FieldElement inv(const FieldElement& x) { return x.inv(); }

}  // namespace g2jac

#endif  // G2JAC_FIELD_HPP
