// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace g2jac {

namespace {

thread_local FieldOpTally* active_tally = nullptr;

inline void count_mult() {
  if (active_tally != nullptr) ++active_tally->mults;
}

inline void count_inv() {
  if (active_tally != nullptr) ++active_tally->invs;
}

u128 add_mod(u128 a, u128 b, u128 p) {
  // a, b < p <= 2^128 - 1, so a + b may wrap; compare against p - b instead.
  return a >= p - b ? a - (p - b) : a + b;
}

u128 sub_mod(u128 a, u128 b, u128 p) { return a >= b ? a - b : p - (b - a); }

u128 mul_mod(u128 a, u128 b, u128 p) {
  if ((p >> 64) == 0) {
    // Both operands are below 2^64 here.
    return (a * b) % p;
  }
  using boost::multiprecision::uint256_t;
  uint256_t product = uint256_t(a) * uint256_t(b);
  return static_cast<u128>(product % uint256_t(p));
}

u128 pow_mod(u128 base, u128 exponent, u128 p) {
  u128 result = 1 % p;
  while (exponent != 0) {
    if ((exponent & 1) != 0) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

bool miller_rabin_round(u128 n, u128 d, int s, u128 base) {
  base %= n;
  if (base == 0) return true;
  u128 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

void require_same(const FieldModulus& a, const FieldModulus& b) {
  if (!(a == b)) {
    throw std::invalid_argument("field elements over different moduli (p=" + to_decimal(a.value()) +
                                ", p=" + to_decimal(b.value()) + ")");
  }
}

}  // namespace

std::string to_decimal(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

u128 parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  constexpr u128 kMax = ~u128{0};
  u128 value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
    const auto digit = static_cast<unsigned>(ch - '0');
    if (value > (kMax - digit) / 10) throw std::invalid_argument("integer exceeds 128 bits: " + std::string(text));
    value = value * 10 + digit;
  }
  return value;
}

bool is_probable_prime(u128 n) {
  static constexpr std::array<unsigned, 12> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (unsigned q : kSmallPrimes) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned q : kSmallPrimes) {
    if (!miller_rabin_round(n, d, s, q)) return false;
  }
  // 3317044064679887385961981 is the smallest strong pseudoprime to all
  // twelve bases above.
  static const u128 kDeterministicBound = parse_decimal("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int round = 0; round < 24; ++round) {
    u128 base = (static_cast<u128>(rng()) << 64) | rng();
    base = 2 + base % (n - 3);
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

FieldModulus::FieldModulus(u128 p) : p_(p) {
  if (p < 5) throw std::invalid_argument("modulus must be a prime >= 5, got " + to_decimal(p));
  if (!is_probable_prime(p)) throw std::invalid_argument("modulus is not prime: " + to_decimal(p));
}

ScopedFieldTally::ScopedFieldTally(FieldOpTally* sink) : previous_(active_tally) { active_tally = sink; }

ScopedFieldTally::~ScopedFieldTally() { active_tally = previous_; }

FieldElement::FieldElement(const FieldModulus& modulus, u128 value)
    : modulus_(modulus), value_(value % modulus.value()) {}

FieldElement FieldElement::from_integer(const FieldModulus& modulus, std::int64_t n) {
  const u128 p = modulus.value();
  if (n >= 0) return {modulus, static_cast<u128>(n) % p};
  // Negate in unsigned space so INT64_MIN is handled.
  const u128 magnitude = static_cast<u128>(-(n + 1)) + 1;
  const u128 reduced = magnitude % p;
  return {modulus, reduced == 0 ? 0 : p - reduced};
}

FieldElement FieldElement::random(const FieldModulus& modulus, std::mt19937_64& rng) {
  const u128 p = modulus.value();
  if (!modulus.wide()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, static_cast<std::uint64_t>(p - 1));
    return {modulus, dist(rng)};
  }
  // Rejection sampling on the smallest covering power of two.
  int bits = 128;
  while (bits > 0 && ((p - 1) >> (bits - 1)) == 0) --bits;
  const u128 mask = bits == 128 ? ~u128{0} : ((u128{1} << bits) - 1);
  for (;;) {
    const u128 candidate = ((static_cast<u128>(rng()) << 64) | rng()) & mask;
    if (candidate < p) return {modulus, candidate};
  }
}

FieldElement FieldElement::operator-() const {
  return {Raw{}, modulus_, value_ == 0 ? 0 : modulus_.value() - value_};
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same(x.modulus_, y.modulus_);
  return {FieldElement::Raw{}, x.modulus_, add_mod(x.value_, y.value_, x.modulus_.value())};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same(x.modulus_, y.modulus_);
  return {FieldElement::Raw{}, x.modulus_, sub_mod(x.value_, y.value_, x.modulus_.value())};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same(x.modulus_, y.modulus_);
  count_mult();
  return {FieldElement::Raw{}, x.modulus_, mul_mod(x.value_, y.value_, x.modulus_.value())};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inv(); }

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_" + to_decimal(modulus_.value()));
  count_inv();
  // Extended Euclid on (value, p) with signed-free bookkeeping: track the
  // coefficients modulo p.
  const u128 p = modulus_.value();
  u128 r0 = p, r1 = value_;
  u128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const u128 q = r0 / r1;
    const u128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const u128 t2 = sub_mod(t0, mul_mod(q % p, t1, p), p);
    t0 = t1;
    t1 = t2;
  }
  return {Raw{}, modulus_, t0};
}

FieldElement FieldElement::pow(u128 exponent) const {
  return {Raw{}, modulus_, pow_mod(value_, exponent, modulus_.value())};
}

int FieldElement::legendre() const {
  if (value_ == 0) return 0;
  return pow((modulus_.value() - 1) / 2).value_ == 1 ? 1 : -1;
}

std::vector<FieldElement> FieldElement::sqrt() const {
  const u128 p = modulus_.value();
  if (value_ == 0) return {*this};
  if (legendre() != 1) return {};
  u128 root;
  if (p % 4 == 3) {
    root = pow_mod(value_, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    u128 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u128 z = 2;
    while (FieldElement(modulus_, z).legendre() != -1) ++z;
    int m = s;
    u128 c = pow_mod(z, q, p);
    u128 t = pow_mod(value_, q, p);
    root = pow_mod(value_, (q + 1) / 2, p);
    while (t != 1) {
      int i = 0;
      u128 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u128 b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      root = mul_mod(root, b, p);
    }
  }
  const u128 other = p - root;
  return {FieldElement(Raw{}, modulus_, std::min(root, other)), FieldElement(Raw{}, modulus_, std::max(root, other))};
}

}  // namespace g2jac
