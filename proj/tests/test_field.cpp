// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "g2jac/field.hpp"
#include "test_support.hpp"

using namespace g2jac;
using g2jac::testing::fe;
using g2jac::testing::mod;

namespace {

std::vector<u128> values(const std::vector<FieldElement>& xs) {
  std::vector<u128> out;
  for (const auto& x : xs) out.push_back(x.value());
  return out;
}

}  // namespace

TEST_CASE("addition examples") {
  CHECK((fe(mod(7), 3) + fe(mod(7), 5)).value() == 1);
  CHECK((fe(mod(7), 0) + fe(mod(7), 4)).value() == 4);
  CHECK((fe(mod(13), 12) + fe(mod(13), 12)).value() == 11);
}

TEST_CASE("multiplication examples") {
  CHECK(mul(fe(mod(7), 3), fe(mod(7), 5)).value() == 1);
  CHECK(mul(fe(mod(7), 1), fe(mod(7), 6)).value() == 6);
  CHECK(mul(fe(mod(11), 7), fe(mod(11), 8)).value() == 1);
}

TEST_CASE("inverse examples") {
  CHECK(inv(fe(mod(7), 3)).value() == 5);
  CHECK(inv(fe(mod(7), 1)).value() == 1);
  CHECK(inv(fe(mod(13), 2)).value() == 7);
  CHECK_THROWS_AS(inv(fe(mod(7), 0)), std::domain_error);
  CHECK_THROWS_AS(fe(mod(7), 3) / fe(mod(7), 0), std::domain_error);
}

TEST_CASE("square root examples") {
  CHECK(values(fe(mod(7), 2).sqrt()) == std::vector<u128>{3, 4});
  CHECK(values(fe(mod(7), 0).sqrt()) == std::vector<u128>{0});
  CHECK(fe(mod(7), 5).sqrt().empty());
}

TEST_CASE("negative integers reduce into range") {
  CHECK(fe(mod(7), -1).value() == 6);
  CHECK(fe(mod(7), -15).value() == 6);
  CHECK(neg(fe(mod(7), 0)).value() == 0);
  CHECK(sub(fe(mod(7), 2), fe(mod(7), 5)).value() == 4);
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(FieldModulus(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldModulus(3), std::invalid_argument);
  CHECK_THROWS_AS(FieldModulus(9), std::invalid_argument);
  CHECK_THROWS_AS(FieldModulus(561), std::invalid_argument);
  CHECK_NOTHROW(FieldModulus(5));
  const u128 m127 = (u128(1) << 127) - 1;
  CHECK_NOTHROW(FieldModulus{m127});
  CHECK_THROWS_AS(FieldModulus{m127 + 2}, std::invalid_argument);  // divisible by 3
  // strong pseudoprime to every prime base up to 37
  CHECK_FALSE(is_probable_prime(parse_decimal("3317044064679887385961981")));
  CHECK(is_probable_prime(parse_decimal("1267650600228229401496703205953")));
}

TEST_CASE("mixing moduli is rejected") {
  CHECK_THROWS_AS(fe(mod(7), 1) + fe(mod(11), 1), std::invalid_argument);
  CHECK_THROWS_AS(fe(mod(7), 1) * fe(mod(11), 1), std::invalid_argument);
}

TEST_CASE("decimal text round trip") {
  const u128 big = (u128(1) << 127) - 1;
  CHECK(to_decimal(big) == "170141183460469231731687303715884105727");
  CHECK(parse_decimal(to_decimal(big)) == big);
  CHECK(to_decimal(0) == "0");
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("999999999999999999999999999999999999999999"), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for small primes") {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    CAPTURE(p);
    const FieldModulus m(p);
    std::vector<FieldElement> all;
    for (std::uint64_t i = 0; i < p; ++i) all.push_back(FieldElement(m, i));
    const FieldElement zero = FieldElement::zero(m), one = FieldElement::one(m);
    bool ok = true;
    for (const auto& a : all) {
      ok &= (a + zero == a) && (a * one == a) && (a + (-a) == zero);
      if (!a.is_zero()) ok &= (a * a.inv() == one);
      for (const auto& b : all) {
        ok &= (a + b == b + a) && (a * b == b * a);
        ok &= (a + b).value() == (a.value() + b.value()) % p;
        ok &= (a * b).value() == (a.value() * b.value()) % p;
        for (const auto& c : all) {
          ok &= ((a + b) + c == a + (b + c)) && ((a * b) * c == a * (b * c)) && (a * (b + c) == a * b + a * c);
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("square roots agree with a brute-force table") {
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u, 41u, 73u, 97u}) {
    CAPTURE(p);
    const FieldModulus m(p);
    std::vector<std::vector<u128>> table(p);
    for (std::uint64_t r = 0; r < p; ++r) table[r * r % p].push_back(r);
    for (std::uint64_t a = 0; a < p; ++a) {
      auto roots = values(FieldElement(m, a).sqrt());
      CHECK(roots == table[a]);
      CHECK(FieldElement(m, a).legendre() == (a == 0 ? 0 : table[a].empty() ? -1 : 1));
    }
  }
}

TEST_CASE("large-prime arithmetic is consistent") {
  std::mt19937_64 rng(20261017);
  const FieldModulus m127((u128(1) << 127) - 1);
  const FieldModulus m101(parse_decimal("1267650600228229401496703205953"));  // 1 mod 16
  for (const FieldModulus& m : {m127, m101}) {
    for (int i = 0; i < 300; ++i) {
      const FieldElement a = FieldElement::random(m, rng), b = FieldElement::random(m, rng);
      CHECK(a.value() < m.value());
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a * b) / b == a);
      const FieldElement sq = a * a;
      const auto roots = sq.sqrt();
      REQUIRE(!roots.empty());
      for (const auto& r : roots) CHECK(r * r == sq);
      CHECK(a.pow(m.value() - 1) == (a.is_zero() ? FieldElement::zero(m) : FieldElement::one(m)));
    }
  }
}

TEST_CASE("random elements are reproducible per seed") {
  const FieldModulus m((u128(1) << 127) - 1);
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 20; ++i) CHECK(FieldElement::random(m, r1) == FieldElement::random(m, r2));
}

TEST_CASE("scoped tally counts multiplications and inversions") {
  const FieldModulus m(7);
  FieldOpTally outer, inner;
  {
    ScopedFieldTally scope(&outer);
    (void)(fe(m, 3) * fe(m, 4));
    {
      ScopedFieldTally nested(&inner);
      (void)fe(m, 3).inv();
    }
    (void)(fe(m, 3) + fe(m, 4));
  }
  (void)(fe(m, 2) * fe(m, 2));
  CHECK(outer.mults == 1);
  CHECK(outer.invs == 0);
  CHECK(inner.invs == 1);
}
