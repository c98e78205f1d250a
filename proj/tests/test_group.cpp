// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <string>

#include "g2jac/cantor.hpp"
#include "g2jac/explicit_add.hpp"
#include "g2jac/group.hpp"
#include "test_support.hpp"

using namespace g2jac;
using g2jac::testing::fixed_curve;
using g2jac::testing::str;

namespace {

// Independent ladder: repeated Cantor addition.
MumfordDivisor repeated_sum(const Curve& c, std::uint64_t n, const MumfordDivisor& d) {
  MumfordDivisor acc = MumfordDivisor::identity(c.field());
  for (std::uint64_t i = 0; i < n; ++i) acc = cantor_add(c, acc, d);
  return acc;
}

}  // namespace

TEST_CASE("small scalars") {
  const Curve c = fixed_curve();
  for (const auto& d : enumerate_jacobian(c)) {
    CHECK(scalar_mul(c, 0, d).is_identity());
    CHECK(scalar_mul(c, 1, d) == d);
    CHECK(scalar_mul(c, 2, d) == cantor_add(c, d, d));
  }
}

TEST_CASE("explicit and Cantor ladders agree for n <= 50") {
  const Curve c = fixed_curve();
  std::uint64_t failures = 0;
  for (const auto& d : enumerate_jacobian(c)) {
    for (std::uint64_t n = 0; n <= 50; ++n) {
      const MumfordDivisor e = scalar_mul(c, n, d);
      failures += !(e == scalar_mul_cantor(c, n, d));
      failures += !(e == repeated_sum(c, n, d));
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("scalar multiplication is additive in the scalar") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::uint64_t> scalar(0, 1000);
  for (const Curve& c : {fixed_curve(), testing::admissible_random_curves(FieldModulus(13), 1, 7)[0]}) {
    for (int i = 0; i < 300; ++i) {
      const MumfordDivisor d = random_divisor(c, rng);
      const std::uint64_t m = scalar(rng), n = scalar(rng);
      CHECK(scalar_mul(c, m + n, d) == add(c, scalar_mul(c, m, d), scalar_mul(c, n, d)));
    }
  }
}

TEST_CASE("enumeration") {
  const Curve c = fixed_curve();
  const auto all = enumerate_jacobian(c);
  CHECK(all.size() == 50);
  CHECK(all.front().is_identity());
  std::set<std::string> unique;
  std::size_t identities = 0;
  for (const auto& d : all) {
    unique.insert(str(d));
    identities += d.is_identity();
    CHECK(validate(c, d));
    CHECK(scalar_mul(c, all.size(), d).is_identity());
  }
  CHECK(unique.size() == all.size());
  CHECK(identities == 1);
  CHECK(enumerate_jacobian(c) == all);
  CHECK_THROWS_AS(enumerate_jacobian(Curve::validate(Poly(FieldModulus(1009), {1, 0, 0, 0, 0, 1}))), std::out_of_range);
  const Curve c101 = Curve::validate(Poly(FieldModulus(101), {1, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(enumerate_jacobian(c101, 100), std::out_of_range);
  CHECK(enumerate_jacobian(c101, 101).size() > 0);
}

TEST_CASE("element orders") {
  for (const Curve& c : {fixed_curve(), testing::admissible_random_curves(FieldModulus(11), 1, 3)[0]}) {
    const auto all = enumerate_jacobian(c);
    CHECK(element_order(c, MumfordDivisor::identity(c.field())) == 1);
    for (const auto& d : all) {
      const std::uint64_t n = element_order(c, d);
      CHECK(all.size() % n == 0);
      CHECK(element_order(c, negate(d)) == n);
      CHECK(scalar_mul(c, n, d).is_identity());
      MumfordDivisor acc = d;
      std::uint64_t first = 1;
      while (!acc.is_identity()) {
        acc = cantor_add(c, acc, d);
        ++first;
      }
      CHECK(first == n);
    }
  }
}

TEST_CASE("random divisors are valid and reproducible") {
  const Curve c = fixed_curve();
  std::mt19937_64 a(17), b(17);
  for (int i = 0; i < 100; ++i) {
    const MumfordDivisor d = random_divisor(c, a);
    CHECK(validate(c, d));
    CHECK(d == random_divisor(c, b));
  }
}
