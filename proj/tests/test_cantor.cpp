// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <string>

#include "g2jac/cantor.hpp"
#include "g2jac/group.hpp"
#include "test_support.hpp"

using namespace g2jac;
using g2jac::testing::fixed_curve;
using g2jac::testing::str;

TEST_CASE("composition with the identity") {
  const Curve c = fixed_curve();
  const auto id = MumfordDivisor::identity(c.field());
  for (const auto& d : enumerate_jacobian(c)) {
    const ComposedPair cp = cantor_compose(c, id, d);
    CHECK(cp.u == d.u);
    CHECK(cp.v == d.v);
    CHECK(cantor_reduce(c, cantor_compose(c, d, negate(d)).u, cantor_compose(c, d, negate(d)).v).is_identity());
  }
  const ComposedPair ii = cantor_compose(c, id, id);
  CHECK(cantor_reduce(c, ii.u, ii.v).is_identity());
}

TEST_CASE("composed pairs satisfy the Mumford condition and reduce in one step") {
  const Curve c = fixed_curve();
  const auto all = enumerate_jacobian(c);
  std::uint64_t failures = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      const ComposedPair cp = cantor_compose(c, a, b);
      failures += !(cp.u.leading().value() == 1);
      failures += !((cp.v * cp.v - c.f()) % cp.u).is_zero();
      failures += cp.v.degree() >= cp.u.degree() && !cp.v.is_zero();
      if (cp.u.degree() > 2) {
        // one reduction step: u' = (f - v^2) / u already has degree <= 2
        failures += exact_div(c.f() - cp.v * cp.v, cp.u).degree() > 2;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("reduction leaves reduced divisors unchanged") {
  const Curve c = fixed_curve();
  for (const auto& d : enumerate_jacobian(c)) CHECK(cantor_reduce(c, d.u, d.v) == d);
  // scaling u does not change the reduced form
  const auto d = enumerate_jacobian(c).back();
  CHECK(cantor_reduce(c, d.u.scaled(FieldElement(c.field(), 3)), d.v) == d);
}

TEST_CASE("group laws under Cantor addition for p = 5 and p = 7") {
  std::vector<Curve> curves = testing::admissible_random_curves(FieldModulus(5), 1, 11);
  curves.push_back(fixed_curve());
  for (const Curve& c : curves) {
    CAPTURE(c.f().to_string());
    const auto all = enumerate_jacobian(c);
    std::set<std::string> members;
    for (const auto& d : all) members.insert(str(d));
    const auto id = MumfordDivisor::identity(c.field());
    std::uint64_t failures = 0;
    for (const auto& a : all) {
      failures += !(cantor_add(c, a, id) == a);
      failures += !cantor_add(c, a, negate(a)).is_identity();
      for (const auto& b : all) {
        const MumfordDivisor ab = cantor_add(c, a, b);
        failures += !(ab == cantor_add(c, b, a));
        failures += members.count(str(ab)) == 0;
        failures += !validate(c, ab);
      }
    }
    CHECK(failures == 0);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 3000; ++i) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto& e = all[pick(rng)];
      failures += !(cantor_add(c, cantor_add(c, a, b), e) == cantor_add(c, a, cantor_add(c, b, e)));
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("tally only counts when requested") {
  const Curve c = fixed_curve();
  const auto all = enumerate_jacobian(c);
  FieldOpTally t;
  (void)cantor_add(c, all[10], all[20], &t);
  CHECK(t.mults > 0);
  FieldOpTally outer;
  {
    ScopedFieldTally scope(&outer);
    (void)cantor_add(c, all[10], all[20]);
  }
  CHECK(outer == t);
}
