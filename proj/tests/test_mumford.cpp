// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2jac/group.hpp"
#include "g2jac/mumford.hpp"
#include "test_support.hpp"

using namespace g2jac;
using g2jac::testing::divisor;
using g2jac::testing::fe;
using g2jac::testing::fixed_curve;
using g2jac::testing::str;

TEST_CASE("from_points and from_single examples") {
  const Curve c = fixed_curve();
  const auto m = c.field();
  CHECK(from_points(c, c.point(0, 1), c.point(1, 3)) == divisor(m, {0, 6, 1}, {1, 2}));
  CHECK(from_points(c, c.point(5, 2), c.point(6, 0)) == divisor(m, {2, 3, 1}, {5, 5}));
  CHECK_THROWS_AS(from_points(c, c.point(0, 1), c.point(0, 6)), std::invalid_argument);
  CHECK_THROWS_AS(from_points(c, c.point(0, 1), c.point(0, 1)), std::invalid_argument);
  CHECK(from_single(c, c.point(5, 2)) == divisor(m, {2, 1}, {2}));
  CHECK(MumfordDivisor::identity(m) == divisor(m, {1}, {}));
  CHECK(MumfordDivisor::identity(m).is_identity());
  CHECK(MumfordDivisor::identity(m).weight() == 0);
}

TEST_CASE("validate and negate examples") {
  const Curve c = fixed_curve();
  const auto m = c.field();
  CHECK(validate(c, divisor(m, {0, 6, 1}, {1, 2})));
  CHECK_FALSE(validate(c, divisor(m, {0, 6, 1}, {2, 2})));
  CHECK(validate(c, MumfordDivisor::identity(m)));
  CHECK_FALSE(validate(c, divisor(m, {0, 6, 2}, {1, 2})));     // not monic
  CHECK_FALSE(validate(c, divisor(m, {0, 0, 0, 1}, {1})));     // degree 3
  CHECK_FALSE(validate(c, divisor(m, {2, 1}, {2, 1})));        // deg v >= deg u
  CHECK(negate(divisor(m, {0, 6, 1}, {1, 2})) == divisor(m, {0, 6, 1}, {6, 5}));
}

TEST_CASE("support points") {
  const Curve c = fixed_curve();
  const auto m = c.field();
  const auto pts = support_points(c, divisor(m, {0, 6, 1}, {1, 2}));
  REQUIRE(pts.has_value());
  CHECK(*pts == std::vector<AffinePoint>{c.point(0, 1), c.point(1, 3)});
  CHECK_FALSE(support_points(c, divisor(m, {1, 0, 1}, {1})).has_value());
  const auto none = support_points(c, MumfordDivisor::identity(m));
  REQUIRE(none.has_value());
  CHECK(none->empty());
}

TEST_CASE("every pair of points builds a valid divisor with that support") {
  const Curve c = fixed_curve();
  const auto pts = c.enumerate_points();
  for (const auto& p : pts) {
    const MumfordDivisor single = from_single(c, p);
    CHECK(validate(c, single));
    for (const auto& q : pts) {
      if (p.x == q.x) continue;
      const MumfordDivisor d = from_points(c, p, q);
      CHECK(validate(c, d));
      const auto back = support_points(c, d);
      REQUIRE(back.has_value());
      CHECK(std::set<std::string>{str(from_single(c, (*back)[0])), str(from_single(c, (*back)[1]))} ==
            std::set<std::string>{str(single), str(from_single(c, q))});
      CHECK(validate(c, negate(d)));
    }
  }
}

TEST_CASE("validate accepts exactly the enumerated Jacobian") {
  const Curve c = fixed_curve();
  const auto m = c.field();
  std::set<std::string> accepted;
  for (std::int64_t a = 0; a < 7; ++a) {
    if (validate(c, divisor(m, {a, 1}, {}))) accepted.insert(str(divisor(m, {a, 1}, {})));
    for (std::int64_t d = 0; d < 7; ++d) {
      const MumfordDivisor w1 = divisor(m, {a, 1}, {d});
      if (validate(c, w1)) accepted.insert(str(w1));
      for (std::int64_t b = 0; b < 7; ++b) {
        for (std::int64_t e = 0; e < 7; ++e) {
          const MumfordDivisor w2 = divisor(m, {b, a, 1}, {d, e});
          if (validate(c, w2)) accepted.insert(str(w2));
        }
      }
    }
  }
  accepted.insert(str(MumfordDivisor::identity(m)));
  std::set<std::string> enumerated;
  for (const auto& d : enumerate_jacobian(c)) enumerated.insert(str(d));
  CHECK(enumerated == accepted);
  CHECK(accepted.size() == 50);
}

TEST_CASE("roots of monic polynomials of degree at most two") {
  const auto m = testing::mod(7);
  const auto r = roots_upto_quadratic(Poly(m, {2, 3, 1}));
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<FieldElement>{fe(m, 5), fe(m, 6)});
  CHECK_FALSE(roots_upto_quadratic(Poly(m, {1, 0, 1})).has_value());
  const auto dbl = roots_upto_quadratic(Poly(m, {1, 2, 1}));
  REQUIRE(dbl.has_value());
  CHECK(*dbl == std::vector<FieldElement>{fe(m, 6), fe(m, 6)});
}
