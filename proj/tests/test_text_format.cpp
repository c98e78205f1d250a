// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "g2jac/group.hpp"
#include "g2jac/sweep.hpp"
#include "g2jac/text_format.hpp"
#include "test_support.hpp"

using namespace g2jac;
using g2jac::testing::divisor;
using g2jac::testing::fixed_curve;
using g2jac::testing::mod;

TEST_CASE("polynomial text") {
  const auto m = mod(7);
  CHECK(parse_poly(m, "[1,0,0,0,0,1]") == Poly(m, {1, 0, 0, 0, 0, 1}));
  CHECK(parse_poly(m, " [ 1 , -1 , 8 ] ") == Poly(m, {1, 6, 1}));
  CHECK(parse_poly(m, "[]").is_zero());
  CHECK(parse_poly(m, "[0,0]").is_zero());
  CHECK_THROWS_AS(parse_poly(m, "1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(m, "[1,]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(m, "[1,x]"), std::invalid_argument);
}

TEST_CASE("divisor text") {
  const auto m = mod(7);
  const MumfordDivisor d = divisor(m, {0, 6, 1}, {1, 2});
  CHECK(format_divisor(d) == "u=[0,6,1] v=[1,2]");
  CHECK(parse_divisor(m, "u=[0,6,1];v=[1,2]") == d);
  CHECK(parse_divisor(m, "u=[0,6,1] v=[1,2]") == d);
  CHECK(parse_divisor(m, "v=[1,2]; u=[0,-1,1]") == d);
  CHECK(parse_divisor(m, R"({"u":[0,6,1],"v":[1,2]})") == d);
  CHECK(parse_divisor(m, "u=[1];v=[]").is_identity());
  CHECK_THROWS_AS(parse_divisor(m, "u=[0,6,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divisor(m, "u=[0,6,1;v=[1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divisor(m, R"({"u":[0,6,1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divisor(m, R"({"u":[0,6,1],"v":[true]})"), std::invalid_argument);
}

TEST_CASE("every divisor at p = 7 round-trips through text and JSON") {
  const Curve c = fixed_curve();
  for (const auto& d : enumerate_jacobian(c)) {
    CHECK(parse_divisor(c.field(), format_divisor(d)) == d);
    CHECK(parse_divisor(c.field(), divisor_to_json(d).dump()) == d);
    CHECK(divisor_from_json(c.field(), divisor_to_json(d)) == d);
  }
}

TEST_CASE("wide coefficients are written as strings") {
  const Curve c = default_bench_curve(3);
  std::mt19937_64 rng(3);
  bool saw_string = false;
  for (int i = 0; i < 20; ++i) {
    const MumfordDivisor d = random_divisor(c, rng);
    const nlohmann::json j = divisor_to_json(d);
    for (const auto& x : j["u"]) saw_string |= x.is_string();
    CHECK(divisor_from_json(c.field(), nlohmann::json::parse(j.dump())) == d);
    CHECK(parse_divisor(c.field(), format_divisor(d)) == d);
  }
  CHECK(saw_string);
  const Poly small(mod(7), {3, 4});
  CHECK(coeffs_to_json(small) == nlohmann::json::array({3, 4}));
}

TEST_CASE("counter JSON") {
  OpCounters counters;
  counters.field.mults = 5;
  counters.field.invs = 1;
  counters.record(CaseKind::SharedPlace);
  const nlohmann::json j = counters_to_json(counters);
  CHECK(j["field_mults"] == 5);
  CHECK(j["field_invs"] == 1);
  CHECK(j["cases"]["SharedPlace"] == 1);
  CHECK(j["cases"]["Doubling"] == 0);
}

TEST_CASE("curve files") {
  const Curve c = parse_curve_file("# demo\np = 7\n\nf=[1,0,0,0,0,1]\n");
  CHECK(c == fixed_curve());
  CHECK(format_curve_file(c) == "p=7\nf=[1,0,0,0,0,1]\n");
  CHECK(parse_curve_file(format_curve_file(c)) == c);
  CHECK_THROWS_AS(parse_curve_file("p=7\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_file("p=7\nf=[1,0,0,0,0,1]\ng=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_file("p=7\nf=[0,0,0,0,0,1]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_file("p=8\nf=[1,0,0,0,0,1]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_file("p 7\n"), std::invalid_argument);
}
