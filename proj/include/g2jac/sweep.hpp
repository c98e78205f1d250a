// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_SWEEP_HPP
#define G2JAC_SWEEP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "g2jac/curve.hpp"
#include "g2jac/explicit_add.hpp"
#include "g2jac/mumford.hpp"
#include "g2jac/op_counters.hpp"

namespace g2jac {

/// Identities every explicit (non-Fallback) addition must satisfy. Returns
/// an empty string on success, otherwise what failed.
std::string check_addition_identities(const Curve& curve, const AdditionTrace& trace);

struct VerifyReport {
  std::string curve_text;  // curve-file encoding
  std::uint64_t jacobian_order = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t mismatches = 0;        // explicit result != cantor_add
  std::uint64_t invalid_results = 0;   // result fails validate()
  std::uint64_t identity_failures = 0; // check_addition_identities
  OpCounters counters;
  std::map<std::string, std::uint64_t> fallback_reasons;
  std::vector<std::pair<std::string, std::string>> sample_failures;  // first few operand pairs

  bool passed() const { return mismatches == 0 && invalid_results == 0 && identity_failures == 0; }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Explicit addition against Cantor on every ordered pair of reduced
/// divisors. Splits the outer loop over `threads` workers (0 = hardware
/// concurrency); the report does not depend on the thread count.
VerifyReport verify_exhaustive(const Curve& curve, std::uint64_t bound = kDefaultEnumerationBound,
                               unsigned threads = 0);

struct BenchRow {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t field_mults = 0;
  std::uint64_t field_invs = 0;
  double total_micros = 0;

  double mean_mults() const { return samples == 0 ? 0.0 : static_cast<double>(field_mults) / samples; }
  double mean_invs() const { return samples == 0 ? 0.0 : static_cast<double>(field_invs) / samples; }
  double mean_micros() const { return samples == 0 ? 0.0 : total_micros / samples; }
};

struct BenchReport {
  std::string curve_text;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  std::uint64_t mismatches = 0;
  /// case1, case2, case3, fallback, cantor, in that order.
  std::vector<BenchRow> rows;

  /// With `timing` false the output is a deterministic function of
  /// (curve, iterations, seed).
  std::string to_text(bool timing = true) const;
  nlohmann::json to_json(bool timing = true) const;
};

/// 2^127 - 1.
FieldModulus default_bench_modulus();
/// Seeded random squarefree quintic over default_bench_modulus().
Curve default_bench_curve(std::uint64_t seed);

/// Cycles through disjoint, doubling, shared-place and weight-1 operand
/// pairs built from random points; every explicit result is cross-checked
/// against cantor_add.
BenchReport run_bench(const Curve& curve, std::uint64_t iterations, std::uint64_t seed);

}  // namespace g2jac

#endif  // G2JAC_SWEEP_HPP
