// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_GROUP_HPP
#define G2JAC_GROUP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "g2jac/curve.hpp"
#include "g2jac/mumford.hpp"
#include "g2jac/op_counters.hpp"

namespace g2jac {

/// n * D by left-to-right double-and-add over the explicit addition law.
MumfordDivisor scalar_mul(const Curve& curve, u128 n, const MumfordDivisor& d, OpCounters* counters = nullptr);

/// Same ladder with Cantor's algorithm for every step.
MumfordDivisor scalar_mul_cantor(const Curve& curve, u128 n, const MumfordDivisor& d);

/// Every reduced divisor: the identity, then all weight-1 classes, then all
/// weight-2 classes (split or irreducible u), each block in ascending
/// coefficient order. O(p^3). Throws std::out_of_range when p > bound.
std::vector<MumfordDivisor> enumerate_jacobian(const Curve& curve, std::uint64_t bound = kDefaultEnumerationBound);

/// Least n >= 1 with n * D = 0, found by repeated addition. Throws
/// std::runtime_error past the Hasse-Weil bound (which would mean a broken
/// group law).
std::uint64_t element_order(const Curve& curve, const MumfordDivisor& d);

/// Sum of two independent random points' classes; weight 2 with
/// overwhelming probability for large p.
MumfordDivisor random_divisor(const Curve& curve, std::mt19937_64& rng);

}  // namespace g2jac

#endif  // G2JAC_GROUP_HPP
