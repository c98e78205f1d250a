// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "g2jac/cantor.hpp"
#include "g2jac/explicit_add.hpp"

namespace g2jac {

std::optional<CaseKind> parse_case_name(std::string_view name) {
  for (CaseKind kind : kAllCaseKinds) {
    if (case_name(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

template <class Add>
MumfordDivisor ladder(const Curve& curve, u128 n, const MumfordDivisor& d, Add&& add_fn) {
  MumfordDivisor acc = MumfordDivisor::identity(curve.field());
  if (n == 0) return acc;
  int bit = 127;
  while (((n >> bit) & 1) == 0) --bit;
  for (; bit >= 0; --bit) {
    acc = add_fn(acc, acc);
    if (((n >> bit) & 1) != 0) acc = add_fn(acc, d);
  }
  return acc;
}

}  // namespace

MumfordDivisor scalar_mul(const Curve& curve, u128 n, const MumfordDivisor& d, OpCounters* counters) {
  return ladder(curve, n, d, [&](const MumfordDivisor& a, const MumfordDivisor& b) {
    return &a == &b || a == b ? double_divisor(curve, a, counters) : add(curve, a, b, counters);
  });
}

MumfordDivisor scalar_mul_cantor(const Curve& curve, u128 n, const MumfordDivisor& d) {
  return ladder(curve, n, d,
                [&](const MumfordDivisor& a, const MumfordDivisor& b) { return cantor_add(curve, a, b); });
}

std::vector<MumfordDivisor> enumerate_jacobian(const Curve& curve, std::uint64_t bound) {
  const FieldModulus& m = curve.field();
  if (m.value() > bound) {
    throw std::out_of_range("p=" + to_decimal(m.value()) + " exceeds the enumeration bound " + std::to_string(bound));
  }
  const auto p = static_cast<std::uint64_t>(m.value());
  const FieldElement one = FieldElement::one(m);
  const FieldElement two = one + one;

  std::vector<MumfordDivisor> out;
  out.push_back(MumfordDivisor::identity(m));
  for (const AffinePoint& pt : curve.enumerate_points(bound)) out.push_back(from_single(curve, pt));

  // u = x^2 + a x + b, v = c x + d. Writing f = f1 x + f0 (mod u),
  //   v^2 = (2cd - a c^2) x + (d^2 - b c^2)   (mod u),
  // so each c != 0 fixes d = (f1 + a c^2) / (2c) and c = 0 needs f1 = 0.
  for (std::uint64_t ai = 0; ai < p; ++ai) {
    const FieldElement a(m, ai);
    for (std::uint64_t bi = 0; bi < p; ++bi) {
      const FieldElement b(m, bi);
      const Poly u(m, std::vector<FieldElement>{b, a, one});
      const Poly fr = curve.f() % u;
      const FieldElement f0 = fr.coeff(0);
      const FieldElement f1 = fr.coeff(1);
      std::vector<Poly> vs;
      if (f1.is_zero()) {
        for (const FieldElement& d : f0.sqrt()) vs.push_back(Poly::constant(d));
      }
      for (std::uint64_t ci = 1; ci < p; ++ci) {
        const FieldElement c(m, ci);
        const FieldElement c2 = c * c;
        const FieldElement d = (f1 + a * c2) / (two * c);
        if (d * d - b * c2 == f0) vs.push_back(Poly(m, std::vector<FieldElement>{d, c}));
      }
      for (Poly& v : vs) out.push_back({u, std::move(v)});
    }
  }
  return out;
}

std::uint64_t element_order(const Curve& curve, const MumfordDivisor& d) {
  const double root = std::sqrt(static_cast<double>(curve.field().value()));
  const auto hasse_weil = static_cast<std::uint64_t>(std::ceil(std::pow(root + 1.0, 4)));
  MumfordDivisor acc = d;
  for (std::uint64_t n = 1; n <= hasse_weil; ++n) {
    if (acc.is_identity()) return n;
    acc = add(curve, acc, d);
  }
  throw std::runtime_error("element order exceeds the Hasse-Weil bound");
}

MumfordDivisor random_divisor(const Curve& curve, std::mt19937_64& rng) {
  for (;;) {
    const AffinePoint p = curve.random_point(rng);
    const AffinePoint q = curve.random_point(rng);
    if (p.x == q.x) continue;
    return from_points(curve, p, q);
  }
}

}  // namespace g2jac
