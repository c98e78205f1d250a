// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/explicit_add.hpp"

#include <stdexcept>
#include <utility>

#include "g2jac/cantor.hpp"

namespace g2jac {

namespace {

struct Plan {
  AdditionCase addition_case;
  std::optional<FieldSystem> system;
  std::vector<MumfordDivisor> fitted;
};

Plan fallback(std::string reason) {
  Plan plan;
  plan.addition_case.kind = CaseKind::Fallback;
  plan.addition_case.reason = std::move(reason);
  return plan;
}

MumfordDivisor chord_divisor(const AffinePoint& a, const AffinePoint& b) {
  const QuadraticForm<FieldElement> q = chord_form(a.x, a.y, b.x, b.y);
  const FieldModulus& m = a.x.modulus();
  return {Poly(m, std::vector<FieldElement>{q.b, q.a, q.a.lift(1)}), Poly(m, std::vector<FieldElement>{q.d, q.c})};
}

Plan plan_equal_u(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2) {
  if (!(d1.v == d2.v)) {
    if (d1.v == negate(d2).v) return fallback("inverse operands");
    return fallback("equal u with partially agreeing v");
  }
  const auto pts = support_points(curve, d1);
  if (!pts) return fallback("doubling with irreducible u");
  const AffinePoint& mu = (*pts)[0];
  const AffinePoint& omega = (*pts)[1];
  if (mu.x == omega.x) return fallback("doubling a repeated place");
  if (mu.y.is_zero() || omega.y.is_zero()) return fallback("Weierstrass tangent");
  Plan plan;
  plan.addition_case.kind = CaseKind::Doubling;
  plan.system = build_case2_system(curve, mu, omega);
  plan.fitted = {tangent_divisor(curve, mu), tangent_divisor(curve, omega)};
  return plan;
}

Plan plan_shared_root(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2, const Poly& g) {
  const FieldElement s = -g.coeff(0);
  const FieldElement a = d1.u.coeff(1);
  const FieldElement alpha = d2.u.coeff(1);
  if (!(a == alpha)) {
    // u1(s) = u2(s) = 0 forces s (a - alpha) = beta - b.
    const FieldElement s_formula = (d2.u.coeff(0) - d1.u.coeff(0)) / (a - alpha);
    if (!(s_formula == s)) throw std::logic_error("shared root disagrees with (beta - b) / (a - alpha)");
  }
  const FieldElement t = d1.v.eval(s);
  if (!(t == d2.v.eval(s))) return fallback("involution-paired shared place");
  if (t.is_zero()) return fallback("Weierstrass shared place");
  const FieldElement mu_x = -a - s;
  const FieldElement om_x = -alpha - s;
  if (mu_x == s || om_x == s) return fallback("shared place with multiplicity");
  if (mu_x == om_x) return fallback("vertical chord");

  SharedPlaceDecomposition dec{{s, t}, {mu_x, d1.v.eval(mu_x)}, {om_x, d2.v.eval(om_x)}};
  Plan plan;
  plan.addition_case.kind = CaseKind::SharedPlace;
  plan.system = build_case3_system(curve, dec);
  plan.fitted = {tangent_divisor(curve, dec.shared), chord_divisor(dec.mu, dec.omega)};
  plan.addition_case.shared = std::move(dec);
  return plan;
}

Plan plan_addition(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2) {
  if (d1.weight() < 2 || d2.weight() < 2) return fallback("weight-deficient operand");
  const Poly g = gcd(d1.u, d2.u);
  switch (g.degree()) {
    case 0: {
      Plan plan;
      plan.addition_case.kind = CaseKind::DisjointGeneric;
      plan.system = build_case1_system(d1, d2);
      plan.fitted = {d1, d2};
      return plan;
    }
    case 1:
      return plan_shared_root(curve, d1, d2, g);
    default:
      return plan_equal_u(curve, d1, d2);
  }
}

}  // namespace

Poly InterpolationCubic::poly() const { return Poly(p0.modulus(), std::vector<FieldElement>{p0, p1, p2, p3}); }

QuadraticForm<FieldElement> quadratic_form(const MumfordDivisor& d) {
  if (d.weight() != 2) throw std::invalid_argument("expected a weight-2 divisor");
  return {d.u.coeff(1), d.u.coeff(0), d.v.coeff(1), d.v.coeff(0)};
}

FieldSystem build_case1_system(const MumfordDivisor& d1, const MumfordDivisor& d2) {
  return case1_system(quadratic_form(d1), quadratic_form(d2));
}

FieldElement tangent_slope(const Curve& curve, const AffinePoint& p) {
  if (p.y.is_zero()) throw std::domain_error("vertical tangent at a Weierstrass point");
  return curve.f().derivative().eval(p.x) / (p.y + p.y);
}

MumfordDivisor tangent_divisor(const Curve& curve, const AffinePoint& p) {
  const QuadraticForm<FieldElement> q = tangent_form(p.x, p.y, tangent_slope(curve, p));
  const FieldModulus& m = curve.field();
  return {Poly(m, std::vector<FieldElement>{q.b, q.a, q.a.lift(1)}), Poly(m, std::vector<FieldElement>{q.d, q.c})};
}

FieldSystem build_case2_system(const Curve& curve, const AffinePoint& mu, const AffinePoint& omega) {
  if (mu.x == omega.x) throw std::invalid_argument("doubling needs support points with distinct x");
  if (mu.y.is_zero() || omega.y.is_zero()) throw std::invalid_argument("doubling needs non-Weierstrass points");
  return tangent_pair_system(mu.x, mu.y, tangent_slope(curve, mu), omega.x, omega.y, tangent_slope(curve, omega));
}

std::optional<Poly> detect_shared_place(const MumfordDivisor& d1, const MumfordDivisor& d2) {
  if (d1.weight() != 2 || d2.weight() != 2) throw std::invalid_argument("detect_shared_place expects weight 2");
  Poly g = gcd(d1.u, d2.u);
  if (g.degree() == 0) return std::nullopt;
  return g;
}

FieldSystem build_case3_system(const Curve& curve, const SharedPlaceDecomposition& dec) {
  if (dec.shared.y.is_zero()) throw std::invalid_argument("shared place is a Weierstrass point");
  if (dec.mu.x == dec.omega.x) throw std::invalid_argument("vertical chord through mu and omega");
  const AffinePoint& p = dec.shared;
  return tangent_chord_system(p.x, p.y, tangent_slope(curve, p), dec.mu.x, dec.mu.y, dec.omega.x, dec.omega.y);
}

MumfordDivisor compose_from_cubic(const Curve& curve, const InterpolationCubic& cubic, const Poly& u1,
                                  const Poly& u2) {
  const Poly l = cubic.poly();
  const Poly residual = exact_div(l * l - curve.f(), u1 * u2);
  if (residual.degree() <= 0) return MumfordDivisor::identity(curve.field());
  const Poly u = residual.monic();
  return {u, (-l) % u};
}

AdditionCase classify(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2) {
  return plan_addition(curve, d1, d2).addition_case;
}

AdditionTrace add_traced(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2,
                         OpCounters* counters) {
  std::optional<ScopedFieldTally> scope;
  if (counters != nullptr) scope.emplace(&counters->field);

  Plan plan = plan_addition(curve, d1, d2);
  AdditionTrace trace{plan.addition_case, MumfordDivisor::identity(curve.field()), std::nullopt, {}};
  if (plan.system) {
    const Solution4<FieldElement> solution = solve(*plan.system);
    if (!solution) {
      // Coprime (or tangent-separated) moduli make the system invertible by
      // CRT, so this is unreachable on valid input.
      plan = fallback("singular interpolation system");
      trace.addition_case = plan.addition_case;
    } else {
      trace.cubic = InterpolationCubic::from_solution(*solution);
      trace.result = compose_from_cubic(curve, *trace.cubic, plan.fitted[0].u, plan.fitted[1].u);
      trace.fitted = std::move(plan.fitted);
    }
  }
  if (trace.addition_case.kind == CaseKind::Fallback) trace.result = cantor_add(curve, d1, d2);
  if (counters != nullptr) counters->record(trace.addition_case.kind);
  return trace;
}

MumfordDivisor add(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2, OpCounters* counters) {
  return add_traced(curve, d1, d2, counters).result;
}

MumfordDivisor double_divisor(const Curve& curve, const MumfordDivisor& d, OpCounters* counters) {
  return add(curve, d, d, counters);
}

}  // namespace g2jac
