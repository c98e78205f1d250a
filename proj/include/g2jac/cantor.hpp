// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_CANTOR_HPP
#define G2JAC_CANTOR_HPP

// Cantor's composition and reduction. Written for transparency rather than
// speed: it is the reference every explicit formula is checked against.

#include "g2jac/curve.hpp"
#include "g2jac/mumford.hpp"

namespace g2jac {

/// Semi-reduced pair (deg u <= 4 in genus 2) with u | v^2 - f.
struct ComposedPair {
  Poly u;
  Poly v;
};

ComposedPair cantor_compose(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2);

/// Reduces until deg u <= 2, then normalises u to monic and v mod u.
MumfordDivisor cantor_reduce(const Curve& curve, Poly u, Poly v);

/// reduce(compose(d1, d2)). With a non-null `tally`, field operations are
/// counted into it.
MumfordDivisor cantor_add(const Curve& curve, const MumfordDivisor& d1, const MumfordDivisor& d2,
                          FieldOpTally* tally = nullptr);

}  // namespace g2jac

#endif  // G2JAC_CANTOR_HPP
