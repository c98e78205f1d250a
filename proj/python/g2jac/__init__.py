# Copyright 2026 The g2jac Authors
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Explicit genus-2 Jacobian arithmetic over prime fields."""

from ._g2jac import (
    Curve,
    Divisor,
    add,
    bench,
    cantor_add,
    classify,
    divisor,
    double,
    element_order,
    enumerate_jacobian,
    figure_svg,
    from_points,
    from_single,
    identity,
    negate,
    parse_divisor,
    scalar_mul,
    support_points,
    validate,
    verify,
)

__all__ = [
    "Curve",
    "Divisor",
    "add",
    "bench",
    "cantor_add",
    "classify",
    "divisor",
    "double",
    "element_order",
    "enumerate_jacobian",
    "figure_svg",
    "from_points",
    "from_single",
    "identity",
    "negate",
    "parse_divisor",
    "scalar_mul",
    "support_points",
    "validate",
    "verify",
]
