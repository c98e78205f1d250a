// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_FIGURE_HPP
#define G2JAC_FIGURE_HPP

// Real-number sketches of the three interpolation constructions on the
// curve y^2 = x^5 - 5x^3 + 4x. This is the only floating-point code in the
// library; the cubic comes from the same system builders the exact
// arithmetic uses, instantiated over double.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2jac {

struct FigurePoint {
  double x = 0;
  double y = 0;
  int multiplicity = 1;
  std::string role;  // "operand", "residual" or "sum"
  std::optional<double> curve_slope;  // set where L must be tangent
};

struct FigureData {
  int case_id = 0;
  std::vector<double> f;       // ascending coefficients of the real quintic
  std::array<double, 4> cubic{};  // p3, p2, p1, p0
  /// Zeros of y - L(x) on the curve; multiplicities sum to six.
  std::vector<FigurePoint> construction;
  /// Involutes of the residual points: the support of the sum.
  std::vector<FigurePoint> sum;
};

double figure_curve_f(double x);
double figure_curve_slope(double x, double y);

/// Built-in fixtures for case 1 (disjoint), 2 (doubling), 3 (shared place).
/// Throws std::invalid_argument for any other id.
FigureData build_figure(int case_id);

/// SVG 1.1 document; a <metadata> element carries FigureData as JSON.
std::string render_svg(const FigureData& data);

/// Reads the metadata back out of render_svg() output.
FigureData figure_from_svg(std::string_view svg);

}  // namespace g2jac

#endif  // G2JAC_FIGURE_HPP
