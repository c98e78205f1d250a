// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_TEXT_FORMAT_HPP
#define G2JAC_TEXT_FORMAT_HPP

// Text and JSON encodings shared by the CLI, the Python module and the test
// fixtures.
//
//   polynomial  [c0,c1,...]            ascending; "[]" is zero
//   divisor     u=[b,a,1];v=[d,c]      ';' or whitespace between the parts
//   curve file  p=<decimal>            one key per line, '#' comments
//               f=[c0,...,c5]
//   JSON        {"u":[...],"v":[...]}  coefficients are JSON integers when
//                                      they fit in 64 bits, decimal strings
//                                      otherwise

#include <string>
#include <string_view>

#include "json.hpp"

#include "g2jac/curve.hpp"
#include "g2jac/mumford.hpp"
#include "g2jac/op_counters.hpp"

namespace g2jac {

/// Signed decimal coefficients are reduced mod p. Throws
/// std::invalid_argument on malformed text.
Poly parse_poly(const FieldModulus& modulus, std::string_view text);

/// Accepts "u=[..];v=[..]", "u=[..] v=[..]", or the JSON object form.
/// Does not validate the Mumford condition.
MumfordDivisor parse_divisor(const FieldModulus& modulus, std::string_view text);

/// "u=[..] v=[..]"
std::string format_divisor(const MumfordDivisor& d);

nlohmann::json coeffs_to_json(const Poly& poly);
Poly poly_from_json(const FieldModulus& modulus, const nlohmann::json& j);

nlohmann::json divisor_to_json(const MumfordDivisor& d);
MumfordDivisor divisor_from_json(const FieldModulus& modulus, const nlohmann::json& j);

nlohmann::json counters_to_json(const OpCounters& counters);

/// Parses the curve-file header (p and f lines) and validates the curve.
Curve parse_curve_file(std::string_view text);
std::string format_curve_file(const Curve& curve);

}  // namespace g2jac

#endif  // G2JAC_TEXT_FORMAT_HPP
