// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/text_format.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace g2jac {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

FieldElement parse_coefficient(const FieldModulus& modulus, std::string_view token) {
  token = trim(token);
  bool negative = false;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  const FieldElement magnitude(modulus, parse_decimal(token));
  return negative ? -magnitude : magnitude;
}

// Value of `key=` inside `text`, up to the matching ']'.
std::optional<std::string_view> bracket_value(std::string_view text, std::string_view key) {
  std::size_t pos = 0;
  while ((pos = text.find(key, pos)) != std::string_view::npos) {
    const bool at_start = pos == 0 || text[pos - 1] == ';' || std::isspace(static_cast<unsigned char>(text[pos - 1])) != 0;
    std::size_t eq = pos + key.size();
    while (eq < text.size() && text[eq] == ' ') ++eq;
    if (at_start && eq < text.size() && text[eq] == '=') {
      const std::size_t open = text.find('[', eq);
      const std::size_t close = text.find(']', eq);
      if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
        throw std::invalid_argument("missing bracketed list after " + std::string(key) + "=");
      }
      return text.substr(open, close - open + 1);
    }
    ++pos;
  }
  return std::nullopt;
}

nlohmann::json element_to_json(const FieldElement& c) {
  if ((c.value() >> 64) == 0) return static_cast<std::uint64_t>(c.value());
  return c.to_string();
}

}  // namespace

Poly parse_poly(const FieldModulus& modulus, std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("polynomial must be a bracketed list: " + std::string(text));
  }
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<FieldElement> coeffs;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    coeffs.push_back(parse_coefficient(modulus, body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw std::invalid_argument("trailing comma in polynomial");
  }
  return Poly(modulus, std::move(coeffs));
}

MumfordDivisor parse_divisor(const FieldModulus& modulus, std::string_view text) {
  const std::string_view trimmed = trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    return divisor_from_json(modulus, nlohmann::json::parse(trimmed));
  }
  const auto u = bracket_value(trimmed, "u");
  const auto v = bracket_value(trimmed, "v");
  if (!u || !v) throw std::invalid_argument("divisor must look like u=[...];v=[...]: " + std::string(text));
  return {parse_poly(modulus, *u), parse_poly(modulus, *v)};
}

std::string format_divisor(const MumfordDivisor& d) { return "u=" + d.u.to_string() + " v=" + d.v.to_string(); }

nlohmann::json coeffs_to_json(const Poly& poly) {
  nlohmann::json out = nlohmann::json::array();
  for (const FieldElement& c : poly.coeffs()) out.push_back(element_to_json(c));
  return out;
}

Poly poly_from_json(const FieldModulus& modulus, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<FieldElement> coeffs;
  for (const auto& c : j) {
    if (c.is_number_unsigned()) {
      coeffs.emplace_back(modulus, c.get<std::uint64_t>());
    } else if (c.is_number_integer()) {
      coeffs.push_back(FieldElement::from_integer(modulus, c.get<std::int64_t>()));
    } else if (c.is_string()) {
      coeffs.push_back(parse_coefficient(modulus, c.get<std::string>()));
    } else {
      throw std::invalid_argument("polynomial coefficient must be an integer or decimal string");
    }
  }
  return Poly(modulus, std::move(coeffs));
}

nlohmann::json divisor_to_json(const MumfordDivisor& d) {
  return {{"u", coeffs_to_json(d.u)}, {"v", coeffs_to_json(d.v)}};
}

MumfordDivisor divisor_from_json(const FieldModulus& modulus, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v")) {
    throw std::invalid_argument("divisor JSON needs keys u and v");
  }
  return {poly_from_json(modulus, j.at("u")), poly_from_json(modulus, j.at("v"))};
}

nlohmann::json counters_to_json(const OpCounters& counters) {
  nlohmann::json cases = nlohmann::json::object();
  for (CaseKind kind : kAllCaseKinds) cases[std::string(case_name(kind))] = counters.count(kind);
  return {{"field_mults", counters.field.mults}, {"field_invs", counters.field.invs}, {"cases", cases}};
}

Curve parse_curve_file(std::string_view text) {
  std::optional<u128> p;
  std::optional<std::string> f_text;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("curve file line without '=': " + std::string(line));
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "p") {
      p = parse_decimal(value);
    } else if (key == "f") {
      f_text = std::string(value);
    } else {
      throw std::invalid_argument("unknown curve file key: " + std::string(key));
    }
  }
  if (!p || !f_text) throw std::invalid_argument("curve file needs both p= and f= lines");
  const FieldModulus modulus(*p);
  return Curve::validate(parse_poly(modulus, *f_text));
}

std::string format_curve_file(const Curve& curve) {
  return "p=" + to_decimal(curve.field().value()) + "\nf=" + curve.f().to_string() + "\n";
}

}  // namespace g2jac
