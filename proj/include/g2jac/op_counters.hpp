// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef G2JAC_OP_COUNTERS_HPP
#define G2JAC_OP_COUNTERS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "g2jac/field.hpp"

namespace g2jac {

enum class CaseKind : std::uint8_t { DisjointGeneric, Doubling, SharedPlace, Fallback };

inline constexpr std::size_t kCaseKindCount = 4;
inline constexpr std::array<CaseKind, kCaseKindCount> kAllCaseKinds{CaseKind::DisjointGeneric, CaseKind::Doubling,
                                                                     CaseKind::SharedPlace, CaseKind::Fallback};

constexpr std::string_view case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::DisjointGeneric:
      return "DisjointGeneric";
    case CaseKind::Doubling:
      return "Doubling";
    case CaseKind::SharedPlace:
      return "SharedPlace";
    case CaseKind::Fallback:
      return "Fallback";
  }
  return "?";
}

std::optional<CaseKind> parse_case_name(std::string_view name);

/// Per-session accumulator: field operations plus how many additions took
/// each path. Owned by the caller and passed down explicitly; merge
/// per-worker instances with +=.
struct OpCounters {
  FieldOpTally field;
  std::array<std::uint64_t, kCaseKindCount> case_tally{};

  void record(CaseKind kind) { ++case_tally[static_cast<std::size_t>(kind)]; }
  std::uint64_t count(CaseKind kind) const { return case_tally[static_cast<std::size_t>(kind)]; }
  std::uint64_t additions() const {
    std::uint64_t total = 0;
    for (auto n : case_tally) total += n;
    return total;
  }

  OpCounters& operator+=(const OpCounters& other) {
    field += other.field;
    for (std::size_t i = 0; i < kCaseKindCount; ++i) case_tally[i] += other.case_tally[i];
    return *this;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace g2jac

#endif  // G2JAC_OP_COUNTERS_HPP
