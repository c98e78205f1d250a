// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "g2jac/cantor.hpp"
#include "g2jac/group.hpp"
#include "g2jac/text_format.hpp"

namespace g2jac {

namespace {

constexpr std::size_t kMaxSampleFailures = 5;

// Double root of a tangent form's u = (x - x0)^2.
FieldElement double_root(const Poly& u) { return -u.coeff(1) / u.coeff(1).lift(2); }

std::string check_tangency(const Curve& curve, const Poly& l, const Poly& dl, const FieldElement& x0,
                           const FieldElement& y0) {
  if (!(l.eval(x0) == y0)) return "L(x0) != y0 at x0=" + x0.to_string();
  if (!(dl.eval(x0) == tangent_slope(curve, {x0, y0}))) return "L'(x0) != f'(x0)/(2 y0) at x0=" + x0.to_string();
  return {};
}

void merge_into(VerifyReport& total, const VerifyReport& part) {
  total.pairs_checked += part.pairs_checked;
  total.mismatches += part.mismatches;
  total.invalid_results += part.invalid_results;
  total.identity_failures += part.identity_failures;
  total.counters += part.counters;
  for (const auto& [reason, n] : part.fallback_reasons) total.fallback_reasons[reason] += n;
  for (const auto& sample : part.sample_failures) {
    if (total.sample_failures.size() < kMaxSampleFailures) total.sample_failures.push_back(sample);
  }
}

std::string format_double(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

}  // namespace

std::string check_addition_identities(const Curve& curve, const AdditionTrace& trace) {
  if (trace.addition_case.kind == CaseKind::Fallback) return {};
  if (!trace.cubic || trace.fitted.size() != 2) return "explicit path without cubic";
  const Poly l = trace.cubic->poly();
  for (const MumfordDivisor& form : trace.fitted) {
    if (!((l - form.v) % form.u).is_zero()) return "(L - v) mod u != 0 for u=" + form.u.to_string();
  }
  if (!((l * l - curve.f()) % (trace.fitted[0].u * trace.fitted[1].u)).is_zero()) return "u1 u2 does not divide L^2 - f";

  const Poly dl = l.derivative();
  if (trace.addition_case.kind == CaseKind::Doubling) {
    for (const MumfordDivisor& form : trace.fitted) {
      const FieldElement x0 = double_root(form.u);
      if (auto err = check_tangency(curve, l, dl, x0, form.v.eval(x0)); !err.empty()) return err;
    }
  } else if (trace.addition_case.kind == CaseKind::SharedPlace) {
    const AffinePoint& p = trace.addition_case.shared->shared;
    if (auto err = check_tangency(curve, l, dl, p.x, p.y); !err.empty()) return err;
  }
  if (!validate(curve, trace.result)) return "result is not a valid Mumford divisor";
  return {};
}

VerifyReport verify_exhaustive(const Curve& curve, std::uint64_t bound, unsigned threads) {
  const std::vector<MumfordDivisor> elements = enumerate_jacobian(curve, bound);
  const std::size_t n = elements.size();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::vector<VerifyReport> parts(threads);
  auto work = [&](unsigned worker) {
    VerifyReport& part = parts[worker];
    const std::size_t begin = n * worker / threads;
    const std::size_t end = n * (worker + 1) / threads;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const MumfordDivisor& d1 = elements[i];
        const MumfordDivisor& d2 = elements[j];
        const AdditionTrace trace = add_traced(curve, d1, d2, &part.counters);
        const MumfordDivisor expected = cantor_add(curve, d1, d2);
        ++part.pairs_checked;
        if (trace.addition_case.kind == CaseKind::Fallback) ++part.fallback_reasons[trace.addition_case.reason];
        bool failed = false;
        if (!(trace.result == expected)) {
          ++part.mismatches;
          failed = true;
        }
        if (!validate(curve, trace.result)) {
          ++part.invalid_results;
          failed = true;
        }
        if (!check_addition_identities(curve, trace).empty()) {
          ++part.identity_failures;
          failed = true;
        }
        if (failed && part.sample_failures.size() < kMaxSampleFailures) {
          part.sample_failures.emplace_back(format_divisor(d1), format_divisor(d2));
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  VerifyReport report;
  report.curve_text = format_curve_file(curve);
  report.jacobian_order = n;
  for (const VerifyReport& part : parts) merge_into(report, part);
  return report;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  std::istringstream curve_lines(curve_text);
  for (std::string line; std::getline(curve_lines, line);) out << line << '\n';
  out << "jacobian_order " << jacobian_order << '\n';
  out << "pairs_checked " << pairs_checked << '\n';
  out << "mismatches " << mismatches << '\n';
  out << "invalid_results " << invalid_results << '\n';
  out << "identity_failures " << identity_failures << '\n';
  for (CaseKind kind : kAllCaseKinds) out << "case " << case_name(kind) << ' ' << counters.count(kind) << '\n';
  for (const auto& [reason, count] : fallback_reasons) out << "fallback_reason " << reason << ": " << count << '\n';
  out << "field_mults " << counters.field.mults << '\n';
  out << "field_invs " << counters.field.invs << '\n';
  for (const auto& [d1, d2] : sample_failures) out << "failure " << d1 << " + " << d2 << '\n';
  out << "status " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json reasons = nlohmann::json::object();
  for (const auto& [reason, count] : fallback_reasons) reasons[reason] = count;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& [d1, d2] : sample_failures) failures.push_back({d1, d2});
  return {{"curve", curve_text},
          {"jacobian_order", jacobian_order},
          {"pairs_checked", pairs_checked},
          {"mismatches", mismatches},
          {"invalid_results", invalid_results},
          {"identity_failures", identity_failures},
          {"counts", counters_to_json(counters)},
          {"fallback_reasons", reasons},
          {"failures", failures},
          {"passed", passed()}};
}

FieldModulus default_bench_modulus() { return FieldModulus((u128{1} << 127) - 1); }

Curve default_bench_curve(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_curve(default_bench_modulus(), rng);
}

BenchReport run_bench(const Curve& curve, std::uint64_t iterations, std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  BenchReport report;
  report.curve_text = format_curve_file(curve);
  report.iterations = iterations;
  report.seed = seed;
  report.rows = {{"case1"}, {"case2"}, {"case3"}, {"fallback"}, {"cantor"}};
  BenchRow& cantor_row = report.rows[4];

  auto distinct_x_points = [&](std::size_t count) {
    std::vector<AffinePoint> pts;
    while (pts.size() < count) {
      AffinePoint p = curve.random_point(rng);
      if (std::none_of(pts.begin(), pts.end(), [&](const AffinePoint& q) { return q.x == p.x; })) pts.push_back(p);
    }
    return pts;
  };

  for (std::uint64_t i = 0; i < iterations; ++i) {
    MumfordDivisor d1 = MumfordDivisor::identity(curve.field());
    MumfordDivisor d2 = d1;
    switch (i % 4) {
      case 0: {
        const auto pts = distinct_x_points(4);
        d1 = from_points(curve, pts[0], pts[1]);
        d2 = from_points(curve, pts[2], pts[3]);
        break;
      }
      case 1: {
        const auto pts = distinct_x_points(2);
        d1 = d2 = from_points(curve, pts[0], pts[1]);
        break;
      }
      case 2: {
        const auto pts = distinct_x_points(3);
        d1 = from_points(curve, pts[0], pts[1]);
        d2 = from_points(curve, pts[0], pts[2]);
        break;
      }
      default: {
        const auto pts = distinct_x_points(3);
        d1 = from_points(curve, pts[0], pts[1]);
        d2 = from_single(curve, pts[2]);
        break;
      }
    }

    OpCounters counters;
    const auto t0 = Clock::now();
    const AdditionTrace trace = add_traced(curve, d1, d2, &counters);
    const auto t1 = Clock::now();
    FieldOpTally cantor_tally;
    const MumfordDivisor expected = cantor_add(curve, d1, d2, &cantor_tally);
    const auto t2 = Clock::now();

    if (!(trace.result == expected)) ++report.mismatches;
    BenchRow& row = report.rows[static_cast<std::size_t>(trace.addition_case.kind)];
    ++row.samples;
    row.field_mults += counters.field.mults;
    row.field_invs += counters.field.invs;
    row.total_micros += std::chrono::duration<double, std::micro>(t1 - t0).count();
    ++cantor_row.samples;
    cantor_row.field_mults += cantor_tally.mults;
    cantor_row.field_invs += cantor_tally.invs;
    cantor_row.total_micros += std::chrono::duration<double, std::micro>(t2 - t1).count();
  }
  return report;
}

std::string BenchReport::to_text(bool timing) const {
  std::ostringstream out;
  std::istringstream curve_lines(curve_text);
  for (std::string line; std::getline(curve_lines, line);) out << line << '\n';
  out << "iterations " << iterations << "  seed " << seed << '\n';
  char header[160];
  std::snprintf(header, sizeof header, "%-10s %8s %14s %12s", "path", "samples", "mults/add", "invs/add");
  out << header << (timing ? "      us/add" : "") << '\n';
  for (const BenchRow& row : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %8llu %14s %12s", row.name.c_str(),
                  static_cast<unsigned long long>(row.samples), format_double(row.mean_mults(), 2).c_str(),
                  format_double(row.mean_invs(), 2).c_str());
    out << line;
    if (timing) {
      std::snprintf(line, sizeof line, " %11.2f", row.mean_micros());
      out << line;
    }
    out << '\n';
  }
  out << "mismatches " << mismatches << '\n';
  return out.str();
}

nlohmann::json BenchReport::to_json(bool timing) const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    nlohmann::json r = {{"path", row.name},
                        {"samples", row.samples},
                        {"field_mults", row.field_mults},
                        {"field_invs", row.field_invs},
                        {"mean_mults", row.mean_mults()},
                        {"mean_invs", row.mean_invs()}};
    if (timing) r["mean_micros"] = row.mean_micros();
    rows_json.push_back(r);
  }
  return {{"curve", curve_text}, {"iterations", iterations}, {"seed", seed}, {"mismatches", mismatches},
          {"rows", rows_json}};
}

}  // namespace g2jac
