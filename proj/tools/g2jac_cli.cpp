// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// g2jac: genus-2 Jacobian arithmetic from the command line.
//
//   g2jac [--p P --f [c0,...,c5] | --curve FILE] [--seed S] [--json] [--bound B] <command>
//
//   add D1 D2            explicit addition; prints the sum, case and op counts
//   double D
//   mul N D              N * D by double-and-add
//   verify               explicit vs Cantor on every pair of reduced divisors
//   bench                op counts and timing per case at a 127-bit prime
//   figure --case K -o FILE
//
// Divisors are written u=[b,a,1];v=[d,c]. Exit status: 0 success, 1 usage
// error, 2 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2jac/explicit_add.hpp"
#include "g2jac/figure.hpp"
#include "g2jac/group.hpp"
#include "g2jac/sweep.hpp"
#include "g2jac/text_format.hpp"

namespace {

using namespace g2jac;

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct SessionConfig {
  std::string p_text;
  std::string f_text;
  std::string curve_path;
  std::uint64_t seed = 1;
  bool json = false;
  std::uint64_t bound = kDefaultEnumerationBound;
};

bool curve_given(const SessionConfig& cfg) { return !cfg.curve_path.empty() || !cfg.p_text.empty(); }

Curve load_curve(const SessionConfig& cfg) {
  if (!cfg.curve_path.empty()) {
    std::ifstream in(cfg.curve_path);
    if (!in) throw std::invalid_argument("cannot read curve file " + cfg.curve_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_curve_file(buffer.str());
  }
  if (cfg.p_text.empty() != cfg.f_text.empty()) throw std::invalid_argument("--p and --f must be given together");
  if (cfg.p_text.empty()) return parse_curve_file("p=7\nf=[1,0,0,0,0,1]\n");
  return parse_curve_file("p=" + cfg.p_text + "\nf=" + cfg.f_text + "\n");
}

MumfordDivisor load_divisor(const Curve& curve, const std::string& text) {
  MumfordDivisor d = parse_divisor(curve.field(), text);
  if (!validate(curve, d)) throw std::invalid_argument("not a reduced divisor on this curve: " + text);
  return d;
}

void print_result(const SessionConfig& cfg, const MumfordDivisor& result, const AdditionCase* addition_case,
                  const OpCounters& counters) {
  if (cfg.json) {
    nlohmann::json out = divisor_to_json(result);
    if (addition_case != nullptr) {
      out["case"] = std::string(case_name(addition_case->kind));
      if (addition_case->kind == CaseKind::Fallback) out["reason"] = addition_case->reason;
    }
    out["counts"] = counters_to_json(counters);
    std::cout << out.dump() << '\n';
    return;
  }
  std::cout << format_divisor(result) << '\n';
  if (addition_case != nullptr) {
    std::cout << "case " << case_name(addition_case->kind);
    if (addition_case->kind == CaseKind::Fallback) std::cout << " (" << addition_case->reason << ")";
    std::cout << '\n';
  }
  std::cout << "field_mults " << counters.field.mults << '\n' << "field_invs " << counters.field.invs << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit genus-2 Jacobian arithmetic over prime fields"};
  app.require_subcommand(1);
  SessionConfig cfg;
  app.add_option("--p", cfg.p_text, "Field prime (decimal, >= 5)");
  app.add_option("--f", cfg.f_text, "Monic squarefree quintic, ascending coefficients, e.g. [1,0,0,0,0,1]");
  app.add_option("--curve", cfg.curve_path, "Curve file with p= and f= lines");
  app.add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--bound", cfg.bound, "Largest p accepted for enumeration")->capture_default_str();

  std::string d1_text, d2_text, scalar_text;
  auto* add_cmd = app.add_subcommand("add", "Add two divisors");
  add_cmd->add_option("D1", d1_text)->required();
  add_cmd->add_option("D2", d2_text)->required();

  auto* double_cmd = app.add_subcommand("double", "Double a divisor");
  double_cmd->add_option("D", d1_text)->required();

  auto* mul_cmd = app.add_subcommand("mul", "Scalar multiple of a divisor");
  mul_cmd->add_option("N", scalar_text)->required();
  mul_cmd->add_option("D", d1_text)->required();

  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive explicit-vs-Cantor sweep");
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::uint64_t iterations = 1000;
  bool no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "Per-case field operation counts at a large prime");
  bench_cmd->add_option("--iterations", iterations)->capture_default_str();
  bench_cmd->add_flag("--no-timing", no_timing, "Omit wall-clock columns (deterministic output)");

  int figure_case = 1;
  std::string figure_path;
  auto* figure_cmd = app.add_subcommand("figure", "Render one of the three constructions as SVG");
  figure_cmd->add_option("--case", figure_case)->required()->check(CLI::Range(1, 3));
  figure_cmd->add_option("-o,--output", figure_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitUsage;
  }

  try {
    if (*figure_cmd) {
      const std::string svg = render_svg(build_figure(figure_case));
      std::ofstream out(figure_path);
      if (!out) throw std::invalid_argument("cannot write " + figure_path);
      out << svg;
      if (cfg.json) {
        std::cout << nlohmann::json{{"case", figure_case}, {"output", figure_path}}.dump() << '\n';
      } else {
        std::cout << "wrote " << figure_path << '\n';
      }
      return 0;
    }

    if (*bench_cmd) {
      const Curve curve = curve_given(cfg) ? load_curve(cfg) : default_bench_curve(cfg.seed);
      const BenchReport report = run_bench(curve, iterations, cfg.seed);
      if (cfg.json) {
        std::cout << report.to_json(!no_timing).dump(2) << '\n';
      } else {
        std::cout << report.to_text(!no_timing);
      }
      return report.mismatches == 0 ? 0 : kExitVerification;
    }

    const Curve curve = load_curve(cfg);

    if (*verify_cmd) {
      if (curve.field().value() > cfg.bound) {
        std::cerr << "p=" << to_decimal(curve.field().value()) << " exceeds --bound " << cfg.bound
                  << "; exhaustive verification refused\n";
        return kExitUsage;
      }
      const VerifyReport report = verify_exhaustive(curve, cfg.bound, threads);
      if (cfg.json) {
        std::cout << report.to_json().dump(2) << '\n';
      } else {
        std::cout << report.to_text();
      }
      return report.passed() ? 0 : kExitVerification;
    }

    OpCounters counters;
    if (*add_cmd) {
      const MumfordDivisor d1 = load_divisor(curve, d1_text);
      const MumfordDivisor d2 = load_divisor(curve, d2_text);
      const AdditionTrace trace = add_traced(curve, d1, d2, &counters);
      print_result(cfg, trace.result, &trace.addition_case, counters);
    } else if (*double_cmd) {
      const MumfordDivisor d = load_divisor(curve, d1_text);
      const AdditionTrace trace = add_traced(curve, d, d, &counters);
      print_result(cfg, trace.result, &trace.addition_case, counters);
    } else if (*mul_cmd) {
      const MumfordDivisor d = load_divisor(curve, d1_text);
      const MumfordDivisor result = scalar_mul(curve, parse_decimal(scalar_text), d, &counters);
      print_result(cfg, result, nullptr, counters);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
