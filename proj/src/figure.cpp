// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "g2jac/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "g2jac/interpolation.hpp"
#include "g2jac/linsolve.hpp"

namespace g2jac {

namespace {

// x^5 - 5x^3 + 4x = x (x^2 - 1)(x^2 - 4); real branches over [-2,-1], [0,1]
// and [2, inf).
const std::vector<double> kQuintic{0, 4, 0, -5, 0, 1};

using RealPoly = std::vector<double>;  // ascending

double eval(const RealPoly& a, double x) {
  double acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPoly derivative(const RealPoly& a) {
  RealPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<double>(i));
  return out;
}

RealPoly multiply(const RealPoly& a, const RealPoly& b) {
  RealPoly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RealPoly subtract(RealPoly a, const RealPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

// Quotient by a monic divisor; the remainder is dropped.
RealPoly divide_monic(RealPoly a, const RealPoly& monic) {
  const std::size_t db = monic.size() - 1;
  RealPoly quot(a.size() - db, 0.0);
  for (std::size_t k = a.size(); k-- > db;) {
    const double q = a[k];
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= q * monic[j];
  }
  return quot;
}

struct RealPoint {
  double x;
  double y;
};

RealPoint on_curve(double x, int sign) { return {x, sign * std::sqrt(figure_curve_f(x))}; }

RealPoly u_of(const QuadraticForm<double>& q) { return {q.b, q.a, 1.0}; }

// Newton polish of a simple root of `poly`.
double polish(const RealPoly& poly, double x) {
  const RealPoly d = derivative(poly);
  for (int i = 0; i < 50; ++i) {
    const double step = eval(poly, x) / eval(d, x);
    x -= step;
    if (std::fabs(step) < 1e-16 * (1 + std::fabs(x))) break;
  }
  return x;
}

FigurePoint tangent_point(const RealPoint& p) {
  return {p.x, p.y, 2, "operand", figure_curve_slope(p.x, p.y)};
}

FigurePoint plain_point(const RealPoint& p) { return {p.x, p.y, 1, "operand", std::nullopt}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

double figure_curve_f(double x) { return eval(kQuintic, x); }

double figure_curve_slope(double x, double y) { return eval(derivative(kQuintic), x) / (2 * y); }

FigureData build_figure(int case_id) {
  FigureData data;
  data.case_id = case_id;
  data.f = kQuintic;

  QuadraticForm<double> first{};
  QuadraticForm<double> second{};
  System4<double> sys{};
  switch (case_id) {
    case 1: {
      const RealPoint p1 = on_curve(2.5, 1), p2 = on_curve(-1.8, -1);
      const RealPoint q1 = on_curve(0.2, -1), q2 = on_curve(0.3, -1);
      first = chord_form(p1.x, p1.y, p2.x, p2.y);
      second = chord_form(q1.x, q1.y, q2.x, q2.y);
      sys = case1_system(first, second);
      data.construction = {plain_point(p1), plain_point(p2), plain_point(q1), plain_point(q2)};
      break;
    }
    case 2: {
      const RealPoint mu = on_curve(2.5, -1), omega = on_curve(0.4, 1);
      const double mu_slope = figure_curve_slope(mu.x, mu.y);
      const double om_slope = figure_curve_slope(omega.x, omega.y);
      first = tangent_form(mu.x, mu.y, mu_slope);
      second = tangent_form(omega.x, omega.y, om_slope);
      sys = tangent_pair_system(mu.x, mu.y, mu_slope, omega.x, omega.y, om_slope);
      data.construction = {tangent_point(mu), tangent_point(omega)};
      break;
    }
    case 3: {
      const RealPoint p = on_curve(2.5, -1), mu = on_curve(-1.2, -1), omega = on_curve(0.1, -1);
      const double slope = figure_curve_slope(p.x, p.y);
      first = tangent_form(p.x, p.y, slope);
      second = chord_form(mu.x, mu.y, omega.x, omega.y);
      sys = tangent_chord_system(p.x, p.y, slope, mu.x, mu.y, omega.x, omega.y);
      data.construction = {tangent_point(p), plain_point(mu), plain_point(omega)};
      break;
    }
    default:
      throw std::invalid_argument("figure case must be 1, 2 or 3");
  }

  const auto solution = solve(sys);
  if (!solution) throw std::logic_error("figure fixture produced a singular system");
  data.cubic = *solution;
  const RealPoly l{data.cubic[3], data.cubic[2], data.cubic[1], data.cubic[0]};
  const RealPoly norm = subtract(multiply(l, l), kQuintic);
  const RealPoly residual = divide_monic(divide_monic(norm, u_of(first)), u_of(second));
  // residual = r2 x^2 + r1 x + r0
  const double r2 = residual.at(2), r1 = residual.at(1), r0 = residual.at(0);
  const double disc = r1 * r1 - 4 * r2 * r0;
  if (disc < 0) throw std::logic_error("figure fixture has no real residual intersections");
  for (double sign : {-1.0, 1.0}) {
    const double x = polish(norm, (-r1 + sign * std::sqrt(disc)) / (2 * r2));
    const double y = std::copysign(std::sqrt(figure_curve_f(x)), eval(l, x));
    data.construction.push_back({x, y, 1, "residual", std::nullopt});
    data.sum.push_back({x, -y, 1, "sum", std::nullopt});
  }
  return data;
}

std::string render_svg(const FigureData& data) {
  if (data.case_id < 1 || data.case_id > 3) throw std::invalid_argument("figure case must be 1, 2 or 3");
  constexpr double kWidth = 720, kHeight = 540, kMargin = 40;
  constexpr double kXMin = -2.6, kXMax = 3.0, kYMin = -10, kYMax = 10;
  auto sx = [&](double x) { return kMargin + (x - kXMin) / (kXMax - kXMin) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) { return kHeight - kMargin - (y - kYMin) / (kYMax - kYMin) * (kHeight - 2 * kMargin); };
  auto pt = [&](double x, double y) { return fmt(sx(x)) + "," + fmt(sy(y)); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  nlohmann::json meta;
  meta["case"] = data.case_id;
  meta["f"] = data.f;
  meta["cubic"] = data.cubic;
  auto points_json = [](const std::vector<FigurePoint>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FigurePoint& p : pts) {
      nlohmann::json j = {{"x", p.x}, {"y", p.y}, {"multiplicity", p.multiplicity}, {"role", p.role}};
      if (p.curve_slope) j["curve_slope"] = *p.curve_slope;
      arr.push_back(j);
    }
    return arr;
  };
  meta["construction"] = points_json(data.construction);
  meta["sum"] = points_json(data.sum);
  svg << "<metadata id=\"g2jac-figure\"><![CDATA[" << meta.dump() << "]]></metadata>\n";

  static const char* const kTitles[] = {"", "disjoint supports", "doubling", "shared place"};
  svg << "<title>Case " << data.case_id << ": " << kTitles[data.case_id] << "</title>\n";
  svg << "<defs><clipPath id=\"plot\"><rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << kWidth - 2 * kMargin << "\" height=\"" << kHeight - 2 * kMargin << "\"/></clipPath></defs>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g stroke=\"#999\" stroke-width=\"1\">\n"
      << "  <line x1=\"" << fmt(sx(kXMin)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(sx(kXMax)) << "\" y2=\""
      << fmt(sy(0)) << "\"/>\n"
      << "  <line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(kYMin)) << "\" x2=\"" << fmt(sx(0)) << "\" y2=\""
      << fmt(sy(kYMax)) << "\"/>\n</g>\n";

  // Curve: two ovals and the unbounded branch.
  svg << "<g clip-path=\"url(#plot)\" fill=\"none\">\n";
  const std::pair<double, double> branches[] = {{-2.0, -1.0}, {0.0, 1.0}, {2.0, kXMax}};
  for (const auto& [lo, hi] : branches) {
    constexpr int kSamples = 400;
    std::string upper, lower;
    for (int i = 0; i <= kSamples; ++i) {
      const double x = lo + (hi - lo) * i / kSamples;
      const double y = std::sqrt(std::max(0.0, figure_curve_f(x)));
      upper += pt(x, y) + " ";
      lower = pt(x, -y) + " " + lower;
    }
    svg << "  <polyline stroke=\"black\" stroke-width=\"2\" points=\"" << upper << lower << "\"/>\n";
  }
  std::string cubic_points;
  for (int i = 0; i <= 600; ++i) {
    const double x = kXMin + (kXMax - kXMin) * i / 600;
    const double y = ((data.cubic[0] * x + data.cubic[1]) * x + data.cubic[2]) * x + data.cubic[3];
    cubic_points += pt(x, std::clamp(y, 2 * kYMin, 2 * kYMax)) + " ";
  }
  svg << "  <polyline stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"" << cubic_points << "\"/>\n";
  for (std::size_t i = 0; i < data.sum.size(); ++i) {
    const FigurePoint& from = data.construction[data.construction.size() - data.sum.size() + i];
    const FigurePoint& to = data.sum[i];
    svg << "  <line stroke=\"#2c5aa0\" stroke-dasharray=\"4,3\" x1=\"" << fmt(sx(from.x)) << "\" y1=\""
        << fmt(sy(from.y)) << "\" x2=\"" << fmt(sx(to.x)) << "\" y2=\"" << fmt(sy(to.y)) << "\"/>\n";
  }
  svg << "</g>\n<g>\n";
  for (const FigurePoint& p : data.construction) {
    const char* colour = p.role == "operand" ? "#c0392b" : "#555";
    svg << "  <circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\""
        << (p.multiplicity > 1 ? 7 : 5) << "\" fill=\"" << colour << "\"/>\n";
  }
  for (const FigurePoint& p : data.sum) {
    svg << "  <circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\"5\" fill=\"#2c5aa0\"/>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"" << kMargin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">Case " << data.case_id
      << ": " << kTitles[data.case_id] << " (red: operands and L, grey: residual, blue: sum)</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

FigureData figure_from_svg(std::string_view svg) {
  const std::string_view open = "<![CDATA[";
  const std::size_t tag = svg.find("<metadata");
  const std::size_t begin = tag == std::string_view::npos ? tag : svg.find(open, tag);
  const std::size_t end = begin == std::string_view::npos ? begin : svg.find("]]>", begin);
  if (end == std::string_view::npos) throw std::invalid_argument("SVG has no figure metadata");
  const auto meta = nlohmann::json::parse(svg.substr(begin + open.size(), end - begin - open.size()));
  FigureData data;
  data.case_id = meta.at("case").get<int>();
  data.f = meta.at("f").get<std::vector<double>>();
  data.cubic = meta.at("cubic").get<std::array<double, 4>>();
  auto read_points = [](const nlohmann::json& arr) {
    std::vector<FigurePoint> pts;
    for (const auto& j : arr) {
      FigurePoint p{j.at("x").get<double>(), j.at("y").get<double>(), j.at("multiplicity").get<int>(),
                    j.at("role").get<std::string>(), std::nullopt};
      if (j.contains("curve_slope")) p.curve_slope = j.at("curve_slope").get<double>();
      pts.push_back(std::move(p));
    }
    return pts;
  };
  data.construction = read_points(meta.at("construction"));
  data.sum = read_points(meta.at("sum"));
  return data;
}

}  // namespace g2jac
