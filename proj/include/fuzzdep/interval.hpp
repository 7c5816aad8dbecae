#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fuzzdep/error.hpp"

namespace fuzzdep {

/// Closed real interval [lower, upper]. An empty intersection is represented
/// by std::nullopt (MaybeInterval), never by lower > upper.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double length() const { return upper - lower; }
  bool degenerate() const { return lower == upper; }
  bool contains(const Interval& o) const { return lower <= o.lower && o.upper <= upper; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

using MaybeInterval = std::optional<Interval>;

Interval make_interval(double lower, double upper);

/// Per-attribute universe bounds plus the scope constants used by the
/// proximity formulas: theta (universe scope), delta and epsilon (lengths
/// assigned to degenerate intervals).
struct AttributeDomain {
  double lower = 0.0;
  double upper = 0.0;
  double theta = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;

  friend bool operator==(const AttributeDomain&, const AttributeDomain&) = default;
};

AttributeDomain make_domain(double lower, double upper,
                            std::optional<double> theta = std::nullopt,
                            std::optional<double> delta = std::nullopt,
                            std::optional<double> epsilon = std::nullopt);

struct Crisp {
  double value = 0.0;
  friend bool operator==(const Crisp&, const Crisp&) = default;
};

struct Null {
  friend bool operator==(const Null&, const Null&) = default;
};

/// Interval value with a confidence degree, written "[a,b]/p". A bare
/// interval cell carries p = 1.
struct ConfidenceInterval {
  Interval iv;
  double confidence = 1.0;
  friend bool operator==(const ConfidenceInterval&, const ConfidenceInterval&) = default;
};

/// Trapezoidal fuzzy number with support [a,d] and core [b,c].
struct Trapezoid {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

using FuzzyValue = std::variant<Crisp, Null, ConfidenceInterval, Trapezoid>;

/// Interval form of a non-trapezoidal cell: Crisp(x) -> [x,x], Null -> the
/// whole attribute domain, ConfidenceInterval -> its carried interval.
/// Throws TrapezoidNeedsAlpha for trapezoids; use alpha_cut instead.
Interval to_interval(const FuzzyValue& v, const AttributeDomain& dom);

/// Alpha-cut of a cell at degree alpha in [0,1]. Crisp and Null cells are
/// cut-independent; a trapezoid cuts to [a + alpha(b-a), d - alpha(d-c)];
/// a confidence interval yields its interval for alpha <= p and is empty
/// above p.
MaybeInterval alpha_cut(const FuzzyValue& v, double alpha, const AttributeDomain& dom);

/// Interval length measure: 0 for empty, delta (epsilon when `extended`)
/// for a degenerate interval, |b-a| otherwise.
double modular(const MaybeInterval& h, const AttributeDomain& dom, bool extended = false);

MaybeInterval intersect(const Interval& a, const Interval& b);
Interval union_hull(const Interval& a, const Interval& b);

/// Cell text grammar: `3.6`, `null`, `[1,9]`, `[1,9]/0.8`, `tz(1,2,3,4)`.
FuzzyValue parse_cell(std::string_view text);
std::string format_cell(const FuzzyValue& v);

/// Shortest decimal representation that round-trips the double.
std::string format_number(double x);

std::string format_interval(const MaybeInterval& iv);

}  // namespace fuzzdep
