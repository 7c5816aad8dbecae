#include "fuzzdep/interval.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace fuzzdep {

Interval make_interval(double lower, double upper) {
  if (!(lower <= upper))
    throw Error(ErrorKind::SyntaxError,
                "invalid interval: lower " + format_number(lower) + " > upper " + format_number(upper));
  return Interval{lower, upper};
}

AttributeDomain make_domain(double lower, double upper, std::optional<double> theta,
                            std::optional<double> delta, std::optional<double> epsilon) {
  if (!(lower >= 0.0))
    throw Error(ErrorKind::DomainViolation, "attribute domain lower bound must be non-negative");
  if (!(lower < upper))
    throw Error(ErrorKind::DomainViolation, "attribute domain requires lower < upper");
  AttributeDomain d;
  d.lower = lower;
  d.upper = upper;
  d.theta = theta.value_or(upper - lower);
  if (!(d.theta >= upper - lower))
    throw Error(ErrorKind::DomainViolation, "theta must be at least upper - lower");
  d.delta = delta.value_or(d.theta / 10000.0);
  d.epsilon = epsilon.value_or(d.theta / 10000.0);
  if (d.delta <= 0.0 || d.epsilon <= 0.0)
    throw Error(ErrorKind::DomainViolation, "delta and epsilon must be positive");
  return d;
}

Interval to_interval(const FuzzyValue& v, const AttributeDomain& dom) {
  if (std::holds_alternative<Crisp>(v)) {
    double x = std::get<Crisp>(v).value;
    return Interval{x, x};
  }
  if (std::holds_alternative<Null>(v)) return Interval{dom.lower, dom.upper};
  if (std::holds_alternative<ConfidenceInterval>(v)) return std::get<ConfidenceInterval>(v).iv;
  throw Error(ErrorKind::TrapezoidNeedsAlpha, "trapezoid cell requires an alpha-cut");
}

MaybeInterval alpha_cut(const FuzzyValue& v, double alpha, const AttributeDomain& dom) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::AlphaOutOfRange, "alpha must lie in [0,1]");
  if (std::holds_alternative<Trapezoid>(v)) {
    const auto& t = std::get<Trapezoid>(v);
    return Interval{t.a + alpha * (t.b - t.a), t.d - alpha * (t.d - t.c)};
  }
  if (std::holds_alternative<ConfidenceInterval>(v)) {
    const auto& c = std::get<ConfidenceInterval>(v);
    if (alpha <= c.confidence) return c.iv;
    return std::nullopt;
  }
  return to_interval(v, dom);
}

double modular(const MaybeInterval& h, const AttributeDomain& dom, bool extended) {
  if (!h) return 0.0;
  if (h->degenerate()) return extended ? dom.epsilon : dom.delta;
  return std::abs(h->upper - h->lower);
}

MaybeInterval intersect(const Interval& a, const Interval& b) {
  double lo = std::max(a.lower, b.lower);
  double hi = std::min(a.upper, b.upper);
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

Interval union_hull(const Interval& a, const Interval& b) {
  return Interval{std::min(a.lower, b.lower), std::max(a.upper, b.upper)};
}

std::string format_number(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_interval(const MaybeInterval& iv) {
  if (!iv) return "empty";
  return "[" + format_number(iv->lower) + "," + format_number(iv->upper) + "]";
}

namespace {

struct CellParser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError,
                "cell '" + std::string(text) + "': " + what + " at offset " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  double number() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
    double value = 0.0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc{} || res.ptr != text.data() + pos || pos == start) {
      pos = start;
      fail("expected a number");
    }
    return value;
  }

  void end() {
    skip_ws();
    if (pos != text.size()) fail("trailing characters");
  }
};

}  // namespace

FuzzyValue parse_cell(std::string_view text) {
  CellParser p{text};
  p.skip_ws();
  if (text.substr(p.pos, 4) == "null") {
    p.pos += 4;
    p.end();
    return Null{};
  }
  if (text.substr(p.pos, 3) == "tz(") {
    p.pos += 3;
    double a = p.number();
    p.expect(',');
    double b = p.number();
    p.expect(',');
    double c = p.number();
    p.expect(',');
    double d = p.number();
    p.expect(')');
    p.end();
    if (!(a <= b && b <= c && c <= d))
      p.fail("trapezoid requires a <= b <= c <= d");
    return Trapezoid{a, b, c, d};
  }
  if (p.eat('[')) {
    double lo = p.number();
    p.expect(',');
    double hi = p.number();
    p.expect(']');
    double conf = 1.0;
    if (p.eat('/')) conf = p.number();
    p.end();
    if (!(lo <= hi)) p.fail("interval lower > upper");
    if (!(conf >= 0.0 && conf <= 1.0)) p.fail("confidence degree must lie in [0,1]");
    return ConfidenceInterval{Interval{lo, hi}, conf};
  }
  double x = p.number();
  p.end();
  return Crisp{x};
}

std::string format_cell(const FuzzyValue& v) {
  if (std::holds_alternative<Crisp>(v)) return format_number(std::get<Crisp>(v).value);
  if (std::holds_alternative<Null>(v)) return "null";
  if (std::holds_alternative<ConfidenceInterval>(v)) {
    const auto& c = std::get<ConfidenceInterval>(v);
    std::string s = "[" + format_number(c.iv.lower) + "," + format_number(c.iv.upper) + "]";
    if (c.confidence != 1.0) s += "/" + format_number(c.confidence);
    return s;
  }
  const auto& t = std::get<Trapezoid>(v);
  return "tz(" + format_number(t.a) + "," + format_number(t.b) + "," + format_number(t.c) + "," +
         format_number(t.d) + ")";
}

}  // namespace fuzzdep
