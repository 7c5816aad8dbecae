#include "fuzzdep/proximity.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzdep {

Form default_form(Measure m) {
  return m == Measure::liu ? Form::two_term : Form::ratio;
}

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double ratio_or_two_term(double inter, double hull, double theta, Form form) {
  double value = inter / hull;
  if (form == Form::two_term) value -= inter / theta;
  return clamp01(value);
}

}  // namespace

double sp_liu(const Interval& f1, const Interval& f2, const AttributeDomain& dom, Form form) {
  MaybeInterval inter = intersect(f1, f2);
  if (!inter) return 0.0;
  double num = modular(inter, dom);
  double den = modular(union_hull(f1, f2), dom);
  return ratio_or_two_term(num, den, dom.theta, form);
}

double sp_improved(const Interval& f1, const Interval& f2) {
  if (!intersect(f1, f2)) return 0.0;
  auto p = [](double x, double y) {
    if (x == y) return 0.0;
    double mx = std::max(x, y);
    if (mx <= 0.0)
      throw Error(ErrorKind::NonPositiveMax, "semantic distance undefined for non-positive maximum");
    return std::abs(x - y) / mx;
  };
  return std::max(0.0, 1.0 - (p(f1.lower, f2.lower) + p(f1.upper, f2.upper)));
}

double sp_extended(const FuzzyValue& v1, const FuzzyValue& v2, double alpha,
                   const AttributeDomain& dom, Form form) {
  MaybeInterval g = alpha_cut(v1, alpha, dom);
  MaybeInterval h = alpha_cut(v2, alpha, dom);
  if (!g || !h) return 0.0;
  MaybeInterval inter = intersect(*g, *h);
  if (!inter) return 0.0;
  double num = modular(inter, dom, /*extended=*/true);
  double den = modular(union_hull(*g, *h), dom, /*extended=*/true);
  return ratio_or_two_term(num, den, dom.theta, form);
}

double sp_cell(const FuzzyValue& v1, const FuzzyValue& v2, const AttributeDomain& dom,
               const ProximityConfig& cfg) {
  switch (cfg.measure) {
    case Measure::liu:
      return sp_liu(to_interval(v1, dom), to_interval(v2, dom), dom, cfg.form);
    case Measure::improved:
      return sp_improved(to_interval(v1, dom), to_interval(v2, dom));
    case Measure::extended:
      return sp_extended(v1, v2, cfg.alpha, dom, cfg.form);
  }
  return 0.0;
}

double sp_tuple(const Tuple& t1, const Tuple& t2, const AttributeSet& attrs,
                const ProximityConfig& cfg, const Schema& schema) {
  if (attrs.empty())
    throw Error(ErrorKind::EmptyAttributeSet, "tuple proximity over an empty attribute set");
  double value = 1.0;
  for (int i : attrs.indices) {
    if (i < 0 || static_cast<size_t>(i) >= schema.size())
      throw Error(ErrorKind::UnknownAttribute, "attribute index out of range");
    value = std::min(value, sp_cell(t1[i], t2[i], schema.attributes[i].domain, cfg));
  }
  return value;
}

}  // namespace fuzzdep
