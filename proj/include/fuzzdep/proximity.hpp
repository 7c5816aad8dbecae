#pragma once

#include "fuzzdep/relation.hpp"

namespace fuzzdep {

enum class Measure { liu, improved, extended };
enum class Form { two_term, ratio };

/// Form each measure uses when none is requested: liu reproduces its
/// printed two-term formula, extended uses the pure ratio so identical
/// operands score exactly 1. improved has no form.
Form default_form(Measure m);

struct ProximityConfig {
  Measure measure = Measure::extended;
  Form form = Form::ratio;
  double alpha = 0.5;
  double beta_min = 0.0;  // vacuity threshold for FMVD pairs
};

/// Interval-number proximity: 0 on disjoint operands, otherwise
/// |∩|/|hull| (ratio) or |∩|/|hull| - |∩|/theta (two-term), clamped to [0,1].
double sp_liu(const Interval& f1, const Interval& f2, const AttributeDomain& dom, Form form);

/// Distance-complement proximity: 0 on disjoint operands, otherwise
/// 1 - (|a1-a2|/max(a1,a2) + |b1-b2|/max(b1,b2)), clamped below at 0.
double sp_improved(const Interval& f1, const Interval& f2);

/// Proximity of the alpha-cuts of two cells. Empty cut or empty cut
/// intersection scores 0.
double sp_extended(const FuzzyValue& v1, const FuzzyValue& v2, double alpha,
                   const AttributeDomain& dom, Form form);

/// Per-cell dispatch over the configured measure.
double sp_cell(const FuzzyValue& v1, const FuzzyValue& v2, const AttributeDomain& dom,
               const ProximityConfig& cfg);

/// Minimum per-attribute proximity over a non-empty attribute set.
double sp_tuple(const Tuple& t1, const Tuple& t2, const AttributeSet& attrs,
                const ProximityConfig& cfg, const Schema& schema);

}  // namespace fuzzdep
