#pragma once

#include "fuzzdep/dependency.hpp"

namespace fuzzdep {

struct JoinConfig {
  ProximityConfig cfg;
  double beta_join = 1.0;  // must stay positive
};

/// Proximity join: emits a combined tuple for every pair whose shared
/// attributes are beta-close. The joined tuple takes the left operand's
/// values on the shared attributes. Exact duplicates are dropped; output
/// order is (left index, right index) lexicographic.
Relation alpha_join(const Relation& r1, const Relation& r2, const AttributeSet& on,
                    const JoinConfig& jc);

struct LosslessReport {
  bool lossless = false;
  std::vector<Tuple> extra;    // join tuples with no beta-close original
  std::vector<Tuple> missing;  // originals with no beta-close join tuple
  int joined_count = 0;
};

/// Projects r onto x|y and x|z (z the remainder), rejoins on x, and
/// compares the result against r up to beta-closeness.
LosslessReport lossless_check(const Relation& r, const AttributeSet& x, const AttributeSet& y,
                              const JoinConfig& jc);

struct ProbeReport {
  bool fmvd = false;
  bool lossless = false;
  bool agree = false;
  double beta_used = 1.0;
};

/// Runs the FMVD check and the lossless check side by side, taking the
/// join threshold from the smallest non-vacuous pair proximity the FMVD
/// checker observed.
ProbeReport theorem1_probe(const Relation& r, const AttributeSet& x, const AttributeSet& y,
                           const ProximityConfig& cfg);

}  // namespace fuzzdep
