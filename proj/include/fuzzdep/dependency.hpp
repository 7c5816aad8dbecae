#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzdep/proximity.hpp"

#include "json.hpp"

namespace fuzzdep {

enum class DepKind { FFD, FMVD };

struct DependencyStatement {
  DepKind kind = DepKind::FFD;
  AttributeSet lhs;
  AttributeSet rhs;
};

struct CheckReport {
  struct Witness {
    int tuple_index = -1;
    std::string failing_condition;
    double achieved = 0.0;  // best min-condition value over all candidates
  };
  struct Violation {
    int i = 0;
    int j = 0;
    double beta = 0.0;                  // proximity on the LHS for this pair
    std::optional<double> achieved;     // FFD: proximity on the RHS
    std::optional<Witness> best_witness;
  };
  bool holds = true;
  std::vector<Violation> violations;
  int vacuous_pairs = 0;
  std::optional<double> min_nonvacuous_beta;
};

/// FFD X ~> Y: for every unordered tuple pair, proximity on X must not
/// exceed proximity on Y (within 1e-12).
CheckReport check_ffd(const Relation& r, const DependencyStatement& d, const ProximityConfig& cfg);

/// FMVD X ~>~> Y: every ordered pair that is beta-close on X (beta above the
/// vacuity threshold) needs a witness tuple matching the pair's Y and Z
/// sides at proximity >= beta.
CheckReport check_fmvd(const Relation& r, const DependencyStatement& d, const ProximityConfig& cfg);

struct ReplicationReport {
  bool ffd_holds = false;
  bool fmvd_holds = false;
  bool consistent = true;  // false when FFD holds but FMVD does not
};

ReplicationReport check_replication(const Relation& r, const AttributeSet& x,
                                    const AttributeSet& y, const ProximityConfig& cfg);

nlohmann::json report_to_json(const CheckReport& report);

}  // namespace fuzzdep
