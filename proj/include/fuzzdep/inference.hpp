#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzdep/error.hpp"

#include "json.hpp"

namespace fuzzdep {

/// Attribute subset of a declared universe, one bit per attribute.
/// Universes are capped at 30 attributes.
using AttrMask = std::uint32_t;

constexpr int kMaxUniverse = 30;

struct SymbolicDep {
  bool is_ffd = false;
  AttrMask lhs = 0;
  AttrMask rhs = 0;
  friend bool operator==(const SymbolicDep&, const SymbolicDep&) = default;
};

struct DependencySet {
  std::vector<std::string> universe;
  std::vector<SymbolicDep> deps;

  AttrMask full_mask() const { return (AttrMask{1} << universe.size()) - 1; }
  int index_of(const std::string& name) const;
};

/// Right side stripped of left-side attributes (an FMVD with empty result
/// is trivially valid).
SymbolicDep normalize(const SymbolicDep& d);

struct DerivationStep {
  std::string rule;
  std::vector<std::string> premises;
  std::string conclusion;
};

struct DerivationTrace {
  std::vector<DerivationStep> steps;
};

struct ClosureResult {
  bool derivable = false;
  std::optional<DerivationTrace> trace;
};

/// Coarsest partition of universe - x whose block unions are exactly the
/// derivable FMVD right-hand sides for x. FFDs participate through
/// replication (whole and per-attribute).
std::vector<AttrMask> dependency_basis(const DependencySet& ds, AttrMask x);

/// Attributes functionally determined by x under the combined FFD/FMVD
/// rule system.
AttrMask attribute_closure(const DependencySet& ds, AttrMask x);

/// Closure membership for q. Membership is decided through the dependency
/// basis (FMVD) and attribute closure (FFD); the trace, when one is found
/// within max_depth breadth-first rounds, is a rule-by-rule derivation.
ClosureResult closure_contains(const DependencySet& ds, const SymbolicDep& q, int max_depth = 8);

/// Dependency file: {"universe":[...], "ffds":[{"lhs":[...],"rhs":[...]}], "fmvds":[...]}.
DependencySet parse_dependency_set(const std::string& text);

AttrMask mask_of(const DependencySet& ds, const std::vector<std::string>& names);
std::vector<std::string> mask_names(const DependencySet& ds, AttrMask m);
std::string format_statement(const DependencySet& ds, const SymbolicDep& d);

/// Query text: "A,B -> C" (FFD) or "A ->> C,D" (FMVD).
SymbolicDep parse_query(const DependencySet& ds, const std::string& text);

nlohmann::json trace_to_json(const DerivationTrace& trace);

}  // namespace fuzzdep
