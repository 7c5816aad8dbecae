#include "fuzzdep/decomposition.hpp"

#include <algorithm>
#include <set>

namespace fuzzdep {

namespace {

constexpr double kTol = 1e-12;

}  // namespace

Relation alpha_join(const Relation& r1, const Relation& r2, const AttributeSet& on,
                    const JoinConfig& jc) {
  if (!(jc.beta_join > 0.0))
    throw Error(ErrorKind::SchemaOverlapInvalid, "beta_join must be positive");

  // `on` is resolved against r1; match the shared attributes by name.
  std::set<std::string> on_names;
  for (int i : on.indices) on_names.insert(r1.schema.attributes[i].name);
  std::set<std::string> r1_names, r2_names;
  for (const auto& a : r1.schema.attributes) r1_names.insert(a.name);
  for (const auto& a : r2.schema.attributes) r2_names.insert(a.name);
  std::set<std::string> shared;
  std::set_intersection(r1_names.begin(), r1_names.end(), r2_names.begin(), r2_names.end(),
                        std::inserter(shared, shared.begin()));
  if (shared != on_names)
    throw Error(ErrorKind::SchemaOverlapInvalid,
                "join attributes must be exactly the shared attributes of the two schemas");

  std::vector<int> on_in_r2;
  for (int i : on.indices) on_in_r2.push_back(r2.schema.index_of(r1.schema.attributes[i].name));
  std::vector<int> z_in_r2;
  for (size_t i = 0; i < r2.schema.size(); ++i)
    if (!on_names.count(r2.schema.attributes[i].name)) z_in_r2.push_back(static_cast<int>(i));

  Relation out;
  out.schema.attributes = r1.schema.attributes;
  for (int i : z_in_r2) out.schema.attributes.push_back(r2.schema.attributes[i]);

  for (const auto& t1 : r1.tuples) {
    for (const auto& t2 : r2.tuples) {
      double sp = 1.0;
      for (size_t k = 0; k < on.indices.size(); ++k) {
        const auto& dom = r1.schema.attributes[on.indices[k]].domain;
        sp = std::min(sp, sp_cell(t1[on.indices[k]], t2[on_in_r2[k]], dom, jc.cfg));
      }
      if (sp < jc.beta_join - kTol) continue;
      Tuple joined = t1;
      for (int i : z_in_r2) joined.push_back(t2[i]);
      bool seen = false;
      for (const auto& existing : out.tuples)
        if (tuples_equal(existing, joined)) {
          seen = true;
          break;
        }
      if (!seen) out.tuples.push_back(std::move(joined));
    }
  }
  return out;
}

LosslessReport lossless_check(const Relation& r, const AttributeSet& x, const AttributeSet& y,
                              const JoinConfig& jc) {
  const AttributeSet xy = x.unite(y);
  const AttributeSet z = complement_set(r.schema, x, y);
  const AttributeSet xz = x.unite(z);
  Relation r1 = project(r, xy);
  Relation r2 = project(r, xz);

  AttributeSet on_in_r1;
  for (int i : x.indices) on_in_r1.indices.push_back(r1.schema.index_of(r.schema.attributes[i].name));
  on_in_r1 = AttributeSet::of(on_in_r1.indices);
  Relation joined = alpha_join(r1, r2, on_in_r1, jc);

  // Reorder join tuples to r's attribute order for the comparison.
  std::vector<int> reorder;
  for (const auto& a : r.schema.attributes) reorder.push_back(joined.schema.index_of(a.name));
  Relation aligned;
  aligned.schema = r.schema;
  for (const auto& t : joined.tuples) {
    Tuple nt;
    for (int i : reorder) nt.push_back(t[i]);
    aligned.tuples.push_back(std::move(nt));
  }

  AttributeSet all;
  for (size_t i = 0; i < r.schema.size(); ++i) all.indices.push_back(static_cast<int>(i));

  LosslessReport report;
  report.joined_count = static_cast<int>(aligned.tuples.size());
  auto close = [&](const Tuple& a, const Tuple& b) {
    return sp_tuple(a, b, all, jc.cfg, r.schema) >= jc.beta_join - kTol;
  };
  for (const auto& jt : aligned.tuples) {
    bool matched = false;
    for (const auto& ot : r.tuples)
      if (close(jt, ot)) {
        matched = true;
        break;
      }
    if (!matched) report.extra.push_back(jt);
  }
  for (const auto& ot : r.tuples) {
    bool matched = false;
    for (const auto& jt : aligned.tuples)
      if (close(ot, jt)) {
        matched = true;
        break;
      }
    if (!matched) report.missing.push_back(ot);
  }
  report.lossless = report.extra.empty() && report.missing.empty();
  return report;
}

ProbeReport theorem1_probe(const Relation& r, const AttributeSet& x, const AttributeSet& y,
                           const ProximityConfig& cfg) {
  ProbeReport probe;
  CheckReport fmvd = check_fmvd(r, DependencyStatement{DepKind::FMVD, x, y}, cfg);
  probe.fmvd = fmvd.holds;
  probe.beta_used = fmvd.min_nonvacuous_beta.value_or(1.0);
  probe.lossless = lossless_check(r, x, y, JoinConfig{cfg, probe.beta_used}).lossless;
  probe.agree = (probe.fmvd == probe.lossless);
  return probe;
}

}  // namespace fuzzdep
