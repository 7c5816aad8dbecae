#include "fuzzdep/dependency.hpp"

#include <algorithm>
#include <array>

namespace fuzzdep {

namespace {

constexpr double kTol = 1e-12;

// Proximity over a possibly empty attribute set; empty sets are vacuously
// close (condition can never fail).
double sp_or_one(const Tuple& t1, const Tuple& t2, const AttributeSet& attrs,
                 const ProximityConfig& cfg, const Schema& schema) {
  if (attrs.empty()) return 1.0;
  return sp_tuple(t1, t2, attrs, cfg, schema);
}

}  // namespace

CheckReport check_ffd(const Relation& r, const DependencyStatement& d, const ProximityConfig& cfg) {
  if (d.lhs.empty())
    throw Error(ErrorKind::EmptyAttributeSet, "FFD left-hand side must be non-empty");
  CheckReport report;
  const size_t n = r.tuples.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      double lx = sp_tuple(r.tuples[i], r.tuples[j], d.lhs, cfg, r.schema);
      double ly = sp_or_one(r.tuples[i], r.tuples[j], d.rhs, cfg, r.schema);
      if (lx > ly + kTol) {
        CheckReport::Violation v;
        v.i = static_cast<int>(i);
        v.j = static_cast<int>(j);
        v.beta = lx;
        v.achieved = ly;
        report.violations.push_back(v);
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

CheckReport check_fmvd(const Relation& r, const DependencyStatement& d, const ProximityConfig& cfg) {
  if (d.lhs.empty())
    throw Error(ErrorKind::EmptyAttributeSet, "FMVD left-hand side must be non-empty");
  CheckReport report;
  const AttributeSet z = complement_set(r.schema, d.lhs, d.rhs);
  const size_t n = r.tuples.size();
  static const std::array<const char*, 4> cond_names = {"X~Ti", "X~Tj", "Y~Ti", "Z~Tj"};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Tuple& ti = r.tuples[i];
      const Tuple& tj = r.tuples[j];
      double beta = sp_tuple(ti, tj, d.lhs, cfg, r.schema);
      if (beta <= cfg.beta_min) {
        ++report.vacuous_pairs;
        continue;
      }
      if (!report.min_nonvacuous_beta || beta < *report.min_nonvacuous_beta)
        report.min_nonvacuous_beta = beta;
      bool witnessed = false;
      CheckReport::Witness best;
      best.achieved = -1.0;
      for (size_t k = 0; k < n; ++k) {
        const Tuple& t = r.tuples[k];
        std::array<double, 4> conds = {
            sp_tuple(t, ti, d.lhs, cfg, r.schema),
            sp_tuple(t, tj, d.lhs, cfg, r.schema),
            sp_or_one(t, ti, d.rhs, cfg, r.schema),
            sp_or_one(t, tj, z, cfg, r.schema),
        };
        double m = *std::min_element(conds.begin(), conds.end());
        if (m >= beta - kTol) {
          witnessed = true;
          break;
        }
        if (m > best.achieved) {
          best.achieved = m;
          best.tuple_index = static_cast<int>(k);
          for (size_t c = 0; c < conds.size(); ++c)
            if (conds[c] < beta - kTol) {
              best.failing_condition = cond_names[c];
              break;
            }
        }
      }
      if (!witnessed) {
        CheckReport::Violation v;
        v.i = static_cast<int>(i);
        v.j = static_cast<int>(j);
        v.beta = beta;
        v.best_witness = best;
        report.violations.push_back(v);
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

ReplicationReport check_replication(const Relation& r, const AttributeSet& x,
                                    const AttributeSet& y, const ProximityConfig& cfg) {
  ReplicationReport rep;
  rep.ffd_holds = check_ffd(r, DependencyStatement{DepKind::FFD, x, y}, cfg).holds;
  rep.fmvd_holds = check_fmvd(r, DependencyStatement{DepKind::FMVD, x, y}, cfg).holds;
  rep.consistent = !(rep.ffd_holds && !rep.fmvd_holds);
  return rep;
}

nlohmann::json report_to_json(const CheckReport& report) {
  nlohmann::json j;
  j["holds"] = report.holds;
  j["vacuous_pairs"] = report.vacuous_pairs;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations) {
    nlohmann::json jv;
    jv["pair"] = {v.i, v.j};
    jv["beta"] = v.beta;
    if (v.achieved) jv["achieved"] = *v.achieved;
    if (v.best_witness) {
      jv["best_witness"] = {
          {"tuple_index", v.best_witness->tuple_index},
          {"failing_condition", v.best_witness->failing_condition},
          {"achieved", v.best_witness->achieved},
      };
    }
    j["violations"].push_back(jv);
  }
  return j;
}

}  // namespace fuzzdep
