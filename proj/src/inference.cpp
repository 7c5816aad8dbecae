#include "fuzzdep/inference.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace fuzzdep {

int DependencySet::index_of(const std::string& name) const {
  for (size_t i = 0; i < universe.size(); ++i)
    if (universe[i] == name) return static_cast<int>(i);
  throw Error(ErrorKind::UnknownAttribute, "unknown attribute '" + name + "'");
}

SymbolicDep normalize(const SymbolicDep& d) {
  return SymbolicDep{d.is_ffd, d.lhs, d.rhs & ~d.lhs};
}

namespace {

std::vector<std::pair<AttrMask, AttrMask>> refinement_deps(const DependencySet& ds) {
  std::vector<std::pair<AttrMask, AttrMask>> out;
  for (const auto& d : ds.deps) {
    out.emplace_back(d.lhs, d.rhs);
    if (d.is_ffd) {
      // An FFD determines each right-side attribute individually, so each
      // single attribute replicates to its own FMVD.
      for (AttrMask rest = d.rhs; rest; rest &= rest - 1)
        out.emplace_back(d.lhs, rest & ~(rest - 1));
    }
  }
  return out;
}

}  // namespace

std::vector<AttrMask> dependency_basis(const DependencySet& ds, AttrMask x) {
  std::vector<AttrMask> blocks;
  AttrMask rest = ds.full_mask() & ~x;
  if (rest) blocks.push_back(rest);
  const auto deps = refinement_deps(ds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [v, w] : deps) {
      for (size_t bi = 0; bi < blocks.size(); ++bi) {
        AttrMask b = blocks[bi];
        if ((b & v) == 0 && (b & w) != 0 && (b & ~w) != 0) {
          blocks[bi] = b & w;
          blocks.push_back(b & ~w);
          changed = true;
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](AttrMask a, AttrMask b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return blocks;
}

AttrMask attribute_closure(const DependencySet& ds, AttrMask x) {
  const auto basis = dependency_basis(ds, x);
  AttrMask closure = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& d : ds.deps) {
      if (d.is_ffd && (d.lhs & ~closure) == 0 && (d.rhs & ~closure) != 0) {
        closure |= d.rhs;
        changed = true;
      }
    }
    // Coalescence: a singleton basis block {A} backed by some FFD whose
    // left side avoids A makes A functionally determined by x.
    for (AttrMask b : basis) {
      if (std::popcount(b) != 1 || (closure & b)) continue;
      for (const auto& d : ds.deps) {
        if (d.is_ffd && (d.rhs & b) != 0 && (d.lhs & b) == 0) {
          closure |= b;
          changed = true;
          break;
        }
      }
    }
  }
  return closure;
}

namespace {

bool union_of_blocks(const std::vector<AttrMask>& blocks, AttrMask target) {
  AttrMask covered = 0;
  for (AttrMask b : blocks) {
    AttrMask overlap = b & target;
    if (overlap == 0) continue;
    if (overlap != b) return false;  // partial block
    covered |= b;
  }
  return covered == target;
}

bool fmvd_derivable(const DependencySet& ds, const SymbolicDep& q) {
  AttrMask rhs = q.rhs & ~q.lhs;
  if (rhs == 0) return true;  // reflexivity
  return union_of_blocks(dependency_basis(ds, q.lhs), rhs);
}

// ---- breadth-first trace search ------------------------------------------

struct Node {
  SymbolicDep dep;
  std::string rule;
  std::vector<int> premises;
};

struct DepKey {
  size_t operator()(const SymbolicDep& d) const {
    return std::hash<std::uint64_t>{}((std::uint64_t(d.lhs) << 31) ^ (std::uint64_t(d.rhs) << 1) ^
                                      (d.is_ffd ? 1 : 0));
  }
};

class TraceSearch {
public:
  TraceSearch(const DependencySet& ds, const SymbolicDep& goal) : ds_(ds), goal_(goal) {}

  std::optional<DerivationTrace> run(int max_depth) {
    for (const auto& d : ds_.deps) add(normalize(d), "axiom", {});
    if (goal_index_ >= 0) return reconstruct();
    for (int round = 0; round < max_depth && goal_index_ < 0; ++round) {
      size_t before = nodes_.size();
      expand();
      if (nodes_.size() == before) break;  // fixpoint
      if (nodes_.size() > kNodeCap) break;
    }
    if (goal_index_ < 0) return std::nullopt;
    return reconstruct();
  }

private:
  static constexpr size_t kNodeCap = 20000;

  int add(const SymbolicDep& dep, const std::string& rule, std::vector<int> premises) {
    auto it = index_.find(dep);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{dep, rule, std::move(premises)});
    index_.emplace(dep, id);
    if (dep == goal_ && goal_index_ < 0) goal_index_ = id;
    return id;
  }

  void derive(bool is_ffd, AttrMask lhs, AttrMask rhs, const std::string& rule,
              std::vector<int> premises) {
    SymbolicDep d = normalize(SymbolicDep{is_ffd, lhs, rhs});
    if (d.rhs == 0) return;  // trivial; reflexivity answers these directly
    add(d, rule, std::move(premises));
  }

  void expand() {
    const AttrMask full = ds_.full_mask();
    const size_t count = nodes_.size();
    for (size_t i = 0; i < count; ++i) {
      const SymbolicDep a = nodes_[i].dep;
      int ia = static_cast<int>(i);
      if (!a.is_ffd) {
        derive(false, a.lhs, full & ~a.lhs & ~a.rhs, "complementation", {ia});
      } else {
        derive(false, a.lhs, a.rhs, "replication", {ia});
      }
      // Goal-directed augmentation: grow the left side toward the query's.
      if (goal_.is_ffd == a.is_ffd && (a.lhs & ~goal_.lhs) == 0 && a.lhs != goal_.lhs) {
        AttrMask w = goal_.lhs & ~a.lhs;
        derive(a.is_ffd, a.lhs | w, a.rhs, "augmentation", {ia});
        if (!a.is_ffd) derive(false, a.lhs | w, a.rhs | w, "augmentation", {ia});
      }
      for (size_t j = 0; j < count; ++j) {
        if (i == j) continue;
        const SymbolicDep b = nodes_[j].dep;
        int ib = static_cast<int>(j);
        if (!a.is_ffd && !b.is_ffd) {
          if (b.lhs == a.rhs || b.lhs == (a.lhs | a.rhs))
            derive(false, a.lhs, b.rhs & ~b.lhs, "transitivity", {ia, ib});
          if (a.lhs == b.lhs && j > i) {
            derive(false, a.lhs, a.rhs | b.rhs, "additivity", {ia, ib});
            derive(false, a.lhs, a.rhs & b.rhs, "projectivity", {ia, ib});
            derive(false, a.lhs, a.rhs & ~b.rhs, "projectivity", {ia, ib});
            derive(false, a.lhs, b.rhs & ~a.rhs, "projectivity", {ia, ib});
          }
        } else if (!a.is_ffd && b.is_ffd) {
          // Coalescence: FMVD a, FFD b with b.rhs inside a.rhs and b.lhs
          // clear of it.
          if (b.rhs && (b.rhs & ~a.rhs) == 0 && (b.lhs & a.rhs) == 0)
            derive(true, a.lhs, b.rhs, "coalescence", {ib, ia});
          // FFD right sides may first be cut down to the FMVD's right side.
          if ((b.rhs & a.rhs) && (b.rhs & ~a.rhs) && (b.lhs & a.rhs) == 0)
            derive(true, b.lhs, b.rhs & a.rhs, "ffd-decomposition", {ib});
        } else if (a.is_ffd && b.is_ffd) {
          if (b.lhs && (b.lhs & ~(a.lhs | a.rhs)) == 0)
            derive(true, a.lhs, a.rhs | b.rhs, "ffd-transitivity", {ia, ib});
        }
      }
      if (nodes_.size() > kNodeCap) return;
    }
  }

  DerivationTrace reconstruct() const {
    std::vector<int> order;
    std::unordered_set<int> seen;
    std::vector<int> stack = {goal_index_};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (!seen.insert(id).second) continue;
      order.push_back(id);
      for (int p : nodes_[id].premises) stack.push_back(p);
    }
    std::sort(order.begin(), order.end());
    DerivationTrace trace;
    for (int id : order) {
      const Node& n = nodes_[id];
      if (n.rule == "axiom") continue;
      DerivationStep step;
      step.rule = n.rule;
      for (int p : n.premises) step.premises.push_back(format_statement(ds_, nodes_[p].dep));
      step.conclusion = format_statement(ds_, n.dep);
      trace.steps.push_back(std::move(step));
    }
    return trace;
  }

  const DependencySet& ds_;
  SymbolicDep goal_;
  std::vector<Node> nodes_;
  std::unordered_map<SymbolicDep, int, DepKey> index_;
  int goal_index_ = -1;
};

}  // namespace

ClosureResult closure_contains(const DependencySet& ds, const SymbolicDep& q, int max_depth) {
  if (ds.universe.size() > kMaxUniverse)
    throw Error(ErrorKind::UniverseTooLarge, "universe exceeds 30 attributes");
  if (q.lhs == 0) throw Error(ErrorKind::MalformedQuery, "query left-hand side must be non-empty");
  if ((q.lhs | q.rhs) & ~ds.full_mask())
    throw Error(ErrorKind::MalformedQuery, "query ranges outside the declared universe");

  ClosureResult result;
  SymbolicDep qn = normalize(q);
  if (qn.rhs == 0) {
    result.derivable = true;
    DerivationTrace trace;
    trace.steps.push_back(
        DerivationStep{"reflexivity", {}, format_statement(ds, q)});
    result.trace = std::move(trace);
    return result;
  }

  if (q.is_ffd) {
    result.derivable = (qn.rhs & ~attribute_closure(ds, q.lhs)) == 0;
  } else {
    result.derivable = fmvd_derivable(ds, qn);
  }
  if (result.derivable) {
    TraceSearch search(ds, qn);
    result.trace = search.run(max_depth);
  }
  return result;
}

DependencySet parse_dependency_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("dependency file: ") + e.what());
  }
  DependencySet ds;
  try {
    for (const auto& name : doc.at("universe")) {
      std::string n = name.get<std::string>();
      if (n.empty()) throw Error(ErrorKind::SyntaxError, "dependency file: empty attribute name");
      for (const auto& existing : ds.universe)
        if (existing == n)
          throw Error(ErrorKind::DuplicateAttribute, "duplicate attribute '" + n + "'");
      ds.universe.push_back(std::move(n));
    }
    if (ds.universe.size() > kMaxUniverse)
      throw Error(ErrorKind::UniverseTooLarge, "universe exceeds 30 attributes");
    auto load = [&](const char* key, bool is_ffd) {
      if (!doc.contains(key)) return;
      for (const auto& jd : doc[key]) {
        SymbolicDep d;
        d.is_ffd = is_ffd;
        d.lhs = mask_of(ds, jd.at("lhs").get<std::vector<std::string>>());
        d.rhs = mask_of(ds, jd.at("rhs").get<std::vector<std::string>>());
        if (d.lhs == 0)
          throw Error(ErrorKind::MalformedQuery, "dependency left-hand side must be non-empty");
        ds.deps.push_back(d);
      }
    };
    load("ffds", true);
    load("fmvds", false);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("dependency file: ") + e.what());
  }
  return ds;
}

AttrMask mask_of(const DependencySet& ds, const std::vector<std::string>& names) {
  AttrMask m = 0;
  for (const auto& n : names) m |= AttrMask{1} << ds.index_of(n);
  return m;
}

std::vector<std::string> mask_names(const DependencySet& ds, AttrMask m) {
  std::vector<std::string> out;
  for (size_t i = 0; i < ds.universe.size(); ++i)
    if (m & (AttrMask{1} << i)) out.push_back(ds.universe[i]);
  return out;
}

std::string format_statement(const DependencySet& ds, const SymbolicDep& d) {
  auto side = [&](AttrMask m) {
    if (m == 0) return std::string("{}");
    std::string s;
    for (const auto& n : mask_names(ds, m)) {
      if (!s.empty()) s += ",";
      s += n;
    }
    return s;
  };
  return side(d.lhs) + (d.is_ffd ? " -> " : " ->> ") + side(d.rhs);
}

namespace {

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    size_t b = current.find_first_not_of(" \t");
    if (b == std::string::npos) {
      current.clear();
      return;
    }
    size_t e = current.find_last_not_of(" \t");
    out.push_back(current.substr(b, e - b + 1));
    current.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      current += c;
  }
  flush();
  return out;
}

}  // namespace

SymbolicDep parse_query(const DependencySet& ds, const std::string& text) {
  SymbolicDep d;
  size_t pos = text.find("->>");
  size_t arrow_len = 3;
  if (pos != std::string::npos) {
    d.is_ffd = false;
  } else {
    pos = text.find("->");
    arrow_len = 2;
    if (pos == std::string::npos)
      throw Error(ErrorKind::MalformedQuery, "query must contain '->' or '->>'");
    d.is_ffd = true;
  }
  d.lhs = mask_of(ds, split_names(text.substr(0, pos)));
  d.rhs = mask_of(ds, split_names(text.substr(pos + arrow_len)));
  if (d.lhs == 0) throw Error(ErrorKind::MalformedQuery, "query left-hand side must be non-empty");
  return d;
}

nlohmann::json trace_to_json(const DerivationTrace& trace) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& step : trace.steps)
    j.push_back({{"rule", step.rule}, {"premises", step.premises}, {"conclusion", step.conclusion}});
  return j;
}

}  // namespace fuzzdep
