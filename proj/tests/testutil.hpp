#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here must stay independent of the library code paths it checks.

#include <deque>
#include <random>
#include <unordered_set>
#include <vector>

#include "fuzzdep/decomposition.hpp"
#include "fuzzdep/dependency.hpp"
#include "fuzzdep/inference.hpp"

namespace testutil {

using namespace fuzzdep;

// Two-tuple relation with crisp X, Y and interval Z rows [1,9], [1,8];
// theta = 100 on every attribute.
inline Relation table1() {
  Relation r;
  r.schema.attributes = {
      {"X", make_domain(0, 100)},
      {"Y", make_domain(0, 100)},
      {"Z", make_domain(0, 100)},
  };
  r.tuples = {
      {Crisp{5}, Crisp{7}, ConfidenceInterval{{1, 9}, 1.0}},
      {Crisp{5}, Crisp{7}, ConfidenceInterval{{1, 8}, 1.0}},
  };
  return r;
}

inline AttributeSet attrs(const Relation& r, const std::vector<std::string>& names) {
  return AttributeSet::resolve(r.schema, names);
}

// ---- random data ---------------------------------------------------------

inline Schema small_schema(int n_attrs) {
  Schema s;
  for (int i = 0; i < n_attrs; ++i)
    s.attributes.push_back({std::string(1, static_cast<char>('A' + i)), make_domain(0, 10)});
  return s;
}

inline FuzzyValue random_crisp(std::mt19937& rng) {
  std::uniform_int_distribution<int> val(1, 3);
  return Crisp{static_cast<double>(val(rng))};
}

inline FuzzyValue random_mixed_cell(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  if (kind(rng) < 2) return random_crisp(rng);
  std::uniform_int_distribution<int> bound(0, 10);
  int a = bound(rng), b = bound(rng);
  if (a > b) std::swap(a, b);
  return ConfidenceInterval{{static_cast<double>(a), static_cast<double>(b)}, 1.0};
}

inline Relation random_relation(std::mt19937& rng, int n_attrs, int max_tuples, bool crisp_only) {
  Relation r;
  r.schema = small_schema(n_attrs);
  std::uniform_int_distribution<int> count(1, max_tuples);
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Tuple tp;
    for (int a = 0; a < n_attrs; ++a)
      tp.push_back(crisp_only ? random_crisp(rng) : random_mixed_cell(rng));
    r.tuples.push_back(std::move(tp));
  }
  return r;
}

inline AttributeSet random_subset(std::mt19937& rng, int n_attrs, bool non_empty) {
  std::vector<int> idx;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < n_attrs; ++i)
    if (coin(rng)) idx.push_back(i);
  if (idx.empty() && non_empty) {
    std::uniform_int_distribution<int> pick(0, n_attrs - 1);
    idx.push_back(pick(rng));
  }
  return AttributeSet::of(idx);
}

// ---- classical oracles (crisp data) --------------------------------------

// Brute-force classical MVD check over equality.
inline bool classical_mvd(const Relation& r, const AttributeSet& x, const AttributeSet& y) {
  AttributeSet z = complement_set(r.schema, x, y);
  auto eq_on = [&](const Tuple& a, const Tuple& b, const AttributeSet& s) {
    for (int i : s.indices)
      if (!(a[i] == b[i])) return false;
    return true;
  };
  const size_t n = r.tuples.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!eq_on(r.tuples[i], r.tuples[j], x)) continue;
      bool witnessed = false;
      for (size_t k = 0; k < n && !witnessed; ++k)
        witnessed = eq_on(r.tuples[k], r.tuples[i], x) && eq_on(r.tuples[k], r.tuples[i], y) &&
                    eq_on(r.tuples[k], r.tuples[j], z);
      if (!witnessed) return false;
    }
  return true;
}

// Equality-based natural join of two projections, duplicates removed.
inline std::vector<Tuple> classical_join(const Relation& r, const AttributeSet& x,
                                         const AttributeSet& y) {
  AttributeSet z = complement_set(r.schema, x, y);
  Relation r1 = project(r, x.unite(y));
  Relation r2 = project(r, x.unite(z));
  std::vector<Tuple> out;
  for (const auto& t1 : r1.tuples)
    for (const auto& t2 : r2.tuples) {
      bool match = true;
      for (size_t k = 0; k < x.indices.size() && match; ++k) {
        int i1 = r1.schema.index_of(r.schema.attributes[x.indices[k]].name);
        int i2 = r2.schema.index_of(r.schema.attributes[x.indices[k]].name);
        match = (t1[i1] == t2[i2]);
      }
      if (!match) continue;
      Tuple joined(r.schema.size());
      for (size_t a = 0; a < r.schema.size(); ++a) {
        const std::string& name = r.schema.attributes[a].name;
        bool in_r1 = false;
        for (const auto& attr : r1.schema.attributes)
          if (attr.name == name) in_r1 = true;
        if (in_r1)
          joined[a] = t1[r1.schema.index_of(name)];
        else
          joined[a] = t2[r2.schema.index_of(name)];
      }
      bool seen = false;
      for (const auto& e : out)
        if (e == joined) seen = true;
      if (!seen) out.push_back(std::move(joined));
    }
  return out;
}

// ---- symbolic saturation oracle ------------------------------------------

// Exhaustive fixpoint over the full rule system with complete subset
// instantiation. Only usable for small universes (<= 6 attributes).
class SaturationOracle {
public:
  SaturationOracle(int n_attrs, const std::vector<SymbolicDep>& axioms) : n_(n_attrs) {
    full_ = (AttrMask{1} << n_) - 1;
    // Reflexivity seeds, both kinds: X over all subsets, Y over subsets of X.
    for (AttrMask x = 0; x <= full_; ++x)
      for (AttrMask y = x;; y = (y - 1) & x) {
        add({false, x, y});
        add({true, x, y});
        if (y == 0) break;
      }
    for (const auto& a : axioms) add(a);
    saturate();
  }

  bool derivable(const SymbolicDep& d) const { return set_.count(key(d)) > 0; }

private:
  static std::uint64_t key(const SymbolicDep& d) {
    return (std::uint64_t(d.lhs) << 33) | (std::uint64_t(d.rhs) << 1) | (d.is_ffd ? 1 : 0);
  }

  void add(const SymbolicDep& d) {
    if (set_.insert(key(d)).second) {
      all_.push_back(d);
      work_.push_back(d);
    }
  }

  void apply_pair(const SymbolicDep& a, const SymbolicDep& b) {
    if (!a.is_ffd && !b.is_ffd) {
      if (b.lhs == a.rhs) add({false, a.lhs, b.rhs & ~a.rhs});  // transitivity
      if (a.lhs == b.lhs) {
        add({false, a.lhs, a.rhs | b.rhs});   // additivity
        add({false, a.lhs, a.rhs & b.rhs});   // projectivity
        add({false, a.lhs, a.rhs & ~b.rhs});
        add({false, a.lhs, b.rhs & ~a.rhs});
      }
    } else if (!a.is_ffd && b.is_ffd) {
      // Coalescence.
      if (b.rhs && (b.rhs & ~a.rhs) == 0 && (b.lhs & a.rhs) == 0) add({true, a.lhs, b.rhs});
    } else if (a.is_ffd && b.is_ffd) {
      if (b.lhs == a.rhs) add({true, a.lhs, b.rhs});  // FD transitivity
    }
  }

  void saturate() {
    while (!work_.empty()) {
      SymbolicDep d = work_.front();
      work_.pop_front();
      if (!d.is_ffd) {
        add({false, d.lhs, full_ & ~d.lhs & ~d.rhs});  // complementation
        // Augmentation: X ->> Y |- XW ->> YV for V subset of W.
        for (AttrMask w = 0; w <= full_; ++w)
          for (AttrMask v = w;; v = (v - 1) & w) {
            add({false, d.lhs | w, d.rhs | v});
            if (v == 0) break;
          }
      } else {
        add({false, d.lhs, d.rhs});  // replication
        for (AttrMask w = 0; w <= full_; ++w) add({true, d.lhs | w, d.rhs | w});  // FD augmentation
      }
      const size_t count = all_.size();
      for (size_t i = 0; i < count; ++i) {
        apply_pair(d, all_[i]);
        apply_pair(all_[i], d);
      }
    }
  }

  int n_;
  AttrMask full_;
  std::unordered_set<std::uint64_t> set_;
  std::vector<SymbolicDep> all_;
  std::deque<SymbolicDep> work_;
};

inline std::vector<SymbolicDep> random_dep_axioms(std::mt19937& rng, int n_attrs, int max_deps) {
  std::uniform_int_distribution<int> count(1, max_deps);
  std::uniform_int_distribution<int> coin(0, 1);
  AttrMask full = (AttrMask{1} << n_attrs) - 1;
  std::uniform_int_distribution<AttrMask> mask(0, full);
  std::vector<SymbolicDep> out;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    AttrMask lhs = mask(rng);
    if (lhs == 0) lhs = 1;
    out.push_back({coin(rng) == 1, lhs, mask(rng)});
  }
  return out;
}

inline DependencySet make_depset(int n_attrs, std::vector<SymbolicDep> deps) {
  DependencySet ds;
  for (int i = 0; i < n_attrs; ++i) ds.universe.push_back(std::string(1, static_cast<char>('A' + i)));
  ds.deps = std::move(deps);
  return ds;
}

}  // namespace testutil
