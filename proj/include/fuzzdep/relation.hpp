#pragma once

#include <string>
#include <vector>

#include "fuzzdep/interval.hpp"

namespace fuzzdep {

struct Schema {
  struct Attribute {
    std::string name;
    AttributeDomain domain;
  };
  std::vector<Attribute> attributes;

  int index_of(const std::string& name) const;
  size_t size() const { return attributes.size(); }
};

using Tuple = std::vector<FuzzyValue>;

/// Immutable relation: a schema plus ordered tuples. Tuples keep their
/// input order so reports can cite stable indices.
struct Relation {
  Schema schema;
  std::vector<Tuple> tuples;
};

/// Subset of a schema's attributes, kept as sorted unique indices.
struct AttributeSet {
  std::vector<int> indices;

  static AttributeSet resolve(const Schema& schema, const std::vector<std::string>& names);
  static AttributeSet of(std::vector<int> indices);

  bool empty() const { return indices.empty(); }
  bool contains(int idx) const;
  AttributeSet unite(const AttributeSet& other) const;
  AttributeSet subtract(const AttributeSet& other) const;
  std::vector<std::string> names(const Schema& schema) const;
};

/// Parses the relation JSON document, validating all schema and domain
/// invariants. Cells are strings in the cell grammar.
Relation parse_relation(const std::string& text);
std::string serialize_relation(const Relation& r);

/// Projection with exact-duplicate removal; first-occurrence order kept.
Relation project(const Relation& r, const AttributeSet& attrs);

/// U - (x | y).
AttributeSet complement_set(const Schema& schema, const AttributeSet& x, const AttributeSet& y);

bool tuples_equal(const Tuple& a, const Tuple& b);

}  // namespace fuzzdep
