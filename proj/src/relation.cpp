#include "fuzzdep/relation.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace fuzzdep {

int Schema::index_of(const std::string& name) const {
  for (size_t i = 0; i < attributes.size(); ++i)
    if (attributes[i].name == name) return static_cast<int>(i);
  throw Error(ErrorKind::UnknownAttribute, "unknown attribute '" + name + "'");
}

AttributeSet AttributeSet::resolve(const Schema& schema, const std::vector<std::string>& names) {
  std::set<int> idx;
  for (const auto& n : names) idx.insert(schema.index_of(n));
  AttributeSet out;
  out.indices.assign(idx.begin(), idx.end());
  return out;
}

AttributeSet AttributeSet::of(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return AttributeSet{std::move(indices)};
}

bool AttributeSet::contains(int idx) const {
  return std::binary_search(indices.begin(), indices.end(), idx);
}

AttributeSet AttributeSet::unite(const AttributeSet& other) const {
  std::vector<int> out;
  std::set_union(indices.begin(), indices.end(), other.indices.begin(), other.indices.end(),
                 std::back_inserter(out));
  return AttributeSet{std::move(out)};
}

AttributeSet AttributeSet::subtract(const AttributeSet& other) const {
  std::vector<int> out;
  std::set_difference(indices.begin(), indices.end(), other.indices.begin(), other.indices.end(),
                      std::back_inserter(out));
  return AttributeSet{std::move(out)};
}

std::vector<std::string> AttributeSet::names(const Schema& schema) const {
  std::vector<std::string> out;
  for (int i : indices) out.push_back(schema.attributes[i].name);
  return out;
}

namespace {

void validate_cell(const FuzzyValue& v, const Schema::Attribute& attr, size_t tuple_idx) {
  const AttributeDomain& dom = attr.domain;
  auto reject = [&](const Interval& iv) {
    throw Error(ErrorKind::DomainViolation,
                "tuple " + std::to_string(tuple_idx) + ", attribute '" + attr.name + "': value " +
                    format_cell(v) + " outside domain [" + format_number(dom.lower) + "," +
                    format_number(dom.upper) + "]");
  };
  // Trapezoids may range outside the declared domain; interval-shaped and
  // crisp cells may not.
  if (std::holds_alternative<Crisp>(v) || std::holds_alternative<ConfidenceInterval>(v)) {
    Interval iv = to_interval(v, dom);
    if (iv.lower < dom.lower || iv.upper > dom.upper) reject(iv);
  }
}

}  // namespace

Relation parse_relation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("relation file: ") + e.what());
  }
  Relation r;
  try {
    if (!doc.is_object() || !doc.contains("attributes") || !doc["attributes"].is_array())
      throw Error(ErrorKind::SyntaxError, "relation file: missing 'attributes' array");
    for (const auto& a : doc["attributes"]) {
      Schema::Attribute attr;
      attr.name = a.at("name").get<std::string>();
      if (attr.name.empty())
        throw Error(ErrorKind::SyntaxError, "relation file: empty attribute name");
      for (const auto& existing : r.schema.attributes)
        if (existing.name == attr.name)
          throw Error(ErrorKind::DuplicateAttribute, "duplicate attribute '" + attr.name + "'");
      const auto& d = a.at("domain");
      std::optional<double> theta, delta, epsilon;
      if (a.contains("theta")) theta = a["theta"].get<double>();
      if (a.contains("delta")) delta = a["delta"].get<double>();
      if (a.contains("epsilon")) epsilon = a["epsilon"].get<double>();
      attr.domain = make_domain(d.at("lower").get<double>(), d.at("upper").get<double>(), theta,
                                delta, epsilon);
      r.schema.attributes.push_back(std::move(attr));
    }
    if (doc.contains("tuples")) {
      for (const auto& row : doc["tuples"]) {
        if (!row.is_array() || row.size() != r.schema.size())
          throw Error(ErrorKind::SyntaxError,
                      "tuple " + std::to_string(r.tuples.size()) + ": expected " +
                          std::to_string(r.schema.size()) + " cells");
        Tuple t;
        for (size_t i = 0; i < row.size(); ++i) {
          FuzzyValue v = parse_cell(row[i].get<std::string>());
          validate_cell(v, r.schema.attributes[i], r.tuples.size());
          t.push_back(std::move(v));
        }
        r.tuples.push_back(std::move(t));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("relation file: ") + e.what());
  }
  return r;
}

std::string serialize_relation(const Relation& r) {
  nlohmann::json doc;
  doc["attributes"] = nlohmann::json::array();
  for (const auto& a : r.schema.attributes) {
    nlohmann::json ja;
    ja["name"] = a.name;
    ja["domain"] = {{"lower", a.domain.lower}, {"upper", a.domain.upper}};
    ja["theta"] = a.domain.theta;
    doc["attributes"].push_back(ja);
  }
  doc["tuples"] = nlohmann::json::array();
  for (const auto& t : r.tuples) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : t) row.push_back(format_cell(v));
    doc["tuples"].push_back(row);
  }
  return doc.dump();
}

bool tuples_equal(const Tuple& a, const Tuple& b) {
  return a == b;
}

Relation project(const Relation& r, const AttributeSet& attrs) {
  for (int i : attrs.indices)
    if (i < 0 || static_cast<size_t>(i) >= r.schema.size())
      throw Error(ErrorKind::UnknownAttribute, "attribute index out of range");
  Relation out;
  for (int i : attrs.indices) out.schema.attributes.push_back(r.schema.attributes[i]);
  for (const auto& t : r.tuples) {
    Tuple p;
    for (int i : attrs.indices) p.push_back(t[i]);
    bool seen = false;
    for (const auto& existing : out.tuples)
      if (tuples_equal(existing, p)) {
        seen = true;
        break;
      }
    if (!seen) out.tuples.push_back(std::move(p));
  }
  return out;
}

AttributeSet complement_set(const Schema& schema, const AttributeSet& x, const AttributeSet& y) {
  AttributeSet all;
  for (size_t i = 0; i < schema.size(); ++i) all.indices.push_back(static_cast<int>(i));
  return all.subtract(x.unite(y));
}

}  // namespace fuzzdep
