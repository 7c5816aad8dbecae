#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fuzzdep/dependency.hpp"
#include "testutil.hpp"

using namespace fuzzdep;
using testutil::attrs;
using testutil::table1;

namespace {

const ProximityConfig kLiu{Measure::liu, Form::two_term, 0.5, 0.0};
const ProximityConfig kImproved{Measure::improved, Form::ratio, 0.5, 0.0};
const ProximityConfig kExtended{Measure::extended, Form::ratio, 0.5, 0.0};

DependencyStatement ffd(const Relation& r, std::vector<std::string> l, std::vector<std::string> h) {
  return {DepKind::FFD, attrs(r, l), attrs(r, h)};
}
DependencyStatement fmvd(const Relation& r, std::vector<std::string> l, std::vector<std::string> h) {
  return {DepKind::FMVD, attrs(r, l), attrs(r, h)};
}

// Classical 4-tuple relation where A ->> B holds by symmetry.
Relation classic4() {
  Relation r;
  r.schema = testutil::small_schema(3);
  auto c = [](double v) { return FuzzyValue(Crisp{v}); };
  r.tuples = {{c(1), c(1), c(1)}, {c(1), c(2), c(2)}, {c(1), c(1), c(2)}, {c(1), c(2), c(1)}};
  return r;
}

}  // namespace

TEST_CASE("check_ffd worked examples") {
  Relation r = table1();
  CHECK(check_ffd(r, ffd(r, {"X"}, {"Y"}), kImproved).holds);

  Relation one;
  one.schema = testutil::small_schema(2);
  one.tuples = {{Crisp{1}, Crisp{2}}};
  CHECK(check_ffd(one, ffd(one, {"A"}, {"B"}), kImproved).holds);

  Relation v;
  v.schema.attributes = {{"A", make_domain(0, 100)}, {"B", make_domain(0, 100)}};
  v.tuples = {{Crisp{1}, Crisp{10}}, {Crisp{1}, Crisp{20}}};
  auto rep = check_ffd(v, ffd(v, {"A"}, {"B"}), kImproved);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].beta == doctest::Approx(1.0));
  // Crisp 10 and 20 are disjoint singletons, so the right side scores 0.
  CHECK(rep.violations[0].achieved.value() == 0.0);
}

TEST_CASE("check_fmvd reproduces the mixed-value counterexample") {
  Relation r = table1();
  auto liu = check_fmvd(r, fmvd(r, {"X"}, {"Y"}), kLiu);
  CHECK_FALSE(liu.holds);
  REQUIRE_FALSE(liu.violations.empty());
  CHECK(liu.violations[0].beta == doctest::Approx(0.9999));
  REQUIRE(liu.violations[0].best_witness.has_value());
  CHECK(liu.violations[0].best_witness->achieved == doctest::Approx(0.93));

  auto imp = check_fmvd(r, fmvd(r, {"X"}, {"Y"}), kImproved);
  CHECK(imp.holds);
}

TEST_CASE("check_fmvd agrees with the classical oracle on crisp examples") {
  Relation r4 = classic4();
  CHECK(check_fmvd(r4, fmvd(r4, {"A"}, {"B"}), kExtended).holds);
  CHECK(testutil::classical_mvd(r4, attrs(r4, {"A"}), attrs(r4, {"B"})));

  Relation r3 = r4;
  r3.tuples.pop_back();
  CHECK_FALSE(check_fmvd(r3, fmvd(r3, {"A"}, {"B"}), kExtended).holds);
  CHECK_FALSE(testutil::classical_mvd(r3, attrs(r3, {"A"}), attrs(r3, {"B"})));
}

TEST_CASE("crisp randomized agreement with classical MVD") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    Relation r = testutil::random_relation(rng, 3, 5, true);
    AttributeSet x = testutil::random_subset(rng, 3, true);
    AttributeSet y = testutil::random_subset(rng, 3, false);
    bool got = check_fmvd(r, DependencyStatement{DepKind::FMVD, x, y}, kExtended).holds;
    bool want = testutil::classical_mvd(r, x, y);
    CHECK(got == want);
  }
}

TEST_CASE("replication consistency") {
  Relation r = table1();
  auto liu = check_replication(r, attrs(r, {"X"}), attrs(r, {"Y"}), kLiu);
  CHECK(liu.ffd_holds);
  CHECK_FALSE(liu.fmvd_holds);
  CHECK_FALSE(liu.consistent);

  auto imp = check_replication(r, attrs(r, {"X"}), attrs(r, {"Y"}), kImproved);
  CHECK(imp.ffd_holds);
  CHECK(imp.fmvd_holds);
  CHECK(imp.consistent);

  std::mt19937 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    Relation rr = testutil::random_relation(rng, 3, 4, false);
    AttributeSet x = testutil::random_subset(rng, 3, true);
    AttributeSet y = testutil::random_subset(rng, 3, false);
    CHECK(check_replication(rr, x, y, kExtended).consistent);
  }
}

TEST_CASE("FMVD right side is insensitive to LHS overlap") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    Relation r = testutil::random_relation(rng, 3, 4, false);
    AttributeSet x = testutil::random_subset(rng, 3, true);
    AttributeSet y = testutil::random_subset(rng, 3, false);
    auto with = check_fmvd(r, DependencyStatement{DepKind::FMVD, x, y.unite(x)}, kExtended);
    auto without = check_fmvd(r, DependencyStatement{DepKind::FMVD, x, y.subtract(x)}, kExtended);
    CHECK(with.holds == without.holds);
  }
}

TEST_CASE("FMVD complementation on instances") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    Relation r = testutil::random_relation(rng, 3, 4, false);
    AttributeSet x = testutil::random_subset(rng, 3, true);
    AttributeSet y = testutil::random_subset(rng, 3, false).subtract(x);
    AttributeSet z = complement_set(r.schema, x, y);
    auto a = check_fmvd(r, DependencyStatement{DepKind::FMVD, x, y}, kExtended);
    auto b = check_fmvd(r, DependencyStatement{DepKind::FMVD, x, z}, kExtended);
    CHECK(a.holds == b.holds);
  }
}

TEST_CASE("vacuous pairs are counted, not failed") {
  Relation r;
  r.schema = testutil::small_schema(3);
  r.tuples = {{Crisp{1}, Crisp{1}, Crisp{1}}, {Crisp{9}, Crisp{2}, Crisp{2}}};
  auto rep = check_fmvd(r, fmvd(r, {"A"}, {"B"}), kExtended);
  CHECK(rep.holds);
  CHECK(rep.vacuous_pairs == 2);  // both ordered pairs are disjoint on A
  CHECK_FALSE(rep.min_nonvacuous_beta.has_value());
}

TEST_CASE("report_to_json shape") {
  Relation r = table1();
  auto rep = check_fmvd(r, fmvd(r, {"X"}, {"Y"}), kLiu);
  auto j = report_to_json(rep);
  CHECK(j["holds"] == false);
  CHECK(j["violations"].size() == rep.violations.size());
  CHECK(j["violations"][0].contains("best_witness"));
}
