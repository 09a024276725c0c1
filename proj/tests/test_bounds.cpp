/*
 * Copyright 2026 The frobound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "frobound/bounds.hpp"

using frobound::BoundFamily;
using frobound::DegreeType;
using frobound::Hypothesis;

namespace {

using Row = std::vector<long long>;

bool has(const frobound::TaggedBound& b, Hypothesis h) {
  return std::find(b.hypotheses.begin(), b.hypotheses.end(), h) != b.hypotheses.end();
}

// ceil(d * sum(a) / (n - 1)) by integer arithmetic only.
long long ceil_div(long long num, long long den) { return (num + den - 1) / den; }

}  // namespace

TEST_CASE("generic bounds are m0 shifted") {
  const auto dt = DegreeType::constant(2, 5, 10);
  CHECK(frobound::generic_tight_bound(dt) == 19);
  CHECK(frobound::generic_frobenius_bound(dt) == 20);
  CHECK(frobound::generic_ideal_bound(dt, 0) == 20);
  // Polynomial ring: a = -(d + 1) collapses the ideal bound to m0.
  const auto p = DegreeType::constant(3, 4, 10);
  CHECK(frobound::generic_ideal_bound(p, -4) == frobound::smallest_zero(p));
  CHECK(frobound::generic_ideal_bound(p, -4) == 37);
  CHECK(frobound::generic_ideal_bound(DegreeType::constant(1, 4, 10), 1) == 16);
}

TEST_CASE("Koszul and semistable bounds") {
  CHECK(frobound::koszul_bound(DegreeType(2, {10, 9, 8, 7, 1})) == 27);
  CHECK(frobound::koszul_bound(DegreeType::constant(2, 5, 10)) == 30);
  CHECK_THROWS_AS(frobound::koszul_bound(DegreeType::constant(2, 2, 10)), frobound::PreconditionError);
  CHECK(frobound::semistable_bound(DegreeType::constant(2, 5, 10)) == 25);
  CHECK(frobound::semistable_bound(DegreeType(1, {4, 3, 2})) == 5);
  CHECK_THROWS_AS(frobound::semistable_bound(DegreeType(1, {4})), frobound::PreconditionError);
  for (int d = 1; d <= 4; ++d)
    for (int n = 2; n <= 12; ++n)
      for (int a = 1; a <= 20; ++a) {
        CHECK(frobound::semistable_bound(DegreeType::constant(d, n, a)) ==
              ceil_div(static_cast<long long>(d) * n * a, n - 1));
      }
}

TEST_CASE("semistable Frobenius improvement") {
  CHECK(frobound::semistable_frobenius_improvement(DegreeType::constant(1, 3, 5)) == 8);
  CHECK(frobound::semistable_frobenius_improvement(DegreeType::constant(1, 3, 9)) == 14);
  CHECK_THROWS_AS(frobound::semistable_frobenius_improvement(DegreeType::constant(1, 3, 4)),
                  frobound::PreconditionError);
  CHECK_THROWS_AS(frobound::semistable_frobenius_improvement(DegreeType::constant(2, 3, 5)),
                  frobound::PreconditionError);
  // Strictly below the generic Frobenius bound (3a + 3) / 2.
  for (int a = 1; a <= 41; a += 2) {
    const auto dt = DegreeType::constant(1, 3, a);
    CHECK(frobound::semistable_frobenius_improvement(dt) == (3 * a + 1) / 2);
    CHECK(frobound::generic_frobenius_bound(dt) == (3 * a + 3) / 2);
  }
}

TEST_CASE("complete intersection a-invariant") {
  CHECK(frobound::complete_intersection_a_invariant({3}, 3) == 0);
  CHECK(frobound::complete_intersection_a_invariant({4}, 3) == 1);
  CHECK(frobound::complete_intersection_a_invariant({}, 4) == -4);
  CHECK(frobound::complete_intersection_a_invariant({2, 2}, 4) == 0);
}

TEST_CASE("bound report carries hypotheses") {
  const auto r = frobound::bound_report(DegreeType::constant(1, 3, 5), 0);
  CHECK(r.m0 == 7);
  CHECK(r.tight.degree == 8);
  CHECK(r.frobenius.degree == 9);
  REQUIRE(r.ideal_cm.has_value());
  CHECK(r.ideal_cm->degree == 9);
  REQUIRE(r.semistable_frobenius.has_value());
  CHECK(r.semistable_frobenius->degree == 8);
  CHECK(has(r.tight, Hypothesis::kGeneric));
  CHECK(has(r.frobenius, Hypothesis::kNormal));
  CHECK(has(*r.ideal_cm, Hypothesis::kCohenMacaulay));
  CHECK(has(r.koszul, Hypothesis::kPrimaryOnly));
  CHECK_FALSE(has(r.koszul, Hypothesis::kGeneric));
  CHECK(has(r.semistable, Hypothesis::kStronglySemistable));

  const auto s = frobound::bound_report(DegreeType::constant(2, 5, 10));
  CHECK_FALSE(s.ideal_cm.has_value());
  CHECK_FALSE(s.semistable_frobenius.has_value());
  CHECK(s.koszul.degree == 30);
  CHECK(s.semistable.degree == 25);
}

TEST_CASE("tables for a = 10") {
  struct Expected {
    int d;
    std::vector<int> n;
    Row generic, semistable;
    long long koszul;
    long long lim_koszul, lim_semistable, lim_generic;
  };
  const std::vector<Expected> cases = {
      {1, {2, 3, 4, 5, 6, 7, 10, 11}, {20, 15, 14, 13, 12, 12, 12, 11},
       {20, 15, 14, 13, 12, 12, 12, 11}, 20, 20, 11, 11},
      {2, {3, 4, 5, 6, 7, 8, 10, 11}, {30, 21, 19, 18, 17, 16, 16, 15},
       {30, 27, 25, 24, 24, 23, 23, 22}, 30, 30, 21, 12},
      {3, {4, 5, 6, 7, 8, 9, 10, 11}, {40, 26, 24, 22, 22, 21, 20, 20},
       {40, 38, 36, 35, 35, 34, 34, 33}, 40, 40, 31, 13},
  };
  for (const auto& e : cases) {
    CAPTURE(e.d);
    const auto t = frobound::build_table(e.d, 10, e.n);
    CHECK(t.rows.at(BoundFamily::kGeneric) == e.generic);
    CHECK(t.rows.at(BoundFamily::kSemistable) == e.semistable);
    CHECK(t.rows.at(BoundFamily::kKoszul) == Row(e.n.size(), e.koszul));
    CHECK(t.limit_column.at(BoundFamily::kKoszul) == e.lim_koszul);
    CHECK(t.limit_column.at(BoundFamily::kSemistable) == e.lim_semistable);
    CHECK(t.limit_column.at(BoundFamily::kGeneric) == e.lim_generic);
  }
}

TEST_CASE("table rows approach their limits") {
  for (int d = 1; d <= 3; ++d)
    for (int a : {3, 10, 17}) {
      const int big_n = 4000;
      const auto t = frobound::build_table(d, a, {big_n});
      CHECK(t.rows.at(BoundFamily::kSemistable)[0] == frobound::semistable_limit(d, a));
      CHECK(t.rows.at(BoundFamily::kKoszul)[0] == frobound::koszul_limit(d, a));
      CHECK(t.rows.at(BoundFamily::kGeneric)[0] >= frobound::generic_limit(d, a));
    }
  CHECK(frobound::generic_limit(2, 10) == 12);
  CHECK(frobound::semistable_limit(2, 10) == 21);
  CHECK(frobound::koszul_limit(2, 10) == 30);
}

TEST_CASE("ordering generic <= semistable <= Koszul for constant degrees") {
  std::vector<std::string> violations;
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= d + 10; ++n)
      for (int a = 1; a <= 25; ++a) {
        const auto dt = DegreeType::constant(d, n, a);
        const auto g = frobound::generic_tight_bound(dt);
        const auto s = frobound::semistable_bound(dt);
        const auto k = frobound::koszul_bound(dt);
        if (g > s || s > k) violations.push_back(dt.to_string());
      }
  CHECK_MESSAGE(violations.empty(), "first violation: " << (violations.empty() ? "" : violations[0]));
}

TEST_CASE("table rejects bad input") {
  CHECK_THROWS(frobound::build_table(2, 10, {2}));
  CHECK_THROWS(frobound::build_table(0, 10, {3}));
}

TEST_CASE("asymptotic ratios") {
  const auto r2 = frobound::asymptotic_ratio(2, 10, {100, 1000, 10000});
  REQUIRE(r2.predicted_limit.has_value());
  CHECK(*r2.predicted_limit == doctest::Approx((10 + std::sqrt(10.0)) / 9));
  CHECK(r2.samples.back().ratio == doctest::Approx(*r2.predicted_limit).epsilon(0.01));
  CHECK(r2.samples.back().m0 == frobound::closed_form_dim2(10, 10000));

  const auto r3 = frobound::asymptotic_ratio(3, 8, {10000});
  REQUIRE(r3.predicted_limit.has_value());
  CHECK(*r3.predicted_limit == doctest::Approx(2.0));
  CHECK(r3.samples[0].ratio == doctest::Approx(2.0).epsilon(0.02));

  const auto r1 = frobound::asymptotic_ratio(1, 5, {1000});
  CHECK(*r1.predicted_limit == doctest::Approx(1.25));
  CHECK_FALSE(frobound::asymptotic_ratio(3, 7, {10}).predicted_limit.has_value());
  CHECK(frobound::asymptotic_ratio(4, 16, {10}).predicted_limit.value() == doctest::Approx(2.0));
}
