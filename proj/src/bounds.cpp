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

#include "frobound/bounds.hpp"

#include <cmath>
#include <numeric>

namespace frobound {

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::kGeneric: return "generic";
    case Hypothesis::kNormal: return "normal";
    case Hypothesis::kCohenMacaulay: return "cohen-macaulay";
    case Hypothesis::kStronglySemistable: return "strongly-semistable";
    case Hypothesis::kPrimaryOnly: return "primary-only";
  }
  return "unknown";
}

std::string to_string(BoundFamily f) {
  switch (f) {
    case BoundFamily::kKoszul: return "koszul";
    case BoundFamily::kSemistable: return "semistable";
    case BoundFamily::kGeneric: return "generic";
  }
  return "unknown";
}

long long generic_tight_bound(const DegreeType& dt) { return smallest_zero(dt) + dt.d(); }

long long generic_frobenius_bound(const DegreeType& dt) { return smallest_zero(dt) + dt.d() + 1; }

long long generic_ideal_bound(const DegreeType& dt, long long a_invariant) {
  return smallest_zero(dt) + dt.d() + 1 + a_invariant;
}

long long koszul_bound(const DegreeType& dt) {
  if (dt.n() < dt.d() + 1) {
    throw PreconditionError("Koszul bound needs n >= d+1 generators: " + dt.to_string());
  }
  const auto& a = dt.degrees();
  return std::accumulate(a.begin(), a.begin() + dt.d() + 1, 0LL);
}

long long semistable_bound(const DegreeType& dt) {
  if (dt.n() < 2) throw PreconditionError("semistable bound needs n >= 2: " + dt.to_string());
  const long long num = dt.d() * dt.degree_sum();
  const long long den = dt.n() - 1;
  return (num + den - 1) / den;
}

long long semistable_frobenius_improvement(const DegreeType& dt) {
  const auto& a = dt.degrees();
  if (dt.d() != 1 || dt.n() != 3 || !dt.is_constant() || a.front() % 2 == 0) {
    throw PreconditionError("improvement applies only to d=1 and three equal odd degrees: " +
                            dt.to_string());
  }
  return (3LL * a.front() + 1) / 2;
}

long long complete_intersection_a_invariant(const std::vector<int>& relation_degrees,
                                            int variables) {
  return std::accumulate(relation_degrees.begin(), relation_degrees.end(), 0LL) - variables;
}

BoundReport bound_report(const DegreeType& dt, std::optional<long long> a_invariant) {
  BoundReport r{dt, smallest_zero(dt), {}, {}, {}, a_invariant, {}, {}, {}};
  r.tight = {r.m0 + dt.d(), {Hypothesis::kGeneric}};
  r.frobenius = {r.tight.degree + 1, {Hypothesis::kGeneric, Hypothesis::kNormal}};
  if (a_invariant) {
    r.ideal_cm = TaggedBound{r.frobenius.degree + *a_invariant,
                             {Hypothesis::kGeneric, Hypothesis::kCohenMacaulay}};
  }
  r.koszul = {koszul_bound(dt), {Hypothesis::kPrimaryOnly}};
  r.semistable = {semistable_bound(dt), {Hypothesis::kPrimaryOnly, Hypothesis::kStronglySemistable}};
  const auto& a = dt.degrees();
  if (dt.d() == 1 && dt.n() == 3 && dt.is_constant() && a.front() % 2 == 1) {
    r.semistable_frobenius =
        TaggedBound{semistable_frobenius_improvement(dt),
                    {Hypothesis::kNormal, Hypothesis::kStronglySemistable}};
  }
  return r;
}

long long generic_limit(int d, int a) { return static_cast<long long>(a) + d; }

long long koszul_limit(int d, int a) { return static_cast<long long>(d + 1) * a; }

long long semistable_limit(int d, int a) { return static_cast<long long>(d) * a + 1; }

BoundTable build_table(int d, int a, const std::vector<int>& n_values) {
  BoundTable t;
  t.d = d;
  t.a = a;
  t.n_values = n_values;
  auto& koszul = t.rows[BoundFamily::kKoszul];
  auto& semistable = t.rows[BoundFamily::kSemistable];
  auto& generic = t.rows[BoundFamily::kGeneric];
  for (int n : n_values) {
    const DegreeType dt = DegreeType::constant(d, n, a);
    koszul.push_back(koszul_bound(dt));
    semistable.push_back(semistable_bound(dt));
    generic.push_back(generic_tight_bound(dt));
  }
  t.limit_column[BoundFamily::kKoszul] = koszul_limit(d, a);
  t.limit_column[BoundFamily::kSemistable] = semistable_limit(d, a);
  t.limit_column[BoundFamily::kGeneric] = generic_limit(d, a);
  return t;
}

namespace {

std::optional<int> integer_root(int n, int k) {
  const auto guess = static_cast<int>(std::lround(std::pow(static_cast<double>(n), 1.0 / k)));
  for (int l = std::max(1, guess - 1); l <= guess + 1; ++l) {
    long long power = 1;
    for (int i = 0; i < k; ++i) power *= l;
    if (power == n) return l;
  }
  return std::nullopt;
}

}  // namespace

AsymptoticReport asymptotic_ratio(int d, int n, const std::vector<int>& a_values) {
  if (n < d + 1) throw PreconditionError("asymptotics need n >= d+1");
  AsymptoticReport report{d, n, {}, std::nullopt};
  for (int a : a_values) {
    const long long m0 = smallest_zero(DegreeType::constant(d, n, a));
    report.samples.push_back({a, m0, static_cast<double>(m0) / a});
  }
  const double nn = n;
  if (d == 1) {
    report.predicted_limit = nn / (nn - 1);
  } else if (d == 2) {
    report.predicted_limit = (nn + std::sqrt(nn)) / (nn - 1);
  } else if (d == 3 || d == 4) {
    if (auto l = integer_root(n, d); l && *l >= 2) {
      report.predicted_limit = static_cast<double>(*l) / (*l - 1);
    }
  }
  return report;
}

}  // namespace frobound
