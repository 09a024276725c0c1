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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobound/froeberg.hpp"

namespace frobound {

/// The hypothesis each bound needs before it applies to a given ring.
enum class Hypothesis {
  kGeneric,             // generic (countably generic) generators
  kNormal,              // R normal
  kCohenMacaulay,       // R Cohen-Macaulay of dimension >= 2, a-invariant known
  kStronglySemistable,  // first syzygy bundle strongly semistable
  kPrimaryOnly,         // generators only need to define an R_+-primary ideal
};

std::string to_string(Hypothesis h);

struct TaggedBound {
  long long degree = 0;
  std::vector<Hypothesis> hypotheses;
};

/// Every bound family for one degree type. All degrees are inclusion bounds:
/// R_m is contained in the relevant closure for every m >= degree.
struct BoundReport {
  DegreeType degree_type;
  long long m0 = 0;
  TaggedBound tight;
  TaggedBound frobenius;
  std::optional<TaggedBound> ideal_cm;
  std::optional<long long> a_invariant;
  TaggedBound koszul;
  TaggedBound semistable;
  /// Only for d = 1 and three equal odd degrees.
  std::optional<TaggedBound> semistable_frobenius;
};

long long generic_tight_bound(const DegreeType& dt);
long long generic_frobenius_bound(const DegreeType& dt);
long long generic_ideal_bound(const DegreeType& dt, long long a_invariant);
long long koszul_bound(const DegreeType& dt);
long long semistable_bound(const DegreeType& dt);
long long semistable_frobenius_improvement(const DegreeType& dt);

/// a-invariant of a graded complete intersection k[x_1..x_v]/(h_1..h_c):
/// sum(deg h_j) - v.
long long complete_intersection_a_invariant(const std::vector<int>& relation_degrees,
                                            int variables);

BoundReport bound_report(const DegreeType& dt, std::optional<long long> a_invariant = {});

enum class BoundFamily { kKoszul, kSemistable, kGeneric };
std::string to_string(BoundFamily f);

/// Bounds for constant degree a over a range of generator counts n.
struct BoundTable {
  int d = 0;
  int a = 0;
  std::vector<int> n_values;
  std::map<BoundFamily, std::vector<long long>> rows;
  /// Value of each row for n -> infinity.
  std::map<BoundFamily, long long> limit_column;
};

BoundTable build_table(int d, int a, const std::vector<int>& n_values);

/// Limits as n -> infinity for constant degree a.
long long generic_limit(int d, int a);
long long koszul_limit(int d, int a);
/// ceil(d a n / (n - 1)) is strictly above d a and tends to it, so the integer
/// sequence settles at d a + 1.
long long semistable_limit(int d, int a);

struct AsymptoticSample {
  int a = 0;
  long long m0 = 0;
  double ratio = 0.0;  // m0 / a
};

struct AsymptoticReport {
  int d = 0;
  int n = 0;
  std::vector<AsymptoticSample> samples;
  /// Limit of m0 / a as a -> infinity where a formula is known: n/(n-1) for
  /// d = 1, (n + sqrt n)/(n - 1) for d = 2, l/(l - 1) when n = l^d for d = 3, 4.
  std::optional<double> predicted_limit;
};

AsymptoticReport asymptotic_ratio(int d, int n, const std::vector<int>& a_values);

}  // namespace frobound
