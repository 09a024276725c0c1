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

// The Fröberg function of a degree type and the zero m0 that every generic
// inclusion bound is built on.
//
// For generators of degrees A = (a_1, ..., a_n) in a polynomial ring with
// d + 1 variables,
//
//   F(m) = sum over sub-multisets B of A of (-1)^|B| * C(d + m - sum(B), d),
//
// which is the coefficient of lambda^m in prod(1 - lambda^a_i) / (1 - lambda)^(d+1).
// m0 is the first m with F(m) <= 0; it exists exactly when n >= d + 1.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobound/arith.hpp"

namespace frobound {

/// Generator degrees (kept sorted descending) together with the projective
/// dimension d; the ambient polynomial ring has d + 1 variables.
class DegreeType {
 public:
  DegreeType(int d, std::vector<int> degrees);
  static DegreeType constant(int d, int n, int a);

  int d() const { return d_; }
  int n() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  long long degree_sum() const;
  bool is_constant() const;
  /// Distinct degrees with their multiplicities, largest degree first.
  std::vector<std::pair<int, int>> multiplicities() const;

  std::string to_string() const;

  friend bool operator==(const DegreeType&, const DegreeType&) = default;

 private:
  int d_;
  std::vector<int> degrees_;
};

BigInteger froeberg_value(const DegreeType& dt, long long m);

/// prod(1 - lambda^a_i) * (1 - lambda)^-(d+1) up to `cutoff`.
TruncatedSeries froeberg_series(const DegreeType& dt, int cutoff);

/// Coefficient-wise max(0, c).
TruncatedSeries clip_nonneg(const TruncatedSeries& s);

/// The other common reading of |.|: keep coefficients up to the first
/// non-positive one, zero from there on.
TruncatedSeries truncate_at_first_nonpositive(const TruncatedSeries& s);

/// min{m : F(m) <= 0}. Throws PreconditionError when n < d + 1.
long long smallest_zero(const DegreeType& dt);

/// Table m -> F(m) for 0 <= m <= sum(a) - d together with m0 when it exists.
struct FroebergProfile {
  DegreeType degree_type;
  std::vector<BigInteger> values;
  std::optional<long long> m0;
};

FroebergProfile froeberg_profile(const DegreeType& dt);

// Closed forms for m0 in the cases where one is known.

/// n = d + 1: sum(a) - d.
long long closed_form_parameter(const DegreeType& dt);
/// n = d + 2 with constant degree a: floor(n(a - 1) / 2) + 1.
long long closed_form_almost_parameter(const DegreeType& dt);
/// d = 1, n >= 2 generators of degree a: ceil(n a / (n - 1)) - 1.
long long closed_form_dim1(int n, int a);
/// d = 2, n >= 3 generators of degree a. Exact integer evaluation of the
/// ceiling of the larger root of the quadratic piece of F on [a, 2a - 1].
long long closed_form_dim2(int n, int a);

/// The real root (3 - 3n + 2an + sqrt(1 - 2n + n^2 + 4a^2 n)) / (2(n - 1)),
/// n >= 4, in long double.
long double real_root_dim2(int n, int a);

}  // namespace frobound
