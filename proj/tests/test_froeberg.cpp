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
#include <random>

#include "doctest.h"
#include "frobound/froeberg.hpp"

using frobound::BigInteger;
using frobound::DegreeType;

namespace {

__int128 small_binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Reference F(m): one term per subset of generator positions (bitmask).
__int128 oracle_F(int d, const std::vector<int>& a, long long m) {
  __int128 total = 0;
  const auto n = a.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1UL) s += a[i];
    const __int128 term = small_binom(d + m - s, d);
    total += (__builtin_popcountl(mask) % 2 ? -term : term);
  }
  return total;
}

// Constant degree a: the subsets of size s all weigh s * a.
__int128 oracle_F_constant(int d, int n, int a, long long m) {
  __int128 total = 0;
  for (int s = 0; s <= n; ++s) {
    const __int128 term = small_binom(n, s) * small_binom(d + m - static_cast<long long>(s) * a, d);
    total += (s % 2 ? -term : term);
  }
  return total;
}

long long oracle_m0(int d, const std::vector<int>& a) {
  const bool constant = std::all_of(a.begin(), a.end(), [&](int x) { return x == a[0]; });
  for (long long m = 0;; ++m) {
    const __int128 f = a.size() > 12 && constant
                           ? oracle_F_constant(d, static_cast<int>(a.size()), a[0], m)
                           : oracle_F(d, a, m);
    if (f <= 0) return m;
  }
}

BigInteger big(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : x;
  BigInteger b = BigInteger(static_cast<unsigned long long>(u >> 64)) << 64;
  b |= BigInteger(static_cast<unsigned long long>(u));
  return neg ? BigInteger(-b) : b;
}

std::vector<int> random_degrees(std::mt19937_64& rng, int n, int max_a) {
  std::vector<int> a;
  for (int i = 0; i < n; ++i) a.push_back(1 + static_cast<int>(rng() % max_a));
  return a;
}

}  // namespace

TEST_CASE("DegreeType validation and normal form") {
  CHECK_THROWS_AS(DegreeType(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeType(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeType(1, {2, 0}), std::invalid_argument);
  const DegreeType dt(2, {1, 3, 2, 3});
  CHECK(dt.degrees() == std::vector<int>{3, 3, 2, 1});
  CHECK(dt.n() == 4);
  CHECK(dt.degree_sum() == 9);
  CHECK_FALSE(dt.is_constant());
  CHECK(DegreeType::constant(1, 3, 5).is_constant());
  CHECK(dt.multiplicities() == std::vector<std::pair<int, int>>{{3, 2}, {2, 1}, {1, 1}});
  CHECK(DegreeType(2, {1, 3, 2, 3}) == DegreeType(2, {3, 3, 1, 2}));
}

TEST_CASE("F matches the subset-sum oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto a = random_degrees(rng, n, 12);
    const DegreeType dt(d, a);
    const long long m = static_cast<long long>(rng() % 60);
    REQUIRE(frobound::froeberg_value(dt, m) == big(oracle_F(d, a, m)));
  }
}

TEST_CASE("F values from hand and oracle computation") {
  CHECK(frobound::froeberg_value(DegreeType::constant(2, 4, 10), 20) == -27);
  CHECK(frobound::froeberg_value(DegreeType::constant(2, 4, 10), 18) == 10);
  CHECK(frobound::froeberg_value(DegreeType::constant(2, 4, 10), 0) == 1);
  CHECK(frobound::froeberg_value(DegreeType::constant(2, 4, 10), -1) == 0);
  // Complete intersection of n = d + 1 linear forms: P/I = k.
  CHECK(frobound::froeberg_value(DegreeType::constant(3, 4, 1), 0) == 1);
  CHECK(frobound::froeberg_value(DegreeType::constant(3, 4, 1), 1) == 0);
}

TEST_CASE("the two oracles agree on constant degrees") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 10; ++n)
      for (int a = 1; a <= 6; ++a)
        for (long long m = 0; m <= 30; ++m)
          REQUIRE(oracle_F(d, std::vector<int>(n, a), m) == oracle_F_constant(d, n, a, m));
}

TEST_CASE("series equals pointwise F") {
  const DegreeType dt(2, {2, 2, 2, 2});
  CHECK(frobound::froeberg_series(dt, 3) == frobound::TruncatedSeries{1, 3, 2, -2});
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const DegreeType r(1 + static_cast<int>(rng() % 4),
                       random_degrees(rng, 1 + static_cast<int>(rng() % 7), 9));
    const auto s = frobound::froeberg_series(r, 40);
    for (int m = 0; m <= 40; ++m) REQUIRE(s[m] == frobound::froeberg_value(r, m));
  }
}

TEST_CASE("F for n <= d + 1 is the complete-intersection series") {
  // For a regular sequence the series is a product of (1 + ... + lambda^(a-1))
  // times (1 - lambda)^-(d+1-n), hence non-negative.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % (d + 1));
    const DegreeType dt(d, random_degrees(rng, n, 6));
    const auto s = frobound::froeberg_series(dt, 40);
    for (std::size_t m = 0; m < s.size(); ++m) CHECK(s[m] >= 0);
  }
}

TEST_CASE("clip and truncate conventions") {
  const frobound::TruncatedSeries s{1, 3, -2, 0, 4};
  CHECK(frobound::clip_nonneg(s) == frobound::TruncatedSeries{1, 3, 0, 0, 4});
  CHECK(frobound::truncate_at_first_nonpositive(s) == frobound::TruncatedSeries{1, 3, 0, 0, 0});
  // Six degree-10 forms in four variables: F turns negative at 21 and is
  // positive again before sum(a) - d.
  const auto f = frobound::froeberg_series(DegreeType::constant(3, 6, 10), 57);
  const auto clipped = frobound::clip_nonneg(f);
  const auto truncated = frobound::truncate_at_first_nonpositive(f);
  CHECK(clipped[20] == truncated[20]);
  CHECK(truncated[21] == 0);
  CHECK(clipped[40] > 0);
  CHECK(truncated[40] == 0);
}

TEST_CASE("smallest_zero matches the oracle") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int n = d + 1 + static_cast<int>(rng() % 5);
    const auto a = random_degrees(rng, n, 10);
    REQUIRE(frobound::smallest_zero(DegreeType(d, a)) == oracle_m0(d, a));
  }
}

TEST_CASE("smallest_zero known values") {
  CHECK(frobound::smallest_zero(DegreeType::constant(3, 6, 10)) == 21);
  CHECK(frobound::smallest_zero(DegreeType::constant(2, 5, 10)) == 17);
  CHECK(frobound::smallest_zero(DegreeType::constant(2, 4, 10)) == 19);
  CHECK(frobound::smallest_zero(DegreeType::constant(1, 4, 10)) == 13);
  CHECK(frobound::smallest_zero(DegreeType::constant(1, 3, 2)) == 2);
  CHECK(frobound::smallest_zero(DegreeType::constant(1, 4, 3)) == 3);
  CHECK(frobound::smallest_zero(DegreeType(2, {3, 2, 1})) == 4);
  CHECK(frobound::smallest_zero(DegreeType(1, {1, 1})) == 1);
}

TEST_CASE("smallest_zero needs n >= d + 1") {
  CHECK_THROWS_AS(frobound::smallest_zero(DegreeType::constant(2, 2, 5)), frobound::PreconditionError);
  CHECK_THROWS_WITH(frobound::smallest_zero(DegreeType::constant(3, 3, 2)),
                    doctest::Contains("n < d+1"));
}

TEST_CASE("smallest_zero is non-increasing in n") {
  for (int d = 1; d <= 4; ++d)
    for (int a = 1; a <= 15; ++a) {
      long long prev = frobound::smallest_zero(DegreeType::constant(d, d + 1, a));
      for (int n = d + 2; n <= d + 12; ++n) {
        const long long cur = frobound::smallest_zero(DegreeType::constant(d, n, a));
        CHECK(cur <= prev);
        prev = cur;
      }
    }
}

TEST_CASE("profile") {
  const auto p = frobound::froeberg_profile(DegreeType::constant(2, 4, 10));
  CHECK(p.values.size() == 39);
  CHECK(p.m0 == 19);
  CHECK(p.values[20] == -27);
  const auto q = frobound::froeberg_profile(DegreeType::constant(2, 2, 3));
  CHECK_FALSE(q.m0.has_value());
}

TEST_CASE("closed form: parameter case") {
  CHECK(frobound::closed_form_parameter(DegreeType(2, {3, 2, 1})) == 4);
  CHECK(frobound::closed_form_parameter(DegreeType::constant(1, 2, 10)) == 19);
  CHECK_THROWS_AS(frobound::closed_form_parameter(DegreeType::constant(1, 3, 2)),
                  frobound::PreconditionError);
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const DegreeType dt(d, random_degrees(rng, d + 1, 20));
    CHECK(frobound::closed_form_parameter(dt) == frobound::smallest_zero(dt));
  }
}

TEST_CASE("closed form: almost-parameter case") {
  for (int d = 1; d <= 6; ++d)
    for (int a = 1; a <= 30; ++a) {
      const auto dt = DegreeType::constant(d, d + 2, a);
      REQUIRE(frobound::closed_form_almost_parameter(dt) == frobound::smallest_zero(dt));
    }
  CHECK_THROWS_AS(frobound::closed_form_almost_parameter(DegreeType(1, {2, 2, 3})),
                  frobound::PreconditionError);
}

TEST_CASE("closed form: d = 1") {
  for (int n = 2; n <= 30; ++n)
    for (int a = 1; a <= 30; ++a) {
      REQUIRE(frobound::closed_form_dim1(n, a) == oracle_m0(1, std::vector<int>(n, a)));
    }
  CHECK_THROWS_AS(frobound::closed_form_dim1(1, 3), frobound::PreconditionError);
}

TEST_CASE("closed form: d = 2") {
  for (int n = 3; n <= 30; ++n)
    for (int a = 1; a <= 30; ++a) {
      REQUIRE(frobound::closed_form_dim2(n, a) == oracle_m0(2, std::vector<int>(n, a)));
    }
  CHECK(frobound::closed_form_dim2(3, 10) == 28);
  CHECK_THROWS_AS(frobound::closed_form_dim2(2, 3), frobound::PreconditionError);
}

TEST_CASE("closed form: d = 2 real root") {
  CHECK(static_cast<double>(frobound::real_root_dim2(4, 10)) == doctest::Approx(18.5187).epsilon(1e-5));
  for (int n = 4; n <= 30; ++n)
    for (int a = 1; a <= 50; ++a) {
      const auto r = frobound::real_root_dim2(n, a);
      // The exact ceiling agrees with the floating root except within rounding of an integer.
      if (std::abs(r - std::round(r)) > 1e-9) {
        CHECK(frobound::closed_form_dim2(n, a) == static_cast<long long>(std::ceil(r)));
      }
    }
}
