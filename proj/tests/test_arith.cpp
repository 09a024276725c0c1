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


#include <random>

#include "doctest.h"
#include "frobound/arith.hpp"

using frobound::BigInteger;
using frobound::PrimeField;
using frobound::TruncatedSeries;

namespace {

// Independent reference: Pascal's triangle in unsigned 128-bit arithmetic.
unsigned __int128 pascal(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::vector<unsigned __int128> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[static_cast<std::size_t>(k)];
}

TruncatedSeries random_series(std::mt19937_64& rng, int cutoff) {
  std::uniform_int_distribution<long long> dist(-50, 50);
  TruncatedSeries s(cutoff);
  for (int m = 0; m <= cutoff; ++m) s[static_cast<std::size_t>(m)] = dist(rng);
  return s;
}

}  // namespace

TEST_CASE("binom matches Pascal's triangle") {
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigInteger want = BigInteger(static_cast<unsigned long long>(pascal(n, k) >> 64)) << 64 |
                              BigInteger(static_cast<unsigned long long>(pascal(n, k)));
      REQUIRE(frobound::binom(n, k) == want);
    }
  }
}

TEST_CASE("binom is zero outside 0 <= k <= n") {
  CHECK(frobound::binom(5, -1) == 0);
  CHECK(frobound::binom(5, 6) == 0);
  CHECK(frobound::binom(-3, 2) == 0);
  CHECK(frobound::binom(-1, -1) == 0);
  CHECK(frobound::binom(0, 0) == 1);
}

TEST_CASE("binom satisfies Pascal's rule beyond 64 bits") {
  for (long long n = 100; n <= 400; n += 37) {
    for (long long k = 1; k < n; k += 13) {
      CHECK(frobound::binom(n, k) == frobound::binom(n - 1, k - 1) + frobound::binom(n - 1, k));
    }
  }
  CHECK(frobound::binom(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("is_prime") {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 32003, 65521, 2147483647ULL};
  const std::vector<std::uint64_t> composites = {0, 1, 4, 9, 32001, 65535, 2147483649ULL};
  for (auto p : primes) CHECK(frobound::is_prime(p));
  for (auto c : composites) CHECK_FALSE(frobound::is_prime(c));
}

TEST_CASE("PrimeField rejects bad moduli") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(32001), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2147483659U), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2));
}

TEST_CASE("PrimeField arithmetic") {
  const PrimeField f(32003);
  CHECK(f.reduce(-1) == 32002);
  CHECK(f.reduce(32003 * 5 + 7) == 7);
  CHECK(f.add(32002, 5) == 4);
  CHECK(f.sub(3, 5) == 32001);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(32002, 32002) == 1);
  CHECK(f.pow(2, 0) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = static_cast<PrimeField::Element>(1 + rng() % 32002);
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, 32002) == 1);  // Fermat
    CHECK(f.add(a, f.neg(a)) == 0);
  }
}

TEST_CASE("PrimeField near 2^31") {
  const PrimeField f(2147483647U);
  const PrimeField::Element a = 2147483646U;
  CHECK(f.mul(a, a) == 1);
  CHECK(f.add(a, a) == 2147483645U);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
}

TEST_CASE("series constructors and cut-off") {
  const TruncatedSeries s(4);
  CHECK(s.cutoff() == 4);
  CHECK(s.size() == 5);
  CHECK(TruncatedSeries::unit(2) == TruncatedSeries{1, 0, 0});
  CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<BigInteger>{}), std::invalid_argument);
}

TEST_CASE("elementary series") {
  CHECK(frobound::series_one_minus_power(3, 5) == TruncatedSeries{1, 0, 0, -1, 0, 0});
  CHECK(frobound::series_one_minus_power(7, 5) == TruncatedSeries::unit(5));
  CHECK(frobound::series_inv_one_minus_lambda_pow(3, 4) == TruncatedSeries{1, 3, 6, 10, 15});
  CHECK_THROWS_AS(frobound::series_one_minus_power(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(frobound::series_inv_one_minus_lambda_pow(0, 3), std::invalid_argument);
}

TEST_CASE("(1 - lambda)^e times its inverse is 1") {
  for (int e = 1; e <= 6; ++e) {
    TruncatedSeries s = TruncatedSeries::unit(30);
    for (int i = 0; i < e; ++i) s = s * frobound::series_one_minus_power(1, 30);
    CHECK(s * frobound::series_inv_one_minus_lambda_pow(e, 30) == TruncatedSeries::unit(30));
  }
}

TEST_CASE("series product is commutative, associative and unital") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int cutoff = static_cast<int>(rng() % 12);
    const auto a = random_series(rng, cutoff);
    const auto b = random_series(rng, cutoff);
    const auto c = random_series(rng, cutoff);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * TruncatedSeries::unit(cutoff) == a);
  }
}

TEST_CASE("series product rejects mismatched cut-offs") {
  CHECK_THROWS_AS(TruncatedSeries(3) * TruncatedSeries(4), std::invalid_argument);
}

TEST_CASE("series to_string") {
  CHECK(frobound::to_string(TruncatedSeries{1, -2, 0}) == "[1, -2, 0]");
}
