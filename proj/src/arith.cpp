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

#include "frobound/arith.hpp"

#include <sstream>
#include <utility>

namespace frobound {

BigInteger binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  BigInteger r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (std::uint32_t{1} << 31)) {
    throw std::invalid_argument("prime modulus must satisfy 2 <= p < 2^31, got " +
                                std::to_string(p));
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element base = a % p_;
  Element r = 1 % p_;
  while (e > 0) {
    if (e & 1U) r = mul(r, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return r;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

TruncatedSeries::TruncatedSeries(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("series cut-off must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, BigInteger{0});
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long long> coeffs) {
  if (coeffs.size() == 0) throw std::invalid_argument("series needs at least one coefficient");
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
}

TruncatedSeries::TruncatedSeries(std::vector<BigInteger> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::unit(int cutoff) {
  TruncatedSeries s(cutoff);
  s[0] = 1;
  return s;
}

TruncatedSeries series_one_minus_power(int a, int cutoff) {
  if (a < 1) throw std::invalid_argument("exponent a must be >= 1");
  TruncatedSeries s = TruncatedSeries::unit(cutoff);
  if (a <= cutoff) s[static_cast<std::size_t>(a)] = -1;
  return s;
}

TruncatedSeries series_inv_one_minus_lambda_pow(int e, int cutoff) {
  if (e < 1) throw std::invalid_argument("exponent e must be >= 1");
  TruncatedSeries s(cutoff);
  for (int m = 0; m <= cutoff; ++m) s[static_cast<std::size_t>(m)] = binom(e - 1 + m, e - 1);
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.cutoff() != t.cutoff()) {
    throw std::invalid_argument("series cut-off mismatch: " + std::to_string(s.cutoff()) +
                                " vs " + std::to_string(t.cutoff()));
  }
  const std::size_t n = s.size();
  TruncatedSeries r(s.cutoff());
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!t[j].is_zero()) r[i + j] += s[i] * t[j];
    }
  }
  return r;
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  os << ']';
  return os.str();
}

}  // namespace frobound
