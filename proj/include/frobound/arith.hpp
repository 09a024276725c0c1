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

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobound {

using BigInteger = boost::multiprecision::cpp_int;

/// Raised when a mathematical precondition fails (e.g. too few generators
/// for an inclusion bound). Distinct from malformed input, which uses
/// std::invalid_argument.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// C(n, k) for n >= k >= 0, and exactly zero for every other pair.
BigInteger binom(long long n, long long k);

bool is_prime(std::uint64_t n);

/// The prime field F_p with 2 <= p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }

  Element reduce(std::int64_t x) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = x % p;
    return static_cast<Element>(r < 0 ? r + p : r);
  }
  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  Element pow(Element a, std::uint64_t e) const;
  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Integer power series truncated at a fixed cut-off degree N; holds exactly
/// N + 1 coefficients. Products discard every term above N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cutoff);
  TruncatedSeries(std::initializer_list<long long> coeffs);
  explicit TruncatedSeries(std::vector<BigInteger> coeffs);

  /// 1 + 0*lambda + ... up to the cut-off.
  static TruncatedSeries unit(int cutoff);

  int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const BigInteger& operator[](std::size_t m) const { return coeffs_.at(m); }
  BigInteger& operator[](std::size_t m) { return coeffs_.at(m); }
  const std::vector<BigInteger>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInteger> coeffs_;
};

/// 1 - lambda^a, truncated at `cutoff`.
TruncatedSeries series_one_minus_power(int a, int cutoff);

/// (1 - lambda)^(-e); coefficient m is C(e - 1 + m, e - 1).
TruncatedSeries series_inv_one_minus_lambda_pow(int e, int cutoff);

/// Cauchy product; both operands must share a cut-off.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
  return series_mul(s, t);
}

std::string to_string(const TruncatedSeries& s);

}  // namespace frobound
