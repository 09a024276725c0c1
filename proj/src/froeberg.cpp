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

#include "frobound/froeberg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace frobound {

DegreeType::DegreeType(int d, std::vector<int> degrees) : d_(d), degrees_(std::move(degrees)) {
  if (d_ < 1) throw std::invalid_argument("d must be >= 1, got " + std::to_string(d_));
  if (degrees_.empty()) throw std::invalid_argument("degree type needs at least one degree");
  for (int a : degrees_) {
    if (a < 1) throw std::invalid_argument("generator degrees must be >= 1");
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeType DegreeType::constant(int d, int n, int a) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return DegreeType(d, std::vector<int>(static_cast<std::size_t>(n), a));
}

long long DegreeType::degree_sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

bool DegreeType::is_constant() const {
  return std::adjacent_find(degrees_.begin(), degrees_.end(), std::not_equal_to<>()) ==
         degrees_.end();
}

std::vector<std::pair<int, int>> DegreeType::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int a : degrees_) {
    if (!out.empty() && out.back().first == a) ++out.back().second;
    else out.emplace_back(a, 1);
  }
  return out;
}

std::string DegreeType::to_string() const {
  std::ostringstream os;
  os << "d=" << d_ << " A=(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
  os << ')';
  return os.str();
}

BigInteger froeberg_value(const DegreeType& dt, long long m) {
  if (m < 0) return 0;
  const auto groups = dt.multiplicities();
  const int d = dt.d();
  BigInteger total = 0;
  // Walk multiplicity vectors (k_1, ..., k_r) with k_j <= count_j. Sub-multisets
  // with |B| > m contribute C(d + m - |B|, d) = 0 and are pruned.
  std::function<void(std::size_t, long long, int, const BigInteger&)> walk =
      [&](std::size_t g, long long weight, int length, const BigInteger& ways) {
        if (g == groups.size()) {
          BigInteger term = ways * binom(d + m - weight, d);
          if (length % 2) total -= term;
          else total += term;
          return;
        }
        const auto [degree, count] = groups[g];
        for (int k = 0; k <= count; ++k) {
          const long long w = weight + static_cast<long long>(k) * degree;
          if (w > m) break;
          walk(g + 1, w, length + k, ways * binom(count, k));
        }
      };
  walk(0, 0, 0, BigInteger{1});
  return total;
}

TruncatedSeries froeberg_series(const DegreeType& dt, int cutoff) {
  TruncatedSeries numerator = TruncatedSeries::unit(cutoff);
  for (int a : dt.degrees()) numerator = numerator * series_one_minus_power(a, cutoff);
  return numerator * series_inv_one_minus_lambda_pow(dt.d() + 1, cutoff);
}

TruncatedSeries clip_nonneg(const TruncatedSeries& s) {
  TruncatedSeries out = s;
  for (std::size_t m = 0; m < out.size(); ++m) {
    if (out[m] < 0) out[m] = 0;
  }
  return out;
}

TruncatedSeries truncate_at_first_nonpositive(const TruncatedSeries& s) {
  TruncatedSeries out = s;
  bool hit = false;
  for (std::size_t m = 0; m < out.size(); ++m) {
    if (!hit && out[m] <= 0) hit = true;
    if (hit) out[m] = 0;
  }
  return out;
}

long long smallest_zero(const DegreeType& dt) {
  if (dt.n() < dt.d() + 1) {
    throw PreconditionError("no inclusion bound exists (n < d+1): " + dt.to_string());
  }
  // Below the smallest generator degree F(m) = C(d + m, d) > 0.
  const long long limit = dt.degree_sum() - dt.d();
  for (long long m = dt.degrees().back(); m <= limit; ++m) {
    if (froeberg_value(dt, m) <= 0) return m;
  }
  // F vanishes identically from sum(a) - d on when n >= d + 1.
  throw std::logic_error("Fröberg function has no zero up to sum(a) - d for " + dt.to_string());
}

FroebergProfile froeberg_profile(const DegreeType& dt) {
  FroebergProfile profile{dt, {}, std::nullopt};
  const long long top = std::max<long long>(0, dt.degree_sum() - dt.d());
  profile.values.reserve(static_cast<std::size_t>(top) + 1);
  const TruncatedSeries series = froeberg_series(dt, static_cast<int>(top));
  for (std::size_t m = 0; m < series.size(); ++m) {
    profile.values.push_back(series[m]);
    if (!profile.m0 && dt.n() >= dt.d() + 1 && series[m] <= 0) {
      profile.m0 = static_cast<long long>(m);
    }
  }
  return profile;
}

long long closed_form_parameter(const DegreeType& dt) {
  if (dt.n() != dt.d() + 1) {
    throw PreconditionError("parameter case needs n = d+1: " + dt.to_string());
  }
  return dt.degree_sum() - dt.d();
}

long long closed_form_almost_parameter(const DegreeType& dt) {
  if (dt.n() != dt.d() + 2 || !dt.is_constant()) {
    throw PreconditionError("almost-parameter case needs n = d+2 and constant degree: " +
                            dt.to_string());
  }
  const long long n = dt.n();
  const long long a = dt.degrees().front();
  return n * (a - 1) / 2 + 1;
}

long long closed_form_dim1(int n, int a) {
  if (n < 2) throw PreconditionError("closed_form_dim1 needs n >= 2");
  if (a < 1) throw std::invalid_argument("degree must be >= 1");
  const long long num = static_cast<long long>(n) * a;
  const long long den = n - 1;
  return (num + den - 1) / den - 1;
}

long long closed_form_dim2(int n, int a) {
  if (n < 3) throw PreconditionError("closed_form_dim2 needs n >= 3");
  if (a < 1) throw std::invalid_argument("degree must be >= 1");
  if (n == 3) return 3LL * a - 2;
  const BigInteger nn = n;
  const BigInteger aa = a;
  const BigInteger linear = 3 - 3 * nn + 2 * aa * nn;
  const BigInteger disc = 1 - 2 * nn + nn * nn + 4 * aa * aa * nn;
  const BigInteger denom = 2 * (nn - 1);
  // m >= (linear + sqrt(disc)) / denom  <=>  x := denom*m - linear >= 0 and x^2 >= disc.
  auto satisfies = [&](const BigInteger& m) {
    const BigInteger x = denom * m - linear;
    return x >= 0 && x * x >= disc;
  };
  const BigInteger root_floor = boost::multiprecision::sqrt(disc);
  BigInteger m = (linear + root_floor) / denom;  // within one of the answer
  if (linear + root_floor < 0) m -= 1;
  while (satisfies(m - 1)) m -= 1;
  while (!satisfies(m)) m += 1;
  return static_cast<long long>(m);
}

long double real_root_dim2(int n, int a) {
  if (n < 4) throw PreconditionError("real_root_dim2 needs n >= 4");
  const long double nn = n;
  const long double aa = a;
  const long double disc = 1 - 2 * nn + nn * nn + 4 * aa * aa * nn;
  return (3 - 3 * nn + 2 * aa * nn + std::sqrt(disc)) / (2 * (nn - 1));
}

}  // namespace frobound
