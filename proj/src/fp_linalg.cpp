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

#include "frobound/fp_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frobound {
namespace detail {

namespace {

constexpr Eigen::Index kMaxPanelWidth = 96;
constexpr Eigen::Index kMinPanelWidth = 8;

// Maps every exact integer |x| < 2^53 to its residue in [0, p).
template <typename Block>
void reduce_mod(Block&& block, double p) {
  const double inv_p = 1.0 / p;
  block = block.unaryExpr([p, inv_p](double x) {
    double r = x - p * std::floor(x * inv_p);
    if (r < 0) r += p;
    else if (r >= p) r -= p;
    return r;
  });
}

}  // namespace

Eigen::Index exact_panel_width(const PrimeField& field) {
  const double p = field.modulus();
  const double limit = 9007199254740992.0;  // 2^53
  const double width = std::floor((limit - 2 * p) / ((p - 1) * (p - 1) + 1));
  if (width < static_cast<double>(kMinPanelWidth)) return 0;
  return std::min<Eigen::Index>(kMaxPanelWidth, static_cast<Eigen::Index>(width));
}

// Right-looking blocked elimination. Inside a panel of `width` columns we run
// ordinary Gaussian elimination (first nonzero entry as pivot) and record the
// multipliers; the columns right of the panel are then brought up to date with
// one triangular solve on the pivot rows and one GEMM on the rows below.
std::vector<Eigen::Index> echelonize(Eigen::MatrixXd& a, const PrimeField& field) {
  using Eigen::Index;
  const Index rows = a.rows();
  const Index cols = a.cols();
  const Index bw = exact_panel_width(field);
  if (bw == 0) throw std::logic_error("double elimination requested for a modulus that is too large");
  const double p = field.modulus();

  std::vector<Index> pivots;
  Index rank = 0;
  Eigen::MatrixXd mult(rows, bw);

  for (Index col = 0; col < cols && rank < rows; col += bw) {
    const Index width = std::min(bw, cols - col);
    const Index start = rank;
    mult.topRows(rows - start).setZero();
    Index k = 0;

    for (Index c = col; c < col + width && rank < rows; ++c) {
      Index r = rank;
      while (r < rows && a(r, c) == 0.0) ++r;
      if (r == rows) continue;
      if (r != rank) {
        a.row(r).swap(a.row(rank));
        mult.row(r - start).head(k).swap(mult.row(rank - start).head(k));
      }
      const double pivot_inv = field.inv(static_cast<std::uint32_t>(a(rank, c)));
      const Index below = rows - rank - 1;
      if (below > 0) {
        auto m = mult.col(k).segment(rank + 1 - start, below);
        m = a.col(c).segment(rank + 1, below) * pivot_inv;
        reduce_mod(m, p);
        for (Index cc = c; cc < col + width; ++cc) {
          const double pv = a(rank, cc);
          if (pv == 0.0) continue;
          auto target = a.col(cc).segment(rank + 1, below);
          target -= m * pv;
          reduce_mod(target, p);
        }
      }
      pivots.push_back(c);
      ++rank;
      ++k;
    }

    const Index trail = cols - col - width;
    if (k == 0 || trail == 0) continue;
    auto upper = a.block(start, col + width, k, trail);
    for (Index i = 1; i < k; ++i) {
      upper.row(i).noalias() -= mult.row(i).head(i) * upper.topRows(i);
      reduce_mod(upper.row(i), p);
    }
    const Index rest = rows - start - k;
    if (rest > 0) {
      auto lower = a.block(start + k, col + width, rest, trail);
      lower.noalias() -= mult.block(k, 0, rest, k) * upper;
      reduce_mod(lower, p);
    }
  }
  return pivots;
}

std::vector<Eigen::Index> echelonize(FpMatrix<std::int64_t>& a, const PrimeField& field) {
  using Eigen::Index;
  const Index rows = a.rows();
  const Index cols = a.cols();
  std::vector<Index> pivots;
  Index rank = 0;
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index r = rank;
    while (r < rows && a(r, c) == 0) ++r;
    if (r == rows) continue;
    if (r != rank) a.row(r).swap(a.row(rank));
    const auto pivot_inv = field.inv(static_cast<std::uint32_t>(a(rank, c)));
    for (Index j = rank + 1; j < rows; ++j) {
      if (a(j, c) == 0) continue;
      const auto factor = field.mul(static_cast<std::uint32_t>(a(j, c)), pivot_inv);
      for (Index cc = c; cc < cols; ++cc) {
        const auto prod = field.mul(factor, static_cast<std::uint32_t>(a(rank, cc)));
        a(j, cc) = field.sub(static_cast<std::uint32_t>(a(j, cc)), prod);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace detail

RowEchelon::RowEchelon(const ResidueMatrix& rows, const PrimeField& field)
    : field_(field), cols_(rows.cols()) {
  auto normalise = [this](const auto& work) {
    basis_.resize(static_cast<Eigen::Index>(pivots_.size()), cols_);
    for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
      const auto pivot_inv =
          field_.inv(static_cast<std::uint32_t>(work(i, pivots_[static_cast<std::size_t>(i)])));
      for (Eigen::Index j = 0; j < cols_; ++j) {
        basis_(i, j) = field_.mul(static_cast<std::uint32_t>(work(i, j)), pivot_inv);
      }
    }
  };
  if (rows.rows() == 0 || rows.cols() == 0) {
    basis_.resize(0, cols_);
    return;
  }
  if (detail::exact_panel_width(field) > 0) {
    Eigen::MatrixXd work = detail::to_residue_doubles(rows, field);
    pivots_ = detail::echelonize(work, field);
    normalise(work);
  } else {
    FpMatrix<std::int64_t> work = detail::to_residue_int64(rows, field);
    pivots_ = detail::echelonize(work, field);
    normalise(work);
  }
}

ResidueVector RowEchelon::reduce(const ResidueVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector width does not match echelon basis");
  const auto p = static_cast<std::int64_t>(field_.modulus());
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> w = v.cast<std::int64_t>();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::int64_t factor = w(pivots_[i]) % p;
    if (factor == 0) continue;
    const auto row = basis_.row(static_cast<Eigen::Index>(i));
    for (Eigen::Index j = pivots_[i]; j < cols_; ++j) {
      if (row(j) == 0) continue;
      std::int64_t x = (w(j) - factor * row(j)) % p;
      w(j) = x < 0 ? x + p : x;
    }
  }
  return w.cast<std::uint32_t>();
}

bool RowEchelon::contains(const ResidueVector& v) const { return reduce(v).isZero(); }

}  // namespace frobound
