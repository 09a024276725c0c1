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

// Dense linear algebra over a prime field.
//
// Matrices are ordinary Eigen dense types whose entries are integers read as
// residues mod p. Elimination keeps residues in doubles so that the trailing
// update of each column panel is a plain Eigen GEMM; every partial sum is an
// integer below 2^53, so the result is exact regardless of summation order.

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "frobound/arith.hpp"

namespace frobound {

template <typename Scalar>
using FpMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using FpVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ResidueMatrix = FpMatrix<std::uint32_t>;
using ResidueVector = FpVector<std::uint32_t>;

namespace detail {

/// In-place row echelon form of `a` (entries already reduced mod p).
/// Rows [0, rank) hold the echelon rows afterwards; returns pivot columns.
std::vector<Eigen::Index> echelonize(Eigen::MatrixXd& a, const PrimeField& field);
std::vector<Eigen::Index> echelonize(FpMatrix<std::int64_t>& a, const PrimeField& field);

/// Largest panel width for which the double-precision update stays exact.
Eigen::Index exact_panel_width(const PrimeField& field);

template <typename Derived>
Eigen::MatrixXd to_residue_doubles(const Eigen::MatrixBase<Derived>& m, const PrimeField& field) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      out(i, j) = field.reduce(static_cast<std::int64_t>(m(i, j)));
  return out;
}

template <typename Derived>
FpMatrix<std::int64_t> to_residue_int64(const Eigen::MatrixBase<Derived>& m,
                                        const PrimeField& field) {
  FpMatrix<std::int64_t> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      out(i, j) = field.reduce(static_cast<std::int64_t>(m(i, j)));
  return out;
}

}  // namespace detail

/// Rank over F_p of any integer-valued dense Eigen matrix.
template <typename Derived>
Eigen::Index fp_rank(const Eigen::MatrixBase<Derived>& m, const PrimeField& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (detail::exact_panel_width(field) > 0) {
    Eigen::MatrixXd work = detail::to_residue_doubles(m, field);
    return static_cast<Eigen::Index>(detail::echelonize(work, field).size());
  }
  FpMatrix<std::int64_t> work = detail::to_residue_int64(m, field);
  return static_cast<Eigen::Index>(detail::echelonize(work, field).size());
}

/// Row echelon basis of the row space of a matrix over F_p, with pivots
/// normalised to 1. Supports membership queries for vectors of the same width.
class RowEchelon {
 public:
  RowEchelon(const ResidueMatrix& rows, const PrimeField& field);

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots_.size()); }
  Eigen::Index cols() const { return cols_; }
  const std::vector<Eigen::Index>& pivot_columns() const { return pivots_; }
  const PrimeField& field() const { return field_; }

  /// Residue of `v` after eliminating every pivot; zero iff v is in the span.
  ResidueVector reduce(const ResidueVector& v) const;
  bool contains(const ResidueVector& v) const;

 private:
  PrimeField field_;
  Eigen::Index cols_;
  std::vector<Eigen::Index> pivots_;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> basis_;
};

}  // namespace frobound
