// Copyright 2026 The linrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINREP_MATRIX_H_
#define LINREP_MATRIX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "linrep/field.h"

namespace linrep {

// Column vector over GF(q).
using Vec = std::vector<Scalar>;

// Row-major dense matrix over a finite field. Matrices act on column vectors.
class DenseMatrix {
 public:
  DenseMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  DenseMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static DenseMatrix zero(FieldPtr field, std::size_t rows, std::size_t cols) {
    return DenseMatrix(std::move(field), rows, cols);
  }
  static DenseMatrix identity(FieldPtr field, std::size_t n);
  // Rows given as integer codes; throws InputError on ragged rows or codes
  // outside [0, q).
  static DenseMatrix from_rows(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);
  // Matrix whose rows are the given vectors (all of length cols).
  static DenseMatrix stack_rows(FieldPtr field, std::size_t cols, std::span<const Vec> rows);
  static DenseMatrix random(FieldPtr field, std::size_t rows, std::size_t cols, CounterRng& rng);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return data_; }

  DenseMatrix transpose() const;
  Vec apply(std::span<const Scalar> x) const;
  DenseMatrix scaled(Scalar c) const;
  bool is_zero() const;

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  DenseMatrix& operator+=(const DenseMatrix& b);
  // Adds c * b.
  DenseMatrix& add_scaled(Scalar c, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  // Copies src into the block whose top-left corner is (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& src);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// Reduced row echelon form: pivot entries are 1 and pivot columns are zero
// elsewhere. Zero rows are dropped, so reduced.rows() == rank.
struct Echelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon echelon(DenseMatrix m);

std::size_t rank(const DenseMatrix& m);

// Throws SingularMatrixError if m is singular, InputError if not square.
DenseMatrix inverse(const DenseMatrix& m);
std::optional<DenseMatrix> try_inverse(const DenseMatrix& m);
bool is_invertible(const DenseMatrix& m);

// Basis of the right kernel {x : m x = 0}, as reduced echelon rows.
std::vector<Vec> kernel_basis(const DenseMatrix& m);

// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const DenseMatrix& m, std::span<const Scalar> b);

DenseMatrix block_diagonal(const DenseMatrix& a, const DenseMatrix& b);

// rank(a - b); divide by the size for the normalized rank metric.
std::size_t rank_distance(const DenseMatrix& a, const DenseMatrix& b);

Vec vec_add(const Field& f, std::span<const Scalar> a, std::span<const Scalar> b);
Vec vec_scale(const Field& f, Scalar c, std::span<const Scalar> a);
bool vec_is_zero(std::span<const Scalar> a);

}  // namespace linrep

#endif  // LINREP_MATRIX_H_
