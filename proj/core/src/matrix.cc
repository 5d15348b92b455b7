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

#include "linrep/matrix.h"

#include <algorithm>
#include <string>

#include "linrep/errors.h"

namespace linrep {
namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (!same_field(a.field(), b.field())) {
    throw DimensionMismatch(std::string(op) + ": matrices over different fields");
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shape mismatch");
  }
}

// row_dst += c * row_src over f.
inline void axpy(const Field& f, Scalar c, const Scalar* src, Scalar* dst, std::size_t n) {
  if (c == 0) return;
  if (f.p() == 2 && c == 1) {
    for (std::size_t k = 0; k < n; ++k) dst[k] ^= src[k];
    return;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (src[k] != 0) dst[k] = f.add(dst[k], f.mul(c, src[k]));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

DenseMatrix::DenseMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
                         std::vector<Scalar> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
  for (Scalar s : data_) {
    if (s >= field_->q()) throw InputError("matrix entry outside field");
  }
}

DenseMatrix DenseMatrix::identity(FieldPtr field, std::size_t n) {
  DenseMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(FieldPtr field,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  std::vector<Scalar> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix rows");
    for (auto v : row) {
      if (!field->contains(v)) {
        throw InputError("matrix entry " + std::to_string(v) + " outside " + field->name());
      }
      data.push_back(static_cast<Scalar>(v));
    }
  }
  return DenseMatrix(std::move(field), r, c, std::move(data));
}

DenseMatrix DenseMatrix::stack_rows(FieldPtr field, std::size_t cols, std::span<const Vec> rows) {
  DenseMatrix m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("vector length does not match ambient");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

DenseMatrix DenseMatrix::random(FieldPtr field, std::size_t rows, std::size_t cols,
                                CounterRng& rng) {
  DenseMatrix m(field, rows, cols);
  for (auto& s : m.data_) s = field->random(rng);
  return m;
}

Vec DenseMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vec DenseMatrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw DimensionMismatch("vector length does not match matrix");
  const Field& f = *field_;
  Vec y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = 0;
    const Scalar* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0 && x[c] != 0) acc = f.add(acc, f.mul(row[c], x[c]));
    }
    y[r] = acc;
  }
  return y;
}

DenseMatrix DenseMatrix::scaled(Scalar c) const {
  DenseMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->mul(c, data_[i]);
  return out;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out = a;
  out += b;
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "subtract");
  DenseMatrix out = a;
  const Field& f = *a.field_;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = f.sub(a.data_[i], b.data_[i]);
  return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& b) {
  require_same_shape(*this, b, "add");
  const Field& f = *field_;
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = f.add(data_[i], b.data_[i]);
  return *this;
}

DenseMatrix& DenseMatrix::add_scaled(Scalar c, const DenseMatrix& b) {
  require_same_shape(*this, b, "add");
  axpy(*field_, c, b.data_.data(), data_.data(), data_.size());
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (!same_field(a.field_, b.field_)) throw DimensionMismatch("multiply: different fields");
  if (a.cols_ != b.rows_) throw DimensionMismatch("multiply: inner dimensions differ");
  DenseMatrix out(a.field_, a.rows_, b.cols_);
  const Field& f = *a.field_;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Scalar* dst = out.data_.data() + i * b.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      axpy(f, a(i, k), b.data_.data() + k * b.cols_, dst, b.cols_);
    }
  }
  return out;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw DimensionMismatch("block does not fit");
  }
  for (std::size_t r = 0; r < src.rows_; ++r) {
    std::copy_n(src.data_.begin() + r * src.cols_, src.cols_,
                data_.begin() + (r0 + r) * cols_ + c0);
  }
}

Echelon echelon(DenseMatrix m) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && m(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != lead) {
      auto a = m.row(pr);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(lead);
    const Scalar inv = f.inv(prow[c]);
    if (inv != 1) {
      for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(inv, prow[k]);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Scalar factor = m(r, c);
      if (factor == 0) continue;
      auto row = m.row(r);
      axpy(f, f.neg(factor), prow.data() + c, row.data() + c, cols - c);
    }
    pivots.push_back(c);
    ++lead;
  }
  DenseMatrix reduced(m.field(), lead, cols);
  for (std::size_t r = 0; r < lead; ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), reduced.row(r).begin());
  }
  return Echelon{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const DenseMatrix& m) {
  // Forward elimination only; no need for the reduced form.
  DenseMatrix a = m;
  const Field& f = *a.field();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && a(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != lead) {
      auto x = a.row(pr);
      auto y = a.row(lead);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto prow = a.row(lead);
    const Scalar inv = f.inv(prow[c]);
    for (std::size_t r = lead + 1; r < rows; ++r) {
      const Scalar factor = a(r, c);
      if (factor == 0) continue;
      axpy(f, f.neg(f.mul(factor, inv)), prow.data() + c, a.row(r).data() + c, cols - c);
    }
    ++lead;
  }
  return lead;
}

std::optional<DenseMatrix> try_inverse(const DenseMatrix& m) {
  if (!m.square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, DenseMatrix::identity(m.field(), n));
  Echelon e = echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  DenseMatrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto src = e.reduced.row(r);
    std::copy(src.begin() + n, src.end(), inv.row(r).begin());
  }
  return inv;
}

DenseMatrix inverse(const DenseMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw SingularMatrixError("matrix is singular");
  return *std::move(inv);
}

bool is_invertible(const DenseMatrix& m) { return m.square() && rank(m) == m.rows(); }

std::vector<Vec> kernel_basis(const DenseMatrix& m) {
  const Field& f = *m.field();
  const std::size_t cols = m.cols();
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  // One basis vector per free column, read off the reduced rows.
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const DenseMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t cols = m.cols();
  DenseMatrix aug(m.field(), m.rows(), cols + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, cols) = b[r];
  Echelon e = echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  Vec x(cols, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, cols);
  return x;
}

DenseMatrix block_diagonal(const DenseMatrix& a, const DenseMatrix& b) {
  if (!same_field(a.field(), b.field())) throw DimensionMismatch("block_diagonal: fields differ");
  DenseMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

std::size_t rank_distance(const DenseMatrix& a, const DenseMatrix& b) { return rank(a - b); }

Vec vec_add(const Field& f, std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, Scalar c, std::span<const Scalar> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

bool vec_is_zero(std::span<const Scalar> a) {
  return std::all_of(a.begin(), a.end(), [](Scalar s) { return s == 0; });
}

}  // namespace linrep
