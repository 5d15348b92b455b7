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

#include "linrep/subspace.h"

#include <algorithm>
#include <string>

#include "linrep/errors.h"

namespace linrep {
namespace {

void require_compatible(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) {
    throw DimensionMismatch("subspaces in different ambient spaces (" + std::to_string(u.ambient()) +
                            " vs " + std::to_string(w.ambient()) + ")");
  }
  if (!same_field(u.field(), w.field())) throw DimensionMismatch("subspaces over different fields");
}

// Rows of m whose inner product with every vector of v vanishes.
std::vector<Vec> annihilator(const Subspace& v) {
  if (v.is_zero()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < v.ambient(); ++i) {
      Vec e(v.ambient(), 0);
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  return kernel_basis(v.as_matrix());
}

}  // namespace

Subspace Subspace::from_echelon(FieldPtr field, std::size_t ambient, const Echelon& e) {
  Subspace s(std::move(field), ambient);
  s.pivots_ = e.pivots;
  s.basis_.reserve(e.reduced.rows());
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) {
    auto row = e.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient) {
  return Subspace(std::move(field), ambient);
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  return row_space(DenseMatrix::identity(std::move(field), ambient));
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, std::span<const Vec> vectors) {
  if (vectors.empty()) return zero(std::move(field), ambient);
  DenseMatrix m = DenseMatrix::stack_rows(field, ambient, vectors);
  return from_echelon(std::move(field), ambient, echelon(std::move(m)));
}

Subspace Subspace::row_space(const DenseMatrix& m) {
  return from_echelon(m.field(), m.cols(), echelon(m));
}

Subspace Subspace::column_space(const DenseMatrix& m) { return row_space(m.transpose()); }

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient");
  const Field& f = *field_;
  // Reduce v against the echelon basis; membership iff it reduces to zero.
  Vec rest(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar c = rest[pivots_[r]];
    if (c == 0) continue;
    const Scalar nc = f.neg(c);
    for (std::size_t k = pivots_[r]; k < ambient_; ++k) {
      if (basis_[r][k] != 0) rest[k] = f.add(rest[k], f.mul(nc, basis_[r][k]));
    }
  }
  return vec_is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

DenseMatrix Subspace::as_matrix() const {
  return DenseMatrix::stack_rows(field_, ambient_, basis_);
}

Vec Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw InputError("vector is not in the subspace");
  Vec c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vec Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("coordinate count mismatch");
  const Field& f = *field_;
  Vec v(ambient_, 0);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (coords[r] == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (basis_[r][k] != 0) v[k] = f.add(v[k], f.mul(coords[r], basis_[r][k]));
    }
  }
  return v;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && same_field(a.field_, b.field_) && a.basis_ == b.basis_;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots_ != b.pivots_) return a.pivots_ < b.pivots_;
  return a.basis_ < b.basis_;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  require_compatible(u, w);
  std::vector<Vec> rows = u.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace subspace_sum(std::span<const Subspace> parts, const FieldPtr& field, std::size_t ambient) {
  std::vector<Vec> rows;
  for (const auto& s : parts) {
    if (s.ambient() != ambient) throw DimensionMismatch("subspaces in different ambient spaces");
    if (!same_field(s.field(), field)) throw DimensionMismatch("subspaces over different fields");
    rows.insert(rows.end(), s.basis().begin(), s.basis().end());
  }
  return Subspace::span(field, ambient, rows);
}

Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
  require_compatible(u, w);
  const std::size_t n = u.ambient();
  if (u.is_zero() || w.is_zero()) return Subspace::zero(u.field(), n);
  // Zassenhaus: reduce [[U, U], [W, 0]]; rows with a zero left half carry
  // a basis of the intersection in their right half.
  DenseMatrix z(u.field(), u.dim() + w.dim(), 2 * n);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      z(r, c) = u.basis()[r][c];
      z(r, n + c) = u.basis()[r][c];
    }
  }
  for (std::size_t r = 0; r < w.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) z(u.dim() + r, c) = w.basis()[r][c];
  }
  Echelon e = echelon(std::move(z));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] < n) continue;
    auto row = e.reduced.row(r);
    rows.emplace_back(row.begin() + n, row.end());
  }
  return Subspace::span(u.field(), n, rows);
}

bool subspaces_independent(std::span<const Subspace> parts) {
  if (parts.empty()) return true;
  std::size_t total = 0;
  for (const auto& s : parts) {
    require_compatible(parts[0], s);
    total += s.dim();
  }
  if (total > parts[0].ambient()) return false;
  return subspace_sum(parts, parts[0].field(), parts[0].ambient()).dim() == total;
}

Subspace complement_of(const Subspace& v) {
  std::vector<bool> is_pivot(v.ambient(), false);
  for (auto p : v.pivots()) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < v.ambient(); ++i) {
    if (is_pivot[i]) continue;
    Vec e(v.ambient(), 0);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return Subspace::span(v.field(), v.ambient(), rows);
}

Subspace image(const DenseMatrix& m, const Subspace& v) {
  if (m.cols() != v.ambient()) throw DimensionMismatch("image: matrix does not act on ambient");
  if (!same_field(m.field(), v.field())) throw DimensionMismatch("image: fields differ");
  std::vector<Vec> rows;
  rows.reserve(v.dim());
  for (const auto& b : v.basis()) rows.push_back(m.apply(b));
  return Subspace::span(v.field(), m.rows(), rows);
}

Subspace kernel(const DenseMatrix& m) {
  auto basis = kernel_basis(m);
  return Subspace::span(m.field(), m.cols(), basis);
}

Subspace preimage(const DenseMatrix& m, const Subspace& v) {
  if (m.rows() != v.ambient()) throw DimensionMismatch("preimage: matrix does not map into ambient");
  if (v.is_full()) return Subspace::full(m.field(), m.cols());
  auto ann = annihilator(v);
  DenseMatrix c = DenseMatrix::stack_rows(m.field(), v.ambient(), ann);
  return kernel(c * m);
}

DenseMatrix projection_onto(const Subspace& v, const Subspace& w) {
  require_compatible(v, w);
  const std::size_t n = v.ambient();
  if (v.dim() + w.dim() != n || !subspaces_independent(std::vector<Subspace>{v, w})) {
    throw InputError("projection_onto: subspaces are not complementary");
  }
  // Columns of b: basis of V then basis of W. P = b * diag(I, 0) * b^-1.
  std::vector<Vec> cols = v.basis();
  cols.insert(cols.end(), w.basis().begin(), w.basis().end());
  DenseMatrix b = DenseMatrix::stack_rows(v.field(), n, cols).transpose();
  DenseMatrix keep(v.field(), n, n);
  for (std::size_t i = 0; i < v.dim(); ++i) keep(i, i) = 1;
  return b * keep * inverse(b);
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q) {
  if (d > n) return 0;
  // Sum over pivot patterns of q^(number of free entries); saturating.
  // Uses the recurrence [n, d] = [n-1, d-1] + q^d [n-1, d].
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  auto sat_add = [](std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
  };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
  };
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = std::min(m, d); k >= 1; --k) {
      std::uint64_t qk = 1;
      for (std::size_t i = 0; i < k; ++i) qk = sat_mul(qk, q);
      row[k] = sat_add(row[k - 1], sat_mul(qk, row[k]));
    }
  }
  return row[d];
}

void enumerate_subspaces(const FieldPtr& field, std::size_t n, std::size_t d,
                         std::uint64_t budget, const std::function<bool(const Subspace&)>& visit) {
  if (d > n) throw InputError("subspace dimension exceeds ambient dimension");
  const std::uint64_t count = gaussian_binomial(n, d, field->q());
  if (count > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(count) + " subspaces exceeds budget " +
                         std::to_string(budget));
  }
  const std::uint32_t q = field->q();
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    // Free positions (row, col): col after the row's pivot and not a pivot.
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = piv[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    std::vector<Scalar> digits(free.size(), 0);
    while (true) {
      std::vector<Vec> rows(d, Vec(n, 0));
      for (std::size_t r = 0; r < d; ++r) rows[r][piv[r]] = 1;
      for (std::size_t k = 0; k < free.size(); ++k) rows[free[k].first][free[k].second] = digits[k];
      if (!visit(Subspace::span(field, n, rows))) return;
      // Odometer, last free position least significant.
      std::size_t k = free.size();
      while (k > 0) {
        --k;
        if (++digits[k] < q) break;
        digits[k] = 0;
        if (k == 0) {
          k = free.size() + 1;
          break;
        }
      }
      if (free.empty() || k == free.size() + 1) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

Subspace random_subspace(const FieldPtr& field, std::size_t n, std::size_t d, CounterRng& rng) {
  if (d > n) throw InputError("subspace dimension exceeds ambient dimension");
  while (true) {
    DenseMatrix m = DenseMatrix::random(field, d, n, rng);
    Subspace s = Subspace::row_space(m);
    if (s.dim() == d) return s;
  }
}

}  // namespace linrep
