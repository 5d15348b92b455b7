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

#ifndef LINREP_SUBSPACE_H_
#define LINREP_SUBSPACE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "linrep/matrix.h"

namespace linrep {

// A subspace of GF(q)^n held by its canonical reduced echelon basis. Two
// subspaces are equal iff their bases are identical.
class Subspace {
 public:
  // Zero-dimensional placeholder with no field; assign before use.
  Subspace() = default;

  static Subspace zero(FieldPtr field, std::size_t ambient);
  static Subspace full(FieldPtr field, std::size_t ambient);
  // Span of arbitrary (possibly dependent) vectors of length ambient.
  static Subspace span(FieldPtr field, std::size_t ambient, std::span<const Vec> vectors);
  // Row space of m.
  static Subspace row_space(const DenseMatrix& m);
  // Image m(GF(q)^cols), i.e. the column space.
  static Subspace column_space(const DenseMatrix& m);

  const FieldPtr& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  // Basis vectors as the rows of a dim x ambient matrix.
  DenseMatrix as_matrix() const;
  // Coordinates of v in the echelon basis; v must lie in the subspace.
  Vec coordinates(std::span<const Scalar> v) const;
  // Vector with the given coordinates in the echelon basis.
  Vec combine(std::span<const Scalar> coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  // Canonical total order: by dimension, then pivot pattern, then entries.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(FieldPtr field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}
  static Subspace from_echelon(FieldPtr field, std::size_t ambient, const Echelon& e);

  FieldPtr field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_sum(std::span<const Subspace> parts, const FieldPtr& field, std::size_t ambient);
Subspace subspace_intersection(const Subspace& u, const Subspace& w);

// True iff dim(sum) equals the sum of the dimensions.
bool subspaces_independent(std::span<const Subspace> parts);

// Span of the standard basis vectors at the non-pivot columns of v.
Subspace complement_of(const Subspace& v);

// m(V) for a matrix m with m.cols() == V.ambient().
Subspace image(const DenseMatrix& m, const Subspace& v);

// Preimage {x : m x in V}.
Subspace preimage(const DenseMatrix& m, const Subspace& v);

// Kernel of m as a subspace of GF(q)^cols.
Subspace kernel(const DenseMatrix& m);

// Idempotent P with image V and kernel W. Throws InputError unless V and W
// are complementary.
DenseMatrix projection_onto(const Subspace& v, const Subspace& w);

// Number of d-dimensional subspaces of GF(q)^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q);

// Calls visit on every d-dimensional subspace of GF(q)^n exactly once,
// ordered lexicographically by pivot pattern and then by the free entries.
// Throws BudgetExceeded before visiting anything when the count exceeds
// budget. Returning false from visit stops the enumeration early.
void enumerate_subspaces(const FieldPtr& field, std::size_t n, std::size_t d,
                         std::uint64_t budget, const std::function<bool(const Subspace&)>& visit);

// Uniformly random d-dimensional subspace.
Subspace random_subspace(const FieldPtr& field, std::size_t n, std::size_t d, CounterRng& rng);

}  // namespace linrep

#endif  // LINREP_SUBSPACE_H_
