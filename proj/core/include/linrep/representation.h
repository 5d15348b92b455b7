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

#ifndef LINREP_REPRESENTATION_H_
#define LINREP_REPRESENTATION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linrep/algebra.h"
#include "linrep/matrix.h"
#include "linrep/rational.h"

namespace linrep {

// Homomorphism F_r -> GL(n, K), given by the images of the generators.
class Representation {
 public:
  // Throws InputError unless every generator is an invertible n x n matrix
  // over the given field.
  Representation(FieldPtr field, std::vector<DenseMatrix> generators);

  const FieldPtr& field() const { return field_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(generators_.size()); }
  std::size_t dim() const { return n_; }
  // 1-based, as in the word grammar.
  const DenseMatrix& generator(std::uint32_t i) const { return generators_.at(i - 1); }
  const DenseMatrix& generator_inverse(std::uint32_t i) const { return inverses_.at(i - 1); }
  const std::vector<DenseMatrix>& generators() const { return generators_; }

  DenseMatrix image(const Word& w) const;
  DenseMatrix image(const AlgebraElement& a) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<DenseMatrix> generators_;
  std::vector<DenseMatrix> inverses_;
};

// Direct sum of representations of the same rank over the same field.
Representation direct_sum(const std::vector<Representation>& parts);

// Block matrix theta(A) in Mat_{n * n_k}(K): block (i, j) is theta(A_ij).
DenseMatrix apply_matrix(const Representation& rep, const AlgebraMatrix& a);

struct NormalizedRank {
  std::size_t rank = 0;   // Rank(theta(A))
  std::size_t block = 0;  // n_k

  Rational value() const {
    return block == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(rank),
                                               static_cast<std::int64_t>(block));
  }
};

NormalizedRank normalized_rank(const Representation& rep, const AlgebraMatrix& a);

struct RankProfileEntry {
  std::size_t k = 0;
  std::size_t n_k = 0;
  std::size_t rank = 0;

  Rational value() const { return NormalizedRank{rank, n_k}.value(); }
  friend bool operator==(const RankProfileEntry&, const RankProfileEntry&) = default;
};

using RankProfile = std::vector<RankProfileEntry>;

struct AtiyahReport {
  Rational limit_estimate;
  Rational tail_oscillation;
  std::int64_t nearest_integer = 0;
  bool integral = false;
  Rational tolerance;
};

// Diagnostic only: the last value stands in for the limit and the spread over
// the last tail_window entries bounds how far the tail still moves. Throws
// InputError when the profile has fewer than tail_window entries.
AtiyahReport atiyah_check(const RankProfile& profile, std::size_t tail_window, Rational tol);

// An invertible M' with rank(M - M') = n - rank(M), the least possible.
// The kernel of M is sent onto a complement of its column space while M is
// kept on a complement of the kernel.
DenseMatrix repair_to_invertible(const DenseMatrix& m);

}  // namespace linrep

#endif  // LINREP_REPRESENTATION_H_
