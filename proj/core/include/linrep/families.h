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

#ifndef LINREP_FAMILIES_H_
#define LINREP_FAMILIES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "linrep/representation.h"

namespace linrep {

// Regular representation of Z/k: gamma_1 is the k-cycle shift e_j -> e_{j+1}.
struct CyclicRegular {};

// Regular representation of Z/(m_1 k) x ... x Z/(m_r k); gamma_i shifts the
// i-th coordinate.
struct AbelianQuotient {
  std::vector<std::uint32_t> moduli;
};

// Permutation representations given explicitly: levels[k - 1] is a tuple of r
// permutations of {0, .., n_k - 1}; gamma_i sends e_j to e_{perm_i[j]}.
struct Schreier {
  std::vector<std::vector<std::vector<std::uint32_t>>> levels;
};

// r uniformly random invertible (n k) x (n k) matrices, determined by seed
// and k.
struct RandomInvertible {
  std::uint64_t seed = 0;
  std::size_t n = 1;
  std::uint32_t r = 1;
};

struct FamilyDescriptor;

// Direct sum of the blocks, each evaluated at the same level k.
struct BlockDiagonal {
  std::vector<FamilyDescriptor> blocks;
};

struct FamilyDescriptor {
  std::variant<CyclicRegular, AbelianQuotient, Schreier, RandomInvertible, BlockDiagonal> kind;
};

// Level-k member of the family. Throws InputError for an invalid descriptor
// (empty moduli, non-permutations, mismatched ranks, k out of range).
Representation family_generate(const FamilyDescriptor& family, const FieldPtr& field, std::size_t k);

// Short text form: "cyclic", "abelian:2,3", "random:SEED:N:R".
FamilyDescriptor parse_family(const std::string& text);

// Rank profile of A over levels ks, computed on up to `threads` workers and
// returned in the order of ks.
RankProfile rank_profile(const FamilyDescriptor& family, const FieldPtr& field,
                         const std::vector<std::size_t>& ks, const AlgebraMatrix& a,
                         std::size_t threads = 1);

// Permutation matrix with column j equal to e_{perm[j]}.
DenseMatrix permutation_matrix(const FieldPtr& field, const std::vector<std::uint32_t>& perm);

// Uniformly random invertible n x n matrix (rejection sampling).
DenseMatrix random_invertible(const FieldPtr& field, std::size_t n, CounterRng& rng);

}  // namespace linrep

#endif  // LINREP_FAMILIES_H_
