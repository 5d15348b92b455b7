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

#ifndef LINREP_HYPERFINITE_H_
#define LINREP_HYPERFINITE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linrep/rational.h"
#include "linrep/representation.h"
#include "linrep/subspace.h"
#include "linrep/tiling.h"

namespace linrep {

// One level of a hyperfinite decomposition: tiles V_j of dimension at most K
// whose neighbourhoods W_j = V_j + sum_i theta(gamma_i) V_j are independent,
// grow by less than 1 + epsilon, and cover (1 - epsilon) n.
struct HyperfiniteWitness {
  Rational epsilon;
  std::size_t K = 0;
  std::vector<Subspace> subspaces;
};

struct WitnessVerdict {
  bool ok = false;
  std::string failure;
  std::size_t coverage = 0;
  explicit operator bool() const { return ok; }
};

// W = V + sum_i theta(gamma_i) V.
Subspace neighbourhood(const Representation& rep, const Subspace& v);

// Full re-computation of the three conditions. Throws DimensionMismatch when
// a tile lives in the wrong ambient space.
WitnessVerdict witness_report(const Representation& rep, const HyperfiniteWitness& w);
bool witness_check(const Representation& rep, const HyperfiniteWitness& w);

// Vectors on which rep(gamma_s) and phi(theta(gamma_s)) agree for every s.
// theta_images[s - 1] holds the coordinates of theta(gamma_s).
Subspace agreement_subspace(const Representation& rep, const FiniteApproxMap& map,
                            const std::vector<Vec>& theta_images);

// Tiles V_x = phi(F_1)(x) over the centers of a tiling certificate, with
// K = dim F. Throws InputError when F_1 is not inside F, when some
// theta(gamma_s) F_1 leaves F, or when the certificate's H is not inside the
// agreement subspace. The coverage is not judged here.
HyperfiniteWitness witness_from_tiling(const Representation& rep, const FiniteApproxMap& map,
                                       const std::vector<Vec>& theta_images,
                                       const TilingCertificate& cert, const FSubspaceData& f,
                                       const std::vector<Vec>& f1, Rational epsilon);

struct ExpansionReport {
  Rational min_ratio;
  Subspace witness_subspace;
  bool exact = false;
  std::uint64_t samples = 0;
};

// Hard cap on the number of subspaces visited by the exact scan.
inline constexpr std::uint64_t kExpansionBudget = std::uint64_t{1} << 24;

// Minimum of dim(W + sum_i theta(gamma_i) W) / dim W over 0 < dim W <= n/2,
// ties going to the smaller subspace in canonical order. Throws
// BudgetExceeded when the subspace count passes the cap and InputError for
// n < 2.
ExpansionReport cheeger_exact(const Representation& rep, std::size_t threads = 1,
                              std::uint64_t budget = kExpansionBudget);

// Same minimum over seeded random subspaces: an upper bound on the exact
// value. Trial t draws from the stream derive(t) of the seed.
ExpansionReport cheeger_random(const Representation& rep, std::uint64_t trials,
                               std::uint64_t seed, std::size_t threads = 1);

// True iff every W with dim W <= n/2 grows by at least 1 + alpha.
bool expander_check(const Representation& rep, Rational alpha, std::size_t threads = 1,
                    std::uint64_t budget = kExpansionBudget);

struct SearchOptions {
  std::size_t budget = 256;  // random seed vectors after the standard basis
  std::uint64_t seed = 0;
};

// Heuristic search. Orbit closures of seed vectors are taken as invariant
// tiles; failing that, a seed's span is grown by its neighbourhood until it
// is (1 + epsilon)-almost invariant. std::nullopt only means the budget ran
// out; it says nothing about the sequence.
std::optional<HyperfiniteWitness> witness_search(const Representation& rep, Rational epsilon,
                                                 std::size_t K, const SearchOptions& options = {});

}  // namespace linrep

#endif  // LINREP_HYPERFINITE_H_
