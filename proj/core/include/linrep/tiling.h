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

#ifndef LINREP_TILING_H_
#define LINREP_TILING_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linrep/matrix.h"
#include "linrep/rational.h"
#include "linrep/subspace.h"

namespace linrep {

// A unit-preserving linear map phi: span{r_0, .., r_{m-1}} -> Mat_n(K) from
// a finite piece of an algebra with basis r_0 = 1, r_1, ...  Elements of the
// span are coordinate vectors of length m. The multiplication table is
// partial: product(a, b) holds the coordinates of r_a r_b when known.
class FiniteApproxMap {
 public:
  // phi[0] must be the identity; throws InputError otherwise.
  FiniteApproxMap(FieldPtr field, std::size_t n, std::vector<DenseMatrix> phi);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return n_; }
  std::size_t basis_count() const { return phi_.size(); }
  const DenseMatrix& phi(std::size_t index) const { return phi_.at(index); }
  const std::vector<DenseMatrix>& phis() const { return phi_; }

  void set_product(std::size_t a, std::size_t b, Vec coords);
  const Vec* product(std::size_t a, std::size_t b) const;
  const std::map<std::pair<std::size_t, std::size_t>, Vec>& table() const { return mult_; }

  // Coordinates of x * y by bilinearity; nullopt if a needed entry is missing.
  std::optional<Vec> multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  // Like multiply() but throws InputError naming the missing entry.
  Vec multiply_or_throw(std::span<const Scalar> x, std::span<const Scalar> y) const;

  // phi(sum_j c_j r_j).
  DenseMatrix evaluate(std::span<const Scalar> coords) const;

  Vec unit() const;
  Vec basis_vector(std::size_t index) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<DenseMatrix> phi_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> mult_;
};

// Finite-dimensional F with 1 in F, given by a linearly independent list of
// coordinate vectors; inverses[j] holds the coordinates of basis[j]^-1 where
// it is known.
struct FSubspaceData {
  std::vector<Vec> basis;
  std::map<std::size_t, Vec> inverses;

  std::size_t dim() const { return basis.size(); }
};

struct TilingCertificate {
  std::vector<Vec> centers;
  std::vector<Subspace> tiles;  // phi(F)(x) for each center x
  std::size_t i = 0;
  Rational delta;
  std::size_t dim_f = 0;
  Subspace h;
  std::size_t coverage = 0;      // |T| * dim F
  bool partial = false;          // stopped short of (1 - delta) n
  bool guaranteed = false;       // every sufficient condition held
};

// G^{i,phi}: vectors x with phi(ab) x = phi(a) phi(b) x for all a, b in the
// span of the first i basis elements. By bilinearity it is the common kernel
// over basis pairs. Throws InputError when a needed product is missing.
Subspace good_subspace(const FiniteApproxMap& m, std::size_t i);

// dim G^{i,phi} >= (1 - 1/i) n, compared exactly.
bool is_good_map(const FiniteApproxMap& m, std::size_t i);

// A_{F,i} = {x : phi(f) x in G^{i,phi} and H for all f in F}.
Subspace candidate_space(const FiniteApproxMap& m, const FSubspaceData& f, const Subspace& h,
                         std::size_t i);

// phi(F)(x), the span of phi(f) x over the basis of F.
Subspace tile_of(const FiniteApproxMap& m, const FSubspaceData& f, std::span<const Scalar> x);

// Single-center conditions: dim phi(F)(x) = dim F, phi(F)(x) inside H, and
// phi(f) x is i-good for every f in F.
bool is_center(const FiniteApproxMap& m, const FSubspaceData& f, const Subspace& h, std::size_t i,
               std::span<const Scalar> x);

struct PreconditionReport {
  bool in_span = false;         // F and the known inverses lie in span{r_0..r_{i-1}}
  bool candidate_dim = false;   // dim A_{F,i} >= (1 - delta/4) n
  bool kernel_bound = false;    // dim Ker phi(f) <= (delta/3) n on the basis of F
  bool f_size = false;          // |F| = q^dim F <= q^(delta n / 3)
  bool h_dim = false;           // dim H >= (1 - 1/i) n
  bool good_map = false;        // phi is i-good

  std::size_t dim_candidate = 0;
  std::size_t max_kernel = 0;
  std::size_t dim_good = 0;

  bool all() const {
    return in_span && candidate_dim && kernel_bound && f_size && h_dim && good_map;
  }
};

// Evaluates the sufficient conditions behind the maximal-tiling bound. Never
// throws for unmet conditions; a missing product counts as a failed
// condition.
PreconditionReport precondition_check(const FiniteApproxMap& m, const FSubspaceData& f,
                                      const Subspace& h, std::size_t i, Rational delta);

struct TilingOptions {
  std::size_t budget = 512;  // random candidates after the echelon basis
  std::uint64_t seed = 0;
};

// Greedy maximal set of centers. Candidates are the echelon basis of
// A_{F,i}, then seeded random vectors of A_{F,i}; the first candidate whose
// tile is independent of the accepted ones is taken. When every
// precondition holds the coverage bound is asserted and a violation throws
// std::logic_error.
TilingCertificate greedy_tiling(const FiniteApproxMap& m, const FSubspaceData& f,
                                const Subspace& h, std::size_t i, Rational delta,
                                const TilingOptions& options = {});

struct CertificateCheck {
  bool ok = false;
  std::string failure;
  explicit operator bool() const { return ok; }
};

// Recomputes everything from the centers: each center condition, mutual
// independence of the tiles, agreement of any stored tiles with the
// recomputed ones, and coverage >= (1 - delta) n.
CertificateCheck verify_certificate(const TilingCertificate& cert, const FiniteApproxMap& m,
                                    const FSubspaceData& f, const Subspace& h, std::size_t i,
                                    Rational delta);

}  // namespace linrep

#endif  // LINREP_TILING_H_
