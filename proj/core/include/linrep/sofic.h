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

#ifndef LINREP_SOFIC_H_
#define LINREP_SOFIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linrep/algebra.h"
#include "linrep/rational.h"
#include "linrep/representation.h"
#include "linrep/subspace.h"
#include "linrep/tiling.h"

namespace linrep {

// Laurent polynomials over GF(q) are elements of K F_1, with x = g1. Every
// map below acts on V_m = span{1, x, .., x^(m-1)}, identified with K^m.
struct PolyInstance {
  FieldPtr field;
  std::size_t m = 0;
};

// "x^2 + x + 1", "x^-1 + 3*x"; the same grammar as group-algebra elements
// with x in place of g1.
AlgebraElement parse_poly(std::string_view text, const FieldPtr& field);
std::string poly_to_string(const AlgebraElement& a);

AlgebraElement monomial(const FieldPtr& field, int exponent);
// Exponent of x in a word of K F_1.
int exponent_of(const Word& w);
// Highest and lowest exponent with a nonzero coefficient; 0 for zero.
int max_degree(const AlgebraElement& a);
int min_degree(const AlgebraElement& a);

// 1, x, .., x^(count-1).
std::vector<AlgebraElement> polynomial_basis(const FieldPtr& field, std::size_t count);
// 1, x, x^-1, x^2, x^-2, ..
std::vector<AlgebraElement> laurent_basis(const FieldPtr& field, std::size_t count);

// P o M_d on V_m, P killing every monomial outside 0..m-1.
DenseMatrix truncation_map(const PolyInstance& inst, const AlgebraElement& d);

// phi(r_j) = truncation_map(basis[j]); the table holds every product
// basis[a] * basis[b] that lies in the span of the basis. basis[0] must be 1.
FiniteApproxMap truncation_approx_map(const PolyInstance& inst,
                                      const std::vector<AlgebraElement>& basis);

struct FolnerPair {
  std::size_t m = 0;  // V = deg < m
  std::size_t d = 0;  // largest degree in E
  Subspace v1;
  Subspace v;
};

// Smallest m with m >= d + 1 and (m - d) / m >= 1 - delta; V = deg < m and
// V_1 = deg < m - d inside K^(inst.m). Throws InputError for negative
// exponents in E, delta outside (0, 1), or m beyond inst.m.
FolnerPair folner_pair(const PolyInstance& inst, const std::vector<AlgebraElement>& e,
                       Rational delta);

// A sequence of maps phi_k with caller-chosen defect bounds s_k and lower
// bounds j(a) on a finite element list. spans[k-1] is the size of the basis
// prefix phi_k is judged on; when spans is empty it is min(k, basis count).
struct SoficData {
  std::vector<FiniteApproxMap> maps;
  std::vector<std::size_t> spans;
  std::vector<Rational> s;
  std::vector<std::pair<Vec, Rational>> j_values;
};

struct SoficReport {
  std::size_t k = 0;
  std::size_t span = 0;
  bool unit = false;
  bool rank_ok = false;
  bool defect_ok = false;
  // Every product in the span has normalized defect rank at most
  // defect_bound; the maximum over basis pairs is defect_basis_max.
  Rational defect_bound;
  Rational defect_basis_max;
  Rational min_rank;             // smallest rk(phi(a)) over checked elements
  std::size_t checked_elements = 0;
  std::string failure;

  bool ok() const { return unit && rank_ok && defect_ok; }
};

// Checks map k (1-based). The defect condition quantifies over all of the
// span, so it is decided by the codimension of the good subspace, which
// bounds every defect at once. Throws InputError on missing table entries.
SoficReport sofic_check(const SoficData& data, std::size_t k);

struct ExtensionReport {
  bool good_map = false;
  // Largest rk(phi(theta(w)) - rho(w)) over words of length <= m, and the
  // codimension bound covering every element of length <= m.
  Rational word_max_distance;
  Rational agreement_bound;
  std::size_t words = 0;

  bool ok(Rational delta) const { return good_map && agreement_bound < delta; }
};

// theta_images[s-1] and theta_inverse_images[s-1] are the coordinates of
// theta(gamma_s) and theta(gamma_s)^-1. Throws InputError when the table
// cannot express some word of length <= m, BudgetExceeded past 2^16 words.
ExtensionReport approx_extension_check(const Representation& rho, const FiniteApproxMap& phi,
                                       const std::vector<Vec>& theta_images,
                                       const std::vector<Vec>& theta_inverse_images,
                                       std::size_t m);

// Reduced words of length <= m over r generators in shortlex order.
std::vector<Word> words_up_to(std::uint32_t r, std::size_t m, std::size_t cap);

}  // namespace linrep

#endif  // LINREP_SOFIC_H_
