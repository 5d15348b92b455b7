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

// Shared fixture builders for the unit and acceptance tests.

#ifndef LINREP_TESTS_FIXTURES_H_
#define LINREP_TESTS_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linrep/families.h"
#include "linrep/hyperfinite.h"
#include "linrep/io.h"
#include "linrep/ncrat.h"
#include "linrep/representation.h"
#include "linrep/rng.h"
#include "linrep/sofic.h"
#include "linrep/subspace.h"
#include "linrep/tiling.h"

namespace linrep::testing {

inline Vec unit_vector(std::size_t len, std::size_t j) {
  Vec v(len, 0);
  v.at(j) = 1;
  return v;
}

// F spanned by the basis elements with the given indices. When a basis
// element is a monomial whose inverse is also in the basis, Finv records it.
inline FSubspaceData f_from_indices(const std::vector<AlgebraElement>& basis,
                                    const std::vector<std::size_t>& indices) {
  FSubspaceData f;
  for (std::size_t idx : indices) f.basis.push_back(unit_vector(basis.size(), idx));
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const AlgebraElement& b = basis[indices[j]];
    if (b.terms().size() != 1) continue;
    const int e = exponent_of(b.terms().begin()->first);
    if (e == 0) continue;
    for (std::size_t t = 0; t < basis.size(); ++t) {
      if (basis[t] == monomial(b.field(), -e)) f.inverses[j] = unit_vector(basis.size(), t);
    }
  }
  return f;
}

// Truncated multiplication on V_m = span{1, .., x^(m-1)} over a Laurent
// (or polynomial) basis of the given size.
inline TilingProblem truncation_problem(const FieldPtr& field, std::size_t m, bool laurent,
                                        std::size_t basis_count,
                                        const std::vector<std::size_t>& f_indices, std::size_t i,
                                        Rational delta) {
  const auto basis =
      laurent ? laurent_basis(field, basis_count) : polynomial_basis(field, basis_count);
  FiniteApproxMap map = truncation_approx_map(PolyInstance{field, m}, basis);
  return TilingProblem{std::move(map), f_from_indices(basis, f_indices), Subspace::full(field, m),
                       i, delta};
}

// Cyclic shift e_j -> e_(j+1 mod n) as a rank-1 representation.
inline Representation cyclic_shift(const FieldPtr& field, std::size_t n) {
  return family_generate(FamilyDescriptor{CyclicRegular{}}, field, n);
}

// Direct sum of random invertible blocks of dimension 1..max_block totalling
// n, each block a random tuple of r invertible matrices.
inline Representation random_block_rep(const FieldPtr& field, std::size_t n, std::size_t max_block,
                                       std::uint32_t r, CounterRng& rng) {
  std::vector<Representation> parts;
  std::size_t used = 0;
  while (used < n) {
    const std::size_t d = std::min<std::size_t>(1 + rng.uniform(max_block), n - used);
    std::vector<DenseMatrix> gens;
    for (std::uint32_t g = 0; g < r; ++g) gens.push_back(random_invertible(field, d, rng));
    parts.emplace_back(field, std::move(gens));
    used += d;
  }
  return direct_sum(parts);
}

inline Representation random_rep(const FieldPtr& field, std::size_t n, std::uint32_t r,
                                  CounterRng& rng) {
  std::vector<DenseMatrix> gens;
  for (std::uint32_t g = 0; g < r; ++g) gens.push_back(random_invertible(field, n, rng));
  return Representation(field, std::move(gens));
}

// Every vector of GF(q)^n, for exhaustive oracles.
inline std::vector<Vec> all_vectors(std::uint32_t q, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t k = 0;
    while (k < n && ++v[k] == q) v[k++] = 0;
    if (k == n) break;
  }
  return out;
}

inline bool is_zero_vec(const Vec& v) {
  for (Scalar s : v) {
    if (s != 0) return false;
  }
  return true;
}

// Random element of K F_r with up to max_terms terms of length <= max_len.
inline AlgebraElement random_element(const FieldPtr& field, std::uint32_t r, std::size_t max_terms,
                                     std::size_t max_len, CounterRng& rng) {
  AlgebraElement a(field, r);
  const std::size_t terms = rng.uniform(max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Letter> ls(rng.uniform(max_len + 1));
    for (auto& l : ls) {
      l.gen = static_cast<std::uint32_t>(1 + rng.uniform(r));
      l.exp = rng.uniform(2) == 0 ? 1 : -1;
    }
    a.add_term(Word(ls), field->random(rng));
  }
  return a;
}

// Random rational expression in the shape the parser produces: constants are
// non-negative, negations appear only as later summands, and sums and
// products have at least two children.
inline RatExpr random_ratexpr(std::uint32_t r, std::size_t depth, CounterRng& rng) {
  const std::uint64_t pick = depth == 0 ? rng.uniform(2) : rng.uniform(5);
  switch (pick) {
    case 0:
      return RatExpr::constant(static_cast<std::int64_t>(rng.uniform(20)));
    case 1:
      return RatExpr::variable(static_cast<std::uint32_t>(1 + rng.uniform(r)));
    case 2: {
      std::vector<RatExpr> parts{random_ratexpr(r, depth - 1, rng)};
      const std::size_t extra = 1 + rng.uniform(3);
      for (std::size_t i = 0; i < extra; ++i) {
        RatExpr c = random_ratexpr(r, depth - 1, rng);
        if (rng.uniform(3) == 0) c = RatExpr::product({RatExpr::constant(-1), std::move(c)});
        parts.push_back(std::move(c));
      }
      return RatExpr::sum(std::move(parts));
    }
    case 3: {
      std::vector<RatExpr> parts;
      const std::size_t count = 2 + rng.uniform(3);
      for (std::size_t i = 0; i < count; ++i) parts.push_back(random_ratexpr(r, depth - 1, rng));
      return RatExpr::product(std::move(parts));
    }
    default:
      return RatExpr::inverse(random_ratexpr(r, depth - 1, rng));
  }
}

// One random mutation of an accepted witness, drawn from kinds that always
// break it: a duplicated tile, a tile absorbing a vector of another tile, K
// below the largest tile, epsilon = 0, an emptied tile, or dropped tiles
// pushing coverage under (1 - epsilon) n. Returns the kind used.
inline int mutate_witness(HyperfiniteWitness& w, std::size_t n, CounterRng& rng) {
  auto& tiles = w.subspaces;
  while (true) {
    const int kind = static_cast<int>(rng.uniform(6));
    const std::size_t j = rng.uniform(tiles.size());
    switch (kind) {
      case 0:
        tiles.push_back(tiles[j]);
        return kind;
      case 1: {
        if (tiles.size() < 2) continue;
        std::size_t k = rng.uniform(tiles.size() - 1);
        if (k >= j) ++k;
        std::vector<Vec> vs = tiles[j].basis();
        vs.push_back(tiles[k].basis()[rng.uniform(tiles[k].dim())]);
        tiles[j] = Subspace::span(tiles[j].field(), n, vs);
        return kind;
      }
      case 2: {
        std::size_t top = 0;
        for (const auto& t : tiles) top = std::max(top, t.dim());
        w.K = top - 1;
        return kind;
      }
      case 3:
        w.epsilon = Rational(0);
        return kind;
      case 4:
        tiles[j] = Subspace::zero(tiles[j].field(), n);
        return kind;
      default: {
        std::size_t cover = 0;
        for (const auto& t : tiles) cover += t.dim();
        while (!tiles.empty() &&
               Rational(static_cast<std::int64_t>(cover)) >=
                   (1 - w.epsilon) * static_cast<std::int64_t>(n)) {
          cover -= tiles.back().dim();
          tiles.pop_back();
        }
        return kind;
      }
    }
  }
}

}  // namespace linrep::testing

#endif  // LINREP_TESTS_FIXTURES_H_
