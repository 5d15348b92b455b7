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

#include <gtest/gtest.h>

#include <set>

#include "fixtures.h"
#include "linrep/errors.h"

namespace linrep {
namespace {

using testing::all_vectors;

std::set<Vec> members(const Subspace& s) {
  std::set<Vec> out;
  for (const Vec& v : all_vectors(s.field()->q(), s.ambient())) {
    if (s.contains(v)) out.insert(v);
  }
  return out;
}

// Brute-force span: all combinations of the basis.
std::set<Vec> span_set(const FieldPtr& f, std::size_t n, const std::vector<Vec>& gens) {
  std::set<Vec> out;
  for (const Vec& c : all_vectors(f->q(), gens.size())) {
    Vec acc(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g) acc = vec_add(*f, acc, vec_scale(*f, c[g], gens[g]));
    out.insert(acc);
  }
  return out;
}

Subspace random_span(const FieldPtr& f, std::size_t n, std::size_t k, CounterRng& rng) {
  std::vector<Vec> gens(k, Vec(n));
  for (auto& g : gens) {
    for (auto& c : g) c = f->random(rng);
  }
  return Subspace::span(f, n, gens);
}

TEST(SubspaceTest, SpanMatchesEnumeration) {
  const FieldPtr f = Field::make(3);
  CounterRng rng(1);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> gens(1 + rng.uniform(3), Vec(3));
    for (auto& g : gens) {
      for (auto& c : g) c = f->random(rng);
    }
    const Subspace s = Subspace::span(f, 3, gens);
    EXPECT_EQ(members(s), span_set(f, 3, gens));
    for (const auto& b : s.basis()) EXPECT_EQ(s.coordinates(b).size(), s.dim());
  }
}

TEST(SubspaceTest, IntersectionAndSumMatchBruteForce) {
  const FieldPtr f = Field::make(2);
  CounterRng rng(2);
  for (int t = 0; t < 50; ++t) {
    const Subspace u = random_span(f, 4, rng.uniform(4), rng);
    const Subspace w = random_span(f, 4, rng.uniform(4), rng);
    const Subspace cap = subspace_intersection(u, w);
    std::set<Vec> expect;
    const auto mu = members(u), mw = members(w);
    for (const auto& v : mu) {
      if (mw.count(v)) expect.insert(v);
    }
    EXPECT_EQ(members(cap), expect);
    const Subspace sum = subspace_sum(u, w);
    EXPECT_EQ(sum.dim() + cap.dim(), u.dim() + w.dim());
    EXPECT_TRUE(sum.contains(u));
    EXPECT_TRUE(sum.contains(w));
  }
}

TEST(SubspaceTest, ImagePreimageKernelMatchBruteForce) {
  const FieldPtr f = Field::make(2);
  CounterRng rng(3);
  for (int t = 0; t < 30; ++t) {
    const DenseMatrix m = DenseMatrix::random(f, 4, 4, rng);
    const Subspace v = random_span(f, 4, rng.uniform(4), rng);
    std::set<Vec> img, pre, ker;
    for (const Vec& x : all_vectors(2, 4)) {
      const Vec y = m.apply(x);
      if (v.contains(x)) img.insert(y);
      if (v.contains(y)) pre.insert(x);
      if (vec_is_zero(y)) ker.insert(x);
    }
    EXPECT_EQ(members(image(m, v)), img);
    EXPECT_EQ(members(preimage(m, v)), pre);
    EXPECT_EQ(members(kernel(m)), ker);
  }
}

TEST(SubspaceTest, ProjectionAndComplement) {
  const FieldPtr f = Field::make(3);
  CounterRng rng(4);
  for (int t = 0; t < 20; ++t) {
    const Subspace v = random_span(f, 5, 1 + rng.uniform(3), rng);
    const Subspace w = complement_of(v);
    EXPECT_EQ(v.dim() + w.dim(), 5u);
    EXPECT_TRUE(subspace_sum(v, w).is_full());
    const DenseMatrix p = projection_onto(v, w);
    EXPECT_EQ(p * p, p);
    for (const auto& b : v.basis()) EXPECT_EQ(p.apply(b), b);
    for (const auto& b : w.basis()) EXPECT_TRUE(vec_is_zero(p.apply(b)));
  }
  const Subspace v = Subspace::span(f, 3, std::vector<Vec>{{1, 0, 0}});
  EXPECT_THROW(projection_onto(v, v), InputError);
}

TEST(SubspaceTest, IndependenceOfFamilies) {
  const FieldPtr f = Field::make(2);
  const Subspace a = Subspace::span(f, 3, std::vector<Vec>{{1, 0, 0}});
  const Subspace b = Subspace::span(f, 3, std::vector<Vec>{{0, 1, 0}});
  const Subspace c = Subspace::span(f, 3, std::vector<Vec>{{1, 1, 0}});
  EXPECT_TRUE(subspaces_independent(std::vector<Subspace>{a, b}));
  // Pairwise independent, jointly dependent.
  EXPECT_FALSE(subspaces_independent(std::vector<Subspace>{a, b, c}));
  EXPECT_FALSE(subspaces_independent(std::vector<Subspace>{a, a}));
}

TEST(SubspaceTest, GaussianBinomialValues) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13u);
  EXPECT_EQ(gaussian_binomial(5, 0, 7), 1u);
  EXPECT_EQ(gaussian_binomial(2, 3, 2), 0u);
  for (std::size_t n = 1; n < 8; ++n) {
    EXPECT_EQ(gaussian_binomial(n, 1, 2), (1u << n) - 1);
    EXPECT_EQ(gaussian_binomial(n, n - 1, 3), gaussian_binomial(n, 1, 3));
  }
  EXPECT_EQ(gaussian_binomial(200, 100, 2), UINT64_MAX);
}

TEST(SubspaceTest, EnumerationVisitsEachSubspaceOnce) {
  for (std::uint32_t q : {2u, 3u}) {
    const FieldPtr f = Field::make(q);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t d = 0; d <= n; ++d) {
        std::set<std::vector<Vec>> seen;
        enumerate_subspaces(f, n, d, 1u << 20, [&](const Subspace& s) {
          EXPECT_EQ(s.dim(), d);
          seen.insert(s.basis());
          return true;
        });
        EXPECT_EQ(seen.size(), gaussian_binomial(n, d, q)) << q << " " << n << " " << d;
      }
    }
  }
  EXPECT_THROW(enumerate_subspaces(Field::make(2), 8, 4, 100, [](const Subspace&) { return true; }),
               BudgetExceeded);
  std::size_t visits = 0;
  enumerate_subspaces(Field::make(2), 4, 2, 100, [&](const Subspace&) { return ++visits < 5; });
  EXPECT_EQ(visits, 5u);
}

TEST(SubspaceTest, RandomSubspaceHasRequestedDimension) {
  const FieldPtr f = Field::make(2);
  CounterRng rng(9);
  for (std::size_t d = 0; d <= 5; ++d) EXPECT_EQ(random_subspace(f, 5, d, rng).dim(), d);
}

}  // namespace
}  // namespace linrep
