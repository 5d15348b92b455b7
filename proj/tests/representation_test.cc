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

#include "linrep/representation.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "linrep/errors.h"
#include "linrep/families.h"

namespace linrep {
namespace {

using testing::all_vectors;

FieldPtr field_of_order(std::uint32_t q) {
  return q == 4 ? Field::make(2, 2) : Field::make(q);
}

DenseMatrix random_of_rank(const FieldPtr& f, std::size_t n, std::size_t r, CounterRng& rng) {
  DenseMatrix d(f, n, n);
  for (std::size_t i = 0; i < r; ++i) d(i, i) = 1;
  return random_invertible(f, n, rng) * d * random_invertible(f, n, rng);
}

class RankAxiomsTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RankAxiomsTest, HoldOnRandomPairs) {
  const FieldPtr f = field_of_order(GetParam());
  CounterRng root(GetParam() * 7919);
  for (int t = 0; t < 200; ++t) {
    CounterRng rng = root.derive(t);
    const std::size_t n = 1 + rng.uniform(7), m = 1 + rng.uniform(5);
    const DenseMatrix a = random_of_rank(f, n, rng.uniform(n + 1), rng);
    const DenseMatrix b = random_of_rank(f, n, rng.uniform(n + 1), rng);
    const DenseMatrix c = random_of_rank(f, m, rng.uniform(m + 1), rng);

    EXPECT_LE(rank(a + b), rank(a) + rank(b));
    EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
    EXPECT_EQ(rank(block_diagonal(a, c)), rank(a) + rank(c));

    // e, g orthogonal idempotents conjugate to complementary diagonal blocks.
    const DenseMatrix p = random_invertible(f, n, rng);
    const std::size_t split = rng.uniform(n + 1);
    DenseMatrix de(f, n, n), dg(f, n, n);
    for (std::size_t i = 0; i < n; ++i) (i < split ? de : dg)(i, i) = 1;
    const DenseMatrix pinv = inverse(p);
    const DenseMatrix e = p * de * pinv, g = p * dg * pinv;
    ASSERT_EQ(e * e, e);
    ASSERT_TRUE((e * g).is_zero());
    EXPECT_EQ(rank(e + g), rank(e) + rank(g));
  }
}

TEST_P(RankAxiomsTest, NormalizationAndFaithfulness) {
  const FieldPtr f = field_of_order(GetParam());
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(rank(DenseMatrix::identity(f, n)), n);
    EXPECT_EQ(rank(DenseMatrix::zero(f, n, n)), 0u);
    DenseMatrix one_entry(f, n, n);
    one_entry(n - 1, 0) = f->q() - 1;
    EXPECT_EQ(rank(one_entry), 1u);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, RankAxiomsTest, ::testing::Values(2u, 3u, 4u));

TEST(RepresentationTest, RejectsSingularGenerators) {
  const FieldPtr f = Field::make(2);
  EXPECT_THROW(Representation(f, {DenseMatrix::zero(f, 2, 2)}), InputError);
  EXPECT_THROW(Representation(f, {DenseMatrix::zero(f, 2, 3)}), InputError);
}

TEST(RepresentationTest, ImageIsMultiplicative) {
  const FieldPtr f = Field::make(3);
  CounterRng rng(11);
  const Representation rep = testing::random_rep(f, 4, 2, rng);
  const char* texts[] = {"g1 + 2*g2^-1", "1 + g1*g2", "g2^3 - g1^-2*g2", "e"};
  for (const char* s : texts) {
    for (const char* t : texts) {
      const AlgebraElement a = parse_element(s, f, 2), b = parse_element(t, f, 2);
      EXPECT_EQ(rep.image(a * b), rep.image(a) * rep.image(b)) << s << " * " << t;
      EXPECT_EQ(rep.image(a + b), rep.image(a) + rep.image(b));
    }
  }
  const Word w = Word::generator(1) * Word::generator(2, -1);
  EXPECT_EQ(rep.image(w) * rep.image(w.inverse()), DenseMatrix::identity(f, 4));
}

TEST(RepresentationTest, ApplyMatrixPlacesBlocks) {
  const FieldPtr f = Field::make(2);
  const Representation rep = testing::cyclic_shift(f, 3);
  AlgebraMatrix a(f, 1, 2);
  a.set(0, 1, parse_element("g1", f, 1));
  a.set(1, 0, parse_element("1 + g1^-1", f, 1));
  const DenseMatrix m = apply_matrix(rep, a);
  ASSERT_EQ(m.rows(), 6u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m(i, j), 0u);
      EXPECT_EQ(m(i, 3 + j), rep.generator(1)(i, j));
      EXPECT_EQ(m(3 + i, j), f->add(i == j ? 1 : 0, rep.generator_inverse(1)(i, j)));
      EXPECT_EQ(m(3 + i, 3 + j), 0u);
    }
  }
  AlgebraMatrix wrong(Field::make(3), 1, 1);
  EXPECT_THROW(apply_matrix(rep, wrong), DimensionMismatch);
}

TEST(RepresentationTest, DirectSumIsBlockDiagonal) {
  const FieldPtr f = Field::make(2);
  const Representation a = testing::cyclic_shift(f, 2), b = testing::cyclic_shift(f, 3);
  const Representation s = direct_sum({a, b});
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_EQ(s.generator(1), block_diagonal(a.generator(1), b.generator(1)));
  EXPECT_THROW(direct_sum({}), InputError);
}

TEST(RepresentationTest, CyclicProfileIsExact) {
  const FieldPtr f = Field::make(2);
  const AlgebraMatrix a(parse_element("g1 - 1", f, 1));
  std::vector<std::size_t> ks;
  for (std::size_t k = 2; k <= 40; ++k) ks.push_back(k);
  const RankProfile profile = rank_profile(FamilyDescriptor{CyclicRegular{}}, f, ks, a, 2);
  ASSERT_EQ(profile.size(), ks.size());
  for (const auto& e : profile) {
    EXPECT_EQ(e.n_k, e.k);
    EXPECT_EQ(e.value(), Rational(static_cast<std::int64_t>(e.k) - 1, e.k));
  }
  const AtiyahReport rep = atiyah_check(profile, 8, Rational(1, 32));
  EXPECT_TRUE(rep.integral);
  EXPECT_EQ(rep.nearest_integer, 1);
  EXPECT_EQ(rep.limit_estimate, Rational(39, 40));
}

TEST(RepresentationTest, AtiyahFlagsNonIntegralAndShortProfiles) {
  RankProfile half;
  for (std::size_t k = 2; k <= 20; k += 2) half.push_back({k, k, k / 2});
  const AtiyahReport rep = atiyah_check(half, 4, Rational(1, 32));
  EXPECT_FALSE(rep.integral);
  EXPECT_EQ(rep.limit_estimate, Rational(1, 2));
  EXPECT_EQ(rep.tail_oscillation, Rational(0));

  RankProfile moving;
  for (std::size_t k = 1; k <= 8; ++k) moving.push_back({k, 8, k % 2 == 0 ? 8u : 4u});
  EXPECT_FALSE(atiyah_check(moving, 4, Rational(1, 32)).integral);

  EXPECT_THROW(atiyah_check(half, 11, Rational(1, 32)), InputError);
  EXPECT_THROW(atiyah_check(half, 0, Rational(1, 32)), InputError);
}

std::vector<DenseMatrix> all_matrices(const FieldPtr& f, std::size_t n) {
  std::vector<DenseMatrix> out;
  for (const Vec& v : all_vectors(f->q(), n * n)) out.emplace_back(f, n, n, v);
  return out;
}

TEST(RepairTest, ExhaustivelyMinimalForSmallSizes) {
  const FieldPtr f = Field::make(2);
  for (std::size_t n : {1u, 2u, 3u}) {
    const auto mats = all_matrices(f, n);
    std::vector<DenseMatrix> invertible;
    for (const auto& m : mats) {
      if (is_invertible(m)) invertible.push_back(m);
    }
    for (const auto& m : mats) {
      const DenseMatrix fixed = repair_to_invertible(m);
      ASSERT_TRUE(is_invertible(fixed));
      const std::size_t defect = n - rank(m);
      EXPECT_EQ(rank_distance(m, fixed), defect);
      std::size_t best = n;
      for (const auto& g : invertible) best = std::min(best, rank_distance(m, g));
      EXPECT_EQ(best, defect);
    }
  }
}

TEST(RepairTest, RandomDeficientMatrices) {
  CounterRng root(5);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const FieldPtr f = field_of_order(q);
    for (int t = 0; t < 40; ++t) {
      CounterRng rng = root.derive(q * 1000 + t);
      const std::size_t n = 1 + rng.uniform(30);
      const DenseMatrix m = random_of_rank(f, n, rng.uniform(n), rng);
      const DenseMatrix fixed = repair_to_invertible(m);
      ASSERT_TRUE(is_invertible(fixed));
      EXPECT_EQ(rank_distance(m, fixed), n - rank(m));
    }
  }
  const FieldPtr f = Field::make(2);
  const DenseMatrix id = DenseMatrix::identity(f, 4);
  EXPECT_EQ(repair_to_invertible(id), id);
  EXPECT_THROW(repair_to_invertible(DenseMatrix::zero(f, 2, 3)), InputError);
}

}  // namespace
}  // namespace linrep
