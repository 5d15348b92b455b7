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

#include "linrep/algebra.h"

#include <gtest/gtest.h>

#include "linrep/errors.h"
#include "linrep/rng.h"
#include "linrep/word.h"

namespace linrep {
namespace {

Word random_word(std::uint32_t r, std::size_t max_len, CounterRng& rng) {
  std::vector<Letter> letters;
  const std::size_t len = rng.uniform(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back(Letter{static_cast<std::uint32_t>(1 + rng.uniform(r)),
                             static_cast<std::int8_t>(rng.uniform(2) ? 1 : -1)});
  }
  return Word(letters);
}

AlgebraElement random_element(const FieldPtr& f, std::uint32_t r, CounterRng& rng) {
  AlgebraElement a(f, r);
  const std::size_t terms = rng.uniform(5);
  for (std::size_t t = 0; t < terms; ++t) a.add_term(random_word(r, 4, rng), f->random(rng));
  return a;
}

TEST(WordTest, FreeReduction) {
  const Word g = Word::generator(1), h = Word::generator(2);
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_EQ((g * h * h.inverse() * g).length(), 2u);
  EXPECT_EQ(to_string(g * g * h.inverse()), "g1^2*g2^-1");
  EXPECT_EQ(to_string(Word{}), "e");
  EXPECT_EQ(Word::generator(3, -2).length(), 2u);
  EXPECT_EQ((g * h).max_generator(), 2u);
  EXPECT_THROW(Word::generator(0), InputError);
}

TEST(WordTest, GroupLaws) {
  CounterRng rng(1);
  for (int t = 0; t < 200; ++t) {
    const Word a = random_word(3, 6, rng), b = random_word(3, 6, rng), c = random_word(3, 6, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    for (std::size_t i = 1; i < a.length(); ++i) {
      EXPECT_NE(a.letters()[i], a.letters()[i - 1].inverse());
    }
  }
}

TEST(WordTest, ShortlexOrder) {
  const Word e{}, g = Word::generator(1), gi = Word::generator(1, -1), gg = Word::generator(1, 2);
  EXPECT_LT(e, g);
  EXPECT_LT(g, gg);
  EXPECT_LT(gi, gg);
  EXPECT_NE(g <=> gi, std::strong_ordering::equal);
}

TEST(AlgebraTest, RingLaws) {
  const FieldPtr f = Field::make(3);
  CounterRng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_element(f, 2, rng), b = random_element(f, 2, rng),
               c = random_element(f, 2, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, AlgebraElement::zero(f, 2));
    EXPECT_EQ(a * AlgebraElement::one(f, 2), a);
  }
}

TEST(AlgebraTest, ParsesExamples) {
  const FieldPtr f = Field::make(2);
  const AlgebraElement a = parse_element("g1 - 1", f, 1);
  EXPECT_EQ(a.coefficient(Word::generator(1)), 1u);
  EXPECT_EQ(a.coefficient(Word{}), 1u);
  EXPECT_EQ(a.length(), 1u);
  EXPECT_EQ(to_string(a), "1 + g1");
  EXPECT_EQ(parse_element("g1*g1^-1", f, 1), AlgebraElement::one(f, 1));
  EXPECT_EQ(to_string(parse_element("0", f, 2)), "0");
  const FieldPtr f5 = Field::make(5);
  EXPECT_EQ(parse_element("3*g2^2 - g1", f5, 2).coefficient(Word::generator(1)), 4u);
}

TEST(AlgebraTest, PrintParseRoundTrip) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const FieldPtr f = q == 4 ? Field::make(2, 2) : Field::make(q);
    CounterRng rng(q);
    for (int t = 0; t < 300; ++t) {
      const auto a = random_element(f, 3, rng);
      EXPECT_EQ(parse_element(to_string(a), f, 3), a) << to_string(a);
    }
  }
}

TEST(AlgebraTest, ParseErrorsCarryPositions) {
  const FieldPtr f = Field::make(2);
  struct Case {
    const char* text;
    std::size_t pos;
  };
  for (const Case& c : {Case{"g3", 0}, Case{"g1 +", 4}, Case{"2*g1", 0}, Case{"g0", 0},
                        Case{"g1 ? g2", 3}, Case{"", 0}, Case{"g1^99999", 3}}) {
    try {
      parse_element(c.text, f, 2);
      ADD_FAILURE() << "accepted " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.pos) << c.text << ": " << e.what();
    }
  }
}

TEST(AlgebraTest, MatrixHelpers) {
  const FieldPtr f = Field::make(2);
  AlgebraMatrix m(f, 2, 2);
  m.set(0, 1, parse_element("g1*g2^-1*g1", f, 2));
  EXPECT_EQ(length(m), 3u);
  const AlgebraMatrix d = block_diagonal(m, AlgebraMatrix::identity(f, 2, 1));
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d(2, 2), AlgebraElement::one(f, 2));
  EXPECT_THROW(m.set(0, 0, AlgebraElement::one(f, 3)), DimensionMismatch);
}

}  // namespace
}  // namespace linrep
