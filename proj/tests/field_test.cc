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

#include "linrep/field.h"

#include <gtest/gtest.h>

#include <vector>

#include "linrep/errors.h"
#include "linrep/rational.h"

namespace linrep {
namespace {

// Schoolbook polynomial arithmetic on digit vectors, independent of the
// table-driven implementation.
struct PolyOracle {
  std::uint32_t p, deg;
  std::vector<std::uint32_t> modulus;

  std::vector<std::uint32_t> digits(Scalar a) const {
    std::vector<std::uint32_t> d(deg);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  Scalar code(const std::vector<std::uint32_t>& d) const {
    Scalar a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
  }
  Scalar add(Scalar a, Scalar b) const {
    auto x = digits(a), y = digits(b);
    for (std::uint32_t i = 0; i < deg; ++i) x[i] = (x[i] + y[i]) % p;
    return code(x);
  }
  Scalar mul(Scalar a, Scalar b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint32_t> prod(2 * deg, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
      for (std::uint32_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    for (std::size_t top = prod.size(); top-- > deg;) {
      const std::uint32_t c = prod[top];
      if (c == 0) continue;
      for (std::uint32_t k = 0; k <= deg; ++k) {
        auto& slot = prod[top - deg + k];
        slot = (slot + (p - c) * modulus[k]) % p;
      }
    }
    prod.resize(deg);
    return code(prod);
  }
};

// Monic polynomial of degree deg has no factor of degree 1..deg/2: test by
// multiplying every pair of monic polynomials of complementary degree.
bool irreducible_by_products(std::uint32_t p, const std::vector<std::uint32_t>& f) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  auto monics = [&](std::uint32_t d) {
    std::vector<std::vector<std::uint32_t>> out;
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint32_t x = c;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = x % p;
        x /= p;
      }
      g[d] = 1;
      out.push_back(g);
    }
    return out;
  };
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    for (const auto& g : monics(d)) {
      for (const auto& h : monics(deg - d)) {
        std::vector<std::uint32_t> prod(deg + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
          for (std::size_t j = 0; j < h.size(); ++j) prod[i + j] = (prod[i + j] + g[i] * h[j]) % p;
        }
        if (prod == f) return false;
      }
    }
  }
  return true;
}

class SmallFieldTest : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(SmallFieldTest, MatchesSchoolbookArithmetic) {
  const auto [p, deg] = GetParam();
  const FieldPtr f = Field::make(p, deg);
  const PolyOracle oracle{p, deg, f->spec().modulus};
  for (Scalar a = 0; a < f->q(); ++a) {
    for (Scalar b = 0; b < f->q(); ++b) {
      ASSERT_EQ(f->add(a, b), oracle.add(a, b)) << a << " + " << b;
      ASSERT_EQ(f->mul(a, b), oracle.mul(a, b)) << a << " * " << b;
      ASSERT_EQ(f->add(f->sub(a, b), b), a);
    }
    if (a != 0) {
      EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      EXPECT_EQ(f->div(a, a), 1u);
    }
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
  }
}

TEST_P(SmallFieldTest, DefaultModulusIsSmallestIrreducible) {
  const auto [p, deg] = GetParam();
  const FieldPtr f = Field::make(p, deg);
  const auto& mod = f->spec().modulus;
  ASSERT_EQ(mod.size(), deg + 1);
  EXPECT_EQ(mod.back(), 1u);
  EXPECT_TRUE(irreducible_by_products(p, mod));
  // Every monic polynomial that sorts earlier (highest coefficient first)
  // must be reducible.
  auto as_code = [&](const std::vector<std::uint32_t>& g) {
    std::uint32_t c = 0;
    for (std::size_t i = deg; i-- > 0;) c = c * p + g[i];
    return c;
  };
  for (std::uint32_t c = 0; c < as_code(mod); ++c) {
    std::vector<std::uint32_t> g(deg + 1);
    std::uint32_t x = c;
    for (std::uint32_t i = 0; i < deg; ++i) {
      g[i] = x % p;
      x /= p;
    }
    g[deg] = 1;
    EXPECT_FALSE(irreducible_by_products(p, g)) << "code " << c;
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, SmallFieldTest,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u},
                                           std::pair{7u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{5u, 2u}));

TEST(FieldTest, LargeExtensionHasWorkingInverses) {
  const FieldPtr f = Field::make(2, 8);
  EXPECT_EQ(f->q(), 256u);
  EXPECT_EQ(f->name(), "GF(2^8)");
  for (Scalar a = 1; a < 256; ++a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
  const FieldPtr g = Field::make(3, 5);
  for (Scalar a = 1; a < g->q(); a += 7) EXPECT_EQ(g->mul(a, g->inv(a)), 1u);
}

TEST(FieldTest, InstancesAreShared) {
  EXPECT_EQ(Field::make(2, 3), Field::make(2, 3));
  EXPECT_TRUE(same_field(Field::make(2, 8), Field::make(2)->extension(8)));
}

TEST(FieldTest, RejectsBadSpecs) {
  EXPECT_THROW(Field::make(4), InputError);
  EXPECT_THROW(Field::make(1), InputError);
  EXPECT_THROW(Field::make(2, 2, {1, 0, 1}), InputError);  // x^2 + 1 = (x + 1)^2
  EXPECT_THROW(Field::make(2, 2, {1, 1, 0}), InputError);  // not monic of degree 2
  EXPECT_THROW(Field::make(2, 17), InputError);
  EXPECT_THROW(Field::make(2)->inv(0), SingularMatrixError);
  EXPECT_NO_THROW(Field::make(2, 2, {1, 1, 1}));
}

TEST(FieldTest, FromIntReducesIntoPrimeField) {
  const FieldPtr f = Field::make(5);
  EXPECT_EQ(f->from_int(7), 2u);
  EXPECT_EQ(f->from_int(-1), 4u);
  EXPECT_EQ(Field::make(2, 8)->from_int(-1), 1u);
  EXPECT_EQ(Field::make(3, 2)->from_int(-1), 2u);
}

TEST(FieldTest, IrreducibilityAgreesWithProductOracle) {
  for (std::uint32_t c = 0; c < 32; ++c) {
    std::vector<std::uint32_t> g(6);
    for (int i = 0; i < 5; ++i) g[i] = (c >> i) & 1;
    g[5] = 1;
    EXPECT_EQ(is_irreducible(2, g), irreducible_by_products(2, g)) << c;
  }
}

TEST(RationalTest, ParsesAndRounds) {
  EXPECT_EQ(parse_rational("1/4"), Rational(1, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_EQ(nearest_integer(Rational(63, 64)), 1);
  EXPECT_EQ(nearest_integer(Rational(1, 2)), 1);
  EXPECT_EQ(nearest_integer(Rational(-1, 3)), 0);
  EXPECT_EQ(nearest_integer(Rational(-2, 3)), -1);
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
}

}  // namespace
}  // namespace linrep
