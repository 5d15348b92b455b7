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

#ifndef LINREP_FIELD_H_
#define LINREP_FIELD_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linrep/rng.h"

namespace linrep {

// A field element GF(p^deg) is stored as its coefficient vector over GF(p),
// packed base p with the constant coefficient least significant. Codes lie in
// [0, q).
using Scalar = std::uint32_t;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t deg = 1;
  // Monic modulus of degree deg, constant term first (deg + 1 entries).
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Exact GF(q) arithmetic through log/antilog tables. Fields are immutable and
// shared; make() returns the same instance for equal specs.
class Field {
 public:
  // Largest supported order.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Builds GF(p^deg). With an empty modulus the lexicographically smallest
  // monic irreducible polynomial of degree deg is used. Throws InputError if p
  // is not prime, the modulus is not monic irreducible of degree deg, or
  // p^deg exceeds kMaxOrder.
  static FieldPtr make(std::uint32_t p, std::uint32_t deg = 1,
                       std::vector<std::uint32_t> modulus = {});
  static FieldPtr make(const FieldSpec& spec) {
    return make(spec.p, spec.deg, spec.modulus);
  }

  // Degree-`factor` extension of this field's prime field containing this
  // field's prime subfield, i.e. GF(p^(deg * factor)). Prime-field constants
  // keep their codes.
  FieldPtr extension(std::uint32_t factor) const;

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t deg() const { return spec_.deg; }
  std::uint32_t q() const { return q_; }
  std::string name() const;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }

  Scalar add(Scalar a, Scalar b) const {
    if (spec_.p == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Scalar neg(Scalar a) const {
    if (spec_.p == 2) return a;
    return neg_table_[a];
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  // Throws SingularMatrixError for zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  // Image of an integer under Z -> GF(p) -> GF(q).
  Scalar from_int(std::int64_t v) const;

  Scalar random(CounterRng& rng) const {
    return static_cast<Scalar>(rng.uniform(q_));
  }
  Scalar random_nonzero(CounterRng& rng) const {
    return static_cast<Scalar>(1 + rng.uniform(q_ - 1));
  }

  bool contains(std::int64_t code) const { return code >= 0 && code < q_; }

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

  // Internal; use make().
  explicit Field(FieldSpec spec);

 private:
  Scalar add_digits(Scalar a, Scalar b) const;

  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<Scalar> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Scalar> add_table_;
  std::vector<Scalar> neg_table_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime(std::uint32_t n);

// Whether the monic polynomial (constant term first) is irreducible over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

// Smallest monic irreducible of degree deg over GF(p), ordered by the packed
// base-p code of its lower coefficients.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t deg);

}  // namespace linrep

#endif  // LINREP_FIELD_H_
