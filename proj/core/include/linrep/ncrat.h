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

#ifndef LINREP_NCRAT_H_
#define LINREP_NCRAT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linrep/matrix.h"

namespace linrep {

// Noncommutative rational expression in z_1, .., z_r. Constants are integers
// read in the prime field at evaluation time. a - b is stored as
// Sum(a, Prod(Const(-1), b)).
struct RatExpr {
  enum class Kind { kConst, kVar, kSum, kProd, kInv };

  Kind kind = Kind::kConst;
  std::int64_t value = 0;   // kConst
  std::uint32_t var = 0;    // kVar, 1-based
  std::vector<RatExpr> children;

  static RatExpr constant(std::int64_t v);
  static RatExpr variable(std::uint32_t i);
  static RatExpr sum(std::vector<RatExpr> parts);
  static RatExpr product(std::vector<RatExpr> parts);
  static RatExpr inverse(RatExpr arg);
  static RatExpr difference(RatExpr a, RatExpr b);

  // Largest variable index, 0 if none.
  std::uint32_t max_var() const;
  std::size_t node_count() const;

  friend bool operator==(const RatExpr&, const RatExpr&) = default;
};

// expr := term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := 'z' digits | digits | 'inv' '(' expr ')' | '(' expr ')'
// Throws ParseError with the offending position.
RatExpr parse_ratexpr(std::string_view text);
// Inverse of parse_ratexpr on everything it produces.
std::string print_ratexpr(const RatExpr& e);

struct EvalResult {
  std::optional<DenseMatrix> value;
  // On failure: child indices from the root to the innermost Inv node whose
  // argument was singular.
  std::vector<std::size_t> failure_path;

  bool ok() const { return value.has_value(); }
};

// Bottom-up evaluation at a tuple of n x n matrices; constants become c * Id.
// Throws InputError or DimensionMismatch for a malformed tuple, which is
// distinct from leaving the domain.
EvalResult evaluate(const RatExpr& e, const std::vector<DenseMatrix>& tuple);
bool in_domain(const RatExpr& e, const std::vector<DenseMatrix>& tuple);

struct EquivVerdict {
  enum class Kind { kCounterexample, kConsistent, kNoCommonDomain };

  Kind kind = Kind::kNoCommonDomain;
  std::size_t common_samples = 0;  // points in dom R and dom S
  std::size_t trials_run = 0;
  // Counterexample data, re-verified before being reported.
  std::size_t size = 0;
  std::vector<DenseMatrix> point;
  std::optional<DenseMatrix> left;
  std::optional<DenseMatrix> right;
};

struct EquivOptions {
  std::vector<std::size_t> sizes{1, 2, 3, 4};
  std::size_t trials = 50;      // per size
  std::uint32_t ext_deg = 8;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

// Random points over base^ext_deg. Trial t at size index i draws from the
// stream derive(i * trials + t). "Consistent" is evidence, never a proof.
EquivVerdict equiv_probabilistic(const RatExpr& r, const RatExpr& s, const FieldPtr& base,
                                 const EquivOptions& options = {});

}  // namespace linrep

#endif  // LINREP_NCRAT_H_
