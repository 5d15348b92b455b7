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

#ifndef LINREP_ALGEBRA_H_
#define LINREP_ALGEBRA_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "linrep/field.h"
#include "linrep/word.h"

namespace linrep {

// Element of the group algebra K F_r: a finite K-combination of reduced
// words. Zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement(FieldPtr field, std::uint32_t r);

  static AlgebraElement zero(FieldPtr field, std::uint32_t r) { return {std::move(field), r}; }
  static AlgebraElement one(FieldPtr field, std::uint32_t r);
  static AlgebraElement word(FieldPtr field, std::uint32_t r, const Word& w, Scalar coeff = 1);

  const FieldPtr& field() const { return field_; }
  std::uint32_t rank() const { return r_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;
  // Longest word with a nonzero coefficient; 0 for scalars and zero.
  std::size_t length() const;

  // Adds c * w.
  void add_term(const Word& w, Scalar c);

  AlgebraElement operator-() const;
  AlgebraElement scaled(Scalar c) const;
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  FieldPtr field_;
  std::uint32_t r_;
  std::map<Word, Scalar> terms_;
};

// n x n matrix over K F_r.
class AlgebraMatrix {
 public:
  AlgebraMatrix(FieldPtr field, std::uint32_t r, std::size_t n);
  // Single-entry 1 x 1 matrix.
  explicit AlgebraMatrix(const AlgebraElement& a);

  static AlgebraMatrix identity(FieldPtr field, std::uint32_t r, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::uint32_t rank() const { return r_; }
  std::size_t size() const { return n_; }
  const AlgebraElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  // Replaces an entry; throws DimensionMismatch on a field or rank mismatch.
  void set(std::size_t i, std::size_t j, AlgebraElement a);

  friend bool operator==(const AlgebraMatrix&, const AlgebraMatrix&);

 private:
  FieldPtr field_;
  std::uint32_t r_;
  std::size_t n_;
  std::vector<AlgebraElement> entries_;
};

// Maximum word length over all entries.
std::size_t length(const AlgebraMatrix& a);

// diag(a, b).
AlgebraMatrix block_diagonal(const AlgebraMatrix& a, const AlgebraMatrix& b);

// Grammar (whitespace ignored):
//   elem     := term (('+' | '-') term)*
//   term     := coeff ['*' wordpart] | wordpart
//   wordpart := 'e' | gen ('*' gen)*
//   gen      := 'g' digit+ ['^' ['-'] digit+]
//   coeff    := digit+           (a field element code in [0, q))
// A bare coefficient stands for coeff * e. Throws ParseError with the byte
// offset of the offending token.
AlgebraElement parse_element(std::string_view text, FieldPtr field, std::uint32_t r);

// Canonical text, terms in shortlex word order; parse_element inverts it.
std::string to_string(const AlgebraElement& a);

}  // namespace linrep

#endif  // LINREP_ALGEBRA_H_
