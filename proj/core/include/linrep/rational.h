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

#ifndef LINREP_RATIONAL_H_
#define LINREP_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace linrep {

// Exact rational used for every threshold and normalized rank. Always kept in
// lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;
// Compare against Rational(k) rather than a bare integer: under C++20's
// rewritten comparisons boost's mixed operator== calls itself forever.

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

// Parses "a", "a/b" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

// Nearest integer, rounding halves up.
inline std::int64_t nearest_integer(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  std::int64_t q = shifted.numerator() / shifted.denominator();
  if (shifted.numerator() < 0 && shifted.numerator() % shifted.denominator() != 0) --q;
  return q;
}

inline Rational abs(const Rational& x) { return x < 0 ? -x : x; }

}  // namespace linrep

#endif  // LINREP_RATIONAL_H_
