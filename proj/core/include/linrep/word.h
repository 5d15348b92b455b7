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

#ifndef LINREP_WORD_H_
#define LINREP_WORD_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linrep {

// gamma_gen^exp with gen 1-based and exp in {+1, -1}.
struct Letter {
  std::uint32_t gen = 1;
  std::int8_t exp = 1;

  Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-exp)}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Reduced word in the free group. Reduction is eager: no stored word ever
// contains a letter next to its inverse.
class Word {
 public:
  Word() = default;
  // Freely reduces the given letter sequence.
  explicit Word(std::span<const Letter> letters);

  static Word generator(std::uint32_t gen, int exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  // Largest generator index used, 0 for the identity.
  std::uint32_t max_generator() const;

  Word inverse() const;

  friend Word operator*(const Word& u, const Word& v);
  // Shortlex: shorter words first, then letters lexicographically.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v) = default;

 private:
  std::vector<Letter> letters_;
};

// "e" for the identity, otherwise runs such as "g1^2*g2^-1*g1".
std::string to_string(const Word& w);

}  // namespace linrep

#endif  // LINREP_WORD_H_
