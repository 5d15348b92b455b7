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

#include "linrep/word.h"

#include <algorithm>
#include <cstdlib>

#include "linrep/errors.h"

namespace linrep {
namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.gen == 0 || (l.exp != 1 && l.exp != -1)) throw InputError("invalid letter");
    push_reduced(letters_, l);
  }
}

Word Word::generator(std::uint32_t gen, int exp) {
  if (gen == 0) throw InputError("generator indices start at 1");
  Word w;
  const Letter l{gen, static_cast<std::int8_t>(exp < 0 ? -1 : 1)};
  for (int i = 0; i < std::abs(exp); ++i) w.letters_.push_back(l);
  return w;
}

std::uint32_t Word::max_generator() const {
  std::uint32_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  for (const auto& l : v.letters_) push_reduced(w.letters_, l);
  return w;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.letters_.size() <=> v.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(),
                                                v.letters_.begin(), v.letters_.end());
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += '*';
    out += 'g' + std::to_string(ls[i].gen);
    const long run = static_cast<long>(j - i) * ls[i].exp;
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace linrep
