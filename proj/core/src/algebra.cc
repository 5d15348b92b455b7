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

#include <cctype>

#include "linrep/errors.h"

namespace linrep {
namespace {

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_field(a.field(), b.field()) || a.rank() != b.rank()) {
    throw DimensionMismatch("group algebra elements over different algebras");
  }
}

class ElementParser {
 public:
  ElementParser(std::string_view text, FieldPtr field, std::uint32_t r)
      : text_(text), field_(std::move(field)), r_(r) {}

  AlgebraElement parse() {
    AlgebraElement out(field_, r_);
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty element", pos_);
    out = out + term();
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') throw ParseError(std::string("unexpected '") + op + "'", pos_);
      ++pos_;
      AlgebraElement t = term();
      out = op == '+' ? out + t : out - t;
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t number() {
    if (!at_digit()) throw ParseError("expected a number", pos_);
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (at_digit()) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ull << 32)) throw ParseError("number too large", start);
      ++pos_;
    }
    return v;
  }

  AlgebraElement term() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("expected a term", pos_);
    Scalar coeff = 1;
    if (at_digit()) {
      const std::size_t start = pos_;
      const std::uint64_t c = number();
      if (c >= field_->q()) {
        throw ParseError("coefficient " + std::to_string(c) + " outside " + field_->name(), start);
      }
      coeff = static_cast<Scalar>(c);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
      } else {
        return AlgebraElement::word(field_, r_, Word(), coeff);
      }
    }
    return AlgebraElement::word(field_, r_, wordpart(), coeff);
  }

  Word wordpart() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'e') {
      ++pos_;
      return Word();
    }
    Word w = gen();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        w = w * gen();
      } else {
        return w;
      }
    }
  }

  Word gen() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'g') throw ParseError("expected generator 'g<k>'", pos_);
    const std::size_t start = pos_;
    ++pos_;
    const std::uint64_t idx = number();
    if (idx == 0 || idx > r_) {
      throw ParseError("generator index " + std::to_string(idx) + " outside 1.." + std::to_string(r_),
                       start);
    }
    long exp = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      const std::size_t at = pos_;
      const std::uint64_t e = number();
      if (e > 4096) throw ParseError("exponent too large", at);
      exp = neg ? -static_cast<long>(e) : static_cast<long>(e);
    }
    return Word::generator(static_cast<std::uint32_t>(idx), static_cast<int>(exp));
  }

  std::string_view text_;
  FieldPtr field_;
  std::uint32_t r_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement::AlgebraElement(FieldPtr field, std::uint32_t r) : field_(std::move(field)), r_(r) {}

AlgebraElement AlgebraElement::one(FieldPtr field, std::uint32_t r) {
  return word(std::move(field), r, Word(), 1);
}

AlgebraElement AlgebraElement::word(FieldPtr field, std::uint32_t r, const Word& w, Scalar coeff) {
  if (w.max_generator() > r) throw InputError("word uses a generator beyond r");
  if (coeff >= field->q()) throw InputError("coefficient outside field");
  AlgebraElement a(std::move(field), r);
  a.add_term(w, coeff);
  return a;
}

Scalar AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::size_t AlgebraElement::length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.length());
  return m;
}

void AlgebraElement::add_term(const Word& w, Scalar c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const { return scaled(field_->neg(1)); }

AlgebraElement AlgebraElement::scaled(Scalar c) const {
  AlgebraElement out(field_, r_);
  if (c == 0) return out;
  for (const auto& [w, a] : terms_) out.terms_.emplace(w, field_->mul(c, a));
  return out;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  AlgebraElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  AlgebraElement out(a.field_, a.r_);
  const Field& f = *a.field_;
  for (const auto& [u, x] : a.terms_) {
    for (const auto& [v, y] : b.terms_) out.add_term(u * v, f.mul(x, y));
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return same_field(a.field_, b.field_) && a.r_ == b.r_ && a.terms_ == b.terms_;
}

AlgebraMatrix::AlgebraMatrix(FieldPtr field, std::uint32_t r, std::size_t n)
    : field_(field), r_(r), n_(n), entries_(n * n, AlgebraElement(field, r)) {}

AlgebraMatrix::AlgebraMatrix(const AlgebraElement& a)
    : field_(a.field()), r_(a.rank()), n_(1), entries_{a} {}

AlgebraMatrix AlgebraMatrix::identity(FieldPtr field, std::uint32_t r, std::size_t n) {
  AlgebraMatrix m(field, r, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, AlgebraElement::one(field, r));
  return m;
}

void AlgebraMatrix::set(std::size_t i, std::size_t j, AlgebraElement a) {
  if (!same_field(a.field(), field_) || a.rank() != r_) {
    throw DimensionMismatch("matrix entry over a different group algebra");
  }
  entries_.at(i * n_ + j) = std::move(a);
}

bool operator==(const AlgebraMatrix& a, const AlgebraMatrix& b) {
  return a.n_ == b.n_ && a.r_ == b.r_ && same_field(a.field_, b.field_) && a.entries_ == b.entries_;
}

std::size_t length(const AlgebraMatrix& a) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, a(i, j).length());
  }
  return m;
}

AlgebraMatrix block_diagonal(const AlgebraMatrix& a, const AlgebraMatrix& b) {
  if (!same_field(a.field(), b.field()) || a.rank() != b.rank()) {
    throw DimensionMismatch("block_diagonal over different group algebras");
  }
  AlgebraMatrix out(a.field(), a.rank(), a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, a(i, j));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out.set(a.size() + i, a.size() + j, b(i, j));
  }
  return out;
}

AlgebraElement parse_element(std::string_view text, FieldPtr field, std::uint32_t r) {
  return ElementParser(text, std::move(field), r).parse();
}

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    if (w.is_identity()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += to_string(w);
    }
  }
  return out;
}

}  // namespace linrep
