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

#include "linrep/ncrat.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "linrep/errors.h"
#include "linrep/parallel.h"
#include "linrep/rng.h"

namespace linrep {

RatExpr RatExpr::constant(std::int64_t v) {
  RatExpr e;
  e.kind = Kind::kConst;
  e.value = v;
  return e;
}

RatExpr RatExpr::variable(std::uint32_t i) {
  if (i == 0) throw InputError("variable indices start at 1");
  RatExpr e;
  e.kind = Kind::kVar;
  e.var = i;
  return e;
}

RatExpr RatExpr::sum(std::vector<RatExpr> parts) {
  if (parts.empty()) throw InputError("empty sum");
  RatExpr e;
  e.kind = Kind::kSum;
  e.children = std::move(parts);
  return e;
}

RatExpr RatExpr::product(std::vector<RatExpr> parts) {
  if (parts.empty()) throw InputError("empty product");
  RatExpr e;
  e.kind = Kind::kProd;
  e.children = std::move(parts);
  return e;
}

RatExpr RatExpr::inverse(RatExpr arg) {
  RatExpr e;
  e.kind = Kind::kInv;
  e.children.push_back(std::move(arg));
  return e;
}

RatExpr RatExpr::difference(RatExpr a, RatExpr b) {
  return sum({std::move(a), product({constant(-1), std::move(b)})});
}

std::uint32_t RatExpr::max_var() const {
  std::uint32_t m = kind == Kind::kVar ? var : 0;
  for (const auto& c : children) m = std::max(m, c.max_var());
  return m;
}

std::size_t RatExpr::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

namespace {

constexpr std::size_t kMaxDepth = 256;
constexpr std::int64_t kMaxConstant = 1'000'000'000'000'000;
constexpr std::uint32_t kMaxVariable = 1u << 20;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatExpr parse() {
    RatExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::int64_t digits(std::int64_t cap, const char* what) {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > cap) {
        pos_ = start;
        fail(std::string(what) + " too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return v;
  }

  RatExpr expr() {
    if (++depth_ > kMaxDepth) fail("expression nested too deeply");
    std::vector<RatExpr> parts{term()};
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      RatExpr t = term();
      parts.push_back(minus ? RatExpr::product({RatExpr::constant(-1), std::move(t)}) : std::move(t));
    }
    --depth_;
    return parts.size() == 1 ? std::move(parts[0]) : RatExpr::sum(std::move(parts));
  }

  RatExpr term() {
    std::vector<RatExpr> parts{factor()};
    while (peek('*')) {
      ++pos_;
      parts.push_back(factor());
    }
    return parts.size() == 1 ? std::move(parts[0]) : RatExpr::product(std::move(parts));
  }

  RatExpr factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'z') {
      ++pos_;
      const std::size_t at = pos_;
      const auto i = digits(kMaxVariable, "variable index");
      if (i == 0) {
        pos_ = at;
        fail("variable indices start at 1");
      }
      return RatExpr::variable(static_cast<std::uint32_t>(i));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatExpr::constant(digits(kMaxConstant, "constant"));
    }
    if (text_.substr(pos_, 3) == "inv") {
      pos_ += 3;
      expect('(');
      RatExpr inner = expr();
      expect(')');
      return RatExpr::inverse(std::move(inner));
    }
    if (c == '(') {
      ++pos_;
      RatExpr inner = expr();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

bool is_negation(const RatExpr& e) {
  return e.kind == RatExpr::Kind::kProd && e.children.size() == 2 &&
         e.children[0].kind == RatExpr::Kind::kConst && e.children[0].value == -1;
}

void print_to(const RatExpr& e, std::string& out);

void print_wrapped(const RatExpr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_to(e, out);
  if (wrap) out += ')';
}

void print_to(const RatExpr& e, std::string& out) {
  using K = RatExpr::Kind;
  switch (e.kind) {
    case K::kConst:
      if (e.value < 0) {
        out += "(0 - " + std::to_string(-e.value) + ")";
      } else {
        out += std::to_string(e.value);
      }
      return;
    case K::kVar:
      out += "z" + std::to_string(e.var);
      return;
    case K::kInv:
      out += "inv(";
      print_to(e.children[0], out);
      out += ")";
      return;
    case K::kSum:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const RatExpr& c = e.children[i];
        if (i > 0 && is_negation(c)) {
          out += " - ";
          print_wrapped(c.children[1], c.children[1].kind == K::kSum, out);
          continue;
        }
        if (i > 0) out += " + ";
        print_wrapped(c, c.kind == K::kSum, out);
      }
      return;
    case K::kProd:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const RatExpr& c = e.children[i];
        if (i > 0) out += "*";
        print_wrapped(c, c.kind == K::kSum || c.kind == K::kProd, out);
      }
      return;
  }
}

EvalResult eval_at(const RatExpr& e, const std::vector<DenseMatrix>& tuple,
                   std::vector<std::size_t>& path) {
  using K = RatExpr::Kind;
  const FieldPtr& field = tuple[0].field();
  const std::size_t n = tuple[0].rows();
  switch (e.kind) {
    case K::kConst:
      return {DenseMatrix::identity(field, n).scaled(field->from_int(e.value)), {}};
    case K::kVar:
      return {tuple.at(e.var - 1), {}};
    case K::kInv: {
      path.push_back(0);
      EvalResult inner = eval_at(e.children[0], tuple, path);
      path.pop_back();
      if (!inner.ok()) return inner;
      auto inv = try_inverse(*inner.value);
      if (!inv) return {std::nullopt, path};
      return {std::move(*inv), {}};
    }
    case K::kSum:
    case K::kProd: {
      std::optional<DenseMatrix> acc;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        path.push_back(i);
        EvalResult part = eval_at(e.children[i], tuple, path);
        path.pop_back();
        if (!part.ok()) return part;
        if (!acc) {
          acc = std::move(*part.value);
        } else if (e.kind == K::kSum) {
          *acc += *part.value;
        } else {
          acc = *acc * *part.value;
        }
      }
      return {std::move(acc), {}};
    }
  }
  return {};
}

DenseMatrix random_matrix(const FieldPtr& field, std::size_t n, CounterRng& rng) {
  return DenseMatrix::random(field, n, n, rng);
}

}  // namespace

RatExpr parse_ratexpr(std::string_view text) { return Parser(text).parse(); }

std::string print_ratexpr(const RatExpr& e) {
  std::string out;
  print_to(e, out);
  return out;
}

EvalResult evaluate(const RatExpr& e, const std::vector<DenseMatrix>& tuple) {
  if (tuple.empty()) throw InputError("evaluation needs at least one matrix");
  if (e.max_var() > tuple.size()) {
    throw InputError("expression uses z" + std::to_string(e.max_var()) + " but only " +
                     std::to_string(tuple.size()) + " matrices were given");
  }
  const std::size_t n = tuple[0].rows();
  for (const auto& m : tuple) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("tuple matrices must share one square size");
    if (!same_field(m.field(), tuple[0].field())) throw InputError("tuple matrices must share one field");
  }
  std::vector<std::size_t> path;
  return eval_at(e, tuple, path);
}

bool in_domain(const RatExpr& e, const std::vector<DenseMatrix>& tuple) {
  return evaluate(e, tuple).ok();
}

EquivVerdict equiv_probabilistic(const RatExpr& r, const RatExpr& s, const FieldPtr& base,
                                 const EquivOptions& options) {
  if (options.sizes.empty()) throw InputError("no matrix sizes to sample");
  for (auto n : options.sizes) {
    if (n == 0) throw InputError("matrix sizes must be positive");
  }
  const FieldPtr field = base->extension(options.ext_deg);
  const std::size_t vars = std::max<std::size_t>({1, r.max_var(), s.max_var()});
  const std::size_t total = options.sizes.size() * options.trials;
  const CounterRng root(options.seed);

  struct Sample {
    std::vector<DenseMatrix> point;
    EvalResult left, right;
  };
  auto draw = [&](std::size_t index) {
    CounterRng rng = root.derive(index);
    const std::size_t n = options.sizes[index / options.trials];
    Sample smp;
    for (std::size_t v = 0; v < vars; ++v) smp.point.push_back(random_matrix(field, n, rng));
    smp.left = evaluate(r, smp.point);
    smp.right = evaluate(s, smp.point);
    return smp;
  };

  EquivVerdict verdict;
  constexpr std::size_t kBatch = 64;
  for (std::size_t start = 0; start < total; start += kBatch) {
    const std::size_t count = std::min(kBatch, total - start);
    std::vector<std::optional<Sample>> batch(count);
    parallel_for(count, options.threads, [&](std::size_t i) { batch[i] = draw(start + i); });
    for (std::size_t i = 0; i < count; ++i) {
      Sample& smp = *batch[i];
      ++verdict.trials_run;
      if (!smp.left.ok() || !smp.right.ok()) continue;
      ++verdict.common_samples;
      if (*smp.left.value == *smp.right.value) continue;
      // Re-evaluate from scratch before reporting.
      const EvalResult l = evaluate(r, smp.point);
      const EvalResult rr = evaluate(s, smp.point);
      if (!l.ok() || !rr.ok() || *l.value == *rr.value) {
        throw std::logic_error("counterexample failed re-verification");
      }
      verdict.kind = EquivVerdict::Kind::kCounterexample;
      verdict.size = smp.point[0].rows();
      verdict.point = std::move(smp.point);
      verdict.left = l.value;
      verdict.right = rr.value;
      return verdict;
    }
  }
  verdict.kind = verdict.common_samples > 0 ? EquivVerdict::Kind::kConsistent
                                            : EquivVerdict::Kind::kNoCommonDomain;
  return verdict;
}

}  // namespace linrep
