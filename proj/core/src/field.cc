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

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "linrep/errors.h"
#include "linrep/rational.h"

namespace linrep {
namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Poly digits_of(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Poly d(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t code_of(const Poly& d, std::uint32_t p) {
  std::uint64_t c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return static_cast<std::uint32_t>(c);
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree <= deg / 2.
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits_of(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t deg) {
  const std::uint64_t count = ipow(p, deg);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = digits_of(c, p, deg);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw InputError("no irreducible polynomial found");  // unreachable for prime p
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t p = spec_.p;
  const std::uint32_t deg = spec_.deg;
  q_ = static_cast<std::uint32_t>(ipow(p, deg));

  auto mulmod = [&](Scalar a, Scalar b) -> Scalar {
    const Poly da = digits_of(a, p, deg);
    const Poly db = digits_of(b, p, deg);
    Poly prod(2 * deg, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < deg; ++j) {
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
    }
    Poly r = poly_mod(prod, spec_.modulus, p);
    r.resize(deg, 0);
    return code_of(r, p);
  };

  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = 1;
  } else {
    bool found = false;
    for (Scalar g = 2; g < q_ && !found; ++g) {
      Scalar x = 1;
      std::uint32_t k = 0;
      for (; k < q_ - 1; ++k) {
        if (k > 0 && x == 1) break;
        exp_[k] = x;
        x = mulmod(x, g);
      }
      found = (k == q_ - 1 && x == 1);
    }
    if (!found) throw InputError("no primitive element found; modulus not irreducible?");
  }
  for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;

  if (p != 2) {
    neg_table_.resize(q_);
    for (Scalar a = 0; a < q_; ++a) {
      Poly d = digits_of(a, p, deg);
      for (auto& c : d) c = (p - c) % p;
      neg_table_[a] = code_of(d, p);
    }
    if (q_ <= 256) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (Scalar a = 0; a < q_; ++a) {
        for (Scalar b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
      }
    }
  }
}

Scalar Field::add_digits(Scalar a, Scalar b) const {
  const std::uint32_t p = spec_.p;
  Scalar out = 0;
  Scalar place = 1;
  for (std::uint32_t i = 0; i < spec_.deg; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw SingularMatrixError("inverse of zero field element");
  if (a == 1) return 1;
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Scalar Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  return static_cast<Scalar>(r);
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << spec_.p;
  if (spec_.deg > 1) os << "^" << spec_.deg;
  os << ")";
  return os.str();
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t deg, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (deg == 0) throw InputError("field degree must be positive");
  if (ipow(p, deg) > kMaxOrder) {
    throw InputError("field order " + std::to_string(p) + "^" + std::to_string(deg) +
                     " exceeds supported maximum");
  }
  if (modulus.empty()) {
    modulus = default_modulus(p, deg);
  } else {
    if (modulus.size() != deg + 1 || modulus.back() != 1) {
      throw InputError("modulus must be monic of degree " + std::to_string(deg));
    }
    for (auto c : modulus) {
      if (c >= p) throw InputError("modulus coefficient out of range");
    }
    if (!is_irreducible(p, modulus)) throw InputError("modulus is not irreducible");
  }

  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, FieldPtr> cache;
  auto key = std::make_tuple(p, deg, modulus);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const Field>(FieldSpec{p, deg, std::move(modulus)});
  cache.emplace(std::move(key), field);
  return field;
}

FieldPtr Field::extension(std::uint32_t factor) const {
  if (factor == 0) throw InputError("extension degree must be positive");
  return make(spec_.p, spec_.deg * factor);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

Rational parse_rational(const std::string& text) {
  auto fail = [&] { return InputError("malformed rational '" + text + "'"); };
  if (text.empty()) throw fail();
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      std::size_t used = 0;
      std::int64_t num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw fail();
      std::string den_text = text.substr(slash + 1);
      std::int64_t den = std::stoll(den_text, &used);
      if (used != den_text.size() || den == 0) throw fail();
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string whole = text.substr(0, dot);
      std::string frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 15) throw fail();
      for (char c : frac) {
        if (c < '0' || c > '9') throw fail();
      }
      bool negative = !whole.empty() && whole[0] == '-';
      std::int64_t w = 0;
      if (!whole.empty() && whole != "-") {
        std::size_t used = 0;
        w = std::stoll(whole, &used);
        if (used != whole.size()) throw fail();
      }
      std::int64_t den = static_cast<std::int64_t>(ipow(10, static_cast<std::uint32_t>(frac.size())));
      Rational f(std::stoll(frac), den);
      Rational r = Rational(negative ? -w : w) + f;
      return negative ? -r : r;
    }
    std::size_t used = 0;
    std::int64_t v = std::stoll(text, &used);
    if (used != text.size()) throw fail();
    return Rational(v);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw fail();
  }
}

}  // namespace linrep
