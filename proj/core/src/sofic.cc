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

#include "linrep/sofic.h"

#include <algorithm>
#include <map>

#include "linrep/errors.h"

namespace linrep {

AlgebraElement parse_poly(std::string_view text, const FieldPtr& field) {
  std::string expanded;
  std::vector<std::size_t> origin;  // expanded index -> original index
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'x') {
      expanded += "g1";
      origin.push_back(i);
      origin.push_back(i);
    } else if (text[i] == 'g') {
      throw ParseError("unexpected 'g' in polynomial", i);
    } else {
      expanded += text[i];
      origin.push_back(i);
    }
  }
  origin.push_back(text.size());
  try {
    return parse_element(expanded, field, 1);
  } catch (const ParseError& e) {
    const std::size_t pos = std::min(e.position(), origin.size() - 1);
    std::string msg = e.what();
    msg.erase(msg.rfind(" at position "));
    for (std::size_t at = msg.find("g1"); at != std::string::npos; at = msg.find("g1", at)) {
      msg.replace(at, 2, "x");
    }
    throw ParseError(msg, origin[pos]);
  }
}

std::string poly_to_string(const AlgebraElement& a) {
  std::string s = to_string(a);
  for (std::size_t at = s.find("g1"); at != std::string::npos; at = s.find("g1", at)) {
    s.replace(at, 2, "x");
  }
  return s;
}

AlgebraElement monomial(const FieldPtr& field, int exponent) {
  return AlgebraElement::word(field, 1, Word::generator(1, exponent));
}

int exponent_of(const Word& w) {
  int e = 0;
  for (const auto& l : w.letters()) {
    if (l.gen != 1) throw InputError("Laurent polynomials use the single generator x");
    e += l.exp;
  }
  return e;
}

int max_degree(const AlgebraElement& a) {
  int d = 0;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    const int e = exponent_of(w);
    d = first ? e : std::max(d, e);
    first = false;
  }
  return d;
}

int min_degree(const AlgebraElement& a) {
  int d = 0;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    const int e = exponent_of(w);
    d = first ? e : std::min(d, e);
    first = false;
  }
  return d;
}

std::vector<AlgebraElement> polynomial_basis(const FieldPtr& field, std::size_t count) {
  std::vector<AlgebraElement> out;
  for (std::size_t j = 0; j < count; ++j) out.push_back(monomial(field, static_cast<int>(j)));
  return out;
}

std::vector<AlgebraElement> laurent_basis(const FieldPtr& field, std::size_t count) {
  std::vector<AlgebraElement> out;
  for (std::size_t j = 0; j < count; ++j) {
    const int k = static_cast<int>((j + 1) / 2);
    out.push_back(monomial(field, j % 2 == 1 ? k : -k));
  }
  return out;
}

DenseMatrix truncation_map(const PolyInstance& inst, const AlgebraElement& d) {
  if (d.rank() != 1) throw InputError("truncation maps take Laurent polynomials");
  const auto m = static_cast<long>(inst.m);
  const Field& f = *inst.field;
  DenseMatrix out(inst.field, inst.m, inst.m);
  for (const auto& [w, c] : d.terms()) {
    const long e = exponent_of(w);
    for (long j = 0; j < m; ++j) {
      const long k = j + e;
      if (k < 0 || k >= m) continue;
      out(k, j) = f.add(out(k, j), c);
    }
  }
  return out;
}

FiniteApproxMap truncation_approx_map(const PolyInstance& inst,
                                      const std::vector<AlgebraElement>& basis) {
  if (basis.empty() || !(basis[0] == AlgebraElement::one(inst.field, 1))) {
    throw InputError("the first basis element must be 1");
  }
  std::vector<DenseMatrix> phi;
  for (const auto& b : basis) phi.push_back(truncation_map(inst, b));
  FiniteApproxMap map(inst.field, inst.m, std::move(phi));

  // Coefficient space indexed by the exponents the basis uses.
  std::map<int, std::size_t> row_of;
  for (const auto& b : basis) {
    for (const auto& [w, c] : b.terms()) row_of.emplace(exponent_of(w), 0);
  }
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;
  DenseMatrix coeffs(inst.field, row_of.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [w, c] : basis[j].terms()) coeffs(row_of[exponent_of(w)], j) = c;
  }
  if (rank(coeffs) != basis.size()) throw InputError("basis elements are linearly dependent");

  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const AlgebraElement p = basis[a] * basis[b];
      Vec target(row_of.size(), 0);
      bool inside = true;
      for (const auto& [w, c] : p.terms()) {
        auto it = row_of.find(exponent_of(w));
        if (it == row_of.end()) {
          inside = false;
          break;
        }
        target[it->second] = c;
      }
      if (!inside) continue;
      if (auto x = solve(coeffs, target)) map.set_product(a, b, std::move(*x));
    }
  }
  return map;
}

FolnerPair folner_pair(const PolyInstance& inst, const std::vector<AlgebraElement>& e,
                       Rational delta) {
  if (delta <= 0 || delta >= 1) throw InputError("delta must lie strictly between 0 and 1");
  std::size_t d = 0;
  for (const auto& a : e) {
    if (a.rank() != 1) throw InputError("Folner pairs take polynomials in x");
    if (a.is_zero()) continue;
    if (min_degree(a) < 0) throw InputError("E must consist of polynomials (no negative powers)");
    d = std::max(d, static_cast<std::size_t>(max_degree(a)));
  }
  // (m - d) / m >= 1 - delta  <=>  m * delta >= d
  std::size_t m = d + 1;
  while (Rational(static_cast<std::int64_t>(m)) * delta < static_cast<std::int64_t>(d)) ++m;
  if (m > inst.m) {
    throw InputError("Folner pair needs m = " + std::to_string(m) + " but the instance caps at " +
                     std::to_string(inst.m));
  }
  auto prefix = [&](std::size_t len) {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < len; ++j) {
      Vec v(inst.m, 0);
      v[j] = 1;
      rows.push_back(std::move(v));
    }
    return Subspace::span(inst.field, inst.m, rows);
  };
  return FolnerPair{m, d, prefix(m - d), prefix(m)};
}

SoficReport sofic_check(const SoficData& data, std::size_t k) {
  if (k == 0 || k > data.maps.size()) throw InputError("map index out of range");
  if (data.s.size() < k) throw InputError("no defect bound s_k for this map");
  const FiniteApproxMap& phi = data.maps[k - 1];
  const auto n = static_cast<std::int64_t>(phi.dim());
  SoficReport rep;
  rep.k = k;
  rep.span = data.spans.empty() ? std::min(k, phi.basis_count()) : data.spans.at(k - 1);
  if (rep.span == 0 || rep.span > phi.basis_count()) throw InputError("span exceeds the basis");

  rep.unit = phi.phi(0) == DenseMatrix::identity(phi.field(), phi.dim());

  const Subspace g = good_subspace(phi, rep.span);
  rep.defect_bound = Rational(n - static_cast<std::int64_t>(g.dim()), n);
  for (std::size_t a = 0; a < rep.span; ++a) {
    for (std::size_t b = 0; b < rep.span; ++b) {
      const DenseMatrix defect = phi.evaluate(*phi.product(a, b)) - phi.phi(a) * phi.phi(b);
      rep.defect_basis_max =
          std::max(rep.defect_basis_max, Rational(static_cast<std::int64_t>(rank(defect)), n));
    }
  }
  rep.defect_ok = rep.defect_bound < data.s[k - 1];
  if (!rep.defect_ok) rep.failure = "defect bound not below s_k";

  rep.rank_ok = true;
  rep.min_rank = 1;
  for (const auto& [coords, j] : data.j_values) {
    if (coords.size() != phi.basis_count()) throw InputError("element coordinates have wrong length");
    if (vec_is_zero(coords)) continue;
    bool in_span = true;
    for (std::size_t t = rep.span; t < coords.size(); ++t) in_span = in_span && coords[t] == 0;
    if (!in_span) continue;
    ++rep.checked_elements;
    const Rational rk(static_cast<std::int64_t>(rank(phi.evaluate(coords))), n);
    rep.min_rank = std::min(rep.min_rank, rk);
    if (rk < j) {
      rep.rank_ok = false;
      if (rep.failure.empty()) rep.failure = "rank below j(a) for some element";
    }
  }
  if (!rep.unit) rep.failure = "phi(1) is not the identity";
  return rep;
}

std::vector<Word> words_up_to(std::uint32_t r, std::size_t m, std::size_t cap) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= m; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::uint32_t g = 1; g <= r; ++g) {
        for (int e : {1, -1}) {
          const Letter l{g, static_cast<std::int8_t>(e)};
          const auto& ls = out[i].letters();
          if (!ls.empty() && ls.back() == l.inverse()) continue;
          std::vector<Letter> next = ls;
          next.push_back(l);
          out.emplace_back(next);
          if (out.size() > cap) {
            throw BudgetExceeded("more than " + std::to_string(cap) + " words of length <= " +
                                 std::to_string(m));
          }
        }
      }
    }
    begin = end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionReport approx_extension_check(const Representation& rho, const FiniteApproxMap& phi,
                                       const std::vector<Vec>& theta_images,
                                       const std::vector<Vec>& theta_inverse_images,
                                       std::size_t m) {
  if (rho.dim() != phi.dim()) throw DimensionMismatch("rho and phi act on different spaces");
  if (theta_images.size() != rho.rank() || theta_inverse_images.size() != rho.rank()) {
    throw InputError("need theta(gamma_s) and its inverse for every generator");
  }
  const auto n = static_cast<std::int64_t>(phi.dim());
  ExtensionReport rep;
  rep.good_map = is_good_map(phi, m);
  Subspace agree = Subspace::full(phi.field(), phi.dim());
  for (const Word& w : words_up_to(rho.rank(), m, std::size_t{1} << 16)) {
    Vec coords = phi.unit();
    for (const auto& l : w.letters()) {
      const Vec& letter = l.exp > 0 ? theta_images[l.gen - 1] : theta_inverse_images[l.gen - 1];
      coords = phi.multiply_or_throw(coords, letter);
    }
    const DenseMatrix diff = phi.evaluate(coords) - rho.image(w);
    rep.word_max_distance =
        std::max(rep.word_max_distance, Rational(static_cast<std::int64_t>(rank(diff)), n));
    agree = subspace_intersection(agree, kernel(diff));
    ++rep.words;
  }
  rep.agreement_bound = Rational(n - static_cast<std::int64_t>(agree.dim()), n);
  return rep;
}

}  // namespace linrep
