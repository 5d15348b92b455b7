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

#include "linrep/representation.h"

#include <algorithm>
#include <string>

#include "linrep/errors.h"
#include "linrep/subspace.h"

namespace linrep {

Representation::Representation(FieldPtr field, std::vector<DenseMatrix> generators)
    : field_(std::move(field)), n_(0), generators_(std::move(generators)) {
  if (!generators_.empty()) n_ = generators_[0].rows();
  inverses_.reserve(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!same_field(g.field(), field_)) throw InputError("generator over a different field");
    if (g.rows() != n_ || g.cols() != n_) {
      throw InputError("generator " + std::to_string(i + 1) + " is not " + std::to_string(n_) + "x" +
                       std::to_string(n_));
    }
    auto inv = try_inverse(g);
    if (!inv) throw InputError("generator " + std::to_string(i + 1) + " is not invertible");
    inverses_.push_back(*std::move(inv));
  }
}

DenseMatrix Representation::image(const Word& w) const {
  if (w.max_generator() > rank()) throw DimensionMismatch("word uses a generator beyond r");
  DenseMatrix out = DenseMatrix::identity(field_, n_);
  for (const auto& l : w.letters()) {
    out = out * (l.exp > 0 ? generators_[l.gen - 1] : inverses_[l.gen - 1]);
  }
  return out;
}

DenseMatrix Representation::image(const AlgebraElement& a) const {
  if (!same_field(a.field(), field_) || a.rank() != rank()) {
    throw DimensionMismatch("element and representation differ in field or rank");
  }
  DenseMatrix out(field_, n_, n_);
  for (const auto& [w, c] : a.terms()) out.add_scaled(c, image(w));
  return out;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw InputError("direct sum of no representations");
  const auto& field = parts[0].field();
  const std::uint32_t r = parts[0].rank();
  std::size_t n = 0;
  for (const auto& p : parts) {
    if (!same_field(p.field(), field) || p.rank() != r) {
      throw InputError("direct sum of representations with different field or rank");
    }
    n += p.dim();
  }
  std::vector<DenseMatrix> gens;
  for (std::uint32_t i = 1; i <= r; ++i) {
    DenseMatrix g(field, n, n);
    std::size_t off = 0;
    for (const auto& p : parts) {
      g.set_block(off, off, p.generator(i));
      off += p.dim();
    }
    gens.push_back(std::move(g));
  }
  return Representation(field, std::move(gens));
}

DenseMatrix apply_matrix(const Representation& rep, const AlgebraMatrix& a) {
  if (!same_field(rep.field(), a.field()) || rep.rank() != a.rank()) {
    throw DimensionMismatch("matrix and representation differ in field or rank");
  }
  const std::size_t nk = rep.dim();
  DenseMatrix out(rep.field(), a.size() * nk, a.size() * nk);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j).is_zero()) continue;
      out.set_block(i * nk, j * nk, rep.image(a(i, j)));
    }
  }
  return out;
}

NormalizedRank normalized_rank(const Representation& rep, const AlgebraMatrix& a) {
  return NormalizedRank{rank(apply_matrix(rep, a)), rep.dim()};
}

AtiyahReport atiyah_check(const RankProfile& profile, std::size_t tail_window, Rational tol) {
  if (tail_window == 0) throw InputError("tail window must be positive");
  if (profile.size() < tail_window) {
    throw InputError("profile has " + std::to_string(profile.size()) + " entries, window needs " +
                     std::to_string(tail_window));
  }
  AtiyahReport rep;
  rep.tolerance = tol;
  rep.limit_estimate = profile.back().value();
  Rational lo = rep.limit_estimate;
  Rational hi = rep.limit_estimate;
  for (std::size_t i = profile.size() - tail_window; i < profile.size(); ++i) {
    lo = std::min(lo, profile[i].value());
    hi = std::max(hi, profile[i].value());
  }
  rep.tail_oscillation = hi - lo;
  rep.nearest_integer = nearest_integer(rep.limit_estimate);
  rep.integral = abs(rep.limit_estimate - Rational(rep.nearest_integer)) <= tol &&
                 rep.tail_oscillation <= tol;
  return rep;
}

DenseMatrix repair_to_invertible(const DenseMatrix& m) {
  if (!m.square()) throw InputError("repair_to_invertible needs a square matrix");
  const std::size_t n = m.rows();
  const Subspace ker = kernel(m);
  if (ker.is_zero()) return m;
  const Subspace col = Subspace::column_space(m);
  const Subspace ker_complement = complement_of(ker);
  const Subspace col_complement = complement_of(col);

  // source columns: kernel complement basis, then kernel basis.
  // target columns: their images under m, then a column-space complement.
  std::vector<Vec> source = ker_complement.basis();
  std::vector<Vec> target;
  target.reserve(n);
  for (const auto& v : ker_complement.basis()) target.push_back(m.apply(v));
  source.insert(source.end(), ker.basis().begin(), ker.basis().end());
  target.insert(target.end(), col_complement.basis().begin(), col_complement.basis().end());

  DenseMatrix s = DenseMatrix::stack_rows(m.field(), n, source).transpose();
  DenseMatrix t = DenseMatrix::stack_rows(m.field(), n, target).transpose();
  return t * inverse(s);
}

}  // namespace linrep
