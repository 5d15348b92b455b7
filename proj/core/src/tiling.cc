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

#include "linrep/tiling.h"

#include <algorithm>
#include <stdexcept>

#include "linrep/errors.h"
#include "linrep/rng.h"

namespace linrep {
namespace {

bool supported_below(std::span<const Scalar> v, std::size_t i) {
  for (std::size_t k = i; k < v.size(); ++k) {
    if (v[k] != 0) return false;
  }
  return true;
}

void require_i(const FiniteApproxMap& m, std::size_t i) {
  if (i == 0 || i > m.basis_count()) {
    throw InputError("i = " + std::to_string(i) + " outside 1.." + std::to_string(m.basis_count()));
  }
}

void require_f(const FiniteApproxMap& m, const FSubspaceData& f) {
  if (f.basis.empty()) throw InputError("F must contain the unit");
  for (const auto& v : f.basis) {
    if (v.size() != m.basis_count()) throw DimensionMismatch("F coordinate vector has wrong length");
  }
}

void require_h(const FiniteApproxMap& m, const Subspace& h) {
  if (h.ambient() != m.dim()) throw DimensionMismatch("H is not a subspace of K^n");
}

}  // namespace

FiniteApproxMap::FiniteApproxMap(FieldPtr field, std::size_t n, std::vector<DenseMatrix> phi)
    : field_(std::move(field)), n_(n), phi_(std::move(phi)) {
  if (phi_.empty()) throw InputError("approximation map needs at least the unit");
  for (const auto& p : phi_) {
    if (p.rows() != n_ || p.cols() != n_) throw InputError("phi images must be n x n");
    if (!same_field(p.field(), field_)) throw InputError("phi image over a different field");
  }
  if (!(phi_[0] == DenseMatrix::identity(field_, n_))) {
    throw InputError("phi must be unit preserving: phi(r_0) != Id");
  }
}

void FiniteApproxMap::set_product(std::size_t a, std::size_t b, Vec coords) {
  if (a >= phi_.size() || b >= phi_.size()) throw InputError("product index out of range");
  if (coords.size() != phi_.size()) throw InputError("product coordinates have wrong length");
  for (Scalar c : coords) {
    if (c >= field_->q()) throw InputError("product coordinate outside field");
  }
  mult_[{a, b}] = std::move(coords);
}

const Vec* FiniteApproxMap::product(std::size_t a, std::size_t b) const {
  auto it = mult_.find({a, b});
  return it == mult_.end() ? nullptr : &it->second;
}

std::optional<Vec> FiniteApproxMap::multiply(std::span<const Scalar> x,
                                             std::span<const Scalar> y) const {
  const Field& f = *field_;
  Vec out(phi_.size(), 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) continue;
      const Vec* p = product(a, b);
      if (p == nullptr) return std::nullopt;
      const Scalar c = f.mul(x[a], y[b]);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(out[k], f.mul(c, (*p)[k]));
    }
  }
  return out;
}

Vec FiniteApproxMap::multiply_or_throw(std::span<const Scalar> x, std::span<const Scalar> y) const {
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (x[a] != 0 && y[b] != 0 && product(a, b) == nullptr) {
        throw InputError("multiplication table has no entry for r_" + std::to_string(a) + " * r_" +
                         std::to_string(b));
      }
    }
  }
  return *multiply(x, y);
}

DenseMatrix FiniteApproxMap::evaluate(std::span<const Scalar> coords) const {
  if (coords.size() != phi_.size()) throw DimensionMismatch("element coordinates have wrong length");
  DenseMatrix out(field_, n_, n_);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] != 0) out.add_scaled(coords[j], phi_[j]);
  }
  return out;
}

Vec FiniteApproxMap::unit() const { return basis_vector(0); }

Vec FiniteApproxMap::basis_vector(std::size_t index) const {
  Vec v(phi_.size(), 0);
  v.at(index) = 1;
  return v;
}

Subspace good_subspace(const FiniteApproxMap& m, std::size_t i) {
  require_i(m, i);
  const std::size_t n = m.dim();
  // Defects are mostly zero away from a few rows; only nonzero rows matter.
  std::vector<Vec> rows;
  for (std::size_t s = 0; s < i; ++s) {
    for (std::size_t t = 0; t < i; ++t) {
      const Vec* p = m.product(s, t);
      if (p == nullptr) {
        throw InputError("multiplication table has no entry for r_" + std::to_string(s) + " * r_" +
                         std::to_string(t));
      }
      const DenseMatrix defect = m.evaluate(*p) - m.phi(s) * m.phi(t);
      for (std::size_t r = 0; r < n; ++r) {
        if (!vec_is_zero(defect.row(r))) rows.emplace_back(defect.row(r).begin(), defect.row(r).end());
      }
    }
  }
  if (rows.empty()) return Subspace::full(m.field(), n);
  return kernel(DenseMatrix::stack_rows(m.field(), n, rows));
}

bool is_good_map(const FiniteApproxMap& m, std::size_t i) {
  const std::size_t g = good_subspace(m, i).dim();
  // g / n >= 1 - 1/i  <=>  g * i >= (i - 1) * n
  return g * i >= (i - 1) * m.dim();
}

namespace {

Subspace candidate_space_given(const FiniteApproxMap& m, const FSubspaceData& f,
                               const Subspace& target) {
  Subspace a = Subspace::full(m.field(), m.dim());
  for (const auto& fv : f.basis) {
    a = subspace_intersection(a, preimage(m.evaluate(fv), target));
  }
  return a;
}

}  // namespace

Subspace candidate_space(const FiniteApproxMap& m, const FSubspaceData& f, const Subspace& h,
                         std::size_t i) {
  require_f(m, f);
  require_h(m, h);
  const Subspace target = subspace_intersection(good_subspace(m, i), h);
  return candidate_space_given(m, f, target);
}

Subspace tile_of(const FiniteApproxMap& m, const FSubspaceData& f, std::span<const Scalar> x) {
  if (x.size() != m.dim()) throw DimensionMismatch("center has wrong length");
  std::vector<Vec> rows;
  rows.reserve(f.basis.size());
  for (const auto& fv : f.basis) rows.push_back(m.evaluate(fv).apply(x));
  return Subspace::span(m.field(), m.dim(), rows);
}

bool is_center(const FiniteApproxMap& m, const FSubspaceData& f, const Subspace& h, std::size_t i,
               std::span<const Scalar> x) {
  require_f(m, f);
  require_h(m, h);
  if (tile_of(m, f, x).dim() != f.dim()) return false;
  const Subspace g = good_subspace(m, i);
  for (const auto& fv : f.basis) {
    const Vec y = m.evaluate(fv).apply(x);
    if (!h.contains(y) || !g.contains(y)) return false;
  }
  return true;
}

PreconditionReport precondition_check(const FiniteApproxMap& m, const FSubspaceData& f,
                                      const Subspace& h, std::size_t i, Rational delta) {
  require_i(m, i);
  require_f(m, f);
  require_h(m, h);
  PreconditionReport rep;
  const auto n = static_cast<std::int64_t>(m.dim());
  const Vec unit = m.unit();

  rep.in_span = true;
  for (std::size_t j = 0; j < f.basis.size(); ++j) {
    if (!supported_below(f.basis[j], i)) rep.in_span = false;
    if (f.basis[j] == unit) continue;
    auto it = f.inverses.find(j);
    if (it == f.inverses.end() || !supported_below(it->second, i)) rep.in_span = false;
  }

  std::optional<Subspace> g;
  try {
    g = good_subspace(m, i);
  } catch (const InputError&) {
    g.reset();
  }
  if (g) {
    rep.dim_good = g->dim();
    rep.good_map = g->dim() * i >= (i - 1) * m.dim();
    const Subspace a = candidate_space_given(m, f, subspace_intersection(*g, h));
    rep.dim_candidate = a.dim();
    rep.candidate_dim = Rational(static_cast<std::int64_t>(a.dim())) >= (1 - delta / 4) * n;
  }

  for (const auto& fv : f.basis) {
    const std::size_t ker = kernel(m.evaluate(fv)).dim();
    rep.max_kernel = std::max(rep.max_kernel, ker);
  }
  rep.kernel_bound = Rational(static_cast<std::int64_t>(rep.max_kernel)) <= delta * n / 3;
  rep.f_size = Rational(static_cast<std::int64_t>(f.dim())) <= delta * n / 3;
  rep.h_dim = h.dim() * i >= (i - 1) * m.dim();
  return rep;
}

TilingCertificate greedy_tiling(const FiniteApproxMap& m, const FSubspaceData& f,
                                const Subspace& h, std::size_t i, Rational delta,
                                const TilingOptions& options) {
  require_i(m, i);
  require_f(m, f);
  require_h(m, h);
  const std::size_t n = m.dim();
  const std::size_t dim_f = f.dim();
  const Subspace target = subspace_intersection(good_subspace(m, i), h);
  const Subspace a = candidate_space_given(m, f, target);
  const PreconditionReport pre = precondition_check(m, f, h, i, delta);

  std::vector<DenseMatrix> f_images;
  for (const auto& fv : f.basis) f_images.push_back(m.evaluate(fv));

  TilingCertificate cert;
  cert.i = i;
  cert.delta = delta;
  cert.dim_f = dim_f;
  cert.h = h;
  cert.guaranteed = pre.all();

  Subspace covered = Subspace::zero(m.field(), n);
  auto try_candidate = [&](const Vec& x) {
    std::vector<Vec> rows;
    for (const auto& img : f_images) rows.push_back(img.apply(x));
    Subspace tile = Subspace::span(m.field(), n, rows);
    if (tile.dim() != dim_f) return;
    Subspace grown = subspace_sum(covered, tile);
    if (grown.dim() != covered.dim() + dim_f) return;
    covered = std::move(grown);
    cert.centers.push_back(x);
    cert.tiles.push_back(std::move(tile));
  };

  // Every tile lies in G and H, so nothing more fits once this is reached.
  auto saturated = [&] { return covered.dim() + dim_f > target.dim(); };

  for (const auto& x : a.basis()) {
    if (saturated()) break;
    try_candidate(x);
  }
  CounterRng rng(options.seed);
  for (std::size_t t = 0; t < options.budget && !saturated() && !a.is_zero(); ++t) {
    Vec coords(a.dim());
    for (auto& c : coords) c = m.field()->random(rng);
    try_candidate(a.combine(coords));
  }

  cert.coverage = cert.centers.size() * dim_f;
  const bool reached = Rational(static_cast<std::int64_t>(cert.coverage)) >=
                       (1 - delta) * static_cast<std::int64_t>(n);
  cert.partial = !reached;
  if (cert.guaranteed && !reached) {
    throw std::logic_error("tiling bound violated: coverage " + std::to_string(cert.coverage) +
                           " below (1 - delta) n with every precondition satisfied");
  }
  return cert;
}

CertificateCheck verify_certificate(const TilingCertificate& cert, const FiniteApproxMap& m,
                                    const FSubspaceData& f, const Subspace& h, std::size_t i,
                                    Rational delta) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  try {
    require_i(m, i);
    require_f(m, f);
    require_h(m, h);
  } catch (const InputError& e) {
    return fail(e.what());
  }
  const std::size_t n = m.dim();
  Subspace g;
  try {
    g = good_subspace(m, i);
  } catch (const InputError& e) {
    return fail(e.what());
  }
  std::vector<Subspace> tiles;
  for (std::size_t c = 0; c < cert.centers.size(); ++c) {
    const Vec& x = cert.centers[c];
    if (x.size() != n) return fail("center " + std::to_string(c) + " has wrong length");
    for (Scalar s : x) {
      if (s >= m.field()->q()) return fail("center " + std::to_string(c) + " has an entry outside the field");
    }
    Subspace tile = tile_of(m, f, x);
    if (tile.dim() != f.dim()) return fail("center " + std::to_string(c) + ": dim phi(F)(x) != dim F");
    for (const auto& fv : f.basis) {
      const Vec y = m.evaluate(fv).apply(x);
      if (!h.contains(y)) return fail("center " + std::to_string(c) + ": phi(F)(x) not inside H");
      if (!g.contains(y)) return fail("center " + std::to_string(c) + ": phi(f)(x) not i-good");
    }
    tiles.push_back(std::move(tile));
  }
  if (!cert.tiles.empty() && cert.tiles != tiles) return fail("stored tiles differ from recomputed tiles");
  if (!subspaces_independent(tiles)) return fail("tiles are not independent");
  const std::size_t coverage = tiles.size() * f.dim();
  if (cert.coverage != coverage) return fail("claimed coverage differs from recomputed coverage");
  if (Rational(static_cast<std::int64_t>(coverage)) < (1 - delta) * static_cast<std::int64_t>(n)) {
    return fail("coverage " + std::to_string(coverage) + " below (1 - delta) n");
  }
  return CertificateCheck{true, {}};
}

}  // namespace linrep
