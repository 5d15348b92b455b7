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

#include "linrep/hyperfinite.h"

#include <algorithm>
#include <limits>
#include <span>

#include "linrep/errors.h"
#include "linrep/parallel.h"
#include "linrep/rng.h"

namespace linrep {
namespace {

Rational growth(const Representation& rep, const Subspace& w) {
  return Rational(static_cast<std::int64_t>(neighbourhood(rep, w).dim()),
                  static_cast<std::int64_t>(w.dim()));
}

// Strict weak order on (ratio, subspace) candidates.
bool better(const Rational& ra, const Subspace& a, const Rational& rb, const Subspace& b) {
  if (ra != rb) return ra < rb;
  return a < b;
}

struct Best {
  std::optional<Rational> ratio;
  Subspace w;

  void offer(const Rational& r, const Subspace& cand) {
    if (!ratio || better(r, cand, *ratio, w)) {
      ratio = r;
      w = cand;
    }
  }
};

Best scan(const Representation& rep, const std::vector<Subspace>& batch, std::size_t threads) {
  std::vector<Rational> ratios(batch.size());
  parallel_for(batch.size(), threads, [&](std::size_t i) { ratios[i] = growth(rep, batch[i]); });
  Best best;
  for (std::size_t i = 0; i < batch.size(); ++i) best.offer(ratios[i], batch[i]);
  return best;
}

// Smallest subspace containing v and stable under every generator, or
// nullopt once its dimension passes cap.
std::optional<Subspace> orbit_closure(const Representation& rep, const Vec& v, std::size_t cap) {
  const std::size_t n = rep.dim();
  Subspace c = Subspace::span(rep.field(), n, std::vector<Vec>{v});
  std::vector<Vec> frontier{v};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& u : frontier) {
      for (const auto& g : rep.generators()) {
        Vec gu = g.apply(u);
        if (c.contains(gu)) continue;
        c = subspace_sum(c, Subspace::span(rep.field(), n, std::vector<Vec>{gu}));
        if (c.dim() > cap) return std::nullopt;
        next.push_back(std::move(gu));
      }
    }
    frontier = std::move(next);
  }
  return c;
}

}  // namespace

Subspace neighbourhood(const Representation& rep, const Subspace& v) {
  std::vector<Vec> rows = v.basis();
  for (const auto& g : rep.generators()) {
    for (const auto& b : v.basis()) rows.push_back(g.apply(b));
  }
  return Subspace::span(rep.field(), rep.dim(), rows);
}

WitnessVerdict witness_report(const Representation& rep, const HyperfiniteWitness& w) {
  WitnessVerdict out;
  const auto n = static_cast<std::int64_t>(rep.dim());
  std::vector<Subspace> hoods;
  for (std::size_t j = 0; j < w.subspaces.size(); ++j) {
    const Subspace& v = w.subspaces[j];
    if (v.ambient() != rep.dim() || !same_field(v.field(), rep.field())) {
      throw DimensionMismatch("tile " + std::to_string(j) + " is not a subspace of K^" +
                              std::to_string(rep.dim()));
    }
  }
  for (std::size_t j = 0; j < w.subspaces.size(); ++j) {
    const Subspace& v = w.subspaces[j];
    const std::string tag = "tile " + std::to_string(j);
    if (v.dim() > w.K) {
      out.failure = tag + ": dim " + std::to_string(v.dim()) + " exceeds K";
      return out;
    }
    Subspace hood = neighbourhood(rep, v);
    if (!(Rational(static_cast<std::int64_t>(hood.dim())) <
          (1 + w.epsilon) * static_cast<std::int64_t>(v.dim()))) {
      out.failure = tag + ": neighbourhood dim " + std::to_string(hood.dim()) +
                    " not below (1 + epsilon) dim V";
      return out;
    }
    out.coverage += v.dim();
    hoods.push_back(std::move(hood));
  }
  if (!subspaces_independent(hoods)) {
    out.failure = "neighbourhoods are not independent";
    return out;
  }
  if (Rational(static_cast<std::int64_t>(out.coverage)) < (1 - w.epsilon) * n) {
    out.failure = "coverage " + std::to_string(out.coverage) + " below (1 - epsilon) n";
    return out;
  }
  out.ok = true;
  return out;
}

bool witness_check(const Representation& rep, const HyperfiniteWitness& w) {
  return witness_report(rep, w).ok;
}

Subspace agreement_subspace(const Representation& rep, const FiniteApproxMap& map,
                            const std::vector<Vec>& theta_images) {
  if (map.dim() != rep.dim()) throw DimensionMismatch("map and representation sizes differ");
  if (theta_images.size() != rep.rank()) {
    throw InputError("need one theta image per generator");
  }
  const std::size_t n = rep.dim();
  DenseMatrix stacked(rep.field(), n * theta_images.size(), n);
  for (std::uint32_t s = 1; s <= rep.rank(); ++s) {
    stacked.set_block((s - 1) * n, 0, rep.generator(s) - map.evaluate(theta_images[s - 1]));
  }
  return kernel(stacked);
}

HyperfiniteWitness witness_from_tiling(const Representation& rep, const FiniteApproxMap& map,
                                       const std::vector<Vec>& theta_images,
                                       const TilingCertificate& cert, const FSubspaceData& f,
                                       const std::vector<Vec>& f1, Rational epsilon) {
  const std::size_t m = map.basis_count();
  const Subspace f_span = Subspace::span(map.field(), m, f.basis);
  for (const auto& v : f1) {
    if (v.size() != m) throw DimensionMismatch("F_1 coordinate vector has wrong length");
    if (!f_span.contains(v)) throw InputError("F_1 is not contained in F");
  }
  for (std::size_t s = 0; s < theta_images.size(); ++s) {
    for (const auto& v : f1) {
      if (!f_span.contains(map.multiply_or_throw(theta_images[s], v))) {
        throw InputError("theta(gamma_" + std::to_string(s + 1) + ") F_1 is not contained in F");
      }
    }
  }
  const Subspace agree = agreement_subspace(rep, map, theta_images);
  if (cert.h.ambient() == rep.dim() && !agree.contains(cert.h)) {
    throw InputError("agreement subspace too small: H is not inside it");
  }
  if (cert.h.ambient() != rep.dim()) throw DimensionMismatch("certificate H has wrong ambient");

  std::vector<DenseMatrix> f1_images;
  for (const auto& v : f1) f1_images.push_back(map.evaluate(v));
  HyperfiniteWitness w;
  w.epsilon = epsilon;
  w.K = f.dim();
  for (const auto& x : cert.centers) {
    std::vector<Vec> rows;
    for (const auto& img : f1_images) rows.push_back(img.apply(x));
    w.subspaces.push_back(Subspace::span(rep.field(), rep.dim(), rows));
  }
  return w;
}

ExpansionReport cheeger_exact(const Representation& rep, std::size_t threads,
                              std::uint64_t budget) {
  const std::size_t n = rep.dim();
  if (n < 2) throw InputError("expansion needs n >= 2");
  const std::uint64_t q = rep.field()->q();
  std::uint64_t total = 0;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t c = gaussian_binomial(n, d, q);
    total = (c > std::numeric_limits<std::uint64_t>::max() - total)
                ? std::numeric_limits<std::uint64_t>::max()
                : total + c;
  }
  if (total > budget) {
    throw BudgetExceeded("exact expansion scan needs " + std::to_string(total) +
                         " subspaces, cap is " + std::to_string(budget));
  }
  constexpr std::size_t kBatch = 4096;
  Best best;
  std::uint64_t samples = 0;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<Subspace> batch;
    auto flush = [&] {
      Best b = scan(rep, batch, threads);
      if (b.ratio) best.offer(*b.ratio, b.w);
      samples += batch.size();
      batch.clear();
    };
    enumerate_subspaces(rep.field(), n, d, budget, [&](const Subspace& w) {
      batch.push_back(w);
      if (batch.size() == kBatch) flush();
      return true;
    });
    flush();
    // Nothing goes below 1, and larger dimensions sort after this one.
    if (best.ratio && *best.ratio == Rational(1)) break;
  }
  return ExpansionReport{*best.ratio, best.w, true, samples};
}

ExpansionReport cheeger_random(const Representation& rep, std::uint64_t trials,
                               std::uint64_t seed, std::size_t threads) {
  const std::size_t n = rep.dim();
  if (n < 2) throw InputError("expansion needs n >= 2");
  if (trials == 0) throw InputError("trials must be at least 1");
  const CounterRng root(seed);
  std::vector<Subspace> ws(trials);
  std::vector<Rational> ratios(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    CounterRng rng = root.derive(t);
    const std::size_t d = 1 + rng.uniform(n / 2);
    ws[t] = random_subspace(rep.field(), n, d, rng);
    ratios[t] = growth(rep, ws[t]);
  });
  Best best;
  for (std::size_t t = 0; t < trials; ++t) best.offer(ratios[t], ws[t]);
  return ExpansionReport{*best.ratio, best.w, false, trials};
}

bool expander_check(const Representation& rep, Rational alpha, std::size_t threads,
                    std::uint64_t budget) {
  return cheeger_exact(rep, threads, budget).min_ratio >= 1 + alpha;
}

std::optional<HyperfiniteWitness> witness_search(const Representation& rep, Rational epsilon,
                                                 std::size_t K, const SearchOptions& options) {
  const std::size_t n = rep.dim();
  const FieldPtr& field = rep.field();
  HyperfiniteWitness w{epsilon, K, {}};
  if (epsilon <= 0 || K == 0) return std::nullopt;
  Subspace used = Subspace::zero(field, n);
  std::size_t coverage = 0;
  auto done = [&] {
    return Rational(static_cast<std::int64_t>(coverage)) >=
           (1 - epsilon) * static_cast<std::int64_t>(n);
  };
  auto accept = [&](const Subspace& v, const Subspace& hood) {
    Subspace grown = subspace_sum(used, hood);
    if (grown.dim() != used.dim() + hood.dim()) return false;
    used = std::move(grown);
    coverage += v.dim();
    w.subspaces.push_back(v);
    return true;
  };

  // Invariant blocks from the standard basis. A closure that overlaps
  // earlier blocks is merged with them while the union stays within K.
  std::vector<Subspace> blocks;
  auto blocks_sum = [&](const std::vector<Subspace>& bs) {
    return subspace_sum(std::span<const Subspace>(bs), field, n);
  };
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    if (blocks_sum(blocks).contains(e)) continue;
    auto c = orbit_closure(rep, e, K);
    if (!c) continue;
    Subspace merged = *c;
    std::vector<bool> absorbed(blocks.size(), false);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (absorbed[b]) continue;
        Subspace s2 = subspace_sum(merged, blocks[b]);
        if (s2.dim() < merged.dim() + blocks[b].dim()) {
          merged = std::move(s2);
          absorbed[b] = changed = true;
        }
      }
    }
    if (merged.dim() > K) continue;
    std::vector<Subspace> next;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!absorbed[b]) next.push_back(blocks[b]);
    }
    next.push_back(merged);
    if (subspaces_independent(next)) blocks = std::move(next);
  }
  for (const auto& b : blocks) accept(b, b);

  // Almost-invariant growth from random seeds.
  const CounterRng root(options.seed);
  for (std::size_t t = 0; t < options.budget && !done(); ++t) {
    CounterRng rng = root.derive(t);
    Vec v(n);
    for (auto& c : v) c = field->random(rng);
    if (used.contains(v)) continue;
    Subspace cur = Subspace::span(field, n, std::vector<Vec>{v});
    while (cur.dim() <= K) {
      Subspace hood = neighbourhood(rep, cur);
      const bool slow = Rational(static_cast<std::int64_t>(hood.dim())) <
                        (1 + epsilon) * static_cast<std::int64_t>(cur.dim());
      if (slow && accept(cur, hood)) break;
      if (hood.dim() == cur.dim()) break;  // invariant but overlapping
      cur = std::move(hood);
    }
  }
  if (!done()) return std::nullopt;
  return w;
}

}  // namespace linrep
