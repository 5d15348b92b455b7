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

#include "linrep/families.h"

#include <sstream>

#include "linrep/errors.h"
#include "linrep/parallel.h"

namespace linrep {
namespace {

constexpr std::size_t kMaxFamilyDim = 1 << 14;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Representation generate_cyclic(const FieldPtr& field, std::size_t k) {
  if (k == 0) throw InputError("cyclic family needs k >= 1");
  std::vector<std::uint32_t> perm(k);
  for (std::size_t j = 0; j < k; ++j) perm[j] = static_cast<std::uint32_t>((j + 1) % k);
  return Representation(field, {permutation_matrix(field, perm)});
}

Representation generate_abelian(const AbelianQuotient& a, const FieldPtr& field, std::size_t k) {
  if (a.moduli.empty()) throw InputError("abelian_quotient needs at least one modulus");
  std::vector<std::size_t> radix;
  std::size_t n = 1;
  for (auto m : a.moduli) {
    if (m == 0) throw InputError("abelian_quotient moduli must be positive");
    radix.push_back(static_cast<std::size_t>(m) * k);
    n *= radix.back();
    if (n > kMaxFamilyDim) throw InputError("abelian_quotient dimension too large");
  }
  std::vector<DenseMatrix> gens;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < radix.size(); ++i) {
    std::vector<std::uint32_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t digit = (j / stride) % radix[i];
      const std::size_t next = (digit + 1) % radix[i];
      perm[j] = static_cast<std::uint32_t>(j + (next - digit) * stride);
    }
    gens.push_back(permutation_matrix(field, perm));
    stride *= radix[i];
  }
  return Representation(field, std::move(gens));
}

Representation generate_schreier(const Schreier& s, const FieldPtr& field, std::size_t k) {
  if (k == 0 || k > s.levels.size()) {
    throw InputError("schreier family has no level " + std::to_string(k));
  }
  const auto& tuple = s.levels[k - 1];
  if (tuple.empty()) throw InputError("schreier level has no permutations");
  std::vector<DenseMatrix> gens;
  for (const auto& perm : tuple) {
    if (perm.size() != tuple[0].size()) throw InputError("schreier permutations of different sizes");
    gens.push_back(permutation_matrix(field, perm));
  }
  return Representation(field, std::move(gens));
}

Representation generate_random(const RandomInvertible& ri, const FieldPtr& field, std::size_t k) {
  if (ri.n == 0 || ri.r == 0 || k == 0) throw InputError("random_invertible needs n, r, k >= 1");
  if (ri.n * k > kMaxFamilyDim) throw InputError("random_invertible dimension too large");
  CounterRng rng = CounterRng(ri.seed).derive(k);
  std::vector<DenseMatrix> gens;
  for (std::uint32_t i = 0; i < ri.r; ++i) gens.push_back(random_invertible(field, ri.n * k, rng));
  return Representation(field, std::move(gens));
}

}  // namespace

DenseMatrix permutation_matrix(const FieldPtr& field, const std::vector<std::uint32_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  DenseMatrix m(field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]]) throw InputError("not a permutation");
    seen[perm[j]] = true;
    m(perm[j], j) = 1;
  }
  return m;
}

DenseMatrix random_invertible(const FieldPtr& field, std::size_t n, CounterRng& rng) {
  while (true) {
    DenseMatrix m = DenseMatrix::random(field, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

Representation family_generate(const FamilyDescriptor& family, const FieldPtr& field, std::size_t k) {
  return std::visit(
      Overloaded{
          [&](const CyclicRegular&) { return generate_cyclic(field, k); },
          [&](const AbelianQuotient& a) { return generate_abelian(a, field, k); },
          [&](const Schreier& s) { return generate_schreier(s, field, k); },
          [&](const RandomInvertible& ri) { return generate_random(ri, field, k); },
          [&](const BlockDiagonal& b) {
            if (b.blocks.empty()) throw InputError("block_diagonal needs at least one block");
            std::vector<Representation> parts;
            for (const auto& blk : b.blocks) parts.push_back(family_generate(blk, field, k));
            return direct_sum(parts);
          },
      },
      family.kind);
}

FamilyDescriptor parse_family(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw InputError("empty family descriptor");
  auto to_u64 = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(s, &used);
      if (used != s.size()) throw InputError("bad number '" + s + "' in family descriptor");
      return v;
    } catch (const InputError&) {
      throw;
    } catch (...) {
      throw InputError("bad number '" + s + "' in family descriptor");
    }
  };
  if ((parts[0] == "cyclic" || parts[0] == "cyclic_regular") && parts.size() == 1) {
    return {CyclicRegular{}};
  }
  if ((parts[0] == "abelian" || parts[0] == "abelian_quotient") && parts.size() == 2) {
    AbelianQuotient a;
    std::stringstream ms(parts[1]);
    while (std::getline(ms, item, ',')) a.moduli.push_back(static_cast<std::uint32_t>(to_u64(item)));
    return {a};
  }
  if ((parts[0] == "random" || parts[0] == "random_invertible") && parts.size() == 4) {
    return {RandomInvertible{to_u64(parts[1]), static_cast<std::size_t>(to_u64(parts[2])),
                             static_cast<std::uint32_t>(to_u64(parts[3]))}};
  }
  throw InputError("unknown family descriptor '" + text +
                   "' (expected cyclic, abelian:M1,M2,.., random:SEED:N:R)");
}

RankProfile rank_profile(const FamilyDescriptor& family, const FieldPtr& field,
                         const std::vector<std::size_t>& ks, const AlgebraMatrix& a,
                         std::size_t threads) {
  RankProfile out(ks.size());
  parallel_for(ks.size(), threads, [&](std::size_t idx) {
    const Representation rep = family_generate(family, field, ks[idx]);
    const NormalizedRank nr = normalized_rank(rep, a);
    out[idx] = RankProfileEntry{ks[idx], nr.block, nr.rank};
  });
  return out;
}

}  // namespace linrep
