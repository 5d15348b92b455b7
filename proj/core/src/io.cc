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

#include "linrep/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "linrep/errors.h"

namespace linrep {
namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// Runs fn, turning JSON type and key errors into InputError.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Json rational_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) {
    const auto den = need(j, "den").get<std::int64_t>();
    if (den == 0) throw InputError("rational with zero denominator");
    return Rational(need(j, "num").get<std::int64_t>(), den);
  }
  throw InputError("rational must be {num, den}, an integer or a string");
}

Json field_json(const Field& f) {
  return Json{{"p", f.p()}, {"deg", f.deg()}, {"modulus", f.spec().modulus}};
}

FieldPtr field_from(const Json& j) {
  if (j.is_number_integer()) return Field::make(j.get<std::uint32_t>());
  const auto p = need(j, "p").get<std::uint32_t>();
  const auto deg = j.value("deg", 1u);
  std::vector<std::uint32_t> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  return Field::make(p, deg, modulus);
}

Vec vec_from(const Json& j, const FieldPtr& field, std::size_t len) {
  if (!j.is_array()) throw InputError("vector must be an array");
  if (j.size() != len) {
    throw DimensionMismatch("vector of length " + std::to_string(j.size()) + ", expected " +
                            std::to_string(len));
  }
  Vec v;
  for (const auto& x : j) {
    const auto c = x.get<std::int64_t>();
    if (!field->contains(c)) throw InputError("entry " + std::to_string(c) + " outside " + field->name());
    v.push_back(static_cast<Scalar>(c));
  }
  return v;
}

Json matrix_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(Json(std::vector<Scalar>(m.row(r).begin(), m.row(r).end())));
  }
  return rows;
}

DenseMatrix matrix_from(const Json& j, const FieldPtr& field) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  std::vector<Scalar> entries;
  for (const auto& row : j) {
    Vec v = vec_from(row, field, cols);
    entries.insert(entries.end(), v.begin(), v.end());
  }
  return DenseMatrix(field, rows, cols, std::move(entries));
}

Json subspace_json(const Subspace& s) { return Json(s.basis()); }

Subspace subspace_from(const Json& j, const FieldPtr& field, std::size_t n) {
  if (j.is_string() && j.get<std::string>() == "full") return Subspace::full(field, n);
  if (!j.is_array()) throw InputError("subspace must be a list of vectors or \"full\"");
  std::vector<Vec> rows;
  for (const auto& v : j) rows.push_back(vec_from(v, field, n));
  return Subspace::span(field, n, rows);
}

Json family_json(const FamilyDescriptor& f) {
  return std::visit(
      [](const auto& k) -> Json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CyclicRegular>) {
          return Json{{"kind", "cyclic"}};
        } else if constexpr (std::is_same_v<T, AbelianQuotient>) {
          return Json{{"kind", "abelian"}, {"moduli", k.moduli}};
        } else if constexpr (std::is_same_v<T, Schreier>) {
          return Json{{"kind", "schreier"}, {"levels", k.levels}};
        } else if constexpr (std::is_same_v<T, RandomInvertible>) {
          return Json{{"kind", "random"}, {"seed", k.seed}, {"n", k.n}, {"r", k.r}};
        } else {
          Json blocks = Json::array();
          for (const auto& b : k.blocks) blocks.push_back(family_json(b));
          return Json{{"kind", "block"}, {"blocks", blocks}};
        }
      },
      f.kind);
}

FamilyDescriptor family_from(const Json& j) {
  const auto kind = need(j, "kind").get<std::string>();
  if (kind == "cyclic") return {CyclicRegular{}};
  if (kind == "abelian") return {AbelianQuotient{need(j, "moduli").get<std::vector<std::uint32_t>>()}};
  if (kind == "schreier") {
    return {Schreier{need(j, "levels").get<std::vector<std::vector<std::vector<std::uint32_t>>>>()}};
  }
  if (kind == "random") {
    return {RandomInvertible{j.value("seed", std::uint64_t{0}), need(j, "n").get<std::size_t>(),
                             need(j, "r").get<std::uint32_t>()}};
  }
  if (kind == "block") {
    BlockDiagonal b;
    for (const auto& part : need(j, "blocks")) b.blocks.push_back(family_from(part));
    return {b};
  }
  throw InputError("unknown family kind '" + kind + "'");
}

Json table_json(const FiniteApproxMap& m) {
  Json t = Json::array();
  for (const auto& [ab, coords] : m.table()) t.push_back(Json{ab.first, ab.second, coords});
  return t;
}

void table_from(const Json& j, FiniteApproxMap& m) {
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3) throw InputError("table entries are [a, b, coords]");
    m.set_product(entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
                  vec_from(entry[2], m.field(), m.basis_count()));
  }
}

}  // namespace

FieldPtr read_field(const std::string& json) {
  return guarded("field", [&] { return field_from(parse(json)); });
}

std::string write_field(const Field& f) { return field_json(f).dump(); }

DenseMatrix read_matrix(const std::string& json, const FieldPtr& field) {
  return guarded("matrix", [&] { return matrix_from(parse(json), field); });
}

std::string write_matrix(const DenseMatrix& m) { return matrix_json(m).dump(); }

Representation read_representation(const std::string& json) {
  return guarded("representation", [&] {
    const Json j = parse(json);
    const FieldPtr field = field_from(need(j, "field"));
    std::vector<DenseMatrix> gens;
    for (const auto& g : need(j, "generators")) gens.push_back(matrix_from(g, field));
    if (gens.empty()) throw InputError("representation needs at least one generator");
    Representation rep(field, std::move(gens));
    if (j.contains("r") && j.at("r").get<std::size_t>() != rep.rank()) {
      throw InputError("declared r does not match the generator count");
    }
    if (j.contains("n") && j.at("n").get<std::size_t>() != rep.dim()) {
      throw DimensionMismatch("declared n does not match the generator size");
    }
    return rep;
  });
}

std::string write_representation(const Representation& rep) {
  Json gens = Json::array();
  for (const auto& g : rep.generators()) gens.push_back(matrix_json(g));
  return Json{{"field", field_json(*rep.field())}, {"r", rep.rank()}, {"n", rep.dim()},
              {"generators", gens}}
      .dump();
}

AlgebraMatrix read_algebra_matrix(const std::string& json, const FieldPtr& field,
                                  std::uint32_t r) {
  return guarded("algebra matrix", [&] {
    const Json j = parse(json);
    if (j.is_string()) return AlgebraMatrix(parse_element(j.get<std::string>(), field, r));
    if (!j.is_array() || j.empty()) throw InputError("algebra matrix must be a non-empty array");
    const std::size_t n = j.size();
    AlgebraMatrix a(field, r, n);
    for (std::size_t row = 0; row < n; ++row) {
      if (!j[row].is_array() || j[row].size() != n) throw DimensionMismatch("algebra matrix must be square");
      for (std::size_t col = 0; col < n; ++col) {
        a.set(row, col, parse_element(j[row][col].get<std::string>(), field, r));
      }
    }
    return a;
  });
}

FamilyDescriptor read_family(const std::string& json) {
  return guarded("family", [&] { return family_from(parse(json)); });
}

std::string write_family(const FamilyDescriptor& family) { return family_json(family).dump(); }

TilingProblem read_tiling_problem(const std::string& json) {
  return guarded("tiling problem", [&] {
    const Json j = parse(json);
    const FieldPtr field = field_from(need(j, "field"));
    const auto n = need(j, "n").get<std::size_t>();
    std::vector<DenseMatrix> phi;
    for (const auto& m : need(j, "phi")) phi.push_back(matrix_from(m, field));
    FiniteApproxMap map(field, n, std::move(phi));
    if (j.contains("table")) table_from(j.at("table"), map);
    FSubspaceData f;
    for (const auto& v : need(j, "F")) f.basis.push_back(vec_from(v, field, map.basis_count()));
    if (j.contains("Finv")) {
      for (const auto& entry : j.at("Finv")) {
        const auto idx = entry.at(0).get<std::size_t>();
        if (idx >= f.basis.size()) throw InputError("Finv index out of range");
        f.inverses[idx] = vec_from(entry.at(1), field, map.basis_count());
      }
    }
    Subspace h = j.contains("H") ? subspace_from(j.at("H"), field, n) : Subspace::full(field, n);
    return TilingProblem{std::move(map), std::move(f), std::move(h), need(j, "i").get<std::size_t>(),
                         rational_from(need(j, "delta"))};
  });
}

std::string write_tiling_problem(const TilingProblem& p) {
  Json phi = Json::array();
  for (const auto& m : p.map.phis()) phi.push_back(matrix_json(m));
  Json finv = Json::array();
  for (const auto& [idx, coords] : p.f.inverses) finv.push_back(Json{idx, coords});
  return Json{{"field", field_json(*p.map.field())},
              {"n", p.map.dim()},
              {"phi", phi},
              {"table", table_json(p.map)},
              {"F", p.f.basis},
              {"Finv", finv},
              {"H", subspace_json(p.h)},
              {"i", p.i},
              {"delta", rational_json(p.delta)}}
      .dump();
}

TilingCertificate read_certificate(const std::string& json, const FieldPtr& field, std::size_t n) {
  return guarded("certificate", [&] {
    const Json j = parse(json);
    TilingCertificate cert;
    cert.i = need(j, "i").get<std::size_t>();
    cert.delta = rational_from(need(j, "delta"));
    cert.dim_f = need(j, "dim_f").get<std::size_t>();
    cert.coverage = need(j, "coverage").get<std::size_t>();
    cert.partial = j.value("partial", false);
    cert.guaranteed = j.value("guaranteed", false);
    for (const auto& c : need(j, "centers")) cert.centers.push_back(vec_from(c, field, n));
    if (j.contains("tiles")) {
      for (const auto& t : j.at("tiles")) cert.tiles.push_back(subspace_from(t, field, n));
    }
    cert.h = j.contains("H") ? subspace_from(j.at("H"), field, n) : Subspace::full(field, n);
    return cert;
  });
}

std::string write_certificate(const TilingCertificate& cert) {
  Json tiles = Json::array();
  for (const auto& t : cert.tiles) tiles.push_back(subspace_json(t));
  return Json{{"i", cert.i},
              {"delta", rational_json(cert.delta)},
              {"dim_f", cert.dim_f},
              {"coverage", cert.coverage},
              {"partial", cert.partial},
              {"guaranteed", cert.guaranteed},
              {"centers", cert.centers},
              {"tiles", tiles},
              {"H", subspace_json(cert.h)}}
      .dump();
}

HyperfiniteWitness read_witness(const std::string& json, const FieldPtr& field, std::size_t n) {
  return guarded("witness", [&] {
    const Json j = parse(json);
    HyperfiniteWitness w;
    w.epsilon = rational_from(need(j, "epsilon"));
    w.K = need(j, "K").get<std::size_t>();
    for (const auto& t : need(j, "tiles")) w.subspaces.push_back(subspace_from(t, field, n));
    return w;
  });
}

std::string write_witness(const HyperfiniteWitness& w) {
  Json tiles = Json::array();
  for (const auto& t : w.subspaces) tiles.push_back(subspace_json(t));
  return Json{{"epsilon", rational_json(w.epsilon)}, {"K", w.K}, {"tiles", tiles}}.dump();
}

std::string write_expansion_report(const ExpansionReport& rep) {
  return Json{{"min_ratio", rational_json(rep.min_ratio)},
              {"exact", rep.exact},
              {"samples", rep.samples},
              {"witness_subspace", subspace_json(rep.witness_subspace)}}
      .dump();
}

SoficData read_sofic_data(const std::string& json) {
  return guarded("sofic data", [&] {
    const Json j = parse(json);
    const FieldPtr field = field_from(need(j, "field"));
    const auto basis = need(j, "basis_size").get<std::size_t>();
    const auto sizes = need(j, "n").get<std::vector<std::size_t>>();
    const Json& maps = need(j, "maps");
    if (maps.size() != sizes.size()) throw InputError("one n per map expected");
    SoficData data;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      std::vector<DenseMatrix> phi;
      for (const auto& m : maps[k]) phi.push_back(matrix_from(m, field));
      if (phi.size() != basis) throw InputError("each map needs one matrix per basis element");
      FiniteApproxMap map(field, sizes[k], std::move(phi));
      if (j.contains("table")) table_from(j.at("table"), map);
      data.maps.push_back(std::move(map));
    }
    if (j.contains("spans")) data.spans = j.at("spans").get<std::vector<std::size_t>>();
    for (const auto& s : need(j, "s")) data.s.push_back(rational_from(s));
    if (j.contains("j")) {
      for (const auto& entry : j.at("j")) {
        data.j_values.emplace_back(vec_from(entry.at(0), field, basis), rational_from(entry.at(1)));
      }
    }
    return data;
  });
}

std::string write_sofic_data(const SoficData& data) {
  if (data.maps.empty()) throw InputError("sofic data without maps");
  const FiniteApproxMap& first = data.maps.front();
  Json sizes = Json::array();
  Json maps = Json::array();
  for (const auto& m : data.maps) {
    sizes.push_back(m.dim());
    Json phi = Json::array();
    for (const auto& p : m.phis()) phi.push_back(matrix_json(p));
    maps.push_back(phi);
  }
  Json s = Json::array();
  for (const auto& v : data.s) s.push_back(rational_json(v));
  Json jv = Json::array();
  for (const auto& [coords, bound] : data.j_values) jv.push_back(Json{coords, rational_json(bound)});
  return Json{{"field", field_json(*first.field())},
              {"n", sizes},
              {"basis_size", first.basis_count()},
              {"table", table_json(first)},
              {"maps", maps},
              {"spans", data.spans},
              {"s", s},
              {"j", jv}}
      .dump();
}

std::string write_profile_csv(const RankProfile& profile) {
  std::ostringstream os;
  os << "k,rank,num,den\n";
  for (const auto& e : profile) {
    const Rational v = e.value();
    os << e.k << ',' << e.rank << ',' << v.numerator() << ',' << v.denominator() << '\n';
  }
  return os.str();
}

std::vector<DenseMatrix> read_tuple(const std::string& json) {
  return guarded("matrix tuple", [&] {
    const Json j = parse(json);
    const FieldPtr field = field_from(need(j, "field"));
    std::vector<DenseMatrix> out;
    for (const auto& m : need(j, "matrices")) out.push_back(matrix_from(m, field));
    return out;
  });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace linrep
