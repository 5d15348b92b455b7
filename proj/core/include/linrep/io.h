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

#ifndef LINREP_IO_H_
#define LINREP_IO_H_

// JSON and CSV file formats. Every reader throws InputError on malformed
// input; rationals are written as {"num": a, "den": b} in lowest terms and
// read from that form, an integer, or a string such as "1/4".

#include <cstddef>
#include <string>
#include <vector>

#include "linrep/algebra.h"
#include "linrep/families.h"
#include "linrep/hyperfinite.h"
#include "linrep/matrix.h"
#include "linrep/ncrat.h"
#include "linrep/representation.h"
#include "linrep/sofic.h"
#include "linrep/tiling.h"

namespace linrep {

// {"p": 2, "deg": 1, "modulus": [1, 1, 0, 1]}; modulus is optional.
FieldPtr read_field(const std::string& json);
std::string write_field(const Field& f);

// Array of rows of field codes.
DenseMatrix read_matrix(const std::string& json, const FieldPtr& field);
std::string write_matrix(const DenseMatrix& m);

// {"field": {..}, "r": 2, "n": 3, "generators": [matrix, ..]}; r and n are
// optional and cross-checked when present.
Representation read_representation(const std::string& json);
std::string write_representation(const Representation& rep);

// Either one element string or an array of rows of element strings.
AlgebraMatrix read_algebra_matrix(const std::string& json, const FieldPtr& field,
                                  std::uint32_t r);

// {"kind": "cyclic" | "abelian" | "schreier" | "random" | "block", ..}.
FamilyDescriptor read_family(const std::string& json);
std::string write_family(const FamilyDescriptor& family);

struct TilingProblem {
  FiniteApproxMap map;
  FSubspaceData f;
  Subspace h;
  std::size_t i = 1;
  Rational delta;
};

// {"field", "n", "phi": [matrix per basis element], "table": [[a, b, coords]],
//  "F": [coords], "Finv": [[index, coords]], "H": [vectors] or "full",
//  "i", "delta"}
TilingProblem read_tiling_problem(const std::string& json);
std::string write_tiling_problem(const TilingProblem& problem);

// {"i", "delta", "dim_f", "coverage", "partial", "guaranteed",
//  "centers": [vectors], "tiles": [[vectors]], "H": [vectors]}
TilingCertificate read_certificate(const std::string& json, const FieldPtr& field, std::size_t n);
std::string write_certificate(const TilingCertificate& cert);

// {"epsilon", "K", "tiles": [[vectors]]}
HyperfiniteWitness read_witness(const std::string& json, const FieldPtr& field, std::size_t n);
std::string write_witness(const HyperfiniteWitness& w);

// {"min_ratio", "exact", "samples", "witness_subspace": [vectors]}
std::string write_expansion_report(const ExpansionReport& rep);

// {"field", "n": [n_k], "basis_size", "table": [[a, b, coords]] shared by
//  all maps, "maps": [[matrix per basis element]], "spans", "s",
//  "j": [[coords, rational]]}
SoficData read_sofic_data(const std::string& json);
std::string write_sofic_data(const SoficData& data);

// "k,rank,num,den" header, one row per level.
std::string write_profile_csv(const RankProfile& profile);

// Tuple of matrices for rational-expression evaluation: {"field", "matrices"}.
std::vector<DenseMatrix> read_tuple(const std::string& json);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace linrep

#endif  // LINREP_IO_H_
