// Copyright 2026 The circwit Authors
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

#pragma once

#include <string>

#include <json.hpp>

#include "circwit/circulant.hpp"
#include "circwit/detect.hpp"
#include "circwit/gellmann.hpp"
#include "circwit/linalg.hpp"

namespace circwit::io {

using nlohmann::json;

/// {"rows": n, "cols": n, "re": [[...]], "im": [[...]]}, 17 significant digits.
std::string matrix_to_json_text(const ComplexMatrix& m);
json matrix_to_json(const ComplexMatrix& m);
/// Throws std::invalid_argument on malformed input.
ComplexMatrix matrix_from_json(const json& j);
bool is_matrix_json(const json& j);

/// {"d": n, "generators": [matrix, ...]}
json spec_to_json(const CirculantSpec& spec);
CirculantSpec spec_from_json(const json& j);

/// Accepts a number or a "p/q" / decimal string.
Number number_from_json(const json& j);
json number_to_json(const Number& n);

/// {"d": n, "alpha": x, "primed": bool} or {"d": n, "a": [...], "mu": x};
/// a dense matrix object is also accepted when `d` can be inferred.
Witness witness_from_json(const json& j, const Tolerance& tol = {});
json witness_description(const Witness& w);

/// {"d": n, "lambdas": [...]} or {"d": n, "beta": x}; a dense matrix is also accepted.
State state_from_json(const json& j, const Tolerance& tol = {});

json product_min_to_json(const ProductMinimum& p);

/// {"witness": {...}, "beta": x, "expectation": v, "ppt_min_eig": e,
///  "product_min": m, "seed": s, "restarts": r}
json certificate_to_json(const NdCertificate& cert);

/// Rows (mu_label, nu_label, coefficient), the report's ordering.
std::string decomposition_csv(const MeasurementSettingsReport& report);
json decomposition_json(const LocalDecomposition& dec);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace circwit::io
