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
#include <vector>

#include "circwit/linalg.hpp"

namespace circwit {

enum class GellMannKind { Identity, Symmetric, Antisymmetric, Diagonal };

struct GellMannElement {
  GellMannKind kind;
  int k = 0;  // first index (symmetric/antisymmetric)
  int l = 0;  // second index, or the diagonal level
  ComplexMatrix matrix;

  /// "id", "sym(k,l)", "asym(k,l)", "diag(l)".
  std::string label() const;
};

/// Generalized Gell-Mann basis, ordered: sqrt(2/d) I; symmetric pairs (k < l)
/// lexicographic; antisymmetric pairs lexicographic; diagonal by level.
/// Every element satisfies Tr(L_a L_b) = 2 delta_ab.
///
/// Diagonal elements are the standard traceless
///   sqrt(2/(l(l+1))) (sum_{j<l} |j><j| - l |l><l|),  1 <= l <= d-1,
/// which at d = 3 gives lambda_3 and lambda_8.
struct GellMannBasis {
  int d = 0;
  std::vector<GellMannElement> elements;

  std::size_t size() const { return elements.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return elements[i].matrix; }
};

GellMannBasis gellmann_basis(int d);

/// c_mu = Tr(L_mu A)/2 for a Hermitian d x d matrix.
std::vector<double> expand_single(const ComplexMatrix& a, const GellMannBasis& basis,
                                  const Tolerance& tol = {});
ComplexMatrix reconstruct_single(const std::vector<double>& coefficients,
                                 const GellMannBasis& basis);

/// W = sum_{mu nu} c_{mu nu} L_mu (x) L_nu.
struct LocalDecomposition {
  int d = 0;
  Eigen::MatrixXd coefficients;  // d^2 x d^2
};

/// c_{mu nu} = Tr((L_mu (x) L_nu) W)/4. Throws on non-Hermitian W.
LocalDecomposition expand_local(const ComplexMatrix& w, int d, const Tolerance& tol = {});
ComplexMatrix reconstruct(const LocalDecomposition& dec);

struct MeasurementSetting {
  int mu;
  int nu;
  std::string mu_label;
  std::string nu_label;
  double coefficient;
};

struct MeasurementSettingsReport {
  std::vector<MeasurementSetting> settings;  // |c| descending, then labels
  std::size_t count() const { return settings.size(); }
};

MeasurementSettingsReport measurement_settings_report(const LocalDecomposition& dec,
                                                      double threshold = 1e-12);

}  // namespace circwit
