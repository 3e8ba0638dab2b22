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

#include <optional>
#include <string>
#include <vector>

#include "circwit/linalg.hpp"
#include "circwit/rational.hpp"

namespace circwit {

/// Weights of rho = sum_{i=1}^{d-1} lambda_i O_i + lambda_d P+_d.
///
/// lambdas[i-1] holds lambda_i, so lambdas.back() is lambda_d. When the
/// weights come from beta_lambdas, `beta` records the family parameter; only
/// such states admit the closed-form PPT test.
struct StateLambdas {
  int d = 3;
  std::vector<Number> lambdas;
  std::optional<Number> beta;

  /// d >= 3, d weights, all >= 0, summing to one (exactly if all are exact).
  void validate(const Tolerance& tol = {}) const;
  double lambda(int i) const { return lambdas.at(i - 1).value(); }
};

/// l = (d-1)(2d-3) + 1.
std::int64_t family_ell(int d);

/// Upper end of the beta range, (d-1)^2 + 1.
std::int64_t beta_max(int d);

struct BetaFamilyParams {
  int d = 3;
  Number beta = Rational(2);

  void validate() const;
};

ComplexMatrix state_from_lambdas(const StateLambdas& s, const Tolerance& tol = {});

/// lambda_1 = beta/l, lambda_{d-1} = ((d-1)^2 + 1 - beta)/l and every other
/// weight (d-1)/l. Exact when beta is.
StateLambdas beta_lambdas(const BetaFamilyParams& p);

struct PptVerdict {
  bool ppt;
  double min_eigenvalue;  // of the partial transpose
};

/// Eigenvalue test on rho^Gamma. Throws if rho is not a density matrix.
PptVerdict is_ppt(const ComplexMatrix& rho, int d, const Tolerance& tol = {});

/// lambda_1 lambda_{d-1} >= lambda_d^2. Only defined for beta-family states;
/// exact when the weights are.
bool ppt_closed_form(const StateLambdas& s);

enum class BetaLabel { Npt, PptEntangled, Separable, PptUnresolved };

std::string to_string(BetaLabel label);

/// NPT outside [1, (d-1)^2]; PPT entangled on [1, d-1) U ((d-1)(d-2)+1, (d-1)^2].
/// For d = 3, [2, 3] is labeled separable as reference data (no algorithm).
BetaLabel classify_beta(int d, const Number& beta);

}  // namespace circwit
