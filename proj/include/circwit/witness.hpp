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
#include <vector>

#include "circwit/linalg.hpp"
#include "circwit/rational.hpp"

namespace circwit {

/// O_n = (1/d) sum_i |i, i+n><i, i+n|, the normalized projector onto Sigma_n.
ComplexMatrix projector_O(int d, int n);

/// P+_d = (1/d) sum_ij |ii><jj|.
ComplexMatrix max_entangled_projector(int d);

/// Flip operator sum_ij |ij><ji|.
ComplexMatrix flip_operator(int d);

/// Parameters of W_alpha (or W'_alpha when primed).
struct AlphaWitnessParams {
  int d = 3;
  Number alpha = Rational(1, 2);
  bool primed = false;

  /// d >= 3 and alpha > 1/(2d), so that mu = 2 - 1/(d alpha) > 0.
  void validate() const;
  double mu() const;
};

/// W[a_0, ..., a_{d-1}] scaled by mu:
///   mu * ((a_0 + 1) O_0 + sum_{n>=1} a_n O_n - P+_d).
struct WitnessCoefficients {
  int d = 3;
  std::vector<double> a;
  double mu = 1.0;

  /// d >= 3, exactly d coefficients, all a_n >= 0 and mu > 0.
  void validate() const;
};

/// I (x) I - (1/alpha) O_1 - d (O_2 + ... + O_{d-1}) - mu P+_d, with O_1 and
/// O_{d-1} exchanged for the primed witness.
ComplexMatrix witness_W_alpha(const AlphaWitnessParams& params);

/// d O_0 + (d - 1/alpha) O_1 - mu P+_d (O_{d-1} when primed).
ComplexMatrix witness_W_alpha_simplified(const AlphaWitnessParams& params);

ComplexMatrix witness_family(const WitnessCoefficients& coeffs);

/// Coefficients with W_alpha = mu W[a]: a_0 = d/mu - 1, a_1 = d/mu - 1/(alpha mu)
/// (placed at a_{d-1} when primed). Not validated: a_1 < 0 for alpha < 1/d.
WitnessCoefficients coefficients_from_alpha(const AlphaWitnessParams& params);

/// Spectrum of mu W[a] from the Sigma-block structure, sorted ascending:
/// mu (a_0+1-d)/d once, mu (a_0+1)/d (d-1 times), mu a_n/d (d times each).
std::vector<double> witness_family_spectrum(const WitnessCoefficients& coeffs);

struct NecessaryConditions {
  bool all_nonnegative;        // a_n >= 0
  bool sum_condition;          // sum a_n >= d - 1
  bool non_positive;           // a_0 < d - 1, otherwise W[a] >= 0
  double product_value;        // <psi psi|W[a]|psi psi>, psi = sum_i |i>
  bool product_check_agrees;   // (product_value >= 0) == sum_condition
};

NecessaryConditions check_necessary_conditions(const WitnessCoefficients& coeffs,
                                               const Tolerance& tol = {});

/// Complete d = 3 characterization of W[a_0, a_1, a_2].
struct D3Conditions {
  NecessaryConditions necessary;
  bool small_a0_condition;  // a_0 <= 1 implies a_1 a_2 >= (1 - a_0)^2
  bool is_ew;
  bool is_nd;               // is_ew and a_1 a_2 < (2 - a_0)^2 / 4
};

D3Conditions check_d3_conditions(const WitnessCoefficients& coeffs, const Tolerance& tol = {});

/// alpha range on which W_alpha is certified an entanglement witness:
/// the half-open interval (1/d, (d-1)/(d(d-2))].
struct AlphaRange {
  int d;
  Rational lower;  // open
  Rational upper;  // closed
  /// a_1 at the upper endpoint; the convex-combination argument needs a_1 in (0, 1].
  Rational a1_at_upper;
  /// a_1 at the lower endpoint (0, excluded).
  Rational a1_at_lower;

  bool contains(const Number& alpha) const;
};

AlphaRange alpha_admissible_range(int d);

/// a_1 = d (d alpha - 1) / (2 d alpha - 1), exact for rational alpha.
Rational a1_for_alpha(int d, const Rational& alpha);

}  // namespace circwit
