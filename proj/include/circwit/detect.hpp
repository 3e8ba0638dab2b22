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

#include <cstdint>
#include <optional>
#include <vector>

#include "circwit/linalg.hpp"
#include "circwit/states.hpp"
#include "circwit/witness.hpp"

namespace circwit {

/// Multi-start see-saw settings for product-state minimization.
struct SeeSawConfig {
  int restarts = 64;
  int max_iters = 500;
  double conv_tol = 1e-12;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Name recorded in reports so a run can be replayed elsewhere.
inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64/box-muller";

/// Best product-state value found. It is an upper bound on the true minimum
/// of <psi phi|W|psi phi>, i.e. a numerical certificate only.
struct ProductMinimum {
  double value = 0.0;
  ComplexVector psi;
  ComplexVector phi;
  int restart = 0;                  // index of the winning restart
  std::vector<double> trajectory;   // half-step values of the winning restart
  std::uint64_t seed = 0;
  int restarts = 0;
};

/// Re <W>_rho. Throws when shapes differ or the imaginary part exceeds eq_tol.
double expectation(const ComplexMatrix& w, const ComplexMatrix& rho, const Tolerance& tol = {});

/// Alternating minimization over unit psi, phi in C^d: fix psi and take phi as
/// the lowest eigenvector of M(psi)_kl = <psi e_k|W|psi e_l>, then swap, until
/// an iteration gains less than conv_tol. Restart r draws its start from a
/// generator seeded with splitmix64(seed + r); ties go to the lowest index.
ProductMinimum product_min(const ComplexMatrix& w, int d, const SeeSawConfig& cfg = {},
                           const Tolerance& tol = {});

/// A witness operator together with how it was built, if known.
struct Witness {
  ComplexMatrix matrix;
  int d = 0;
  std::optional<AlphaWitnessParams> alpha;
  std::optional<WitnessCoefficients> coefficients;

  static Witness from_alpha(const AlphaWitnessParams& params);
  static Witness from_coefficients(const WitnessCoefficients& coeffs);
  /// Any Hermitian d^2 x d^2 operator.
  static Witness from_matrix(ComplexMatrix matrix, int d, const Tolerance& tol = {});
};

/// A density matrix together with its circulant weights, if known.
struct State {
  ComplexMatrix matrix;
  int d = 0;
  std::optional<StateLambdas> lambdas;

  static State from_lambdas(const StateLambdas& lambdas, const Tolerance& tol = {});
  static State from_beta(const BetaFamilyParams& params, const Tolerance& tol = {});
  static State from_matrix(ComplexMatrix matrix, int d, const Tolerance& tol = {});
};

/// Tr(W_alpha rho) = (lambda_1 - lambda_d)(1 - 1/(d alpha)); lambda_{d-1}
/// replaces lambda_1 for the primed witness.
double closed_form_expectation(const AlphaWitnessParams& params, const StateLambdas& s);

struct DetectionReport {
  double expectation = 0.0;
  bool detected = false;                   // expectation < -eig_tol
  std::optional<double> closed_form;
  std::optional<ProductMinimum> product_min;
};

DetectionReport detect_state(const Witness& w, const State& rho, const SeeSawConfig& cfg = {},
                             const Tolerance& tol = {}, bool with_product_min = false);

/// A PPT state detected by W, which rules out W = P + Q^Gamma.
struct NdCertificate {
  AlphaWitnessParams witness;
  Number beta = 0;
  int grid_index = 0;
  double expectation = 0.0;
  double closed_form = 0.0;
  double ppt_min_eig = 0.0;
  ProductMinimum product_min;  // evidence that W is nonnegative on product states
};

/// beta grid scanned by certify_nd: ten exact points of [1, d-1) for W_alpha,
/// of ((d-1)(d-2)+1, (d-1)^2] (from the top) for W'_alpha.
std::vector<Rational> certificate_beta_grid(int d, bool primed);

/// Throws std::invalid_argument when alpha lies outside the certified range
/// and std::runtime_error when no grid point is detected.
NdCertificate certify_nd(const AlphaWitnessParams& params, const SeeSawConfig& cfg = {},
                         const Tolerance& tol = {});

}  // namespace circwit
