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

#include "circwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circwit {
namespace {

void require_witness_dimension(int d) {
  if (d < 3) throw std::invalid_argument("witness: d >= 3 required, got d=" + std::to_string(d));
}

}  // namespace

ComplexMatrix projector_O(int d, int n) {
  if (d < 2) throw std::invalid_argument("projector_O: d must be >= 2");
  if (n < 0 || n >= d) {
    throw std::out_of_range("projector_O: n=" + std::to_string(n) + " outside [0, d-1]");
  }
  ComplexMatrix o = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    const int idx = i * d + (i + n) % d;
    o(idx, idx) = 1.0 / d;
  }
  return o;
}

ComplexMatrix max_entangled_projector(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled_projector: d must be >= 2");
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) p(i * d + i, j * d + j) = 1.0 / d;
  }
  return p;
}

ComplexMatrix flip_operator(int d) {
  if (d < 2) throw std::invalid_argument("flip_operator: d must be >= 2");
  ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  }
  return f;
}

void AlphaWitnessParams::validate() const {
  require_witness_dimension(d);
  if (!std::isfinite(alpha.value()) || alpha.compare(Rational(1, 2 * d)) <= 0) {
    throw std::invalid_argument("witness: alpha must exceed 1/(2d) = " +
                                Rational(1, 2 * d).to_string() + ", got " + alpha.to_string());
  }
}

double AlphaWitnessParams::mu() const { return 2.0 - 1.0 / (d * alpha.value()); }

void WitnessCoefficients::validate() const {
  require_witness_dimension(d);
  if (a.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("witness: expected " + std::to_string(d) + " coefficients, got " +
                                std::to_string(a.size()));
  }
  for (double v : a) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("witness: coefficients must be finite and nonnegative");
    }
  }
  if (!std::isfinite(mu) || mu <= 0.0) throw std::invalid_argument("witness: mu must be positive");
}

ComplexMatrix witness_W_alpha(const AlphaWitnessParams& params) {
  params.validate();
  const int d = params.d;
  const double alpha = params.alpha.value();
  const int first = params.primed ? d - 1 : 1;
  ComplexMatrix w = ComplexMatrix::Identity(d * d, d * d);
  w -= (1.0 / alpha) * projector_O(d, first);
  for (int n = 1; n < d; ++n) {
    if (n != first) w -= double(d) * projector_O(d, n);
  }
  w -= params.mu() * max_entangled_projector(d);
  return w;
}

ComplexMatrix witness_W_alpha_simplified(const AlphaWitnessParams& params) {
  params.validate();
  const int d = params.d;
  const double alpha = params.alpha.value();
  return double(d) * projector_O(d, 0) +
         (d - 1.0 / alpha) * projector_O(d, params.primed ? d - 1 : 1) -
         params.mu() * max_entangled_projector(d);
}

ComplexMatrix witness_family(const WitnessCoefficients& coeffs) {
  coeffs.validate();
  const int d = coeffs.d;
  ComplexMatrix w = (coeffs.a[0] + 1.0) * projector_O(d, 0);
  for (int n = 1; n < d; ++n) w += coeffs.a[n] * projector_O(d, n);
  w -= max_entangled_projector(d);
  return coeffs.mu * w;
}

WitnessCoefficients coefficients_from_alpha(const AlphaWitnessParams& params) {
  params.validate();
  const int d = params.d;
  const double alpha = params.alpha.value();
  const double mu = params.mu();
  WitnessCoefficients out{d, std::vector<double>(d, 0.0), mu};
  out.a[0] = d / mu - 1.0;
  out.a[params.primed ? d - 1 : 1] = d / mu - 1.0 / (alpha * mu);
  return out;
}

std::vector<double> witness_family_spectrum(const WitnessCoefficients& coeffs) {
  const int d = coeffs.d;
  const double mu = coeffs.mu;
  std::vector<double> out;
  out.reserve(d * d);
  out.push_back(mu * (coeffs.a[0] + 1.0 - d) / d);
  for (int k = 1; k < d; ++k) out.push_back(mu * (coeffs.a[0] + 1.0) / d);
  for (int n = 1; n < d; ++n) {
    for (int k = 0; k < d; ++k) out.push_back(mu * coeffs.a[n] / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NecessaryConditions check_necessary_conditions(const WitnessCoefficients& coeffs,
                                               const Tolerance& tol) {
  require_witness_dimension(coeffs.d);
  if (coeffs.a.size() != static_cast<std::size_t>(coeffs.d)) {
    throw std::invalid_argument("witness: coefficient count does not match d");
  }
  const int d = coeffs.d;
  NecessaryConditions out{};
  out.all_nonnegative = std::all_of(coeffs.a.begin(), coeffs.a.end(), [](double v) { return v >= 0.0; });
  const double sum = std::accumulate(coeffs.a.begin(), coeffs.a.end(), 0.0);
  out.sum_condition = sum >= (d - 1) - tol.eq_tol;
  out.non_positive = coeffs.a[0] < (d - 1) - tol.eq_tol;

  // Unscaled W[a] evaluated on the unnormalized product vector psi (x) psi.
  ComplexMatrix w = (coeffs.a[0] + 1.0) * projector_O(d, 0);
  for (int n = 1; n < d; ++n) w += coeffs.a[n] * projector_O(d, n);
  w -= max_entangled_projector(d);
  const ComplexVector psi = ComplexVector::Ones(d);
  ComplexVector product(d * d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) product(i * d + k) = psi(i) * psi(k);
  }
  out.product_value = product.dot(w * product).real();
  out.product_check_agrees = (out.product_value >= -tol.eq_tol) == out.sum_condition;
  return out;
}

D3Conditions check_d3_conditions(const WitnessCoefficients& coeffs, const Tolerance& tol) {
  if (coeffs.d != 3) {
    throw std::invalid_argument("check_d3_conditions: d = 3 required, got d=" +
                                std::to_string(coeffs.d));
  }
  D3Conditions out{};
  out.necessary = check_necessary_conditions(coeffs, tol);
  const double a0 = coeffs.a[0];
  const double prod = coeffs.a[1] * coeffs.a[2];
  out.small_a0_condition = a0 > 1.0 || prod >= (1.0 - a0) * (1.0 - a0) - tol.eq_tol;
  out.is_ew = out.necessary.all_nonnegative && out.necessary.sum_condition &&
              out.necessary.non_positive && out.small_a0_condition;
  out.is_nd = out.is_ew && prod < (2.0 - a0) * (2.0 - a0) / 4.0 - tol.eq_tol;
  return out;
}

Rational a1_for_alpha(int d, const Rational& alpha) {
  const Rational da = Rational(d) * alpha;
  return Rational(d) * (da - 1) / (Rational(2) * da - 1);
}

bool AlphaRange::contains(const Number& alpha) const {
  return alpha.compare(lower) > 0 && alpha.compare(upper) <= 0;
}

AlphaRange alpha_admissible_range(int d) {
  require_witness_dimension(d);
  // a_1(alpha) = d (d alpha - 1) / (2 d alpha - 1) is increasing for alpha > 1/(2d).
  // a_1 = 0 at d alpha = 1; a_1 = 1 solves d^2 alpha - d = 2 d alpha - 1.
  const Rational lower(1, d);
  const Rational upper = Rational(d - 1) / Rational(d * d - 2 * d);
  AlphaRange range{d, lower, upper, a1_for_alpha(d, upper), a1_for_alpha(d, lower)};
  if (range.a1_at_upper != Rational(1) || range.a1_at_lower != Rational(0)) {
    throw std::logic_error("alpha_admissible_range: endpoint certificate failed");
  }
  return range;
}

}  // namespace circwit
