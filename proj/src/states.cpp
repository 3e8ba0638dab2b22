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

#include "circwit/states.hpp"

#include <cmath>
#include <stdexcept>

#include "circwit/witness.hpp"

namespace circwit {

std::int64_t family_ell(int d) { return std::int64_t(d - 1) * (2 * d - 3) + 1; }

std::int64_t beta_max(int d) { return std::int64_t(d - 1) * (d - 1) + 1; }

void StateLambdas::validate(const Tolerance& tol) const {
  if (d < 3) throw std::invalid_argument("state: d >= 3 required, got d=" + std::to_string(d));
  if (lambdas.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("state: expected " + std::to_string(d) + " weights, got " +
                                std::to_string(lambdas.size()));
  }
  bool all_exact = true;
  double sum = 0.0;
  Rational exact_sum(0);
  for (const auto& l : lambdas) {
    if (!std::isfinite(l.value()) || l.compare(Rational(0)) < 0) {
      throw std::invalid_argument("state: weights must be nonnegative");
    }
    sum += l.value();
    if (l.exact()) {
      exact_sum = exact_sum + *l.exact();
    } else {
      all_exact = false;
    }
  }
  if (all_exact ? exact_sum != Rational(1) : std::abs(sum - 1.0) > tol.eq_tol) {
    throw std::invalid_argument("state: weights must sum to 1");
  }
}

void BetaFamilyParams::validate() const {
  if (d < 3) throw std::invalid_argument("state: d >= 3 required, got d=" + std::to_string(d));
  if (!std::isfinite(beta.value()) || beta.compare(Rational(0)) < 0 ||
      beta.compare(Rational(beta_max(d))) > 0) {
    throw std::invalid_argument("state: beta=" + beta.to_string() + " out of [0, " +
                                std::to_string(beta_max(d)) + "]");
  }
}

ComplexMatrix state_from_lambdas(const StateLambdas& s, const Tolerance& tol) {
  s.validate(tol);
  const int d = s.d;
  ComplexMatrix rho = s.lambda(d) * max_entangled_projector(d);
  for (int i = 1; i < d; ++i) rho += s.lambda(i) * projector_O(d, i);
  return rho;
}

StateLambdas beta_lambdas(const BetaFamilyParams& p) {
  p.validate();
  const int d = p.d;
  const std::int64_t ell = family_ell(d);
  StateLambdas out{d, {}, p.beta};
  out.lambdas.reserve(d);
  if (const auto& exact = p.beta.exact()) {
    const Rational rest(d - 1, ell);
    out.lambdas.assign(d, Number(rest));
    out.lambdas[0] = Number(*exact / Rational(ell));
    out.lambdas[d - 2] = Number((Rational(beta_max(d)) - *exact) / Rational(ell));
  } else {
    const double beta = p.beta.value();
    out.lambdas.assign(d, Number(double(d - 1) / ell));
    out.lambdas[0] = Number(beta / ell);
    out.lambdas[d - 2] = Number((beta_max(d) - beta) / ell);
  }
  return out;
}

PptVerdict is_ppt(const ComplexMatrix& rho, int d, const Tolerance& tol) {
  require_hermitian(rho, tol.eq_tol, "is_ppt");
  if (rho.rows() != Eigen::Index(d) * d) {
    throw DimensionError("is_ppt: state is not d^2 x d^2");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > tol.eq_tol) {
    throw std::invalid_argument("is_ppt: state does not have unit trace");
  }
  if (!is_positive_semidefinite(rho, tol).positive) {
    throw std::invalid_argument("is_ppt: state is not positive semidefinite");
  }
  const auto verdict = is_positive_semidefinite(partial_transpose(rho, d), tol);
  return {verdict.positive, verdict.min_eigenvalue};
}

bool ppt_closed_form(const StateLambdas& s) {
  if (!s.beta) {
    throw std::invalid_argument("ppt_closed_form: only defined for beta-family states");
  }
  s.validate();
  const auto& l1 = s.lambdas[0];
  const auto& lm = s.lambdas[s.d - 2];
  const auto& ld = s.lambdas[s.d - 1];
  if (l1.exact() && lm.exact() && ld.exact()) {
    return *l1.exact() * *lm.exact() >= *ld.exact() * *ld.exact();
  }
  return l1.value() * lm.value() - ld.value() * ld.value() >= -Tolerance{}.eq_tol;
}

std::string to_string(BetaLabel label) {
  switch (label) {
    case BetaLabel::Npt: return "NPT";
    case BetaLabel::PptEntangled: return "PPT-ENTANGLED";
    case BetaLabel::Separable: return "SEPARABLE";
    case BetaLabel::PptUnresolved: return "PPT-UNRESOLVED";
  }
  return "UNKNOWN";
}

BetaLabel classify_beta(int d, const Number& beta) {
  BetaFamilyParams{d, beta}.validate();
  const Rational ppt_max = Rational(std::int64_t(d - 1) * (d - 1));
  if (beta.compare(Rational(1)) < 0 || beta.compare(ppt_max) > 0) return BetaLabel::Npt;
  const Rational w_end(d - 1);
  const Rational w_prime_start = Rational(std::int64_t(d - 1) * (d - 2) + 1);
  if (beta.compare(w_end) < 0 || beta.compare(w_prime_start) > 0) {
    return BetaLabel::PptEntangled;
  }
  // d = 3 only: [2, 3] is the separable region of the Horodecki family.
  if (d == 3) return BetaLabel::Separable;
  return BetaLabel::PptUnresolved;
}

}  // namespace circwit
