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

#include <doctest.h>

#include <random>

#include "circwit/detect.hpp"
#include "test_support.hpp"

using namespace circwit;

namespace {

StateLambdas random_lambdas(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(d);
  double total = 0.0;
  for (auto& v : w) total += (v = u(rng));
  StateLambdas s{d, {}, std::nullopt};
  for (double v : w) s.lambdas.emplace_back(v / total);
  return s;
}

double product_value(const ComplexMatrix& w, const ComplexVector& psi, const ComplexVector& phi) {
  const auto d = psi.size();
  ComplexVector v(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) v(i * d + k) = psi(i) * phi(k);
  }
  return v.dot(w * v).real();
}

SeeSawConfig quick() { return {16, 500, 1e-12, 0}; }

}  // namespace

TEST_CASE("expectation matches the closed forms") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 3 + trial % 4;
    std::uniform_real_distribution<double> ua(1.0 / (2 * d) + 1e-3, 1.0);
    const double alpha = ua(rng);
    const auto s = random_lambdas(rng, d);
    const auto rho = state_from_lambdas(s);
    const double factor = 1.0 - 1.0 / (d * alpha);
    const double w = expectation(witness_W_alpha({d, Number(alpha), false}), rho);
    const double wp = expectation(witness_W_alpha({d, Number(alpha), true}), rho);
    CHECK(std::abs(w - (s.lambda(1) - s.lambda(d)) * factor) <= 1e-10);
    CHECK(std::abs(wp - (s.lambda(d - 1) - s.lambda(d)) * factor) <= 1e-10);
    // detected iff lambda_1 < lambda_d, for alpha > 1/d.
    if (alpha > 1.0 / d) {
      const Witness wit = Witness::from_alpha({d, Number(alpha), false});
      const auto report = detect_state(wit, State::from_lambdas(s));
      CHECK(report.detected == (s.lambda(1) < s.lambda(d) && w < -1e-9));
    }
  }
}

TEST_CASE("expectation at d=3, alpha=1/2, beta=1 is -1/21") {
  const auto w = witness_W_alpha({3, Rational(1, 2), false});
  const auto rho = state_from_lambdas(beta_lambdas({3, Number(1)}));
  CHECK(std::abs(expectation(w, rho) + 1.0 / 21.0) < 1e-12);
}

TEST_CASE("expectation errors") {
  CHECK_THROWS_AS(expectation(ComplexMatrix::Identity(9, 9), ComplexMatrix::Identity(16, 16)),
                  DimensionError);
  const ComplexMatrix skew = Complex(0.0, 1.0) * ComplexMatrix::Identity(9, 9);
  CHECK_THROWS_AS(expectation(skew, ComplexMatrix::Identity(9, 9) / 9.0), std::invalid_argument);
}

TEST_CASE("product minimum of simple operators") {
  const auto id = product_min(ComplexMatrix::Identity(9, 9), 3, quick());
  CHECK(id.value == doctest::Approx(1.0).epsilon(1e-12));

  for (int d = 2; d <= 5; ++d) {
    // <e_0 e_1|P+|e_0 e_1> = 0 and P+ >= 0.
    const auto p = product_min(max_entangled_projector(d), d, quick());
    CHECK(std::abs(p.value) < 1e-9);
    const ComplexMatrix e0 = testing::basis_ket(d, 0);
    const ComplexMatrix e1 = testing::basis_ket(d, 1);
    CHECK(std::abs(product_value(max_entangled_projector(d), e0.col(0), e1.col(0))) < 1e-15);
  }
}

TEST_CASE("product minimum contract") {
  const auto w = witness_W_alpha({3, Rational(1, 2), false});
  const auto res = product_min(w, 3, {64, 500, 1e-12, 7});
  CHECK(res.value >= -1e-9);
  CHECK(hermitian_eigenvalues(w).front() == doctest::Approx(-1.0 / 3.0));
  CHECK(std::abs(res.psi.norm() - 1.0) < 1e-12);
  CHECK(std::abs(res.phi.norm() - 1.0) < 1e-12);
  // The reported value is attained by the reported vectors.
  CHECK(std::abs(product_value(w, res.psi, res.phi) - res.value) < 1e-10);
  for (std::size_t k = 1; k < res.trajectory.size(); ++k) {
    CHECK(res.trajectory[k] <= res.trajectory[k - 1] + 1e-12);
  }
  CHECK(res.seed == 7);
  CHECK(res.restarts == 64);

  const auto again = product_min(w, 3, {64, 500, 1e-12, 7});
  CHECK(again.value == res.value);
  CHECK(again.restart == res.restart);

  CHECK_THROWS_AS(product_min(testing::unit(9, 0, 1), 3), NotHermitianError);
  CHECK_THROWS_AS(product_min(w, 3, {0, 10, 1e-12, 0}), std::invalid_argument);
}

TEST_CASE("product minimum finds negative values of non-witnesses") {
  // W[0, 0.5, 0.5] violates sum a >= d-1; psi = sum |i> / sqrt(3) gives (1 - 2)/9.
  const auto w = witness_family({3, {0.0, 0.5, 0.5}, 1.0});
  CHECK(product_min(w, 3, quick()).value <= -1.0 / 9.0 + 1e-9);
}

TEST_CASE("d=3 EW verdicts are consistent with product minimization") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  int witnesses = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const WitnessCoefficients c{3, {u(rng), u(rng), u(rng)}, 1.0};
    const auto verdict = check_d3_conditions(c);
    const double pmin = product_min(witness_family(c), 3, quick()).value;
    if (verdict.is_ew) {
      ++witnesses;
      CHECK(pmin >= -1e-9);
      CHECK(hermitian_eigenvalues(witness_family(c)).front() < 0.0);
    } else if (verdict.necessary.non_positive) {
      // Not block-positive, so some product state must be negative.
      CHECK(pmin < 0.0);
    }
  }
  CHECK(witnesses > 0);
}

TEST_CASE("detect_state") {
  const Witness w = Witness::from_alpha({3, Rational(1, 2), false});
  auto r = detect_state(w, State::from_beta({3, Number(1)}));
  CHECK(r.detected);
  CHECK(std::abs(r.expectation + 1.0 / 21.0) < 1e-12);
  REQUIRE(r.closed_form);
  CHECK(std::abs(*r.closed_form - r.expectation) < 1e-10);

  r = detect_state(w, State::from_beta({3, Number::parse("2.5")}));
  CHECK_FALSE(r.detected);
  CHECK(r.expectation == doctest::Approx((0.5 / 7.0) / 3.0).epsilon(1e-12));

  const State mixed = State::from_matrix(ComplexMatrix::Identity(9, 9) / 9.0, 3);
  r = detect_state(w, mixed);
  CHECK_FALSE(r.detected);
  CHECK_FALSE(r.closed_form);
  CHECK(r.expectation == doctest::Approx(w.matrix.trace().real() / 9.0));

  r = detect_state(w, State::from_beta({3, Number(1)}), quick(), {}, true);
  REQUIRE(r.product_min);
  CHECK(r.product_min->value >= -1e-9);

  CHECK_THROWS_AS(detect_state(w, State::from_beta({4, Number(1)})), DimensionError);
}

TEST_CASE("non-decomposability certificates") {
  auto cert = certify_nd({3, Rational(1, 2), false}, quick());
  CHECK(cert.beta.exact() == Rational(1));
  CHECK(std::abs(cert.expectation + 1.0 / 21.0) < 1e-12);
  CHECK(cert.ppt_min_eig >= -1e-9);
  CHECK(cert.product_min.value >= -1e-9);

  cert = certify_nd({4, Rational(3, 8), false}, quick());
  const double beta = cert.beta.value();
  CHECK(beta >= 1.0);
  CHECK(beta < 3.0);
  CHECK(std::abs(cert.expectation - (beta - 3.0) / 16.0 * (1.0 - 2.0 / 3.0)) < 1e-12);

  cert = certify_nd({3, Rational(1, 2), true}, quick());
  CHECK(cert.beta.exact() == Rational(4));
  CHECK(std::abs(cert.expectation + 1.0 / 21.0) < 1e-12);

  CHECK_THROWS_AS(certify_nd({3, Rational(7, 10), false}, quick()), std::invalid_argument);
  CHECK_THROWS_AS(certify_nd({3, Rational(1, 3), false}, quick()), std::invalid_argument);
}

TEST_CASE("certificate beta grids") {
  for (int d = 3; d <= 6; ++d) {
    const auto plain = certificate_beta_grid(d, false);
    const auto primed = certificate_beta_grid(d, true);
    CHECK(plain.size() == 10);
    CHECK(primed.size() == 10);
    for (const auto& b : plain) {
      CHECK(b >= Rational(1));
      CHECK(b < Rational(d - 1));
    }
    for (const auto& b : primed) {
      CHECK(b > Rational((d - 1) * (d - 2) + 1));
      CHECK(b <= Rational((d - 1) * (d - 1)));
    }
  }
}
