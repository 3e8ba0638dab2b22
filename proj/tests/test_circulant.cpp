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

#include "circwit/circulant.hpp"
#include "circwit/witness.hpp"
#include "test_support.hpp"

using namespace circwit;

TEST_CASE("shift matrix") {
  CHECK(max_abs_diff(shift_matrix(3, 0), ComplexMatrix::Identity(3, 3)) == 0.0);
  CHECK(max_abs_diff(shift_matrix(3, 1) * testing::basis_ket(3, 2), testing::basis_ket(3, 0)) == 0.0);
  for (int d = 2; d <= 6; ++d) {
    CHECK(max_abs_diff(shift_matrix(d, d), ComplexMatrix::Identity(d, d)) == 0.0);
    CHECK(max_abs_diff(shift_matrix(d, -1), shift_matrix(d, d - 1)) == 0.0);
  }
  CHECK_THROWS_AS(shift_matrix(1, 0), std::invalid_argument);
}

TEST_CASE("pi is an involution fixing zero") {
  for (int d = 2; d <= 8; ++d) {
    CHECK(permutation_pi(d, 0) == 0);
    for (int k = 0; k < d; ++k) CHECK(permutation_pi(d, permutation_pi(d, k)) == k);
    const ComplexMatrix pi = pi_matrix(d);
    for (int l = 0; l < d; ++l) CHECK(pi(permutation_pi(d, l), l) == Complex(1.0));
  }
}

TEST_CASE("assemble reproduces the named operators") {
  for (int d = 2; d <= 6; ++d) {
    CirculantSpec p = zero_spec(d);
    p.generators[0] = ComplexMatrix::Ones(d, d) / double(d);
    CHECK(max_abs_diff(assemble(p), max_entangled_projector(d)) < 1e-15);

    CirculantSpec mixed = zero_spec(d);
    for (auto& g : mixed.generators) g = ComplexMatrix::Identity(d, d) / double(d);
    CHECK(max_abs_diff(assemble(mixed), ComplexMatrix::Identity(d * d, d * d) / double(d)) < 1e-15);
  }
  // d=2: a0 = I puts ones on |00> and |11>.
  CirculantSpec two = zero_spec(2);
  two.generators[0] = ComplexMatrix::Identity(2, 2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(3, 3) = 1.0;
  CHECK(max_abs_diff(assemble(two), expected) == 0.0);
}

TEST_CASE("spec validation") {
  CirculantSpec bad = zero_spec(3);
  bad.generators.pop_back();
  CHECK_THROWS_AS(assemble(bad), std::invalid_argument);
  CirculantSpec non_herm = zero_spec(3);
  non_herm.generators[1] = testing::unit(3, 0, 1);
  CHECK_THROWS_AS(assemble(non_herm), NotHermitianError);
  CHECK_THROWS_AS(assemble(zero_spec(3, Support::SigmaTilde)), std::invalid_argument);
  CHECK_THROWS_AS(assemble_tilde(zero_spec(3)), std::invalid_argument);
  CHECK_THROWS_AS(zero_spec(3) + zero_spec(3, Support::SigmaTilde), std::invalid_argument);
}

TEST_CASE("disassemble") {
  std::mt19937_64 rng(21);
  for (int d = 2; d <= 6; ++d) {
    const auto spec = testing::random_spec(rng, d);
    const auto back = disassemble(assemble(spec), d);
    CHECK(back.circulant);
    for (int n = 0; n < d; ++n) CHECK(max_abs_diff(back.spec.generators[n], spec.generators[n]) == 0.0);
  }
  const auto id = disassemble(ComplexMatrix::Identity(9, 9), 3);
  CHECK(id.circulant);
  for (const auto& g : id.spec.generators) CHECK(max_abs_diff(g, ComplexMatrix::Identity(3, 3)) == 0.0);

  // |01><10| of the flip sits in row block Sigma_1 and column block Sigma_2.
  const auto flip = disassemble(flip_operator(3), 3);
  CHECK_FALSE(flip.circulant);
  CHECK(flip.residual == doctest::Approx(1.0));
}

TEST_CASE("circulant partial transpose on known operators") {
  for (int d = 3; d <= 6; ++d) {
    CirculantSpec mixed = zero_spec(d);
    for (auto& g : mixed.generators) g = ComplexMatrix::Identity(d, d) / double(d);
    const auto tilde = circulant_partial_transpose(mixed);
    CHECK(tilde.support == Support::SigmaTilde);
    for (const auto& g : tilde.generators) {
      // One 1/d per row.
      for (int i = 0; i < d; ++i) {
        int nonzero = 0;
        for (int j = 0; j < d; ++j) nonzero += std::abs(g(i, j)) > 0.0;
        CHECK(nonzero == 1);
      }
    }
    CHECK(max_abs_diff(assemble_tilde(tilde), ComplexMatrix::Identity(d * d, d * d) / double(d)) < 1e-15);

    CirculantSpec p = zero_spec(d);
    p.generators[0] = ComplexMatrix::Ones(d, d) / double(d);
    CHECK(max_abs_diff(assemble_tilde(circulant_partial_transpose(p)), flip_operator(d) / double(d)) <
          1e-15);
  }
}

TEST_CASE("assemble_tilde support") {
  // d=3, a~0 = I lands on |00>, |12>, |21>.
  CirculantSpec t = zero_spec(3, Support::SigmaTilde);
  t.generators[0] = ComplexMatrix::Identity(3, 3);
  ComplexMatrix expected = ComplexMatrix::Zero(9, 9);
  for (int idx : {0, 5, 7}) expected(idx, idx) = 1.0;
  CHECK(max_abs_diff(assemble_tilde(t), expected) == 0.0);
  CHECK(assemble_tilde(zero_spec(4, Support::SigmaTilde)).isZero(0.0));
}

TEST_CASE("partial transpose theorem against dense partial transpose") {
  std::mt19937_64 rng(2024);
  for (int d = 3; d <= 6; ++d) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto spec = testing::random_spec(rng, d);
      const auto tilde = circulant_partial_transpose(spec);
      worst = std::max(worst, max_abs_diff(assemble_tilde(tilde), partial_transpose(assemble(spec), d)));
      // Generator-level involution.
      const auto back = circulant_partial_transpose(tilde);
      CHECK(back.support == Support::Sigma);
      for (int n = 0; n < d; ++n) CHECK(max_abs_diff(back.generators[n], spec.generators[n]) == 0.0);
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("Sigma blocks are orthogonal and complete") {
  std::mt19937_64 rng(99);
  for (int d = 3; d <= 6; ++d) {
    const auto spec = testing::random_spec(rng, d);
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        if (m == n) continue;
        CirculantSpec only_m = zero_spec(d);
        CirculantSpec only_n = zero_spec(d);
        only_m.generators[m] = spec.generators[m];
        only_n.generators[n] = spec.generators[n];
        const auto am = assemble(only_m);
        const auto an = assemble(only_n);
        CHECK(std::abs(trace_product(am, an)) < 1e-12);
        CHECK((am * an).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
    CirculantSpec ones = zero_spec(d);
    for (auto& g : ones.generators) g = ComplexMatrix::Identity(d, d);
    CHECK(max_abs_diff(assemble(ones), ComplexMatrix::Identity(d * d, d * d)) == 0.0);
  }
}

TEST_CASE("assemble is a density matrix iff the spec is in state form") {
  std::mt19937_64 rng(31);
  const Tolerance tol;
  for (int d = 3; d <= 5; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto state = testing::random_state_spec(rng, d);
      CHECK(state.is_state_form(tol));
      const auto rho = assemble(state);
      CHECK(is_positive_semidefinite(rho, tol).positive);
      CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);

      // Indefinite generators: not PSD, and the assembled operator is not either.
      auto indefinite = testing::random_spec(rng, d);
      indefinite.generators[trial % d] -= 5.0 * ComplexMatrix::Identity(d, d);
      CHECK_FALSE(indefinite.is_state_form(tol));
      CHECK_FALSE(is_positive_semidefinite(assemble(indefinite), tol).positive);

      // PSD but wrong trace.
      auto heavy = state;
      heavy *= 2.0;
      CHECK_FALSE(heavy.is_state_form(tol));
      CHECK(std::abs(assemble(heavy).trace() - Complex(1.0)) > 0.5);
    }
  }
}
