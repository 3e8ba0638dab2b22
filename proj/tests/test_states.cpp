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
#include "circwit/states.hpp"
#include "circwit/witness.hpp"
#include "test_support.hpp"

using namespace circwit;

namespace {

StateLambdas exact_lambdas(int d, std::vector<Rational> values) {
  StateLambdas s{d, {}, std::nullopt};
  for (const auto& v : values) s.lambdas.emplace_back(v);
  return s;
}

}  // namespace

TEST_CASE("state from lambdas") {
  for (int d = 3; d <= 6; ++d) {
    std::vector<Rational> pure(d, Rational(0));
    pure.back() = Rational(1);
    CHECK(max_abs_diff(state_from_lambdas(exact_lambdas(d, pure)), max_entangled_projector(d)) < 1e-15);

    const auto uniform = state_from_lambdas(exact_lambdas(d, std::vector<Rational>(d, Rational(1, d))));
    CHECK(std::abs(uniform.trace() - Complex(1.0)) < 1e-14);
    CHECK(is_positive_semidefinite(uniform).positive);
    CHECK(disassemble(uniform, d).circulant);
  }
}

TEST_CASE("d=3 beta family is the Horodecki state") {
  for (int num = 0; num <= 20; ++num) {
    const Rational beta(num, 4);
    const auto s = beta_lambdas({3, Number(beta)});
    CHECK(*s.lambdas[0].exact() == beta / Rational(7));
    CHECK(*s.lambdas[1].exact() == (Rational(5) - beta) / Rational(7));
    CHECK(*s.lambdas[2].exact() == Rational(2, 7));
    const ComplexMatrix expected = (2.0 / 7.0) * max_entangled_projector(3) +
                                   (beta.to_double() / 7.0) * projector_O(3, 1) +
                                   ((5.0 - beta.to_double()) / 7.0) * projector_O(3, 2);
    CHECK(max_abs_diff(state_from_lambdas(s), expected) < 1e-15);
  }
  const auto rho2 = state_from_lambdas(beta_lambdas({3, Number(2)}));
  const ComplexMatrix expected2 = (2.0 / 7.0) * max_entangled_projector(3) +
                                  (2.0 / 7.0) * projector_O(3, 1) + (3.0 / 7.0) * projector_O(3, 2);
  CHECK(max_abs_diff(rho2, expected2) < 1e-15);
}

TEST_CASE("beta lambdas") {
  CHECK(family_ell(3) == 7);
  CHECK(family_ell(4) == 16);
  const Rational beta(5, 2);
  const auto s4 = beta_lambdas({4, Number(beta)});
  CHECK(*s4.lambdas[0].exact() == beta / Rational(16));
  CHECK(*s4.lambdas[1].exact() == Rational(3, 16));
  CHECK(*s4.lambdas[2].exact() == (Rational(10) - beta) / Rational(16));
  CHECK(*s4.lambdas[3].exact() == Rational(3, 16));

  for (int d = 3; d <= 8; ++d) {
    const auto at = beta_lambdas({d, Number(d - 1)});
    CHECK(*at.lambdas[0].exact() == *at.lambdas[d - 1].exact());
    for (int b = 0; b <= beta_max(d); ++b) {
      const auto s = beta_lambdas({d, Number(b)});
      Rational sum(0);
      for (const auto& l : s.lambdas) sum = sum + *l.exact();
      CHECK(sum == Rational(1));
    }
  }
  CHECK_THROWS_AS(beta_lambdas({4, Number(20)}), std::invalid_argument);
  CHECK_THROWS_AS(beta_lambdas({3, Number(Rational(-1, 10))}), std::invalid_argument);
  CHECK_THROWS_AS(beta_lambdas({2, Number(1)}), std::invalid_argument);
}

TEST_CASE("weights are validated") {
  CHECK_THROWS_AS(state_from_lambdas(exact_lambdas(3, {Rational(1, 2), Rational(1, 2)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(state_from_lambdas(exact_lambdas(3, {Rational(1, 2), Rational(1, 2), Rational(1, 10)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(state_from_lambdas(exact_lambdas(3, {Rational(-1, 2), Rational(1), Rational(1, 2)})),
                  std::invalid_argument);
}

TEST_CASE("random weights give density matrices") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d = 3; d <= 8; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> w(d);
      double total = 0.0;
      for (auto& v : w) total += (v = u(rng));
      StateLambdas s{d, {}, std::nullopt};
      for (double v : w) s.lambdas.emplace_back(v / total);
      const auto rho = state_from_lambdas(s);
      CHECK(is_positive_semidefinite(rho).positive);
      CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
    }
  }
}

TEST_CASE("PPT by eigenvalues") {
  std::mt19937_64 rng(43);
  for (int d = 3; d <= 4; ++d) {
    ComplexMatrix a = testing::random_psd(rng, d);
    ComplexMatrix b = testing::random_psd(rng, d);
    a /= a.trace();
    b /= b.trace();
    CHECK(is_ppt(tensor(a, b), d).ppt);
  }
  const auto at4 = is_ppt(state_from_lambdas(beta_lambdas({3, Number(4)})), 3);
  CHECK(at4.ppt);
  CHECK(std::abs(at4.min_eigenvalue) < 1e-12);
  const auto npt = is_ppt(state_from_lambdas(beta_lambdas({3, Number::parse("4.5")})), 3);
  CHECK_FALSE(npt.ppt);
  CHECK(npt.min_eigenvalue < -1e-3);
  CHECK_FALSE(is_ppt(state_from_lambdas(beta_lambdas({3, Number(5)})), 3).ppt);

  CHECK_THROWS_AS(is_ppt(ComplexMatrix::Identity(9, 9), 3), std::invalid_argument);
  // Unit trace but not positive.
  CHECK_THROWS_AS(is_ppt(2.0 * projector_O(3, 1) - max_entangled_projector(3), 3), std::invalid_argument);
}

TEST_CASE("closed-form PPT test") {
  CHECK(ppt_closed_form(beta_lambdas({3, Number(1)})));
  CHECK_FALSE(ppt_closed_form(beta_lambdas({3, Number::parse("0.5")})));
  CHECK_THROWS_AS(ppt_closed_form(exact_lambdas(3, {Rational(1, 3), Rational(1, 3), Rational(1, 3)})),
                  std::invalid_argument);

  // d=5 over [0, 17] in steps of 1/4, against the eigenvalue oracle.
  for (int k = 0; k <= 68; ++k) {
    const auto s = beta_lambdas({5, Number(Rational(k, 4))});
    CHECK(ppt_closed_form(s) == is_ppt(state_from_lambdas(s), 5).ppt);
  }
}

TEST_CASE("PPT window on a 50-point grid") {
  for (int d = 3; d <= 6; ++d) {
    const Rational top(beta_max(d));
    const Rational lo(1);
    const Rational hi((d - 1) * (d - 1));
    for (int k = 0; k < 50; ++k) {
      Rational beta = top * Rational(k, 49);
      if (k == 10) beta = lo;
      if (k == 40) beta = hi;
      const auto s = beta_lambdas({d, Number(beta)});
      const bool expected = beta >= lo && beta <= hi;
      CHECK(ppt_closed_form(s) == expected);
      CHECK(is_ppt(state_from_lambdas(s), d).ppt == expected);
    }
  }
}

TEST_CASE("beta classification") {
  CHECK(classify_beta(3, Number::parse("2.5")) == BetaLabel::Separable);
  CHECK(classify_beta(3, Number::parse("1.5")) == BetaLabel::PptEntangled);
  CHECK(classify_beta(3, Number(2)) == BetaLabel::Separable);
  CHECK(classify_beta(3, Number(3)) == BetaLabel::Separable);
  CHECK(classify_beta(3, Number(4)) == BetaLabel::PptEntangled);
  CHECK(classify_beta(3, Number(1)) == BetaLabel::PptEntangled);
  CHECK(classify_beta(3, Number::parse("0.99")) == BetaLabel::Npt);
  CHECK(classify_beta(3, Number::parse("4.01")) == BetaLabel::Npt);
  CHECK(classify_beta(4, Number(2)) == BetaLabel::PptEntangled);
  CHECK(classify_beta(4, Number(3)) == BetaLabel::PptUnresolved);
  CHECK(classify_beta(4, Number(7)) == BetaLabel::PptUnresolved);
  CHECK(classify_beta(4, Number(8)) == BetaLabel::PptEntangled);
  CHECK(classify_beta(4, Number(10)) == BetaLabel::Npt);
  CHECK_THROWS_AS(classify_beta(4, Number(11)), std::invalid_argument);
  CHECK(to_string(BetaLabel::PptEntangled) == "PPT-ENTANGLED");

  // NPT labels agree with the eigenvalue test.
  for (int d = 3; d <= 6; ++d) {
    for (int k = 0; k <= 4 * beta_max(d); ++k) {
      const Number beta(Rational(k, 4));
      const bool ppt = is_ppt(state_from_lambdas(beta_lambdas({d, beta})), d).ppt;
      CHECK((classify_beta(d, beta) == BetaLabel::Npt) == !ppt);
    }
  }
}
