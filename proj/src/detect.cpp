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

#include "circwit/detect.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace circwit {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Box-Muller on 53-bit uniforms; std::normal_distribution differs between
// standard libraries, which would break replay.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  Complex next() {
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = (double(engine_() >> 11) + 1.0) * scale;  // (0, 1]
    const double u2 = double(engine_() >> 11) * scale;          // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

 private:
  std::mt19937_64 engine_;
};

ComplexVector random_unit_vector(GaussianSource& source, int d) {
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = source.next();
  return v / v.norm();
}

// M(psi)_kl = <psi e_k|W|psi e_l>
ComplexMatrix reduce_first(const ComplexMatrix& w, const ComplexVector& psi, int d) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex c = std::conj(psi(i)) * psi(j);
      m += c * w.block(i * d, j * d, d, d);
    }
  }
  return m;
}

// N(phi)_ij = <e_i phi|W|e_j phi>
ComplexMatrix reduce_second(const ComplexMatrix& w, const ComplexVector& phi, int d) {
  ComplexMatrix n(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      n(i, j) = phi.dot(w.block(i * d, j * d, d, d) * phi);
    }
  }
  return n;
}

struct LowestPair {
  double value;
  ComplexVector vector;
};

LowestPair lowest_eigenpair(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

struct RestartResult {
  double value;
  ComplexVector psi;
  ComplexVector phi;
  std::vector<double> trajectory;
};

RestartResult see_saw(const ComplexMatrix& w, int d, const SeeSawConfig& cfg,
                      std::uint64_t restart_seed) {
  GaussianSource source(restart_seed);
  RestartResult r;
  r.psi = random_unit_vector(source, d);
  auto step = lowest_eigenpair(reduce_first(w, r.psi, d));
  r.phi = step.vector;
  r.value = step.value;
  r.trajectory.push_back(r.value);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const double previous = r.value;
    auto left = lowest_eigenpair(reduce_second(w, r.phi, d));
    r.psi = left.vector;
    r.trajectory.push_back(left.value);
    auto right = lowest_eigenpair(reduce_first(w, r.psi, d));
    r.phi = right.vector;
    r.value = right.value;
    r.trajectory.push_back(r.value);
    if (previous - r.value < cfg.conv_tol) break;
  }
  return r;
}

}  // namespace

void SeeSawConfig::validate() const {
  if (restarts <= 0 || max_iters <= 0 || !(conv_tol > 0.0)) {
    throw std::invalid_argument("see-saw: restarts, max_iters and conv_tol must be positive");
  }
}

double expectation(const ComplexMatrix& w, const ComplexMatrix& rho, const Tolerance& tol) {
  require_square(w, "expectation");
  require_square(rho, "expectation");
  if (w.rows() != rho.rows()) {
    throw DimensionError("expectation: witness is " + std::to_string(w.rows()) +
                         "x" + std::to_string(w.rows()) + " but state is " +
                         std::to_string(rho.rows()) + "x" + std::to_string(rho.rows()));
  }
  const Complex value = trace_product(w, rho);
  if (std::abs(value.imag()) > tol.eq_tol) {
    throw std::invalid_argument("expectation: non-negligible imaginary part");
  }
  return value.real();
}

ProductMinimum product_min(const ComplexMatrix& w, int d, const SeeSawConfig& cfg,
                           const Tolerance& tol) {
  cfg.validate();
  require_hermitian(w, tol.eq_tol, "product_min");
  if (w.rows() != Eigen::Index(d) * d) throw DimensionError("product_min: W is not d^2 x d^2");

  ProductMinimum best;
  best.seed = cfg.seed;
  best.restarts = cfg.restarts;
  bool have = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    auto result = see_saw(w, d, cfg, splitmix64(cfg.seed + std::uint64_t(r)));
    if (!have || result.value < best.value) {
      have = true;
      best.value = result.value;
      best.psi = std::move(result.psi);
      best.phi = std::move(result.phi);
      best.trajectory = std::move(result.trajectory);
      best.restart = r;
    }
  }
  return best;
}

Witness Witness::from_alpha(const AlphaWitnessParams& params) {
  return {witness_W_alpha(params), params.d, params, coefficients_from_alpha(params)};
}

Witness Witness::from_coefficients(const WitnessCoefficients& coeffs) {
  return {witness_family(coeffs), coeffs.d, std::nullopt, coeffs};
}

Witness Witness::from_matrix(ComplexMatrix matrix, int d, const Tolerance& tol) {
  require_hermitian(matrix, tol.eq_tol, "witness");
  if (d < 2 || matrix.rows() != Eigen::Index(d) * d) {
    throw DimensionError("witness: matrix is not d^2 x d^2");
  }
  return {std::move(matrix), d, std::nullopt, std::nullopt};
}

State State::from_lambdas(const StateLambdas& lambdas, const Tolerance& tol) {
  return {state_from_lambdas(lambdas, tol), lambdas.d, lambdas};
}

State State::from_beta(const BetaFamilyParams& params, const Tolerance& tol) {
  return from_lambdas(beta_lambdas(params), tol);
}

State State::from_matrix(ComplexMatrix matrix, int d, const Tolerance& tol) {
  require_hermitian(matrix, tol.eq_tol, "state");
  if (d < 2 || matrix.rows() != Eigen::Index(d) * d) {
    throw DimensionError("state: matrix is not d^2 x d^2");
  }
  return {std::move(matrix), d, std::nullopt};
}

double closed_form_expectation(const AlphaWitnessParams& params, const StateLambdas& s) {
  if (params.d != s.d) throw DimensionError("closed_form_expectation: d mismatch");
  const int d = params.d;
  const double lead = params.primed ? s.lambda(d - 1) : s.lambda(1);
  return (lead - s.lambda(d)) * (1.0 - 1.0 / (d * params.alpha.value()));
}

DetectionReport detect_state(const Witness& w, const State& rho, const SeeSawConfig& cfg,
                             const Tolerance& tol, bool with_product_min) {
  if (w.d != rho.d) {
    throw DimensionError("detect: witness has d=" + std::to_string(w.d) + " but state has d=" +
                         std::to_string(rho.d));
  }
  DetectionReport report;
  report.expectation = expectation(w.matrix, rho.matrix, tol);
  report.detected = report.expectation < -tol.eig_tol;
  if (w.alpha && rho.lambdas) report.closed_form = closed_form_expectation(*w.alpha, *rho.lambdas);
  if (with_product_min) report.product_min = product_min(w.matrix, w.d, cfg, tol);
  return report;
}

std::vector<Rational> certificate_beta_grid(int d, bool primed) {
  std::vector<Rational> grid;
  const Rational step(d - 2, 10);
  const Rational top(std::int64_t(d - 1) * (d - 1));
  for (int k = 0; k < 10; ++k) {
    grid.push_back(primed ? top - Rational(k) * step : Rational(1) + Rational(k) * step);
  }
  return grid;
}

NdCertificate certify_nd(const AlphaWitnessParams& params, const SeeSawConfig& cfg,
                         const Tolerance& tol) {
  params.validate();
  const auto range = alpha_admissible_range(params.d);
  if (!range.contains(params.alpha)) {
    throw std::invalid_argument("certify_nd: alpha=" + params.alpha.to_string() +
                                " outside the certified range (" + range.lower.to_string() + ", " +
                                range.upper.to_string() + "]");
  }
  const Witness w = Witness::from_alpha(params);
  const auto grid = certificate_beta_grid(params.d, params.primed);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const State rho = State::from_beta({params.d, Number(grid[k])}, tol);
    const auto ppt = is_ppt(rho.matrix, rho.d, tol);
    if (!ppt.ppt) continue;
    const auto report = detect_state(w, rho, cfg, tol);
    if (!report.detected) continue;
    NdCertificate cert{params, Number(grid[k]), int(k), report.expectation, *report.closed_form,
                       ppt.min_eigenvalue, {}};
    cert.product_min = product_min(w.matrix, w.d, cfg, tol);
    return cert;
  }
  throw std::runtime_error("certify_nd: no detected PPT state on the beta grid");
}

}  // namespace circwit
