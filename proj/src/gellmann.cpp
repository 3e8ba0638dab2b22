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

#include "circwit/gellmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circwit {

std::string GellMannElement::label() const {
  switch (kind) {
    case GellMannKind::Identity: return "id";
    case GellMannKind::Symmetric: return "sym(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case GellMannKind::Antisymmetric:
      return "asym(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case GellMannKind::Diagonal: return "diag(" + std::to_string(l) + ")";
  }
  return "?";
}

GellMannBasis gellmann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gellmann_basis: d must be >= 2");
  GellMannBasis basis{d, {}};
  basis.elements.reserve(d * d);
  const Complex i(0.0, 1.0);

  basis.elements.push_back(
      {GellMannKind::Identity, 0, 0, std::sqrt(2.0 / d) * ComplexMatrix::Identity(d, d)});
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(k, l) = 1.0;
      m(l, k) = 1.0;
      basis.elements.push_back({GellMannKind::Symmetric, k, l, std::move(m)});
    }
  }
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(k, l) = -i;
      m(l, k) = i;
      basis.elements.push_back({GellMannKind::Antisymmetric, k, l, std::move(m)});
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -norm * l;
    basis.elements.push_back({GellMannKind::Diagonal, 0, l, std::move(m)});
  }
  return basis;
}

std::vector<double> expand_single(const ComplexMatrix& a, const GellMannBasis& basis,
                                  const Tolerance& tol) {
  require_hermitian(a, tol.eq_tol, "expand_single");
  if (a.rows() != basis.d) throw DimensionError("expand_single: size does not match basis");
  std::vector<double> out;
  out.reserve(basis.size());
  for (const auto& e : basis.elements) out.push_back(trace_product(e.matrix, a).real() / 2.0);
  return out;
}

ComplexMatrix reconstruct_single(const std::vector<double>& coefficients,
                                 const GellMannBasis& basis) {
  if (coefficients.size() != basis.size()) {
    throw DimensionError("reconstruct_single: coefficient count does not match basis");
  }
  ComplexMatrix out = ComplexMatrix::Zero(basis.d, basis.d);
  for (std::size_t m = 0; m < basis.size(); ++m) out += coefficients[m] * basis[m];
  return out;
}

LocalDecomposition expand_local(const ComplexMatrix& w, int d, const Tolerance& tol) {
  require_hermitian(w, tol.eq_tol, "expand_local");
  if (w.rows() != Eigen::Index(d) * d) throw DimensionError("expand_local: W is not d^2 x d^2");
  const auto basis = gellmann_basis(d);
  const int n = d * d;
  LocalDecomposition dec{d, Eigen::MatrixXd::Zero(n, n)};
  // Tr((A (x) B) W) = sum_{ij} A_ji Tr(B W_ij), W_ij the (i, j) block.
  for (int nu = 0; nu < n; ++nu) {
    ComplexMatrix reduced(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        reduced(j, i) = trace_product(basis[nu], w.block(i * d, j * d, d, d));
      }
    }
    for (int mu = 0; mu < n; ++mu) {
      const Complex c = basis[mu].cwiseProduct(reduced).sum() / 4.0;
      if (std::abs(c.imag()) > tol.eq_tol) {
        throw std::logic_error("expand_local: complex coefficient for Hermitian input");
      }
      dec.coefficients(mu, nu) = c.real();
    }
  }
  return dec;
}

ComplexMatrix reconstruct(const LocalDecomposition& dec) {
  const auto basis = gellmann_basis(dec.d);
  const int n = dec.d * dec.d;
  if (dec.coefficients.rows() != n || dec.coefficients.cols() != n) {
    throw DimensionError("reconstruct: coefficient table is not d^2 x d^2");
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      const double c = dec.coefficients(mu, nu);
      if (c != 0.0) out += c * tensor(basis[mu], basis[nu]);
    }
  }
  return out;
}

MeasurementSettingsReport measurement_settings_report(const LocalDecomposition& dec,
                                                      double threshold) {
  const auto basis = gellmann_basis(dec.d);
  MeasurementSettingsReport report;
  for (int mu = 0; mu < dec.coefficients.rows(); ++mu) {
    for (int nu = 0; nu < dec.coefficients.cols(); ++nu) {
      const double c = dec.coefficients(mu, nu);
      if (std::abs(c) > threshold) {
        report.settings.push_back(
            {mu, nu, basis.elements[mu].label(), basis.elements[nu].label(), c});
      }
    }
  }
  std::stable_sort(report.settings.begin(), report.settings.end(),
                   [](const MeasurementSetting& x, const MeasurementSetting& y) {
                     const double ax = std::abs(x.coefficient);
                     const double ay = std::abs(y.coefficient);
                     if (ax != ay) return ax > ay;
                     if (x.mu_label != y.mu_label) return x.mu_label < y.mu_label;
                     return x.nu_label < y.nu_label;
                   });
  return report;
}

}  // namespace circwit
