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

#include "circwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace circwit {

void Tolerance::validate() const {
  if (!std::isfinite(eig_tol) || !std::isfinite(eq_tol) || eig_tol < 0.0 || eq_tol < 0.0) {
    throw std::invalid_argument("tolerances must be finite and nonnegative");
  }
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_hermitian(const ComplexMatrix& a, double eq_tol, const char* what) {
  require_square(a, what);
  if (!is_hermitian(a, eq_tol)) {
    throw NotHermitianError(std::string(what) + ": matrix is not Hermitian");
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "tensor");
  require_square(b, "tensor");
  const Eigen::Index m = a.rows();
  const Eigen::Index n = b.rows();
  ComplexMatrix out(m * n, m * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      out.block(i * n, j * n, n, n) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& a, int d) {
  require_square(a, "partial_transpose");
  if (d < 1 || a.rows() != Eigen::Index(d) * d) {
    throw DimensionError("partial_transpose: matrix size " + std::to_string(a.rows()) +
                         " is not d^2 for d=" + std::to_string(d));
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          out(i * d + k, j * d + l) = a(i * d + l, j * d + k);
        }
      }
    }
  }
  return out;
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hadamard: shape mismatch");
  }
  return a.cwiseProduct(b);
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows() || a.rows() != a.cols()) {
    throw DimensionError("trace_product: shape mismatch");
  }
  // sum_ij a_ij b_ji
  return a.cwiseProduct(b.transpose()).sum();
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

bool is_hermitian(const ComplexMatrix& a, double eq_tol) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > eq_tol) return false;
    }
  }
  return true;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a, const Tolerance& tol) {
  require_hermitian(a, tol.eq_tol, "hermitian_eigensystem");
  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver did not converge");
  }
  HermitianEigensystem out;
  const auto& values = solver.eigenvalues();
  out.values.assign(values.data(), values.data() + values.size());
  out.vectors = solver.eigenvectors();
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const Tolerance& tol) {
  require_hermitian(a, tol.eq_tol, "hermitian_eigenvalues");
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

PsdVerdict is_positive_semidefinite(const ComplexMatrix& a, const Tolerance& tol) {
  const auto values = hermitian_eigenvalues(a, tol);
  const double min_eig = values.front();
  return {min_eig >= -tol.eig_tol, min_eig};
}

}  // namespace circwit
