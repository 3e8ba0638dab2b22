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

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace circwit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Slack used by positivity and equality checks.
struct Tolerance {
  double eig_tol = 1e-9;   // eigenvalue nonnegativity
  double eq_tol = 1e-10;   // entrywise equality

  /// Throws std::invalid_argument unless both are finite and >= 0.
  void validate() const;
};

/// Raised when an operator fails a shape or Hermiticity precondition.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kronecker product with |i>(x)|k> -> row i*n + k.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// (1 (x) T) A on C^d (x) C^d: transposes the second factor.
ComplexMatrix partial_transpose(const ComplexMatrix& a, int d);

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(AB) as sum_ij a_ij b_ji, without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal A (+) B.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double eq_tol);
void require_square(const ComplexMatrix& a, const char* what);
void require_hermitian(const ComplexMatrix& a, double eq_tol, const char* what);

/// Largest |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues in nondecreasing order; columns of `vectors` are the matching
/// unit eigenvectors.
struct HermitianEigensystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a, const Tolerance& tol = {});
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const Tolerance& tol = {});

struct PsdVerdict {
  bool positive;
  double min_eigenvalue;
};

/// min eigenvalue >= -eig_tol.
PsdVerdict is_positive_semidefinite(const ComplexMatrix& a, const Tolerance& tol = {});

}  // namespace circwit
