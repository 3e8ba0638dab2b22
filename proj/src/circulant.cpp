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

#include "circwit/circulant.hpp"

#include <cmath>
#include <string>

namespace circwit {
namespace {

int mod(int a, int d) {
  int r = a % d;
  return r < 0 ? r + d : r;
}

void require_support(const CirculantSpec& spec, Support expected, const char* what) {
  if (spec.support != expected) {
    throw std::invalid_argument(std::string(what) + ": generators are tagged for " +
                                (spec.support == Support::Sigma ? "Sigma" : "SigmaTilde") +
                                " support");
  }
}

}  // namespace

void CirculantSpec::validate(const Tolerance& tol) const {
  if (d < 2) throw std::invalid_argument("CirculantSpec: d must be >= 2");
  if (generators.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("CirculantSpec: expected " + std::to_string(d) +
                                " generators, got " + std::to_string(generators.size()));
  }
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) {
      throw DimensionError("CirculantSpec: generator is not d x d");
    }
    if (!is_hermitian(g, tol.eq_tol)) {
      throw NotHermitianError("CirculantSpec: generator is not Hermitian");
    }
  }
}

bool CirculantSpec::is_state_form(const Tolerance& tol) const {
  validate(tol);
  double trace = 0.0;
  for (const auto& g : generators) {
    if (!is_positive_semidefinite(g, tol).positive) return false;
    trace += g.trace().real();
  }
  return std::abs(trace - 1.0) <= tol.eq_tol;
}

CirculantSpec& CirculantSpec::operator+=(const CirculantSpec& other) {
  if (support != other.support) {
    throw std::invalid_argument("CirculantSpec: cannot add Sigma and SigmaTilde generators");
  }
  if (d != other.d || generators.size() != other.generators.size()) {
    throw DimensionError("CirculantSpec: dimension mismatch");
  }
  for (std::size_t n = 0; n < generators.size(); ++n) generators[n] += other.generators[n];
  return *this;
}

CirculantSpec& CirculantSpec::operator*=(Complex c) {
  for (auto& g : generators) g *= c;
  return *this;
}

CirculantSpec zero_spec(int d, Support support) {
  if (d < 2) throw std::invalid_argument("zero_spec: d must be >= 2");
  return CirculantSpec{d, std::vector<ComplexMatrix>(d, ComplexMatrix::Zero(d, d)), support};
}

ComplexMatrix shift_matrix(int d, int n) {
  if (d < 2) throw std::invalid_argument("shift_matrix: d must be >= 2");
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) s(mod(k + n, d), k) = 1.0;
  return s;
}

int permutation_pi(int d, int k) { return mod(d - k, d); }

ComplexMatrix pi_matrix(int d) {
  if (d < 2) throw std::invalid_argument("pi_matrix: d must be >= 2");
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (int l = 0; l < d; ++l) p(permutation_pi(d, l), l) = 1.0;
  return p;
}

ComplexMatrix assemble(const CirculantSpec& spec, const Tolerance& tol) {
  spec.validate(tol);
  require_support(spec, Support::Sigma, "assemble");
  const int d = spec.d;
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int n = 0; n < d; ++n) {
    const auto& a = spec.generators[n];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        out(i * d + mod(i + n, d), j * d + mod(j + n, d)) += a(i, j);
      }
    }
  }
  return out;
}

Disassembly disassemble(const ComplexMatrix& a, int d, const Tolerance& tol) {
  if (d < 2 || a.rows() != Eigen::Index(d) * d || a.cols() != a.rows()) {
    throw DimensionError("disassemble: matrix is not d^2 x d^2");
  }
  CirculantSpec spec = zero_spec(d);
  for (int n = 0; n < d; ++n) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        spec.generators[n](i, j) = a(i * d + mod(i + n, d), j * d + mod(j + n, d));
      }
    }
  }
  // Non-Hermitian blocks cannot be assembled; rebuild directly.
  ComplexMatrix rebuilt = ComplexMatrix::Zero(d * d, d * d);
  for (int n = 0; n < d; ++n) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        rebuilt(i * d + mod(i + n, d), j * d + mod(j + n, d)) = spec.generators[n](i, j);
      }
    }
  }
  const double residual = max_abs_diff(rebuilt, a);
  return {std::move(spec), residual <= tol.eq_tol, residual};
}

CirculantSpec circulant_partial_transpose(const CirculantSpec& spec, const Tolerance& tol) {
  spec.validate(tol);
  const int d = spec.d;
  const bool to_tilde = spec.support == Support::Sigma;
  const ComplexMatrix pi = pi_matrix(d);
  CirculantSpec out = zero_spec(d, to_tilde ? Support::SigmaTilde : Support::Sigma);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const int source = to_tilde ? mod(n + m, d) : mod(n - m, d);
      out.generators[n] += hadamard(spec.generators[source], pi * shift_matrix(d, m));
    }
  }
  return out;
}

ComplexMatrix assemble_tilde(const CirculantSpec& spec, const Tolerance& tol) {
  spec.validate(tol);
  require_support(spec, Support::SigmaTilde, "assemble_tilde");
  const int d = spec.d;
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int n = 0; n < d; ++n) {
    const auto& a = spec.generators[n];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        out(i * d + mod(permutation_pi(d, i) + n, d), j * d + mod(permutation_pi(d, j) + n, d)) +=
            a(i, j);
      }
    }
  }
  return out;
}

}  // namespace circwit
