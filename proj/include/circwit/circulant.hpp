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

#include <vector>

#include "circwit/linalg.hpp"

namespace circwit {

/// Which family of d-dimensional subspaces the generators live on.
///
/// Sigma: Sigma_n = span{|i, i+n>}, the circulant decomposition.
/// SigmaTilde: span{|i, pi(i)+n>} with pi(k) = -k mod d, the image of the
/// Sigma decomposition under partial transposition.
enum class Support { Sigma, SigmaTilde };

/// Generators a^(0..d-1) of a circulant operator on C^d (x) C^d.
struct CirculantSpec {
  int d = 0;
  std::vector<ComplexMatrix> generators;
  Support support = Support::Sigma;

  /// Exactly d Hermitian d x d generators, d >= 2. Throws std::invalid_argument.
  void validate(const Tolerance& tol = {}) const;

  /// Every generator PSD and the traces summing to one.
  bool is_state_form(const Tolerance& tol = {}) const;

  CirculantSpec& operator+=(const CirculantSpec& other);
  friend CirculantSpec operator+(CirculantSpec a, const CirculantSpec& b) { return a += b; }
  CirculantSpec& operator*=(Complex c);
};

/// A spec whose generators are all zero.
CirculantSpec zero_spec(int d, Support support = Support::Sigma);

/// S^n with S|k> = |k+1 mod d>; n is reduced mod d.
ComplexMatrix shift_matrix(int d, int n);

/// pi(k) = (d - k) mod d.
int permutation_pi(int d, int k);

/// Pi_{kl} = delta_{k, pi(l)}.
ComplexMatrix pi_matrix(int d);

/// A = sum_n A_n with a^(n)_ij placed at (i*d + (i+n), j*d + (j+n)).
ComplexMatrix assemble(const CirculantSpec& spec, const Tolerance& tol = {});

/// Generators read back off the Sigma_n blocks.
struct Disassembly {
  CirculantSpec spec;
  bool circulant;     // assemble(spec) reproduces the input within eq_tol
  double residual;    // max entrywise |assemble(spec) - A|
};

/// Never throws on non-circulant input; it reports `circulant = false`.
Disassembly disassemble(const ComplexMatrix& a, int d, const Tolerance& tol = {});

/// Partial transpose at the generator level.
///
/// Sigma -> SigmaTilde: a~^(n) = sum_m a^(n+m) o (Pi S^m).
/// SigmaTilde -> Sigma: a^(n) = sum_m a~^(n-m) o (Pi S^m).
CirculantSpec circulant_partial_transpose(const CirculantSpec& spec, const Tolerance& tol = {});

/// Places a~^(n)_ij at (i*d + (pi(i)+n), j*d + (pi(j)+n)).
ComplexMatrix assemble_tilde(const CirculantSpec& spec, const Tolerance& tol = {});

}  // namespace circwit
