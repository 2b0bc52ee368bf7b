// Copyright 2026 The finphase Authors
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

#include "finphase/index_vector.hpp"
#include "finphase/types.hpp"

namespace finphase {

struct SpinIndex {
  int d = 2;
  int j = 0;
  int k = 0;

  SpinIndex() = default;
  SpinIndex(int d, int j, int k);
  IndexVector as_vector() const { return IndexVector(d, {j, k}); }
  bool operator==(const SpinIndex&) const = default;
};

// e^{2 pi i e / d}
cplx eta(int d, long long e);

// Phase eta_d^eta_exp (-i)^i_exp times the (tensor) spin matrix S_index.
class PhasedOperator {
 public:
  PhasedOperator() = default;
  PhasedOperator(IndexVector index, long long eta_exp = 0, long long i_exp = 0);

  static PhasedOperator identity(int modulus, int n);

  const IndexVector& index() const { return index_; }
  int eta_exp() const { return eta_exp_; }
  int i_exp() const { return i_exp_; }
  int modulus() const { return index_.modulus(); }

  cplx phase() const;
  Matrix matrix() const;

  PhasedOperator operator*(const PhasedOperator& o) const;
  PhasedOperator adjoint() const;
  PhasedOperator power(long long m) const;
  PhasedOperator times_eta(long long e) const;
  PhasedOperator times_minus_i(long long e) const;

  bool operator==(const PhasedOperator&) const = default;

 private:
  IndexVector index_;
  int eta_exp_ = 0;
  int i_exp_ = 0;
};

Matrix spin_matrix(const SpinIndex& idx);

PhasedOperator spin_product(const SpinIndex& a, const SpinIndex& b);

PhasedOperator spin_power(const SpinIndex& idx, long long m);

PhasedOperator spin_adjoint(const SpinIndex& idx);

// -i for p = 2 and index (1,1); 1 otherwise.
cplx alpha_factor(int p, const SpinIndex& idx);

// Exponent of -i collected by applying alpha_2 to every (1,1) block.
int alpha_i_exp(const IndexVector& u);

// (1/p) sum_m (alpha_p eta^r S_{j,k})^m
Matrix spin_projector(int p, const SpinIndex& idx, int r);

// Kronecker product of single-block spin matrices, block 0 leftmost.
Matrix tensor_spin(const IndexVector& u);

// Accumulates c * S_u into m without forming S_u.
void add_spin(Matrix& m, const IndexVector& u, cplx c);

// tr(A S_u) in O(d) using the monomial structure of S_u.
cplx trace_with_spin(const Matrix& a, const IndexVector& u);

// Coefficients s_u = tr(S_u^dagger A), indexed by IndexVector::code().
struct SpinCoefficients {
  int p = 0;
  int n = 0;
  std::vector<cplx> values;

  cplx at(const IndexVector& u) const { return values.at(u.code()); }
};

// Infers (p, n) from d = p^n; throws ValidationError if d is not a prime power.
std::pair<int, int> prime_power_of(long long d);

SpinCoefficients spin_decompose(const Matrix& a);

// A = (1/p^n) sum_u s_u S_u
Matrix spin_compose(const SpinCoefficients& s);

}  // namespace finphase
