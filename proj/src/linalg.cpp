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

#include "finphase/linalg.hpp"

#include <string>

namespace finphase {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw ValidationError("empty tensor product");
  Matrix out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

namespace {

void require_bipartite(const Matrix& rho, long long dA, long long dB) {
  require_square(rho, "bipartite matrix");
  if (rho.rows() != dA * dB) throw ValidationError("subsystem dimensions do not match matrix size");
}

}  // namespace

Matrix partial_trace_first(const Matrix& rho, long long dA, long long dB) {
  require_bipartite(rho, dA, dB);
  Matrix out = Matrix::Zero(dB, dB);
  for (long long a = 0; a < dA; ++a) out += rho.block(a * dB, a * dB, dB, dB);
  return out;
}

Matrix partial_trace_second(const Matrix& rho, long long dA, long long dB) {
  require_bipartite(rho, dA, dB);
  Matrix out(dA, dA);
  for (long long a = 0; a < dA; ++a) {
    for (long long b = 0; b < dA; ++b) out(a, b) = rho.block(a * dB, b * dB, dB, dB).trace();
  }
  return out;
}

Matrix partial_transpose_second(const Matrix& rho, long long dA, long long dB) {
  require_bipartite(rho, dA, dB);
  Matrix out(rho.rows(), rho.cols());
  for (long long a = 0; a < dA; ++a) {
    for (long long b = 0; b < dA; ++b) {
      out.block(a * dB, b * dB, dB, dB) = rho.block(a * dB, b * dB, dB, dB).transpose();
    }
  }
  return out;
}

double hermiticity_error(const Matrix& a) { return (a - a.adjoint()).cwiseAbs().maxCoeff(); }

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ValidationError(std::string(what) + " must be a non-empty square matrix");
  }
}

}  // namespace finphase
