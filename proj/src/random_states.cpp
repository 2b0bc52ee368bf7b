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

#include "finphase/random_states.hpp"

namespace finphase {

namespace {

Matrix gaussian_matrix(long long rows, long long cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix g(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) g(i, j) = cplx(nd(rng), nd(rng));
  }
  return g;
}

}  // namespace

Vector random_state_vector(long long d, Rng& rng) {
  Vector v = gaussian_matrix(d, 1, rng).col(0);
  return v / v.norm();
}

Matrix random_pure_state(long long d, Rng& rng) {
  const Vector v = random_state_vector(d, rng);
  return v * v.adjoint();
}

Matrix random_density(long long d, Rng& rng) {
  const Matrix g = gaussian_matrix(d, d, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

Matrix random_hermitian(long long d, Rng& rng) {
  const Matrix g = gaussian_matrix(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

IndexVector random_index_vector(int p, int n, Rng& rng) {
  std::uniform_int_distribution<int> ud(0, p - 1);
  std::vector<int> c(2 * n);
  for (auto& v : c) v = ud(rng);
  return IndexVector(p, std::move(c));
}

}  // namespace finphase
