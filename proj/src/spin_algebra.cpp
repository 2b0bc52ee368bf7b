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

#include "finphase/spin_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "finphase/finite_field.hpp"

namespace finphase {

SpinIndex::SpinIndex(int d_, int j_, int k_) : d(d_), j(j_), k(k_) {
  if (d < 2) throw ValidationError("dimension must be at least 2");
  j = mod_p(j, d);
  k = mod_p(k, d);
}

cplx eta(int d, long long e) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_p(e, d)) / d;
  return std::polar(1.0, angle);
}

namespace {

cplx minus_i_pow(int e) {
  static const cplx table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return table[e & 3];
}

long long binom2(long long m) { return m * (m - 1) / 2; }

// Visits every row a of S_u with its column a + y and phase exponent sum_j x_j a_j.
template <typename F>
void for_each_entry(const IndexVector& u, F&& f) {
  const int d = u.modulus();
  const int n = u.n();
  const long long dim = checked_pow(d, n);
  std::vector<int> digits(n, 0);
  for (long long row = 0; row < dim; ++row) {
    long long col = 0;
    long long e = 0;
    for (int j = 0; j < n; ++j) {
      col = col * d + (digits[j] + u.y(j)) % d;
      e += static_cast<long long>(u.x(j)) * digits[j];
    }
    f(row, col, mod_p(e, d));
    for (int j = n - 1; j >= 0; --j) {
      if (++digits[j] < d) break;
      digits[j] = 0;
    }
  }
}

std::vector<cplx> root_table(int d) {
  std::vector<cplx> t(d);
  for (int e = 0; e < d; ++e) t[e] = eta(d, e);
  return t;
}

}  // namespace

PhasedOperator::PhasedOperator(IndexVector index, long long eta_exp, long long i_exp)
    : index_(std::move(index)),
      eta_exp_(mod_p(eta_exp, index_.modulus())),
      i_exp_(mod_p(i_exp, 4)) {}

PhasedOperator PhasedOperator::identity(int modulus, int n) {
  return PhasedOperator(IndexVector::zero(modulus, n));
}

cplx PhasedOperator::phase() const { return eta(modulus(), eta_exp_) * minus_i_pow(i_exp_); }

Matrix PhasedOperator::matrix() const {
  const long long dim = checked_pow(modulus(), index_.n());
  Matrix m = Matrix::Zero(dim, dim);
  add_spin(m, index_, phase());
  return m;
}

PhasedOperator PhasedOperator::operator*(const PhasedOperator& o) const {
  return PhasedOperator(index_ + o.index_,
                        static_cast<long long>(eta_exp_) + o.eta_exp_ + beta_form(index_, o.index_),
                        static_cast<long long>(i_exp_) + o.i_exp_);
}

PhasedOperator PhasedOperator::adjoint() const {
  return PhasedOperator(-index_, -static_cast<long long>(eta_exp_) + self_form(index_),
                        -static_cast<long long>(i_exp_));
}

PhasedOperator PhasedOperator::power(long long m) const {
  if (m < 0) return adjoint().power(-m);
  const int d = modulus();
  const long long e = mod_p(m, d) * eta_exp_ + mod_p(binom2(m) % d, d) * self_form(index_);
  return PhasedOperator(index_ * m, e, m % 4 * i_exp_);
}

PhasedOperator PhasedOperator::times_eta(long long e) const {
  return PhasedOperator(index_, eta_exp_ + e, i_exp_);
}

PhasedOperator PhasedOperator::times_minus_i(long long e) const {
  return PhasedOperator(index_, eta_exp_, i_exp_ + e);
}

Matrix spin_matrix(const SpinIndex& idx) { return tensor_spin(idx.as_vector()); }

PhasedOperator spin_product(const SpinIndex& a, const SpinIndex& b) {
  if (a.d != b.d) throw ValidationError("dimension mismatch");
  return PhasedOperator(a.as_vector()) * PhasedOperator(b.as_vector());
}

PhasedOperator spin_power(const SpinIndex& idx, long long m) {
  return PhasedOperator(idx.as_vector()).power(m);
}

PhasedOperator spin_adjoint(const SpinIndex& idx) { return PhasedOperator(idx.as_vector()).adjoint(); }

cplx alpha_factor(int p, const SpinIndex& idx) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  return (p == 2 && idx.j == 1 && idx.k == 1) ? cplx(0, -1) : cplx(1, 0);
}

int alpha_i_exp(const IndexVector& u) { return u.modulus() == 2 ? count_11_blocks(u) : 0; }

Matrix spin_projector(int p, const SpinIndex& idx, int r) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (idx.d != p) throw ValidationError("index dimension must equal p");
  if (idx.j == 0 && idx.k == 0) throw ValidationError("projector index must be nonzero");
  const PhasedOperator base(idx.as_vector(), r, alpha_i_exp(idx.as_vector()));
  Matrix m = Matrix::Zero(p, p);
  for (int k = 0; k < p; ++k) {
    const PhasedOperator term = base.power(k);
    add_spin(m, term.index(), term.phase() / static_cast<double>(p));
  }
  return m;
}

Matrix tensor_spin(const IndexVector& u) { return PhasedOperator(u).matrix(); }

void add_spin(Matrix& m, const IndexVector& u, cplx c) {
  const auto roots = root_table(u.modulus());
  for_each_entry(u, [&](long long row, long long col, int e) { m(row, col) += c * roots[e]; });
}

cplx trace_with_spin(const Matrix& a, const IndexVector& u) {
  const auto roots = root_table(u.modulus());
  cplx s = 0;
  for_each_entry(u, [&](long long row, long long col, int e) { s += a(col, row) * roots[e]; });
  return s;
}

std::pair<int, int> prime_power_of(long long d) {
  if (d < 2) throw ValidationError("dimension must be at least 2");
  int p = 2;
  while (d % p != 0) ++p;
  int n = 0;
  long long r = d;
  while (r % p == 0) {
    r /= p;
    ++n;
  }
  if (r != 1) throw ValidationError("dimension " + std::to_string(d) + " is not a prime power");
  return {p, n};
}

SpinCoefficients spin_decompose(const Matrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("matrix must be square");
  auto [p, n] = prime_power_of(a.rows());
  SpinCoefficients s{p, n, {}};
  const auto points = all_index_vectors(p, n);
  s.values.resize(points.size());
  const auto roots = root_table(p);
  for (const auto& u : points) {
    cplx acc = 0;
    for_each_entry(u, [&](long long row, long long col, int e) {
      acc += std::conj(roots[e]) * a(row, col);
    });
    s.values[u.code()] = acc;
  }
  return s;
}

Matrix spin_compose(const SpinCoefficients& s) {
  const long long dim = checked_pow(s.p, s.n);
  if (static_cast<long long>(s.values.size()) != dim * dim) {
    throw ValidationError("coefficient table has the wrong size");
  }
  Matrix m = Matrix::Zero(dim, dim);
  for (long long c = 0; c < dim * dim; ++c) {
    if (s.values[c] == cplx(0)) continue;
    add_spin(m, IndexVector::from_code(s.p, s.n, c), s.values[c] / static_cast<double>(dim));
  }
  return m;
}

}  // namespace finphase
