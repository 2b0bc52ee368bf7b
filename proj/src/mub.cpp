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

#include "finphase/mub.hpp"

#include <algorithm>
#include <cmath>

#include "finphase/finite_field.hpp"

namespace finphase {

PhasedOperator generator_product(const GeneratorSet& gs, const std::vector<int>& b,
                                 const std::vector<int>& shifts, bool with_alpha) {
  const std::size_t n = gs.gens.size();
  if (b.size() != n || shifts.size() != n) throw ValidationError("coefficient count mismatch");
  const int p = gs.gens[0].modulus();
  PhasedOperator acc = PhasedOperator::identity(p, gs.gens[0].n());
  for (std::size_t r = 0; r < n; ++r) {
    const PhasedOperator base(gs.gens[r], shifts[r], with_alpha ? alpha_i_exp(gs.gens[r]) : 0);
    acc = acc * base.power(mod_p(b[r], p));
  }
  return acc;
}

std::vector<std::vector<int>> outcome_vectors(int p, int n) {
  const long long count = checked_pow(p, n);
  std::vector<std::vector<int>> out;
  out.reserve(count);
  for (long long code = 0; code < count; ++code) {
    std::vector<int> s(n);
    long long c = code;
    for (int r = n - 1; r >= 0; --r, c /= p) s[r] = static_cast<int>(c % p);
    out.push_back(std::move(s));
  }
  return out;
}

CommutingClass commuting_class(const PhaseSpace& space, long long alpha) {
  const auto& gs = space.generators(alpha);
  CommutingClass cc{alpha, outcome_vectors(space.p(), space.n()), {}};
  const std::vector<int> zero(space.n(), 0);
  for (const auto& b : cc.b) cc.members.push_back(generator_product(gs, b, zero, false));
  return cc;
}

Matrix mub_projector_matrix(const PhaseSpace& space, long long alpha, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != space.n()) throw ValidationError("outcome vector must have n entries");
  const auto& gs = space.generators(alpha);
  const int p = space.p();
  const std::vector<int> zero(space.n(), 0);
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  const double norm = 1.0 / static_cast<double>(space.dim());
  for (const auto& b : outcome_vectors(p, space.n())) {
    long long e = 0;
    for (int r = 0; r < space.n(); ++r) e += static_cast<long long>(b[r]) * s[r];
    const PhasedOperator op = generator_product(gs, b, zero, true).times_eta(e);
    add_spin(m, op.index(), op.phase() * norm);
  }
  return m;
}

MubProjector mub_projector(const PhaseSpace& space, long long alpha, const std::vector<int>& s) {
  return {alpha, s, mub_projector_matrix(space, alpha, s)};
}

Matrix mub_factor(const PhaseSpace& space, long long alpha, int r, int s_r) {
  const auto& gs = space.generators(alpha);
  if (r < 0 || r >= space.n()) throw ValidationError("generator index out of range");
  const int p = space.p();
  const PhasedOperator base(gs.gens[r], s_r, alpha_i_exp(gs.gens[r]));
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (int b = 0; b < p; ++b) {
    const PhasedOperator op = base.power(b);
    add_spin(m, op.index(), op.phase() / static_cast<double>(p));
  }
  return m;
}

std::vector<MubBasis> full_mub(const PhaseSpace& space) {
  std::vector<MubBasis> out;
  const auto outcomes = outcome_vectors(space.p(), space.n());
  for (long long a = 0; a < space.num_labels(); ++a) {
    MubBasis basis;
    for (const auto& s : outcomes) basis.push_back(mub_projector(space, a, s));
    out.push_back(std::move(basis));
  }
  return out;
}

std::vector<MubBasis> full_mub(int p, int n) { return full_mub(PhaseSpace(p, n)); }

bool MubReport::ok(double tol) const {
  return max_cross_deviation < tol && max_within_deviation < tol && max_completeness_error < tol &&
         max_projector_error < tol;
}

namespace {

cplx trace_product(const Matrix& a, const Matrix& b) { return a.cwiseProduct(b.transpose()).sum(); }

}  // namespace

MubReport verify_mub(const std::vector<MubBasis>& bases) {
  MubReport rep;
  rep.bases = static_cast<long long>(bases.size());
  if (bases.empty()) return rep;
  rep.projectors_per_basis = static_cast<long long>(bases[0].size());
  const long long d = bases[0][0].matrix.rows();
  const double unbiased = 1.0 / static_cast<double>(d);
  for (std::size_t a = 0; a < bases.size(); ++a) {
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < bases[a].size(); ++i) {
      const Matrix& P = bases[a][i].matrix;
      sum += P;
      rep.max_projector_error = std::max(
          {rep.max_projector_error, (P - P.adjoint()).cwiseAbs().maxCoeff(), (P * P - P).cwiseAbs().maxCoeff()});
      for (std::size_t j = 0; j < bases[a].size(); ++j) {
        const double expect = (i == j) ? 1.0 : 0.0;
        rep.max_within_deviation =
            std::max(rep.max_within_deviation, std::abs(trace_product(P, bases[a][j].matrix) - expect));
      }
      for (std::size_t b = a + 1; b < bases.size(); ++b) {
        for (const auto& other : bases[b]) {
          rep.max_cross_deviation =
              std::max(rep.max_cross_deviation, std::abs(trace_product(P, other.matrix) - unbiased));
        }
      }
    }
    rep.max_completeness_error =
        std::max(rep.max_completeness_error, (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff());
  }
  return rep;
}

}  // namespace finphase
