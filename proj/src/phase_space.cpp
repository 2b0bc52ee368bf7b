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

#include "finphase/phase_space.hpp"

#include <string>

namespace finphase {

FieldElement symplectic(const PhasePoint& u, const PhasePoint& v) { return u.y * v.x - u.x * v.y; }

bool is_vertical(const GaloisField& field, long long label) {
  check_label(field, label);
  return label == field.order();
}

void check_label(const GaloisField& field, long long label) {
  if (label < 0 || label > field.order()) {
    throw ValidationError("label " + std::to_string(label) + " outside 0.." +
                          std::to_string(field.order()));
  }
}

PhasePoint generating_vector(const GaloisField& field, long long label) {
  if (is_vertical(field, label)) return {field.zero(), field.one()};
  return {field.one(), field.from_code(label)};
}

std::vector<PhasePoint> generating_vectors(const GaloisField& field) {
  std::vector<PhasePoint> out;
  for (long long a = 0; a <= field.order(); ++a) out.push_back(generating_vector(field, a));
  return out;
}

IndexVector m_map(const PhasePoint& v) {
  const auto& field = v.x.field();
  if (!(field == v.y.field())) throw ValidationError("field mismatch");
  std::vector<int> c(2 * field.n());
  FieldElement lj = field.one();
  const FieldElement lambda = field.lambda_power(1);
  for (int j = 0; j < field.n(); ++j) {
    c[2 * j] = v.x[j];
    c[2 * j + 1] = (lj * v.y).trace();
    lj = lj * lambda;
  }
  return IndexVector(field.p(), std::move(c));
}

PhasePoint m_map_inverse(const GaloisField& field, const IndexVector& u) {
  if (u.modulus() != field.p() || u.n() != field.n()) throw ValidationError("index vector shape mismatch");
  std::vector<int> xc(field.n());
  FieldElement y = field.zero();
  const auto g = dual_basis(field);
  for (int j = 0; j < field.n(); ++j) {
    xc[j] = u.x(j);
    y = y + g[j] * u.y(j);
  }
  return {field.element(std::move(xc)), y};
}

GeneratorSet generator_set(const GaloisField& field, long long alpha) {
  check_label(field, alpha);
  GeneratorSet gs{alpha, {}};
  const int n = field.n();
  if (alpha == field.order()) {
    for (int r = 0; r < n; ++r) {
      std::vector<int> c(2 * n, 0);
      c[2 * r + 1] = 1;
      gs.gens.emplace_back(field.p(), std::move(c));
    }
    return gs;
  }
  const FieldElement a = field.from_code(alpha);
  for (int r = 0; r < n; ++r) {
    const FieldElement lr = field.lambda_power(r);
    gs.gens.push_back(m_map({lr, lr * a}));
  }
  return gs;
}

std::vector<PhasePoint> line_points(const GaloisField& field, const Line& line) {
  check_label(field, line.slope);
  const FieldElement gamma = field.from_code(line.intercept);
  std::vector<PhasePoint> out;
  for (const auto& t : field.elements()) {
    if (line.slope == field.order()) {
      out.push_back({gamma, t});
    } else {
      out.push_back({t, t * field.from_code(line.slope) + gamma});
    }
  }
  return out;
}

std::vector<Line> all_lines(const GaloisField& field) {
  std::vector<Line> out;
  for (long long a = 0; a <= field.order(); ++a) {
    for (long long g = 0; g < field.order(); ++g) out.push_back({a, g});
  }
  return out;
}

std::vector<SubspacePoint> subspace_points(const GeneratorSet& gs) {
  if (gs.gens.empty()) throw ValidationError("empty generator set");
  const int p = gs.gens[0].modulus();
  const int n = static_cast<int>(gs.gens.size());
  const int len = gs.gens[0].n();
  const long long count = checked_pow(p, n);
  std::vector<SubspacePoint> out;
  out.reserve(count);
  for (long long code = 0; code < count; ++code) {
    std::vector<int> b(n);
    long long c = code;
    for (int r = n - 1; r >= 0; --r, c /= p) b[r] = static_cast<int>(c % p);
    IndexVector v = IndexVector::zero(p, len);
    for (int r = 0; r < n; ++r) v = v + gs.gens[r] * b[r];
    out.push_back({std::move(v), std::move(b)});
  }
  return out;
}

PhaseSpace::PhaseSpace(int p, int n) : PhaseSpace(GaloisField::make(p, n)) {}

PhaseSpace::PhaseSpace(GaloisField field) : field_(std::move(field)) {
  const int p = field_.p();
  const int n = field_.n();
  points_ = all_index_vectors(p, n);
  alpha_of_.assign(points_.size(), -1);
  b_of_.assign(points_.size(), {});
  for (long long a = 0; a <= q(); ++a) {
    gens_.push_back(generator_set(field_, a));
    for (auto& sp : subspace_points(gens_.back())) {
      if (sp.v.is_zero()) continue;
      const long long code = sp.v.code();
      if (alpha_of_[code] >= 0) throw InternalError("commuting classes overlap");
      alpha_of_[code] = a;
      b_of_[code] = std::move(sp.b);
    }
  }
  for (std::size_t c = 1; c < points_.size(); ++c) {
    if (alpha_of_[c] < 0) throw InternalError("commuting classes do not cover V_2n(p)");
  }
}

const GeneratorSet& PhaseSpace::generators(long long alpha) const {
  check_label(field_, alpha);
  return gens_[alpha];
}

Decomposition PhaseSpace::decompose(const IndexVector& w) const {
  if (w.modulus() != p() || w.n() != n()) throw ValidationError("index vector shape mismatch");
  if (w.is_zero()) throw ValidationError("the zero vector lies in every class");
  const long long c = w.code();
  return {alpha_of_[c], b_of_[c]};
}

}  // namespace finphase
