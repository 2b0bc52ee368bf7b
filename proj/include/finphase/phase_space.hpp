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

#include "finphase/finite_field.hpp"
#include "finphase/index_vector.hpp"

namespace finphase {

struct PhasePoint {
  FieldElement x;
  FieldElement y;

  bool operator==(const PhasePoint& o) const { return x == o.x && y == o.y; }
};

// (j,k) o (s,t) = ks - jt in the field.
FieldElement symplectic(const PhasePoint& u, const PhasePoint& v);

// Labels 0..q-1 are field-element codes; label q is the vertical class.
bool is_vertical(const GaloisField& field, long long label);
void check_label(const GaloisField& field, long long label);

PhasePoint generating_vector(const GaloisField& field, long long label);

// u_alpha for every label, indexed by label.
std::vector<PhasePoint> generating_vectors(const GaloisField& field);

// Blocks (x^(j), y^(j)) with x = sum x^(j) lambda^j and y = sum y^(j) g_j.
IndexVector m_map(const PhasePoint& v);

PhasePoint m_map_inverse(const GaloisField& field, const IndexVector& u);

struct GeneratorSet {
  long long alpha = 0;
  std::vector<IndexVector> gens;
};

GeneratorSet generator_set(const GaloisField& field, long long alpha);

struct Line {
  long long slope = 0;
  long long intercept = 0;  // field-element code
};

std::vector<PhasePoint> line_points(const GaloisField& field, const Line& line);

// All q^2 + q lines ordered by slope then intercept.
std::vector<Line> all_lines(const GaloisField& field);

struct SubspacePoint {
  IndexVector v;
  std::vector<int> b;
};

// {sum_r b_r g_r}; b_0 varies slowest.
std::vector<SubspacePoint> subspace_points(const GeneratorSet& gs);

struct Decomposition {
  long long alpha = 0;
  std::vector<int> b;
};

// Field, generator sets and the index-equation lookup for V_{2n}(p).
class PhaseSpace {
 public:
  explicit PhaseSpace(GaloisField field);
  PhaseSpace(int p, int n);

  const GaloisField& field() const { return field_; }
  int p() const { return field_.p(); }
  int n() const { return field_.n(); }
  long long q() const { return field_.order(); }
  long long dim() const { return field_.order(); }
  long long num_points() const { return field_.order() * field_.order(); }
  long long num_labels() const { return field_.order() + 1; }

  const GeneratorSet& generators(long long alpha) const;
  const std::vector<IndexVector>& points() const { return points_; }
  const IndexVector& point(long long code) const { return points_.at(code); }

  // Solves w = sum_r b_r g_r(alpha) for nonzero w.
  Decomposition decompose(const IndexVector& w) const;

 private:
  GaloisField field_;
  std::vector<GeneratorSet> gens_;
  std::vector<IndexVector> points_;
  std::vector<long long> alpha_of_;
  std::vector<std::vector<int>> b_of_;
};

}  // namespace finphase
