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

#include "finphase/phase_space.hpp"
#include "finphase/spin_algebra.hpp"

namespace finphase {

struct CommutingClass {
  long long alpha = 0;
  std::vector<std::vector<int>> b;
  std::vector<PhasedOperator> members;
};

// prod_r (c_r S_{g_r(alpha)})^{b_r} with c_r = eta^{shift_r} times alpha_2 on (1,1) blocks.
PhasedOperator generator_product(const GeneratorSet& gs, const std::vector<int>& b,
                                 const std::vector<int>& shifts, bool with_alpha);

CommutingClass commuting_class(const PhaseSpace& space, long long alpha);

struct MubProjector {
  long long alpha = 0;
  std::vector<int> s;
  Matrix matrix;
};

// prod_r (1/p) sum_b (eta^{s_r} alpha S_{g_r})^b
Matrix mub_projector_matrix(const PhaseSpace& space, long long alpha, const std::vector<int>& s);

MubProjector mub_projector(const PhaseSpace& space, long long alpha, const std::vector<int>& s);

// Single factor (1/p) sum_b (eta^{s_r} alpha S_{g_r})^b, a rank p^{n-1} projector.
Matrix mub_factor(const PhaseSpace& space, long long alpha, int r, int s_r);

// All outcome vectors of Z_p^n; s_0 varies slowest.
std::vector<std::vector<int>> outcome_vectors(int p, int n);

using MubBasis = std::vector<MubProjector>;

std::vector<MubBasis> full_mub(const PhaseSpace& space);
std::vector<MubBasis> full_mub(int p, int n);

struct MubReport {
  long long bases = 0;
  long long projectors_per_basis = 0;
  double max_cross_deviation = 0;     // |tr(P P') - 1/p^n|
  double max_within_deviation = 0;    // |tr(P_r P_s) - delta(r,s)|
  double max_completeness_error = 0;  // |sum_s P - I|
  double max_projector_error = 0;     // Hermiticity and idempotence

  bool ok(double tol) const;
};

MubReport verify_mub(const std::vector<MubBasis>& bases);

}  // namespace finphase
