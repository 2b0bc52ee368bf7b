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

#include <optional>
#include <vector>

#include "finphase/wigner.hpp"

namespace finphase {

enum class GeneratorKind { CharSpace, WignerSpace };

struct GeneratorMatrix {
  GeneratorKind kind = GeneratorKind::CharSpace;
  int p = 0;
  int n = 0;
  Matrix entries;  // rows and columns indexed by IndexVector::code()
};

// Odd p: L(w,u) = p^{-n} chi_H(u-w) (eta^{(u o w)/2} - eta^{(w o u)/2}), state c_w = chi(-w).
// p = 2: L(w,u) = p^{-n} chi_H(w+u) i^{N(w)-N(u)-N(w+u)} ((-1)^{beta(u,w+u)} - (-1)^{beta(w+u,u)}),
// state c_w = chi(w). In both cases dc/dt = i L c for rho(t) = e^{-iHt} rho e^{iHt}.
GeneratorMatrix build_char_generator(const PhaseSpace& space, const Matrix& h);
GeneratorMatrix build_char_generator(const Matrix& h);

// L~(v,z) = p^{-n} (eta^{2 z o v} chi_H(2(v-z)) - eta^{2 v o z} chi_H(2(z-v))), dW/dt = i L~ W.
GeneratorMatrix build_wigner_generator(const PhaseSpace& space, const Matrix& h);
GeneratorMatrix build_wigner_generator(const Matrix& h);

// exp(i L t) through the eigendecomposition of L.
class Evolver {
 public:
  explicit Evolver(const GeneratorMatrix& gen);

  const GeneratorMatrix& generator() const { return gen_; }
  Vector apply(const Vector& c0, double t) const;
  CharTable evolve(const CharTable& chi, double t) const;
  WignerTable evolve(const WignerTable& w, double t) const;

 private:
  GeneratorMatrix gen_;
  Eigen::VectorXd evals_;
  Matrix evecs_;
};

CharTable evolve(const CharTable& chi, const GeneratorMatrix& gen, double t);
WignerTable evolve(const WignerTable& w, const GeneratorMatrix& gen, double t);

// Packs a dynamics-gauge table into the vector the char-space generator acts on, and back.
Vector char_state_vector(const CharTable& chi);
CharTable char_table_from_state(const Vector& c, int p, int n);

// s_u = tr(S_u^dagger rho) from a dynamics-gauge table.
SpinCoefficients spin_coeff_bridge(const CharTable& chi);

Matrix density_from_dynamics_char(const CharTable& chi);

Matrix evolve_direct(const Matrix& rho, const Matrix& h, double t);

struct TrajectoryPoint {
  double t = 0;
  CharTable chi;
  std::optional<WignerTable> wigner;
  Matrix rho;
};

struct ConservationReport {
  double max_trace_drift = 0;
  double max_purity_drift = 0;
  double max_direct_deviation = 0;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  ConservationReport report;
};

// Samples t0 + k (t1 - t0) / steps for k = 0..steps.
Trajectory evolve_trajectory(const PhaseSpace& space, const Matrix& rho0, const Matrix& h, double t0,
                             double t1, int steps);

}  // namespace finphase
