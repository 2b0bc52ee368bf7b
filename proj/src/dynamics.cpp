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

#include "finphase/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "finphase/finite_field.hpp"
#include "finphase/linalg.hpp"

namespace finphase {

namespace {

void require_supported(const PhaseSpace& space, const Matrix& h) {
  require_square(h, "Hamiltonian");
  if (h.rows() != space.dim()) throw ValidationError("Hamiltonian size does not match p^n");
  if (hermiticity_error(h) > kDefaultTol) throw ValidationError("Hamiltonian must be Hermitian");
  if (space.n() > 2) {
    throw UnsupportedError("phase-space generators are available for n = 1 and n = 2 only");
  }
}

cplx i_pow(int e) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[mod_p(e, 4)];
}

PhaseSpace space_for(const Matrix& h) {
  require_square(h, "Hamiltonian");
  auto [p, n] = prime_power_of(h.rows());
  return PhaseSpace(p, n);
}

}  // namespace

GeneratorMatrix build_char_generator(const PhaseSpace& space, const Matrix& h) {
  require_supported(space, h);
  const int p = space.p();
  const int n = space.n();
  const CharTable chi_h = char_function(WignerFrame(space, Convention(ConventionKind::Dynamics)), h);
  const long long N = space.num_points();
  const double norm = 1.0 / static_cast<double>(space.dim());
  GeneratorMatrix gen{GeneratorKind::CharSpace, p, n, Matrix::Zero(N, N)};
  const auto& pts = space.points();
  if (p == 2) {
    for (const auto& w : pts) {
      for (const auto& u : pts) {
        const IndexVector sum = w + u;
        const double bracket = ((beta_form(u, sum) % 2) ? -1.0 : 1.0) - ((beta_form(sum, u) % 2) ? -1.0 : 1.0);
        if (bracket == 0.0) continue;
        const int e = count_11_blocks(w) - count_11_blocks(u) - count_11_blocks(sum);
        gen.entries(w.code(), u.code()) = norm * chi_h.at(sum) * i_pow(e) * bracket;
      }
    }
    return gen;
  }
  const long long half = prime_inverse(2, p);
  for (const auto& w : pts) {
    for (const auto& u : pts) {
      const cplx c = chi_h.at(u - w);
      if (c == cplx(0)) continue;
      gen.entries(w.code(), u.code()) =
          norm * c * (eta(p, half * vector_symplectic(u, w)) - eta(p, half * vector_symplectic(w, u)));
    }
  }
  return gen;
}

GeneratorMatrix build_char_generator(const Matrix& h) { return build_char_generator(space_for(h), h); }

GeneratorMatrix build_wigner_generator(const PhaseSpace& space, const Matrix& h) {
  require_supported(space, h);
  if (space.p() == 2) throw UnsupportedError("Wigner-space generator is not available for p = 2");
  const int p = space.p();
  const CharTable chi_h = char_function(WignerFrame(space, Convention(ConventionKind::Dynamics)), h);
  const long long N = space.num_points();
  const double norm = 1.0 / static_cast<double>(space.dim());
  GeneratorMatrix gen{GeneratorKind::WignerSpace, p, space.n(), Matrix::Zero(N, N)};
  for (const auto& v : space.points()) {
    for (const auto& z : space.points()) {
      const IndexVector diff = v - z;
      gen.entries(v.code(), z.code()) =
          norm * (eta(p, 2LL * vector_symplectic(z, v)) * chi_h.at(diff * 2) -
                  eta(p, 2LL * vector_symplectic(v, z)) * chi_h.at(diff * (-2)));
    }
  }
  return gen;
}

GeneratorMatrix build_wigner_generator(const Matrix& h) { return build_wigner_generator(space_for(h), h); }

Evolver::Evolver(const GeneratorMatrix& gen) : gen_(gen) {
  if (hermiticity_error(gen.entries) > 1e-8) throw InternalError("generator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(gen.entries);
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
}

Vector Evolver::apply(const Vector& c0, double t) const {
  if (c0.size() != evecs_.rows()) throw ValidationError("state size does not match the generator");
  Vector coeff = evecs_.adjoint() * c0;
  for (Eigen::Index k = 0; k < coeff.size(); ++k) coeff(k) *= std::polar(1.0, evals_(k) * t);
  return evecs_ * coeff;
}

Vector char_state_vector(const CharTable& chi) {
  if (!(chi.convention == Convention(ConventionKind::Dynamics))) {
    throw ConventionMismatchError("char-space dynamics needs the dynamics convention");
  }
  Vector c(chi.values.size());
  for (long long k = 0; k < c.size(); ++k) {
    const IndexVector w = IndexVector::from_code(chi.p, chi.n, k);
    c(k) = chi.p == 2 ? chi.at(w) : chi.at(-w);
  }
  return c;
}

CharTable char_table_from_state(const Vector& c, int p, int n) {
  CharTable chi{p, n, Convention(ConventionKind::Dynamics), std::vector<cplx>(c.size())};
  for (long long k = 0; k < c.size(); ++k) {
    const IndexVector w = IndexVector::from_code(p, n, k);
    chi.values[p == 2 ? k : (-w).code()] = c(k);
  }
  return chi;
}

CharTable Evolver::evolve(const CharTable& chi, double t) const {
  if (gen_.kind != GeneratorKind::CharSpace) throw ValidationError("generator kind does not match the state");
  if (chi.p != gen_.p || chi.n != gen_.n) throw ValidationError("state shape does not match the generator");
  return char_table_from_state(apply(char_state_vector(chi), t), chi.p, chi.n);
}

WignerTable Evolver::evolve(const WignerTable& w, double t) const {
  if (gen_.kind != GeneratorKind::WignerSpace) throw ValidationError("generator kind does not match the state");
  if (w.p != gen_.p || w.n != gen_.n) throw ValidationError("state shape does not match the generator");
  if (!(w.convention == Convention(ConventionKind::Dynamics))) {
    throw ConventionMismatchError("Wigner-space dynamics needs the dynamics convention");
  }
  Vector c = Eigen::Map<const Vector>(w.values.data(), static_cast<Eigen::Index>(w.values.size()));
  Vector out = apply(c, t);
  return {w.p, w.n, w.convention, std::vector<cplx>(out.data(), out.data() + out.size())};
}

CharTable evolve(const CharTable& chi, const GeneratorMatrix& gen, double t) { return Evolver(gen).evolve(chi, t); }

WignerTable evolve(const WignerTable& w, const GeneratorMatrix& gen, double t) { return Evolver(gen).evolve(w, t); }

SpinCoefficients spin_coeff_bridge(const CharTable& chi) {
  if (!(chi.convention == Convention(ConventionKind::Dynamics))) {
    throw ConventionMismatchError("spin coefficient bridge needs the dynamics convention");
  }
  SpinCoefficients s{chi.p, chi.n, std::vector<cplx>(chi.values.size())};
  for (long long k = 0; k < static_cast<long long>(chi.values.size()); ++k) {
    const IndexVector u = IndexVector::from_code(chi.p, chi.n, k);
    if (chi.p == 2) {
      s.values[k] = i_pow(-count_11_blocks(u)) * chi.at(u);
    } else {
      const long long half = prime_inverse(2, chi.p);
      s.values[k] = eta(chi.p, half * self_form(u)) * chi.at(-u);
    }
  }
  return s;
}

Matrix density_from_dynamics_char(const CharTable& chi) { return spin_compose(spin_coeff_bridge(chi)); }

Matrix evolve_direct(const Matrix& rho, const Matrix& h, double t) {
  require_square(h, "Hamiltonian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
  const Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return u * rho * u.adjoint();
}

Trajectory evolve_trajectory(const PhaseSpace& space, const Matrix& rho0, const Matrix& h, double t0,
                             double t1, int steps) {
  if (steps < 1) throw ValidationError("steps must be at least 1");
  require_square(rho0, "state");
  if (rho0.rows() != space.dim()) throw ValidationError("state size does not match p^n");
  const WignerFrame frame(space, Convention(ConventionKind::Dynamics));
  const Evolver evolver(build_char_generator(space, h));
  const CharTable chi0 = char_function(frame, rho0);
  const double trace0 = chi0.values[0].real();
  const double purity0 = (rho0 * rho0).trace().real();
  Trajectory traj;
  for (int k = 0; k <= steps; ++k) {
    const double t = t0 + (t1 - t0) * k / steps;
    TrajectoryPoint pt;
    pt.t = t;
    pt.chi = evolver.evolve(chi0, t - t0);
    pt.rho = density_from_dynamics_char(pt.chi);
    if (space.p() != 2) pt.wigner = wigner_from_char(pt.chi);
    auto& rep = traj.report;
    rep.max_trace_drift = std::max(rep.max_trace_drift, std::abs(pt.chi.values[0] - cplx(trace0)));
    const double purity = pt.wigner ? plancherel_inner(*pt.wigner, *pt.wigner) : (pt.rho * pt.rho).trace().real();
    rep.max_purity_drift = std::max(rep.max_purity_drift, std::abs(purity - purity0));
    rep.max_direct_deviation =
        std::max(rep.max_direct_deviation, (pt.rho - evolve_direct(rho0, h, t - t0)).norm());
    traj.points.push_back(std::move(pt));
  }
  return traj;
}

}  // namespace finphase
