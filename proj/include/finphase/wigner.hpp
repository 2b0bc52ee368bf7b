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

#include <string>
#include <vector>

#include "finphase/phase_space.hpp"
#include "finphase/spin_algebra.hpp"

namespace finphase {

enum class ConventionKind {
  Plain,       // no shifts
  Shifted,     // n = 1, odd p: eta^{-1/2} on the vertical class
  Separable,   // odd p, any n: factorizes over tensor products
  QubitLeft,   // p = 2, n = 2: r0 = 0, r1 = a0
  QubitRight,  // p = 2, n = 2: r0 = a1, r1 = 0
  Dynamics,    // eta^{<w,w>/2} tr(rho S_w) for odd p, (-i)^{N(w)} tr(rho S_w) for p = 2
};

// Phase gauge of a characteristic function, optionally with extra per-class shifts.
class Convention {
 public:
  Convention(ConventionKind kind = ConventionKind::Plain) : kind_(kind) {}

  static Convention parse(const std::string& name);
  static Convention default_for(int p, int n);
  // extra[alpha][r] is added to the shift of generator r in class alpha.
  static Convention with_extra_shifts(ConventionKind kind, std::vector<std::vector<int>> extra);

  ConventionKind kind() const { return kind_; }
  const std::vector<std::vector<int>>& extra_shifts() const { return extra_; }
  std::string name() const;

  // Throws UnsupportedError when the gauge is undefined for (p, n).
  void validate(int p, int n) const;

  bool operator==(const Convention&) const = default;

 private:
  ConventionKind kind_;
  std::vector<std::vector<int>> extra_;
};

std::string convention_name(ConventionKind kind);

struct CharTable {
  int p = 0;
  int n = 0;
  Convention convention;
  std::vector<cplx> values;  // indexed by IndexVector::code()

  cplx at(const IndexVector& w) const { return values.at(w.code()); }
};

struct WignerTable {
  int p = 0;
  int n = 0;
  Convention convention;
  std::vector<cplx> values;  // real for Hermitian input

  cplx at(const IndexVector& v) const { return values.at(v.code()); }
  double real_at(const IndexVector& v) const { return values.at(v.code()).real(); }
  double max_imag() const;
};

// chi(w) = tr(rho op(w)) for every w, with op(w) a phased spin matrix of index w.
class WignerFrame {
 public:
  WignerFrame(PhaseSpace space, Convention convention);
  WignerFrame(int p, int n, Convention convention);

  const PhaseSpace& space() const { return space_; }
  const Convention& convention() const { return conv_; }
  int p() const { return space_.p(); }
  int n() const { return space_.n(); }

  const PhasedOperator& op(const IndexVector& w) const { return ops_.at(w.code()); }
  const PhasedOperator& op(long long code) const { return ops_.at(code); }

  // True when op(w) is a product of shifted generator powers.
  bool generator_based() const { return generator_based_; }
  // r_r(alpha); throws UnsupportedError if not generator based.
  const std::vector<int>& shifts(long long alpha) const;

  // s_r = u o g_r(alpha) + r_r(alpha)
  std::vector<int> outcomes_at(const IndexVector& u, long long alpha) const;

  void require_matches(int p, int n, const Convention& c) const;

 private:
  PhaseSpace space_;
  Convention conv_;
  bool generator_based_ = true;
  std::vector<std::vector<int>> shifts_;
  std::vector<PhasedOperator> ops_;
};

CharTable char_function(const WignerFrame& frame, const Matrix& rho);
CharTable char_function(const Matrix& rho, const Convention& convention);

// W(u) = p^{-2n} sum_w eta^{u o w} chi(w), evaluated axis by axis.
WignerTable wigner_from_char(const CharTable& chi);

// chi(w) = sum_u eta^{-u o w} W(u)
CharTable char_from_wigner(const WignerTable& w);

WignerTable wigner_function(const WignerFrame& frame, const Matrix& rho);
WignerTable wigner_function(const Matrix& rho, const Convention& convention);

// p^{-n}(-I + sum_alpha P_alpha(s(u)))
Matrix a_operator(const WignerFrame& frame, const IndexVector& u);

std::vector<IndexVector> marginal_points(const WignerFrame& frame, long long alpha,
                                         const std::vector<int>& s);

cplx marginal_along(const WignerFrame& frame, const WignerTable& w, long long alpha,
                    const std::vector<int>& s);

Matrix reconstruct_density(const WignerFrame& frame, const CharTable& chi);
Matrix reconstruct_density(const WignerFrame& frame, const WignerTable& w);

// p^n sum_u W(u) A(u)
Matrix reconstruct_density_via_a(const WignerFrame& frame, const WignerTable& w);

double plancherel_inner(const WignerTable& w1, const WignerTable& w2);

struct SupportStats {
  long long support = 0;
  double max_abs = 0;
  bool bound_ok = false;    // max |W| <= p^{-n/2} + tol
  bool support_ok = false;  // support >= p^n
};

SupportStats support_stats(const WignerTable& w, double threshold = kDefaultTol);
long long char_support(const CharTable& chi, double threshold = kDefaultTol);

enum class QubitTwist { Left, Right };

struct FactorizationReport {
  double max_deviation = 0;
  std::string convention;
  std::string diagnostic;
};

// Compares W of sum_k weights[k] (x)_j factors[k][j] with the weighted sum of products of
// single-subsystem Wigner functions. For p = 2 the qubit twist transposes one factor.
FactorizationReport check_separable_mixture(const std::vector<double>& weights,
                                            const std::vector<std::vector<Matrix>>& factors,
                                            QubitTwist twist = QubitTwist::Left);

FactorizationReport check_product_factorization(const Matrix& tau, const Matrix& mu,
                                                QubitTwist twist = QubitTwist::Left);

// W(u0, (x1, y1)) -> W(u0, (-1 - x1, y1)); odd p, n = 2, separable convention.
WignerTable wigner_partial_transpose(const WignerTable& w);

struct PositivityReport {
  bool positive = true;
  double min_eigenvalue = 0;
  Vector witness_state;                 // eigenvector of the smallest eigenvalue
  SpinCoefficients witness_coeffs;      // c_u with B = sum_u c_u S_u = |psi><psi|
  double witness_value = 0;             // tr(rho B B^dagger)
};

PositivityReport positivity_check(const Matrix& rho, double tol = kDefaultTol);

Matrix maximally_entangled_state(int p);

// (1/p^2) delta(1 + x0 + x1, 0) delta(y0, y1) in the separable convention.
WignerTable wigner_maximally_entangled(int p);

}  // namespace finphase
