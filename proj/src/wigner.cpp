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

#include "finphase/wigner.hpp"

#include <algorithm>
#include <cmath>

#include "finphase/finite_field.hpp"
#include "finphase/linalg.hpp"
#include "finphase/mub.hpp"

namespace finphase {

std::string convention_name(ConventionKind kind) {
  switch (kind) {
    case ConventionKind::Plain: return "plain";
    case ConventionKind::Shifted: return "shifted";
    case ConventionKind::Separable: return "separable";
    case ConventionKind::QubitLeft: return "qubit-left";
    case ConventionKind::QubitRight: return "qubit-right";
    case ConventionKind::Dynamics: return "dynamics";
  }
  throw InternalError("unknown convention kind");
}

Convention Convention::parse(const std::string& name) {
  for (auto k : {ConventionKind::Plain, ConventionKind::Shifted, ConventionKind::Separable,
                 ConventionKind::QubitLeft, ConventionKind::QubitRight, ConventionKind::Dynamics}) {
    if (convention_name(k) == name) return Convention(k);
  }
  throw ValidationError("unknown convention '" + name + "'");
}

Convention Convention::default_for(int p, int n) {
  if (n == 1) return Convention(ConventionKind::Plain);
  if (p != 2) return Convention(ConventionKind::Separable);
  if (n == 2) return Convention(ConventionKind::QubitLeft);
  return Convention(ConventionKind::Plain);
}

Convention Convention::with_extra_shifts(ConventionKind kind, std::vector<std::vector<int>> extra) {
  Convention c(kind);
  c.extra_ = std::move(extra);
  return c;
}

std::string Convention::name() const {
  return convention_name(kind_) + (extra_.empty() ? "" : "+shifts");
}

void Convention::validate(int p, int n) const {
  const auto fail = [&](const char* why) {
    throw UnsupportedError("convention " + name() + " " + why + " (p=" + std::to_string(p) +
                           ", n=" + std::to_string(n) + ")");
  };
  switch (kind_) {
    case ConventionKind::Plain:
    case ConventionKind::Dynamics:
      break;
    case ConventionKind::Shifted:
      if (n != 1 || p == 2) fail("requires odd p and n = 1");
      break;
    case ConventionKind::Separable:
      if (p == 2) fail("requires odd p");
      break;
    case ConventionKind::QubitLeft:
    case ConventionKind::QubitRight:
      if (p != 2 || n != 2) fail("requires p = 2 and n = 2");
      break;
  }
}

double WignerTable::max_imag() const {
  double m = 0;
  for (const auto& v : values) m = std::max(m, std::abs(v.imag()));
  return m;
}

namespace {

std::vector<int> base_shifts(const PhaseSpace& space, ConventionKind kind, long long alpha) {
  const int p = space.p();
  const int n = space.n();
  const auto& gs = space.generators(alpha);
  std::vector<int> r(n, 0);
  switch (kind) {
    case ConventionKind::Plain:
      break;
    case ConventionKind::Shifted:
    case ConventionKind::Separable: {
      const int half = prime_inverse(2, p);
      for (int k = 0; k < n; ++k) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long long>(gs.gens[k].x(j) - 1) * gs.gens[k].y(j);
        r[k] = mod_p(mod_p(s, p) * static_cast<long long>(half), p);
      }
      break;
    }
    case ConventionKind::QubitLeft:
      if (alpha < space.q()) r[1] = space.field().from_code(alpha)[0];
      break;
    case ConventionKind::QubitRight:
      if (alpha < space.q()) r[0] = space.field().from_code(alpha)[1];
      break;
    case ConventionKind::Dynamics:
      if (p == 2) {
        if (n != 1) throw UnsupportedError("the p = 2 dynamics gauge is not a generator shift for n > 1");
        break;
      }
      for (int k = 0; k < n; ++k) {
        r[k] = mod_p(static_cast<long long>(self_form(gs.gens[k])) * prime_inverse(2, p), p);
      }
      break;
  }
  return r;
}

// Axis-by-axis transform; output is indexed with x_j and y_j swapped in each block.
std::vector<cplx> symplectic_transform(const std::vector<cplx>& in, int p, int n, double scale) {
  const int len = 2 * n;
  std::vector<cplx> a = in;
  std::vector<cplx> roots(p);
  for (int e = 0; e < p; ++e) roots[e] = eta(p, e);
  const long long total = static_cast<long long>(a.size());
  std::vector<cplx> buf(p);
  long long stride = total;
  for (int i = 0; i < len; ++i) {
    stride /= p;
    const int sign = (i % 2 == 0) ? 1 : -1;
    for (long long base = 0; base < total; ++base) {
      if ((base / stride) % p != 0) continue;
      for (int m = 0; m < p; ++m) buf[m] = a[base + m * stride];
      for (int k = 0; k < p; ++k) {
        cplx s = 0;
        for (int m = 0; m < p; ++m) s += roots[mod_p(static_cast<long long>(sign) * k * m, p)] * buf[m];
        a[base + k * stride] = s;
      }
    }
  }
  std::vector<cplx> out(a.size());
  for (long long c = 0; c < total; ++c) {
    IndexVector u = IndexVector::from_code(p, n, c);
    std::vector<int> sw(len);
    for (int j = 0; j < n; ++j) {
      sw[2 * j] = u.y(j);
      sw[2 * j + 1] = u.x(j);
    }
    out[c] = scale * a[IndexVector(p, std::move(sw)).code()];
  }
  return out;
}

}  // namespace

WignerFrame::WignerFrame(int p, int n, Convention convention)
    : WignerFrame(PhaseSpace(p, n), std::move(convention)) {}

WignerFrame::WignerFrame(PhaseSpace space, Convention convention)
    : space_(std::move(space)), conv_(std::move(convention)) {
  const int p = space_.p();
  const int n = space_.n();
  conv_.validate(p, n);
  generator_based_ = !(conv_.kind() == ConventionKind::Dynamics && p == 2 && n > 1);
  const auto& extra = conv_.extra_shifts();
  if (!extra.empty()) {
    if (!generator_based_) throw UnsupportedError("extra shifts need a generator-based convention");
    if (static_cast<long long>(extra.size()) != space_.num_labels()) {
      throw ValidationError("extra shifts need one entry per class");
    }
  }
  if (generator_based_) {
    for (long long a = 0; a < space_.num_labels(); ++a) {
      auto r = base_shifts(space_, conv_.kind(), a);
      if (!extra.empty()) {
        if (static_cast<int>(extra[a].size()) != n) throw ValidationError("extra shifts need n entries");
        for (int k = 0; k < n; ++k) r[k] = mod_p(static_cast<long long>(r[k]) + extra[a][k], p);
      }
      shifts_.push_back(std::move(r));
    }
  }
  ops_.reserve(space_.num_points());
  for (const auto& w : space_.points()) {
    if (w.is_zero()) {
      ops_.push_back(PhasedOperator::identity(p, n));
    } else if (generator_based_) {
      const auto dec = space_.decompose(w);
      ops_.push_back(generator_product(space_.generators(dec.alpha), dec.b, shifts_[dec.alpha], p == 2));
    } else {
      ops_.push_back(PhasedOperator(w, 0, count_11_blocks(w)));
    }
    if (!(ops_.back().index() == w)) throw InternalError("index equation produced the wrong vector");
  }
}

const std::vector<int>& WignerFrame::shifts(long long alpha) const {
  if (!generator_based_) throw UnsupportedError("convention " + conv_.name() + " has no generator shifts");
  check_label(space_.field(), alpha);
  return shifts_[alpha];
}

std::vector<int> WignerFrame::outcomes_at(const IndexVector& u, long long alpha) const {
  const auto& r = shifts(alpha);
  const auto& gs = space_.generators(alpha);
  std::vector<int> s(n());
  for (int k = 0; k < n(); ++k) s[k] = mod_p(static_cast<long long>(vector_symplectic(u, gs.gens[k])) + r[k], p());
  return s;
}

void WignerFrame::require_matches(int p_, int n_, const Convention& c) const {
  if (p_ != p() || n_ != n()) throw ValidationError("table shape does not match the frame");
  if (!(c == conv_)) {
    throw ConventionMismatchError("table convention " + c.name() + " differs from frame convention " + conv_.name());
  }
}

CharTable char_function(const WignerFrame& frame, const Matrix& rho) {
  require_square(rho, "operator");
  if (rho.rows() != frame.space().dim()) throw ValidationError("operator size does not match p^n");
  CharTable chi{frame.p(), frame.n(), frame.convention(), {}};
  chi.values.resize(frame.space().num_points());
  for (long long c = 0; c < frame.space().num_points(); ++c) {
    const auto& op = frame.op(c);
    chi.values[c] = op.phase() * trace_with_spin(rho, op.index());
  }
  return chi;
}

CharTable char_function(const Matrix& rho, const Convention& convention) {
  require_square(rho, "operator");
  auto [p, n] = prime_power_of(rho.rows());
  return char_function(WignerFrame(p, n, convention), rho);
}

WignerTable wigner_from_char(const CharTable& chi) {
  const double scale = 1.0 / static_cast<double>(num_points(chi.p, chi.n));
  if (static_cast<long long>(chi.values.size()) != num_points(chi.p, chi.n)) {
    throw ValidationError("characteristic table has the wrong size");
  }
  return {chi.p, chi.n, chi.convention, symplectic_transform(chi.values, chi.p, chi.n, scale)};
}

CharTable char_from_wigner(const WignerTable& w) {
  if (static_cast<long long>(w.values.size()) != num_points(w.p, w.n)) {
    throw ValidationError("Wigner table has the wrong size");
  }
  return {w.p, w.n, w.convention, symplectic_transform(w.values, w.p, w.n, 1.0)};
}

WignerTable wigner_function(const WignerFrame& frame, const Matrix& rho) {
  return wigner_from_char(char_function(frame, rho));
}

WignerTable wigner_function(const Matrix& rho, const Convention& convention) {
  return wigner_from_char(char_function(rho, convention));
}

Matrix a_operator(const WignerFrame& frame, const IndexVector& u) {
  const auto& space = frame.space();
  const long long d = space.dim();
  Matrix a = -Matrix::Identity(d, d);
  for (long long alpha = 0; alpha < space.num_labels(); ++alpha) {
    a += mub_projector_matrix(space, alpha, frame.outcomes_at(u, alpha));
  }
  return a / static_cast<double>(d);
}

std::vector<IndexVector> marginal_points(const WignerFrame& frame, long long alpha,
                                         const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != frame.n()) throw ValidationError("outcome vector must have n entries");
  std::vector<int> target(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) target[k] = mod_p(s[k], frame.p());
  std::vector<IndexVector> out;
  for (const auto& u : frame.space().points()) {
    if (frame.outcomes_at(u, alpha) == target) out.push_back(u);
  }
  return out;
}

cplx marginal_along(const WignerFrame& frame, const WignerTable& w, long long alpha,
                    const std::vector<int>& s) {
  frame.require_matches(w.p, w.n, w.convention);
  cplx sum = 0;
  for (const auto& u : marginal_points(frame, alpha, s)) sum += w.at(u);
  return sum;
}

Matrix reconstruct_density(const WignerFrame& frame, const CharTable& chi) {
  frame.require_matches(chi.p, chi.n, chi.convention);
  SpinCoefficients s{chi.p, chi.n, std::vector<cplx>(chi.values.size())};
  for (const auto& w : frame.space().points()) {
    const IndexVector minus = -w;
    const auto& op = frame.op(minus);
    s.values[w.code()] = eta(chi.p, self_form(w)) * chi.at(minus) / op.phase();
  }
  return spin_compose(s);
}

Matrix reconstruct_density(const WignerFrame& frame, const WignerTable& w) {
  return reconstruct_density(frame, char_from_wigner(w));
}

Matrix reconstruct_density_via_a(const WignerFrame& frame, const WignerTable& w) {
  frame.require_matches(w.p, w.n, w.convention);
  const long long d = frame.space().dim();
  Matrix rho = Matrix::Zero(d, d);
  for (const auto& u : frame.space().points()) rho += w.at(u) * a_operator(frame, u);
  return rho * static_cast<double>(d);
}

double plancherel_inner(const WignerTable& w1, const WignerTable& w2) {
  if (w1.p != w2.p || w1.n != w2.n || w1.values.size() != w2.values.size()) {
    throw ValidationError("Wigner tables have different shapes");
  }
  if (!(w1.convention == w2.convention)) {
    throw ConventionMismatchError("inner product across conventions " + w1.convention.name() + " and " +
                                  w2.convention.name());
  }
  cplx s = 0;
  for (std::size_t i = 0; i < w1.values.size(); ++i) s += w1.values[i] * w2.values[i];
  return (s * static_cast<double>(checked_pow(w1.p, w1.n))).real();
}

SupportStats support_stats(const WignerTable& w, double threshold) {
  SupportStats st;
  for (const auto& v : w.values) {
    const double a = std::abs(v);
    st.max_abs = std::max(st.max_abs, a);
    if (a > threshold) ++st.support;
  }
  st.bound_ok = st.max_abs <= std::pow(static_cast<double>(w.p), -0.5 * w.n) + threshold;
  st.support_ok = st.support >= checked_pow(w.p, w.n);
  return st;
}

long long char_support(const CharTable& chi, double threshold) {
  return std::count_if(chi.values.begin(), chi.values.end(),
                       [threshold](const cplx& v) { return std::abs(v) > threshold; });
}

FactorizationReport check_separable_mixture(const std::vector<double>& weights,
                                            const std::vector<std::vector<Matrix>>& factors,
                                            QubitTwist twist) {
  if (weights.empty() || weights.size() != factors.size()) {
    throw ValidationError("need one weight per product term");
  }
  const int n = static_cast<int>(factors[0].size());
  if (n < 1) throw ValidationError("empty product term");
  require_square(factors[0][0], "factor");
  const auto d = factors[0][0].rows();
  if (!is_prime(d)) throw ValidationError("factors must have prime dimension");
  const int p = static_cast<int>(d);
  for (const auto& term : factors) {
    if (static_cast<int>(term.size()) != n) throw ValidationError("product terms differ in length");
    for (const auto& f : term) {
      require_square(f, "factor");
      if (f.rows() != d) throw ValidationError("factors differ in dimension");
    }
  }
  FactorizationReport rep;
  Convention full;
  Convention single;
  if (p == 2) {
    if (n > 2) {
      throw UnsupportedError(
          "factorization checks are disabled for p = 2, n > 2: no generator shift makes the qubit "
          "Wigner function separable beyond two qubits");
    }
    single = Convention(ConventionKind::Plain);
    full = (n == 1) ? single
                    : Convention(twist == QubitTwist::Left ? ConventionKind::QubitLeft : ConventionKind::QubitRight);
    if (n == 2) {
      rep.diagnostic = twist == QubitTwist::Left ? "second factor transposed" : "first factor transposed";
    }
  } else {
    single = Convention(ConventionKind::Shifted);
    full = (n == 1) ? single : Convention(ConventionKind::Separable);
  }
  rep.convention = full.name();
  const WignerFrame frame_full(p, n, full);
  const WignerFrame frame_single(p, 1, single);
  const long long dim = frame_full.space().dim();
  Matrix rho = Matrix::Zero(dim, dim);
  std::vector<std::vector<WignerTable>> parts;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    rho += weights[k] * kron_all(factors[k]);
    std::vector<WignerTable> row;
    for (int j = 0; j < n; ++j) {
      const bool transpose = p == 2 && n == 2 &&
                             ((twist == QubitTwist::Left && j == 1) || (twist == QubitTwist::Right && j == 0));
      row.push_back(wigner_function(frame_single, transpose ? Matrix(factors[k][j].transpose()) : factors[k][j]));
    }
    parts.push_back(std::move(row));
  }
  const WignerTable w = wigner_function(frame_full, rho);
  for (const auto& u : frame_full.space().points()) {
    cplx predicted = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      cplx prod = weights[k];
      for (int j = 0; j < n; ++j) prod *= parts[k][j].at(u.block(j));
      predicted += prod;
    }
    rep.max_deviation = std::max(rep.max_deviation, std::abs(w.at(u) - predicted));
  }
  return rep;
}

FactorizationReport check_product_factorization(const Matrix& tau, const Matrix& mu, QubitTwist twist) {
  return check_separable_mixture({1.0}, {{tau, mu}}, twist);
}

WignerTable wigner_partial_transpose(const WignerTable& w) {
  if (w.p == 2 || w.n != 2 || !(w.convention == Convention(ConventionKind::Separable))) {
    throw UnsupportedError("partial transpose remap needs odd p, n = 2 and the separable convention");
  }
  WignerTable out = w;
  for (long long c = 0; c < static_cast<long long>(w.values.size()); ++c) {
    const IndexVector u = IndexVector::from_code(w.p, 2, c);
    const IndexVector src(w.p, {u[0], u[1], -1 - u[2], u[3]});
    out.values[c] = w.at(src);
  }
  return out;
}

PositivityReport positivity_check(const Matrix& rho, double tol) {
  require_square(rho, "density");
  if (hermiticity_error(rho) > tol) throw ValidationError("positivity check needs a Hermitian matrix");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-8) throw ValidationError("positivity check needs unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  PositivityReport rep;
  rep.min_eigenvalue = es.eigenvalues()(0);
  rep.positive = rep.min_eigenvalue >= -tol;
  rep.witness_state = es.eigenvectors().col(0);
  const Matrix b = rep.witness_state * rep.witness_state.adjoint();
  rep.witness_coeffs = spin_decompose(b);
  const double d = static_cast<double>(rho.rows());
  for (auto& c : rep.witness_coeffs.values) c /= d;
  SpinCoefficients scaled = rep.witness_coeffs;
  for (auto& c : scaled.values) c *= d;
  const Matrix bb = spin_compose(scaled);
  rep.witness_value = (rho * bb * bb.adjoint()).trace().real();
  return rep;
}

Matrix maximally_entangled_state(int p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  Vector psi = Vector::Zero(static_cast<long long>(p) * p);
  for (int j = 0; j < p; ++j) psi(j * p + j) = 1.0 / std::sqrt(static_cast<double>(p));
  return psi * psi.adjoint();
}

WignerTable wigner_maximally_entangled(int p) {
  if (!is_prime(p) || p == 2) throw UnsupportedError("closed form needs an odd prime");
  WignerTable w{p, 2, Convention(ConventionKind::Separable), {}};
  const long long total = num_points(p, 2);
  w.values.assign(total, 0.0);
  for (long long c = 0; c < total; ++c) {
    const IndexVector u = IndexVector::from_code(p, 2, c);
    if (mod_p(1 + u.x(0) + u.x(1), p) == 0 && u.y(0) == u.y(1)) {
      w.values[c] = 1.0 / (static_cast<double>(p) * p);
    }
  }
  return w;
}

}  // namespace finphase
