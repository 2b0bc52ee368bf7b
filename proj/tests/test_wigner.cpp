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

#include <doctest.h>

#include <cmath>

#include "finphase/linalg.hpp"
#include "finphase/mub.hpp"
#include "finphase/random_states.hpp"
#include "finphase/wigner.hpp"
#include "oracles.hpp"

using namespace finphase;

namespace {

struct Case {
  int p;
  int n;
  ConventionKind kind;
};

const std::vector<Case> kGeneratorCases = {
    {2, 1, ConventionKind::Plain},      {3, 1, ConventionKind::Plain},     {3, 1, ConventionKind::Shifted},
    {5, 1, ConventionKind::Plain},      {5, 1, ConventionKind::Dynamics},  {2, 2, ConventionKind::QubitLeft},
    {2, 2, ConventionKind::QubitRight}, {2, 2, ConventionKind::Plain},     {3, 2, ConventionKind::Separable},
    {3, 2, ConventionKind::Plain},      {3, 2, ConventionKind::Dynamics},  {2, 3, ConventionKind::Plain},
    {3, 3, ConventionKind::Separable},  {5, 2, ConventionKind::Separable},
};

Matrix basis_op(int d, int j, int k) {
  Matrix m = Matrix::Zero(d, d);
  m(j, k) = 1.0;
  return m;
}

double table_max_diff(const WignerTable& a, const WignerTable& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace

TEST_SUITE("wigner") {
  TEST_CASE("qubit characteristic function reads off the Bloch vector") {
    const double mx = 0.3, my = -0.5, mz = 0.6;
    const Matrix rho =
        0.5 * (Matrix::Identity(2, 2) + mx * oracle::pauli_x() + my * oracle::pauli_y() + mz * oracle::pauli_z());
    const auto chi = char_function(rho, Convention(ConventionKind::Plain));
    CHECK(std::abs(chi.at(IndexVector(2, {1, 0})) - cplx(mz)) < 1e-15);
    CHECK(std::abs(chi.at(IndexVector(2, {1, 1})) - cplx(my)) < 1e-15);
    CHECK(std::abs(chi.at(IndexVector(2, {0, 1})) - cplx(mx)) < 1e-15);
    CHECK(std::abs(chi.at(IndexVector(2, {0, 0})) - cplx(1)) < 1e-15);

    const auto w = wigner_function(rho, Convention(ConventionKind::Plain));
    const WignerFrame frame(2, 1, Convention(ConventionKind::Plain));
    for (int v1 = 0; v1 < 2; ++v1) {
      const cplx sum = w.at(IndexVector(2, {0, v1})) + w.at(IndexVector(2, {1, v1}));
      CHECK(std::abs(sum - 0.5 * (1.0 + (v1 ? -1.0 : 1.0) * mz)) < 1e-15);
      CHECK(std::abs(marginal_along(frame, w, 0, {v1}) - sum) < 1e-15);
    }
  }

  TEST_CASE("characteristic function of a projector") {
    for (int p : {3, 5}) {
      const PhaseSpace space(p, 1);
      const WignerFrame frame(space, Convention(ConventionKind::Plain));
      for (long long b = 0; b <= p; ++b)
        for (int r = 0; r < p; ++r) {
          const auto chi = char_function(frame, mub_projector_matrix(space, b, {r}));
          for (long long a = 0; a <= p; ++a) {
            const auto ua = space.generators(a).gens[0];
            for (int m = 1; m < p; ++m) {
              const cplx expect = (a == b) ? eta(p, -static_cast<long long>(r) * m) : cplx(0);
              CHECK(std::abs(chi.at(ua * m) - expect) < 1e-12);
            }
          }
        }
    }
  }

  TEST_CASE("maximally mixed state has delta characteristic function and flat W") {
    for (const auto& c : kGeneratorCases) {
      const long long d = checked_pow(c.p, c.n);
      const Matrix rho = Matrix::Identity(d, d) / static_cast<double>(d);
      const WignerFrame frame(c.p, c.n, Convention(c.kind));
      const auto chi = char_function(frame, rho);
      CHECK(std::abs(chi.values[0] - cplx(1)) < 1e-12);
      for (std::size_t k = 1; k < chi.values.size(); ++k) CHECK(std::abs(chi.values[k]) < 1e-12);
      const auto w = wigner_from_char(chi);
      for (const auto& v : w.values) CHECK(std::abs(v - cplx(1.0 / (d * d))) < 1e-12);
      CHECK(support_stats(w).support == d * d);
    }
  }

  TEST_CASE("fast symplectic transform agrees with the direct sum") {
    Rng rng(5);
    std::normal_distribution<double> nd;
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
      CharTable chi{p, n, Convention(ConventionKind::Plain), {}};
      for (long long k = 0; k < num_points(p, n); ++k) chi.values.emplace_back(nd(rng), nd(rng));
      const auto w = wigner_from_char(chi);
      const auto naive = oracle::naive_wigner(chi.values, p, n);
      for (std::size_t k = 0; k < naive.size(); ++k) CHECK(std::abs(w.values[k] - naive[k]) < 1e-12);
      const auto back = char_from_wigner(w);
      for (std::size_t k = 0; k < naive.size(); ++k) CHECK(std::abs(back.values[k] - chi.values[k]) < 1e-12);
    }
  }

  TEST_CASE("MUB pure states have W = 1/p on a line") {
    for (int p : {2, 3, 5, 7}) {
      const PhaseSpace space(p, 1);
      const WignerFrame frame(space, Convention(ConventionKind::Plain));
      for (long long a = 0; a <= p; ++a)
        for (int r = 0; r < p; ++r) {
          const auto w = wigner_function(frame, mub_projector_matrix(space, a, {r}));
          const auto ua = space.generators(a).gens[0];
          for (const auto& v : space.points()) {
            const double expect = (vector_symplectic(v, ua) == r) ? 1.0 / p : 0.0;
            CHECK(std::abs(w.at(v) - expect) < 1e-12);
          }
          const auto st = support_stats(w);
          CHECK(st.support == p);
          CHECK(st.max_abs == doctest::Approx(1.0 / p));
        }
    }
  }

  TEST_CASE("Wigner function of |j><k| in the shifted convention") {
    for (int p : {3, 5, 7}) {
      const int half = prime_inverse(2, p);
      const WignerFrame frame(p, 1, Convention(ConventionKind::Shifted));
      for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k) {
          const auto w = wigner_function(frame, basis_op(p, j, k));
          for (const auto& v : frame.space().points()) {
            const bool on = mod_p(v.y(0) + static_cast<long long>(half) * (j + k), p) == 0;
            const cplx expect =
                on ? eta(p, static_cast<long long>(v.x(0) + half) * (k - j)) / static_cast<double>(p) : cplx(0);
            CHECK(std::abs(w.at(v) - expect) < 1e-12);
          }
        }
    }
  }

  TEST_CASE("closed forms of the separable and dynamics gauges") {
    Rng rng(17);
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}}) {
      const Matrix rho = random_density(checked_pow(p, n), rng);
      const auto sep = char_function(WignerFrame(p, n, Convention(ConventionKind::Separable)), rho);
      const auto dyn = char_function(WignerFrame(p, n, Convention(ConventionKind::Dynamics)), rho);
      const long long half = prime_inverse(2, p);
      for (const auto& w : all_index_vectors(p, n)) {
        const cplx t = (rho * oracle::tensor_spin(w)).trace();
        long long e = 0;
        for (int j = 0; j < n; ++j) e += static_cast<long long>(w.x(j) - 1) * w.y(j);
        CHECK(std::abs(sep.at(w) - eta(p, half * e) * t) < 1e-12);
        CHECK(std::abs(dyn.at(w) - eta(p, half * self_form(w)) * t) < 1e-12);
      }
    }
    for (int n : {1, 2, 3}) {
      const Matrix rho = random_density(checked_pow(2, n), rng);
      const auto dyn = char_function(WignerFrame(2, n, Convention(ConventionKind::Dynamics)), rho);
      for (const auto& w : all_index_vectors(2, n)) {
        const cplx t = (rho * oracle::tensor_spin(w)).trace();
        CHECK(std::abs(dyn.at(w) - std::pow(cplx(0, -1), count_11_blocks(w)) * t) < 1e-12);
      }
    }
  }

  TEST_CASE("characteristic functions of densities are Hermitian-symmetric and normalized") {
    Rng rng(19);
    for (const auto& c : kGeneratorCases) {
      const Matrix rho = random_density(checked_pow(c.p, c.n), rng);
      const WignerFrame frame(c.p, c.n, Convention(c.kind));
      const auto chi = char_function(frame, rho);
      CHECK(std::abs(chi.values[0] - cplx(1)) < 1e-12);
      for (const auto& w : frame.space().points()) CHECK(std::abs(chi.at(-w) - std::conj(chi.at(w))) < 1e-12);
      const auto w = wigner_from_char(chi);
      cplx total = 0;
      for (const auto& v : w.values) total += v;
      CHECK(std::abs(total - cplx(1)) < 1e-12);
      CHECK(w.max_imag() < 1e-12);
    }
  }

  TEST_CASE("A operators form an orthogonal Hermitian basis reproducing W") {
    Rng rng(23);
    for (const auto& c : kGeneratorCases) {
      const long long d = checked_pow(c.p, c.n);
      if (d > 9) continue;
      const WignerFrame frame(c.p, c.n, Convention(c.kind));
      std::vector<Matrix> as;
      Matrix sum = Matrix::Zero(d, d);
      for (const auto& u : frame.space().points()) {
        as.push_back(a_operator(frame, u));
        sum += as.back();
        CHECK(oracle::max_abs(as.back() - as.back().adjoint()) < 1e-12);
      }
      CHECK(oracle::max_abs(sum - Matrix::Identity(d, d)) < 1e-12);
      for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t k = 0; k < as.size(); ++k) {
          const cplx ip = (as[i] * as[k]).trace();
          CHECK(std::abs(ip - cplx(i == k ? 1.0 / d : 0.0)) < 1e-12);
        }
      const Matrix rho = random_density(d, rng);
      const auto w = wigner_function(frame, rho);
      for (const auto& u : frame.space().points()) {
        const cplx direct = (rho * as[u.code()]).trace();
        CHECK(std::abs(direct - w.at(u)) < 1e-12);
        CHECK(std::abs(direct.imag()) < 1e-12);
      }
    }
  }

  TEST_CASE("A operators factorize over subsystems for odd p") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {3, 3}}) {
      const WignerFrame full(p, n, Convention(ConventionKind::Separable));
      const WignerFrame single(p, 1, Convention(ConventionKind::Shifted));
      Rng rng(29);
      const int samples = (p == 3 && n == 2) ? 81 : 15;
      for (int t = 0; t < samples; ++t) {
        const IndexVector u = (p == 3 && n == 2) ? full.space().point(t) : random_index_vector(p, n, rng);
        std::vector<Matrix> parts;
        for (int j = 0; j < n; ++j) parts.push_back(a_operator(single, u.block(j)));
        CHECK(oracle::max_abs(a_operator(full, u) - kron_all(parts)) < 1e-12);
      }
    }
  }

  TEST_CASE("marginals equal projector probabilities") {
    Rng rng(31);
    for (const auto& c : kGeneratorCases) {
      const long long d = checked_pow(c.p, c.n);
      if (d > 9) continue;
      const WignerFrame frame(c.p, c.n, Convention(c.kind));
      const Matrix rho = random_density(d, rng);
      const auto w = wigner_function(frame, rho);
      for (long long a = 0; a < frame.space().num_labels(); ++a) {
        cplx total = 0;
        for (const auto& s : outcome_vectors(c.p, c.n)) {
          CHECK(marginal_points(frame, a, s).size() == static_cast<std::size_t>(d));
          const cplx m = marginal_along(frame, w, a, s);
          const cplx direct = (rho * mub_projector_matrix(frame.space(), a, s)).trace();
          CHECK(std::abs(m - direct) < 1e-12);
          CHECK(m.real() > -1e-12);
          total += m;
        }
        CHECK(std::abs(total - cplx(1)) < 1e-12);
      }
    }
  }

  TEST_CASE("reconstruction") {
    Rng rng(37);
    for (const auto& c : kGeneratorCases) {
      const long long d = checked_pow(c.p, c.n);
      const WignerFrame frame(c.p, c.n, Convention(c.kind));
      const Matrix rho = random_density(d, rng);
      const auto w = wigner_function(frame, rho);
      CHECK((reconstruct_density(frame, w) - rho).norm() < 1e-10);
      if (d <= 9) CHECK((reconstruct_density_via_a(frame, w) - rho).norm() < 1e-10);

      WignerTable flat{c.p, c.n, Convention(c.kind), std::vector<cplx>(d * d, 1.0 / (d * d))};
      CHECK((reconstruct_density(frame, flat) - Matrix::Identity(d, d) / static_cast<double>(d)).norm() < 1e-12);

      const Matrix sigma = random_density(d, rng);
      const auto w2 = wigner_function(frame, sigma);
      WignerTable mix = w;
      for (std::size_t k = 0; k < mix.values.size(); ++k) mix.values[k] = 0.3 * w.values[k] - 1.7 * w2.values[k];
      CHECK((reconstruct_density(frame, mix) - (0.3 * rho - 1.7 * sigma)).norm() < 1e-10);
    }
    const PhaseSpace space(3, 1);
    const WignerFrame frame(space, Convention(ConventionKind::Plain));
    const Matrix P = mub_projector_matrix(space, 2, {1});
    CHECK((reconstruct_density(frame, wigner_function(frame, P)) - P).norm() < 1e-12);
    const Matrix op = basis_op(3, 0, 2);
    CHECK((reconstruct_density(frame, wigner_function(frame, op)) - op).norm() < 1e-12);
  }

  TEST_CASE("tables from different conventions do not mix") {
    const Matrix rho = Matrix::Identity(3, 3) / 3.0;
    const auto a = wigner_function(rho, Convention(ConventionKind::Plain));
    const auto b = wigner_function(rho, Convention(ConventionKind::Shifted));
    CHECK_THROWS_AS(plancherel_inner(a, b), ConventionMismatchError);
    const WignerFrame frame(3, 1, Convention(ConventionKind::Plain));
    CHECK_THROWS_AS(reconstruct_density(frame, b), ConventionMismatchError);
    CHECK_THROWS_AS(marginal_along(frame, b, 0, {0}), ConventionMismatchError);
  }

  TEST_CASE("Plancherel formula") {
    Rng rng(41);
    for (const auto& c : kGeneratorCases) {
      const long long d = checked_pow(c.p, c.n);
      const WignerFrame frame(c.p, c.n, Convention(c.kind));
      const Matrix r1 = random_density(d, rng);
      const Matrix r2 = random_density(d, rng);
      CHECK(std::abs(plancherel_inner(wigner_function(frame, r1), wigner_function(frame, r2)) -
                     (r1 * r2).trace().real()) < 1e-12);
      const auto flat = wigner_function(frame, Matrix::Identity(d, d) / static_cast<double>(d));
      CHECK(std::abs(plancherel_inner(flat, flat) - 1.0 / d) < 1e-12);
      const auto pure = wigner_function(frame, random_pure_state(d, rng));
      CHECK(std::abs(plancherel_inner(pure, pure) - 1.0) < 1e-12);
      const auto st = support_stats(pure);
      CHECK(st.bound_ok);
      CHECK(st.support_ok);
      CHECK(st.support * char_support(char_from_wigner(pure)) >= d * d);
    }
    const PhaseSpace space(5, 1);
    const WignerFrame frame(space, Convention(ConventionKind::Plain));
    const auto w0 = wigner_function(frame, mub_projector_matrix(space, 3, {0}));
    const auto w1 = wigner_function(frame, mub_projector_matrix(space, 3, {4}));
    CHECK(std::abs(plancherel_inner(w0, w1)) < 1e-12);
  }

  TEST_CASE("support bounds are tight for MUB states") {
    const PhaseSpace space(3, 2);
    const WignerFrame frame(space, Convention(ConventionKind::Separable));
    for (long long a = 0; a < space.num_labels(); ++a) {
      const auto w = wigner_function(frame, mub_projector_matrix(space, a, {1, 2}));
      const auto st = support_stats(w);
      CHECK(st.support == 9);
      CHECK(st.max_abs == doctest::Approx(1.0 / 9));
      CHECK(st.support * char_support(char_function(frame, mub_projector_matrix(space, a, {1, 2}))) == 81);
    }
  }

  TEST_CASE("translation covariance") {
    Rng rng(43);
    for (const auto& c : kGeneratorCases) {
      const long long d = checked_pow(c.p, c.n);
      const WignerFrame frame(c.p, c.n, Convention(c.kind));
      const Matrix rho = random_density(d, rng);
      const auto w = wigner_function(frame, rho);
      const bool exhaustive = c.n == 1;
      const int count = exhaustive ? static_cast<int>(frame.space().num_points()) : 20;
      for (int t = 0; t < count; ++t) {
        const IndexVector z = exhaustive ? frame.space().point(t) : random_index_vector(c.p, c.n, rng);
        const Matrix sz = tensor_spin(z);
        const auto wz = wigner_function(frame, sz.adjoint() * rho * sz);
        double err = 0;
        for (const auto& u : frame.space().points()) err = std::max(err, std::abs(wz.at(u) - w.at(u + z)));
        CHECK(err < 1e-12);
      }
    }
  }

  TEST_CASE("extra shifts z o g_r permute the table") {
    Rng rng(47);
    for (auto [p, n, kind] : std::vector<Case>{{3, 1, ConventionKind::Plain},
                                               {5, 1, ConventionKind::Shifted},
                                               {3, 2, ConventionKind::Separable},
                                               {2, 2, ConventionKind::QubitLeft}}) {
      const PhaseSpace space(p, n);
      const Matrix rho = random_density(space.dim(), rng);
      const auto w = wigner_function(WignerFrame(space, Convention(kind)), rho);
      for (int t = 0; t < 5; ++t) {
        const IndexVector z = random_index_vector(p, n, rng);
        std::vector<std::vector<int>> extra;
        for (long long a = 0; a < space.num_labels(); ++a) {
          std::vector<int> r;
          for (const auto& g : space.generators(a).gens) r.push_back(vector_symplectic(z, g));
          extra.push_back(r);
        }
        const WignerFrame shifted(space, Convention::with_extra_shifts(kind, extra));
        const auto ws = wigner_function(shifted, rho);
        for (const auto& v : space.points()) CHECK(std::abs(ws.at(v) - w.at(v + z)) < 1e-12);
        CHECK((reconstruct_density(shifted, ws) - rho).norm() < 1e-10);
      }
    }
  }

  TEST_CASE("product states factorize") {
    Rng rng(53);
    for (int p : {3, 5, 7}) {
      for (int t = 0; t < 5; ++t) {
        const auto rep = check_product_factorization(random_density(p, rng), random_density(p, rng));
        CHECK(rep.max_deviation < 1e-10);
        CHECK(rep.convention == "separable");
      }
    }
    for (auto twist : {QubitTwist::Left, QubitTwist::Right}) {
      for (int t = 0; t < 10; ++t) {
        CHECK(check_product_factorization(random_density(2, rng), random_density(2, rng), twist).max_deviation <
              1e-10);
      }
    }
    const Matrix flat = Matrix::Identity(3, 3) / 3.0;
    const auto w = wigner_function(kron(flat, flat), Convention(ConventionKind::Separable));
    for (const auto& v : w.values) CHECK(std::abs(v - cplx(1.0 / 81)) < 1e-12);
  }

  TEST_CASE("qubit pairs need the transpose twist") {
    Rng rng(59);
    const Matrix tau = random_density(2, rng);
    const Matrix mu = random_density(2, rng);
    const WignerFrame left(2, 2, Convention(ConventionKind::QubitLeft));
    const WignerFrame single(2, 1, Convention(ConventionKind::Plain));
    const auto w = wigner_function(left, kron(tau, mu));
    const auto wt = wigner_function(single, tau);
    const auto wm = wigner_function(single, mu);
    double err = 0;
    for (const auto& u : left.space().points()) {
      err = std::max(err, std::abs(w.at(u) - wt.at(u.block(0)) * wm.at(u.block(1))));
    }
    CHECK(err > 1e-3);
  }

  TEST_CASE("separable mixtures and complete separability") {
    Rng rng(61);
    std::vector<double> weights = {0.2, 0.5, 0.3};
    std::vector<std::vector<Matrix>> terms;
    for (int k = 0; k < 3; ++k) terms.push_back({random_density(3, rng), random_density(3, rng)});
    CHECK(check_separable_mixture(weights, terms).max_deviation < 1e-10);
    std::vector<std::vector<Matrix>> qubits;
    for (int k = 0; k < 3; ++k) qubits.push_back({random_density(2, rng), random_density(2, rng)});
    CHECK(check_separable_mixture(weights, qubits).max_deviation < 1e-10);
    for (int t = 0; t < 3; ++t) {
      const auto rep = check_separable_mixture(
          {1.0}, {{random_density(3, rng), random_density(3, rng), random_density(3, rng)}});
      CHECK(rep.max_deviation < 1e-10);
    }
    CHECK_THROWS_AS(check_separable_mixture({1.0}, {{random_density(2, rng), random_density(2, rng),
                                                      random_density(2, rng)}}),
                    UnsupportedError);
    CHECK_THROWS_AS(check_separable_mixture({1.0, 2.0}, {{random_density(3, rng)}}), ValidationError);
  }

  TEST_CASE("maximally entangled state") {
    const auto closed = wigner_maximally_entangled(3);
    int nonzero = 0;
    for (const auto& v : closed.values) {
      if (std::abs(v) > 1e-12) {
        ++nonzero;
        CHECK(std::abs(v - cplx(1.0 / 9)) < 1e-15);
      }
    }
    CHECK(nonzero == 9);
    for (int p : {3, 5, 7}) {
      const WignerFrame frame(p, 2, Convention(ConventionKind::Separable));
      const auto w = wigner_function(frame, maximally_entangled_state(p));
      CHECK(table_max_diff(w, wigner_maximally_entangled(p)) < 1e-12);
      for (long long a = 0; a < frame.space().num_labels(); ++a) {
        for (const auto& s : outcome_vectors(p, 2)) {
          const cplx m = marginal_along(frame, w, a, s);
          CHECK(m.real() > -1e-12);
          CHECK(m.real() < 1 + 1e-12);
        }
      }
    }
    CHECK_THROWS_AS(wigner_maximally_entangled(2), UnsupportedError);
  }

  TEST_CASE("partial transpose remap") {
    Rng rng(67);
    for (int p : {3, 5}) {
      const WignerFrame frame(p, 2, Convention(ConventionKind::Separable));
      const Matrix tau = random_density(p, rng);
      const Matrix mu = random_density(p, rng);
      const auto w = wigner_function(frame, kron(tau, mu));
      const auto wpt = wigner_partial_transpose(w);
      CHECK((reconstruct_density(frame, wpt) - kron(tau, Matrix(mu.transpose()))).norm() < 1e-12);
      CHECK(table_max_diff(wigner_partial_transpose(wpt), w) < 1e-15);
      const Matrix rho = random_density(p * p, rng);
      CHECK((reconstruct_density(frame, wigner_partial_transpose(wigner_function(frame, rho))) -
             partial_transpose_second(rho, p, p))
                .norm() < 1e-12);
      const auto ent = wigner_partial_transpose(wigner_function(frame, maximally_entangled_state(p)));
      const auto rep = positivity_check(reconstruct_density(frame, ent));
      CHECK_FALSE(rep.positive);
      CHECK(rep.min_eigenvalue == doctest::Approx(-1.0 / p));
    }
    CHECK_THROWS_AS(wigner_partial_transpose(wigner_function(Matrix::Identity(4, 4) / 4.0,
                                                             Convention(ConventionKind::QubitLeft))),
                    UnsupportedError);
  }

  TEST_CASE("positivity check and witness") {
    const PhaseSpace space(3, 1);
    for (long long a = 0; a <= 3; ++a)
      for (int r = 0; r < 3; ++r) CHECK(positivity_check(mub_projector_matrix(space, a, {r})).positive);
    const Matrix P = mub_projector_matrix(space, 1, {2});
    for (double eps : {0.4, 1.0}) {
      const Matrix rho = (1 + eps) * Matrix::Identity(3, 3) / 3.0 - eps * P;
      const auto rep = positivity_check(rho);
      Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
      CHECK(rep.min_eigenvalue == doctest::Approx(es.eigenvalues()(0)));
      CHECK(rep.positive == (es.eigenvalues()(0) >= -1e-10));
      CHECK(rep.witness_value == doctest::Approx(rep.min_eigenvalue));
      Matrix b = Matrix::Zero(3, 3);
      for (const auto& u : space.points()) b += rep.witness_coeffs.at(u) * tensor_spin(u);
      CHECK(std::abs((rho * b * b.adjoint()).trace().real() - rep.min_eigenvalue) < 1e-12);
    }
    CHECK_FALSE(positivity_check((1.0 + 1.0) * Matrix::Identity(3, 3) / 3.0 - 1.0 * P).positive);
    Matrix bad = Matrix::Identity(3, 3) / 3.0;
    bad(0, 1) = 0.2;
    CHECK_THROWS_AS(positivity_check(bad), ValidationError);
  }

  TEST_CASE("convention names and validation") {
    for (const char* name : {"plain", "shifted", "separable", "qubit-left", "qubit-right", "dynamics"}) {
      CHECK(Convention::parse(name).name() == name);
    }
    CHECK_THROWS_AS(Convention::parse("left"), ValidationError);
    CHECK_THROWS_AS(WignerFrame(3, 2, Convention(ConventionKind::Shifted)), UnsupportedError);
    CHECK_THROWS_AS(WignerFrame(2, 1, Convention(ConventionKind::Separable)), UnsupportedError);
    CHECK_THROWS_AS(WignerFrame(3, 2, Convention(ConventionKind::QubitLeft)), UnsupportedError);
    CHECK(Convention::default_for(3, 1).kind() == ConventionKind::Plain);
    CHECK(Convention::default_for(3, 2).kind() == ConventionKind::Separable);
    CHECK(Convention::default_for(2, 2).kind() == ConventionKind::QubitLeft);
    CHECK(Convention::default_for(2, 3).kind() == ConventionKind::Plain);
    const WignerFrame dyn(2, 2, Convention(ConventionKind::Dynamics));
    CHECK_FALSE(dyn.generator_based());
    CHECK_THROWS_AS(dyn.shifts(0), UnsupportedError);
    CHECK_THROWS_AS(char_function(Matrix::Identity(3, 3), Convention(ConventionKind::QubitLeft)), UnsupportedError);
    CHECK_THROWS_AS(char_function(WignerFrame(3, 1, Convention()), Matrix::Identity(9, 9)), ValidationError);
  }
}
