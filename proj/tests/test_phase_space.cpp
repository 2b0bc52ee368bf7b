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

#include <map>
#include <set>

#include "finphase/phase_space.hpp"

using namespace finphase;

namespace {

const std::vector<std::pair<int, int>> kSmall = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}};

std::set<long long> codes(const std::vector<SubspacePoint>& pts) {
  std::set<long long> s;
  for (const auto& sp : pts) s.insert(sp.v.code());
  return s;
}

}  // namespace

TEST_SUITE("phase_space") {
  TEST_CASE("symplectic product on V2(q)") {
    for (auto [p, n] : kSmall) {
      const auto f = GaloisField::make(p, n);
      const auto u = generating_vectors(f);
      for (std::size_t a = 0; a < u.size(); ++a) {
        CHECK(symplectic(u[a], u[a]).is_zero());
        for (std::size_t b = 0; b < u.size(); ++b) CHECK(symplectic(u[a], u[b]).is_zero() == (a == b));
      }
    }
    const auto z3 = GaloisField::make(3, 1);
    const PhasePoint e{z3.one(), z3.zero()};
    const PhasePoint f{z3.zero(), z3.one()};
    CHECK(symplectic(e, f).code() == 2);
  }

  TEST_CASE("vector symplectic product reduces to the scalar one for n = 1") {
    const auto f = GaloisField::make(5, 1);
    for (const auto& a : f.elements())
      for (const auto& b : f.elements())
        for (const auto& c : f.elements())
          for (const auto& d : f.elements()) {
            const PhasePoint u{a, b};
            const PhasePoint v{c, d};
            CHECK(vector_symplectic(m_map(u), m_map(v)) == symplectic(u, v).code());
          }
    CHECK_THROWS_AS(vector_symplectic(IndexVector(3, {1, 0}), IndexVector(3, {1, 0, 0, 0})), ValidationError);
  }

  TEST_CASE("M map is a symplectic bijection for q <= 9") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}}) {
      const auto f = GaloisField::make(p, n);
      std::set<long long> images;
      std::vector<PhasePoint> pts;
      for (const auto& x : f.elements())
        for (const auto& y : f.elements()) pts.push_back({x, y});
      for (const auto& v : pts) {
        const auto img = m_map(v);
        images.insert(img.code());
        CHECK(m_map_inverse(f, img) == v);
      }
      CHECK(static_cast<long long>(images.size()) == f.order() * f.order());
      for (const auto& v1 : pts)
        for (const auto& v2 : pts) {
          const auto sp = symplectic(v1, v2);
          CHECK(vector_symplectic(m_map(v1), m_map(v2)) == sp.trace());
          if (sp.is_zero()) CHECK(vector_symplectic(m_map(v1), m_map(v2)) == 0);
        }
    }
  }

  TEST_CASE("generating vectors") {
    const auto f = GaloisField::make(3, 1);
    const auto u = generating_vectors(f);
    REQUIRE(u.size() == 4);
    const std::vector<std::pair<int, int>> expect = {{1, 0}, {1, 1}, {1, 2}, {0, 1}};
    for (int a = 0; a < 4; ++a) {
      CHECK(u[a].x.code() == expect[a].first);
      CHECK(u[a].y.code() == expect[a].second);
    }
    for (auto [p, n] : kSmall) {
      const auto g = GaloisField::make(p, n);
      const auto us = generating_vectors(g);
      CHECK(static_cast<long long>(us.size()) == g.order() + 1);
      std::map<std::pair<long long, long long>, int> hits;
      for (const auto& ua : us) {
        std::set<std::pair<long long, long long>> cls;
        for (const auto& beta : g.elements()) cls.insert({(beta * ua.x).code(), (beta * ua.y).code()});
        CHECK(static_cast<long long>(cls.size()) == g.order());
        for (const auto& pt : cls) hits[pt]++;
      }
      for (const auto& [pt, count] : hits) {
        if (pt.first == 0 && pt.second == 0) {
          CHECK(count == g.order() + 1);
        } else {
          CHECK(count == 1);
        }
      }
    }
  }

  TEST_CASE("M map coordinates") {
    const auto z7 = GaloisField::make(7, 1);
    for (const auto& x : z7.elements())
      for (const auto& y : z7.elements()) CHECK(m_map({x, y}) == IndexVector(7, {x[0], y[0]}));

    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {5, 2}, {3, 3}}) {
      const auto f = GaloisField::make(p, n);
      for (const auto& a : f.elements()) {
        for (int l = 0; l < n; ++l) {
          const auto img = m_map({f.lambda_power(l), f.lambda_power(l) * a});
          for (int j = 0; j < n; ++j) {
            CHECK(img.x(j) == (j == l ? 1 : 0));
            long long y = 0;
            for (int k = 0; k < n; ++k) y += static_cast<long long>(f.trace_of_power(j + l + k)) * a[k];
            CHECK(img.y(j) == mod_p(y, p));
          }
        }
      }
    }
    const auto f9 = GaloisField::make(3, 2);
    const auto gs = generator_set(f9, f9.element({1, 1}).code());
    CHECK(gs.gens[0] == IndexVector(3, {1, 2, 0, 1}));
    CHECK(gs.gens[1] == IndexVector(3, {0, 1, 1, 1}));
  }

  TEST_CASE("generator sets for n = 2") {
    for (int p : {3, 5, 7}) {
      const auto f = GaloisField::make(p, 2);
      const int D = smallest_nonresidue(p);
      for (const auto& a : f.elements()) {
        const auto gs = generator_set(f, a.code());
        CHECK(gs.gens[0] == IndexVector(p, {1, 2 * a[0], 0, 2 * D * a[1]}));
        CHECK(gs.gens[1] == IndexVector(p, {0, 2 * D * a[1], 1, 2 * D * a[0]}));
      }
      const auto v = generator_set(f, f.order());
      CHECK(v.gens[0] == IndexVector(p, {0, 1, 0, 0}));
      CHECK(v.gens[1] == IndexVector(p, {0, 0, 0, 1}));
    }
    const auto gf4 = GaloisField::make(2, 2);
    for (const auto& a : gf4.elements()) {
      const auto gs = generator_set(gf4, a.code());
      CHECK(gs.gens[0] == IndexVector(2, {1, a[1], 0, a[0] + a[1]}));
      CHECK(gs.gens[1] == IndexVector(2, {0, a[0] + a[1], 1, a[0]}));
    }
    const auto g4 = generator_set(gf4, 4);
    CHECK(g4.gens[0] == IndexVector(2, {0, 1, 0, 0}));
    CHECK(g4.gens[1] == IndexVector(2, {0, 0, 0, 1}));
    // {(1,0,0,0), (0,0,1,0)} would repeat the class alpha = 0.
    CHECK(codes(subspace_points(generator_set(gf4, 0))) ==
          codes(subspace_points({4, {IndexVector(2, {1, 0, 0, 0}), IndexVector(2, {0, 0, 1, 0})}})));
    CHECK_THROWS_AS(generator_set(gf4, 5), ValidationError);
    CHECK_THROWS_AS(generator_set(gf4, -1), ValidationError);
  }

  TEST_CASE("generator sets span isotropic n-dimensional subspaces equal to M(C_alpha)") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}}) {
      const auto f = GaloisField::make(p, n);
      for (long long a = 0; a <= f.order(); ++a) {
        const auto gs = generator_set(f, a);
        for (const auto& g : gs.gens)
          for (const auto& h : gs.gens) CHECK(vector_symplectic(g, h) == 0);
        const auto pts = subspace_points(gs);
        const auto span = codes(pts);
        CHECK(static_cast<long long>(span.size()) == f.order());
        std::set<long long> image;
        const auto ua = generating_vector(f, a);
        for (const auto& beta : f.elements()) image.insert(m_map({beta * ua.x, beta * ua.y}).code());
        CHECK(span == image);
        for (const auto& sp : pts) {
          IndexVector sum = IndexVector::zero(p, n);
          for (int r = 0; r < n; ++r) sum = sum + gs.gens[r] * sp.b[r];
          CHECK(sum == sp.v);
        }
      }
    }
  }

  TEST_CASE("y-symmetry of generator blocks") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {5, 2}}) {
      const auto f = GaloisField::make(p, n);
      for (long long a = 0; a < f.order(); ++a) {
        const auto gs = generator_set(f, a);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) CHECK(gs.gens[j].y(k) == gs.gens[k].y(j));
      }
    }
  }

  TEST_CASE("subspaces partition V_2n(p) apart from the origin") {
    for (auto [p, n] : kSmall) {
      const auto f = GaloisField::make(p, n);
      std::map<long long, int> hits;
      for (long long a = 0; a <= f.order(); ++a) {
        for (long long c : codes(subspace_points(generator_set(f, a)))) hits[c]++;
      }
      CHECK(static_cast<long long>(hits.size()) == f.order() * f.order());
      for (const auto& [c, count] : hits) CHECK(count == (c == 0 ? f.order() + 1 : 1));
    }
    const auto line = subspace_points(generator_set(GaloisField::make(5, 1), 2));
    for (const auto& sp : line) CHECK(sp.v == IndexVector(5, {1, 2}) * sp.b[0]);
  }

  TEST_CASE("lines") {
    const auto z3 = GaloisField::make(3, 1);
    const auto l1 = line_points(z3, {1, 0});
    REQUIRE(l1.size() == 3);
    for (int k = 0; k < 3; ++k) {
      CHECK(l1[k].x.code() == k);
      CHECK(l1[k].y.code() == k);
    }
    const auto z2 = GaloisField::make(2, 1);
    const auto l = line_points(z2, {1, 1});
    std::set<std::pair<long long, long long>> got;
    for (const auto& pt : l) got.insert({pt.x.code(), pt.y.code()});
    CHECK(got == std::set<std::pair<long long, long long>>{{0, 1}, {1, 0}});
  }

  TEST_CASE("the six qubit lines") {
    const auto f = GaloisField::make(2, 1);
    const std::vector<std::set<std::pair<long long, long long>>> expect = {
        {{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}};
    const auto lines = all_lines(f);
    REQUIRE(lines.size() == 6);
    for (std::size_t k = 0; k < 6; ++k) {
      CHECK(lines[k].slope == static_cast<long long>(k / 2));
      CHECK(lines[k].intercept == static_cast<long long>(k % 2));
      std::set<std::pair<long long, long long>> got;
      for (const auto& pt : line_points(f, lines[k])) got.insert({pt.x.code(), pt.y.code()});
      CHECK(got == expect[k]);
    }
  }

  TEST_CASE("affine plane counts") {
    for (auto [p, n] : kSmall) {
      const auto f = GaloisField::make(p, n);
      const long long q = f.order();
      const auto lines = all_lines(f);
      CHECK(static_cast<long long>(lines.size()) == q * q + q);
      std::map<std::pair<long long, long long>, int> incidence;
      for (long long a = 0; a <= q; ++a) {
        std::set<std::pair<long long, long long>> covered;
        for (long long g = 0; g < q; ++g) {
          const auto pts = line_points(f, {a, g});
          std::set<std::pair<long long, long long>> s;
          for (const auto& pt : pts) s.insert({pt.x.code(), pt.y.code()});
          CHECK(static_cast<long long>(s.size()) == q);
          for (const auto& e : s) {
            CHECK(covered.insert(e).second);
            incidence[e]++;
          }
        }
        CHECK(static_cast<long long>(covered.size()) == q * q);
      }
      for (const auto& [pt, count] : incidence) CHECK(count == q + 1);
    }
  }

  TEST_CASE("index equation lookup") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
      const PhaseSpace space(p, n);
      for (const auto& w : space.points()) {
        if (w.is_zero()) {
          CHECK_THROWS_AS(space.decompose(w), ValidationError);
          continue;
        }
        const auto dec = space.decompose(w);
        IndexVector sum = IndexVector::zero(p, n);
        for (int r = 0; r < n; ++r) sum = sum + space.generators(dec.alpha).gens[r] * dec.b[r];
        CHECK(sum == w);
      }
    }
  }
}
