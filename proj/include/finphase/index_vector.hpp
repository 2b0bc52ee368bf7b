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

#include <compare>
#include <string>
#include <vector>

#include "finphase/types.hpp"

namespace finphase {

// A point of V_{2n}(d) stored as components [x0, y0, x1, y1, ...] reduced mod d.
class IndexVector {
 public:
  IndexVector() = default;
  IndexVector(int modulus, std::vector<int> comps);

  static IndexVector zero(int modulus, int n);
  // Inverse of code(): component i carries weight modulus^(2n-1-i).
  static IndexVector from_code(int modulus, int n, long long code);
  static IndexVector from_blocks(int modulus, const std::vector<std::pair<int, int>>& blocks);

  int modulus() const { return m_; }
  int n() const { return static_cast<int>(c_.size()) / 2; }
  int size() const { return static_cast<int>(c_.size()); }
  int x(int j) const { return c_[2 * j]; }
  int y(int j) const { return c_[2 * j + 1]; }
  int operator[](int i) const { return c_[i]; }
  const std::vector<int>& comps() const { return c_; }

  IndexVector block(int j) const;
  long long code() const;
  bool is_zero() const;

  IndexVector operator+(const IndexVector& o) const;
  IndexVector operator-(const IndexVector& o) const;
  IndexVector operator-() const;
  IndexVector operator*(long long c) const;

  bool operator==(const IndexVector& o) const = default;
  auto operator<=>(const IndexVector& o) const = default;

  std::string to_string() const;

 private:
  void require_same(const IndexVector& o) const;

  int m_ = 0;
  std::vector<int> c_;
};

// u o v = sum_j (y^u_j x^v_j - x^u_j y^v_j)
int vector_symplectic(const IndexVector& u, const IndexVector& v);

// sum_j y^u_j x^v_j, the exponent in S_u S_v = eta^beta S_{u+v}.
int beta_form(const IndexVector& u, const IndexVector& v);

// sum_j x_j y_j (mod d).
int self_form(const IndexVector& u);

// Number of blocks equal to (1,1).
int count_11_blocks(const IndexVector& u);

IndexVector direct_sum(const IndexVector& a, const IndexVector& b);

long long num_points(int modulus, int n);

std::vector<IndexVector> all_index_vectors(int modulus, int n);

}  // namespace finphase
