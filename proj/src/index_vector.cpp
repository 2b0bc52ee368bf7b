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

#include "finphase/index_vector.hpp"

#include <algorithm>
#include <sstream>

#include "finphase/finite_field.hpp"

namespace finphase {

IndexVector::IndexVector(int modulus, std::vector<int> comps) : m_(modulus), c_(std::move(comps)) {
  if (m_ < 2) throw ValidationError("index modulus must be at least 2");
  if (c_.empty() || c_.size() % 2 != 0) {
    throw ValidationError("index vector needs a positive even number of components");
  }
  for (auto& v : c_) v = mod_p(v, m_);
}

IndexVector IndexVector::zero(int modulus, int n) {
  return IndexVector(modulus, std::vector<int>(2 * n, 0));
}

IndexVector IndexVector::from_code(int modulus, int n, long long code) {
  std::vector<int> c(2 * n);
  for (int i = 2 * n - 1; i >= 0; --i, code /= modulus) c[i] = static_cast<int>(code % modulus);
  return IndexVector(modulus, std::move(c));
}

IndexVector IndexVector::from_blocks(int modulus, const std::vector<std::pair<int, int>>& blocks) {
  std::vector<int> c;
  for (auto [x, y] : blocks) {
    c.push_back(x);
    c.push_back(y);
  }
  return IndexVector(modulus, std::move(c));
}

IndexVector IndexVector::block(int j) const { return IndexVector(m_, {x(j), y(j)}); }

long long IndexVector::code() const {
  long long code = 0;
  for (int v : c_) code = code * m_ + v;
  return code;
}

bool IndexVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

void IndexVector::require_same(const IndexVector& o) const {
  if (m_ != o.m_ || c_.size() != o.c_.size()) throw ValidationError("index vector shape mismatch");
}

IndexVector IndexVector::operator+(const IndexVector& o) const {
  require_same(o);
  std::vector<int> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + o.c_[i];
  return IndexVector(m_, std::move(c));
}

IndexVector IndexVector::operator-(const IndexVector& o) const {
  require_same(o);
  std::vector<int> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] - o.c_[i];
  return IndexVector(m_, std::move(c));
}

IndexVector IndexVector::operator-() const {
  std::vector<int> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return IndexVector(m_, std::move(c));
}

IndexVector IndexVector::operator*(long long s) const {
  std::vector<int> c(c_.size());
  const int r = mod_p(s, m_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(static_cast<long long>(c_[i]) * r, m_);
  return IndexVector(m_, std::move(c));
}

std::string IndexVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  return os.str();
}

int vector_symplectic(const IndexVector& u, const IndexVector& v) {
  if (u.modulus() != v.modulus() || u.size() != v.size()) {
    throw ValidationError("index vector shape mismatch");
  }
  long long s = 0;
  for (int j = 0; j < u.n(); ++j) {
    s += static_cast<long long>(u.y(j)) * v.x(j) - static_cast<long long>(u.x(j)) * v.y(j);
  }
  return mod_p(s, u.modulus());
}

int beta_form(const IndexVector& u, const IndexVector& v) {
  if (u.modulus() != v.modulus() || u.size() != v.size()) {
    throw ValidationError("index vector shape mismatch");
  }
  long long s = 0;
  for (int j = 0; j < u.n(); ++j) s += static_cast<long long>(u.y(j)) * v.x(j);
  return mod_p(s, u.modulus());
}

int self_form(const IndexVector& u) {
  long long s = 0;
  for (int j = 0; j < u.n(); ++j) s += static_cast<long long>(u.x(j)) * u.y(j);
  return mod_p(s, u.modulus());
}

int count_11_blocks(const IndexVector& u) {
  int c = 0;
  for (int j = 0; j < u.n(); ++j) c += (u.x(j) == 1 && u.y(j) == 1);
  return c;
}

IndexVector direct_sum(const IndexVector& a, const IndexVector& b) {
  if (a.modulus() != b.modulus()) throw ValidationError("index vector modulus mismatch");
  std::vector<int> c = a.comps();
  c.insert(c.end(), b.comps().begin(), b.comps().end());
  return IndexVector(a.modulus(), std::move(c));
}

long long num_points(int modulus, int n) { return checked_pow(modulus, 2 * n); }

std::vector<IndexVector> all_index_vectors(int modulus, int n) {
  const long long count = num_points(modulus, n);
  std::vector<IndexVector> out;
  out.reserve(count);
  for (long long c = 0; c < count; ++c) out.push_back(IndexVector::from_code(modulus, n, c));
  return out;
}

}  // namespace finphase
