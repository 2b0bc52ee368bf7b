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

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "finphase/types.hpp"

namespace finphase {

bool is_prime(long long n);

// Representative of a in {0, ..., p-1}.
int mod_p(long long a, int p);

int prime_inverse(int a, int p);

bool is_quadratic_nonresidue(int D, int p);

int smallest_nonresidue(int p);

// Exact integer power; throws ValidationError when the result exceeds kDeskLimit.
long long checked_pow(int base, int exp);

// Coefficients c_0..c_{n-1} of the monic polynomial x^n + c_{n-1}x^{n-1} + ... + c_0.
bool is_irreducible(int p, const std::vector<int>& coeffs);

std::vector<int> default_polynomial(int p, int n);

class FieldElement;

// Handle to GF(p^n). Copies share the same immutable tables.
class GaloisField {
 public:
  static GaloisField make(int p, int n, std::optional<std::vector<int>> poly = std::nullopt);

  int p() const;
  int n() const;
  long long order() const;
  const std::vector<int>& poly() const;

  FieldElement element(std::vector<int> coeffs) const;
  FieldElement from_code(long long code) const;
  FieldElement scalar(long long c) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement lambda_power(int k) const;
  std::vector<FieldElement> elements() const;

  // tr(lambda^k) for any k >= 0.
  int trace_of_power(int k) const;
  // g_0..g_{n-1} with tr(lambda^j g_k) = delta(j,k).
  const std::vector<std::vector<int>>& dual_coeffs() const;

  bool operator==(const GaloisField& other) const;

 private:
  struct Data;
  explicit GaloisField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement(GaloisField field, std::vector<int> coeffs);

  const GaloisField& field() const { return field_; }
  const std::vector<int>& coeffs() const { return c_; }
  int operator[](int k) const { return c_[k]; }

  // Little-endian base-p code sum a_k p^k.
  long long code() const;
  bool is_zero() const;
  int trace() const;

  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator*(long long c) const;

  bool operator==(const FieldElement& o) const;

 private:
  void require_same(const FieldElement& o) const;

  GaloisField field_;
  std::vector<int> c_;
};

int trace(const FieldElement& a);

std::vector<FieldElement> dual_basis(const GaloisField& field);

}  // namespace finphase
