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

#include "finphase/finite_field.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace finphase {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

int mod_p(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int prime_inverse(int a, int p) {
  int r = mod_p(a, p);
  if (r == 0) throw NoInverseError("0 has no inverse mod " + std::to_string(p));
  // Extended Euclid.
  long long t = 0, new_t = 1, m = p, new_m = r;
  while (new_m != 0) {
    long long q = m / new_m;
    t = std::exchange(new_t, t - q * new_t);
    m = std::exchange(new_m, m - q * new_m);
  }
  return mod_p(t, p);
}

bool is_quadratic_nonresidue(int D, int p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (p == 2) throw UnsupportedError("no quadratic non-residue exists mod 2");
  int d = mod_p(D, p);
  if (d == 0) throw ValidationError("D must be nonzero mod p");
  for (long long x = 1; x < p; ++x) {
    if ((x * x) % p == d) return false;
  }
  return true;
}

int smallest_nonresidue(int p) {
  for (int D = 2; D < p; ++D) {
    if (is_quadratic_nonresidue(D, p)) return D;
  }
  throw InternalError("no non-residue found");
}

long long checked_pow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > kDeskLimit) {
      throw ValidationError(std::to_string(base) + "^" + std::to_string(exp) +
                            " exceeds the desk-scale bound 2^20");
    }
  }
  return r;
}

namespace {

using Poly = std::vector<int>;  // low degree first, not necessarily monic

// Remainder of f modulo the monic polynomial g.
Poly poly_rem(Poly f, const Poly& g, int p) {
  const int dg = static_cast<int>(g.size()) - 1;
  for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
    int lead = f[i];
    if (lead == 0) continue;
    for (int k = 0; k <= dg; ++k) {
      f[i - dg + k] = mod_p(f[i - dg + k] - static_cast<long long>(lead) * g[k], p);
    }
  }
  f.resize(std::max(dg, 0));
  return f;
}

Poly monic_from(const std::vector<int>& coeffs) {
  Poly f(coeffs.begin(), coeffs.end());
  f.push_back(1);
  return f;
}

// Multiply coefficient vectors and reduce modulo the defining polynomial.
std::vector<int> reduce_product(const std::vector<int>& a, const std::vector<int>& b,
                                const std::vector<int>& poly, int p) {
  const int n = static_cast<int>(poly.size());
  std::vector<long long> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
  }
  for (auto& v : prod) v = mod_p(v, p);
  // lambda^n = -sum c_k lambda^k
  for (int i = 2 * n - 2; i >= n; --i) {
    long long lead = prod[i];
    if (lead == 0) continue;
    prod[i] = 0;
    for (int k = 0; k < n; ++k) prod[i - n + k] = mod_p(prod[i - n + k] - lead * poly[k], p);
  }
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[k] = static_cast<int>(prod[k]);
  return out;
}

std::vector<std::vector<int>> invert_mod_p(std::vector<std::vector<int>> a, int p) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw InternalError("singular trace form");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    int s = prime_inverse(a[col][col], p);
    for (int k = 0; k < n; ++k) {
      a[col][k] = mod_p(static_cast<long long>(a[col][k]) * s, p);
      inv[col][k] = mod_p(static_cast<long long>(inv[col][k]) * s, p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      long long f = a[r][col];
      for (int k = 0; k < n; ++k) {
        a[r][k] = mod_p(a[r][k] - f * a[col][k], p);
        inv[r][k] = mod_p(inv[r][k] - f * inv[col][k], p);
      }
    }
  }
  return inv;
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  if (n < 1) throw ValidationError("polynomial degree must be at least 1");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  checked_pow(p, n);
  for (int c : coeffs) {
    if (c < 0 || c >= p) throw ValidationError("polynomial coefficients must lie in Z_p");
  }
  const Poly f = monic_from(coeffs);
  for (int deg = 1; deg <= n / 2; ++deg) {
    const long long count = checked_pow(p, deg);
    for (long long code = 0; code < count; ++code) {
      Poly g(deg + 1, 0);
      long long c = code;
      for (int k = 0; k < deg; ++k, c /= p) g[k] = static_cast<int>(c % p);
      g[deg] = 1;
      Poly r = poly_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; })) return false;
    }
  }
  return true;
}

std::vector<int> default_polynomial(int p, int n) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (n < 1) throw ValidationError("degree must be at least 1");
  const long long count = checked_pow(p, n);
  if (n == 2 && p == 2) return {1, 1};
  if (n == 2) return {p - smallest_nonresidue(p), 0};
  for (long long code = 0; code < count; ++code) {
    std::vector<int> c(n);
    long long r = code;
    for (int k = 0; k < n; ++k, r /= p) c[k] = static_cast<int>(r % p);
    if (is_irreducible(p, c)) return c;
  }
  throw InternalError("no irreducible polynomial found");
}

struct GaloisField::Data {
  int p = 0;
  int n = 0;
  long long q = 0;
  std::vector<int> poly;
  std::vector<int> power_traces;  // tr(lambda^k), k < n
  std::vector<std::vector<int>> dual;
};

GaloisField GaloisField::make(int p, int n, std::optional<std::vector<int>> poly) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (n < 1) throw ValidationError("degree must be at least 1");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->n = n;
  d->q = checked_pow(p, n);
  if (poly) {
    if (static_cast<int>(poly->size()) != n) {
      throw ValidationError("polynomial must have exactly n coefficients");
    }
    std::vector<int> c(poly->size());
    std::transform(poly->begin(), poly->end(), c.begin(), [p](int v) { return mod_p(v, p); });
    if (!is_irreducible(p, c)) throw ValidationError("polynomial is reducible over Z_p");
    d->poly = std::move(c);
  } else {
    d->poly = default_polynomial(p, n);
  }
  // Newton power sums of the roots.
  const auto& c = d->poly;
  d->power_traces.assign(n, 0);
  d->power_traces[0] = mod_p(n, p);
  for (int k = 1; k < n; ++k) {
    long long s = -static_cast<long long>(k) * c[n - k];
    for (int i = 1; i <= k - 1; ++i) s -= static_cast<long long>(c[n - i]) * d->power_traces[k - i];
    d->power_traces[k] = mod_p(s, p);
  }
  GaloisField field(d);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) t[j][k] = field.trace_of_power(j + k);
  }
  auto g = invert_mod_p(t, p);
  d->dual.assign(n, std::vector<int>(n));
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) d->dual[k][m] = g[m][k];
  }
  return field;
}

int GaloisField::p() const { return d_->p; }
int GaloisField::n() const { return d_->n; }
long long GaloisField::order() const { return d_->q; }
const std::vector<int>& GaloisField::poly() const { return d_->poly; }
const std::vector<std::vector<int>>& GaloisField::dual_coeffs() const { return d_->dual; }

FieldElement GaloisField::element(std::vector<int> coeffs) const {
  return FieldElement(*this, std::move(coeffs));
}

FieldElement GaloisField::from_code(long long code) const {
  if (code < 0 || code >= d_->q) throw ValidationError("field element code out of range");
  std::vector<int> c(d_->n);
  for (int k = 0; k < d_->n; ++k, code /= d_->p) c[k] = static_cast<int>(code % d_->p);
  return FieldElement(*this, std::move(c));
}

FieldElement GaloisField::scalar(long long c) const {
  std::vector<int> v(d_->n, 0);
  v[0] = mod_p(c, d_->p);
  return FieldElement(*this, std::move(v));
}

FieldElement GaloisField::zero() const { return scalar(0); }
FieldElement GaloisField::one() const { return scalar(1); }

FieldElement GaloisField::lambda_power(int k) const {
  std::vector<int> base(d_->n, 0);
  if (d_->n == 1) {
    base[0] = mod_p(-d_->poly[0], d_->p);
  } else {
    base[1] = 1;
  }
  return FieldElement(*this, std::move(base)).pow(k);
}

std::vector<FieldElement> GaloisField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(d_->q);
  for (long long c = 0; c < d_->q; ++c) out.push_back(from_code(c));
  return out;
}

int GaloisField::trace_of_power(int k) const {
  if (k < 0) throw ValidationError("negative power");
  if (k < d_->n) return d_->power_traces[k];
  return lambda_power(k).trace();
}

bool GaloisField::operator==(const GaloisField& other) const {
  if (d_ == other.d_) return true;
  return d_->p == other.d_->p && d_->n == other.d_->n && d_->poly == other.d_->poly;
}

FieldElement::FieldElement(GaloisField field, std::vector<int> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != field_.n()) {
    throw ValidationError("element must have exactly n coefficients");
  }
  for (auto& v : c_) v = mod_p(v, field_.p());
}

long long FieldElement::code() const {
  long long code = 0;
  for (int k = field_.n() - 1; k >= 0; --k) code = code * field_.p() + c_[k];
  return code;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

int FieldElement::trace() const {
  const auto& t = field_.d_->power_traces;
  long long s = 0;
  for (int k = 0; k < field_.n(); ++k) s += static_cast<long long>(c_[k]) * t[k];
  return mod_p(s, field_.p());
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw NoInverseError("zero has no multiplicative inverse");
  return pow(field_.order() - 2);
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw ValidationError("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  std::vector<int> c(c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = c_[k] + o.c_[k];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  std::vector<int> c(c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = c_[k] - o.c_[k];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<int> c(c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = -c_[k];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return FieldElement(field_, reduce_product(c_, o.c_, field_.poly(), field_.p()));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator*(long long c) const {
  std::vector<int> v(c_.size());
  const int s = mod_p(c, field_.p());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = mod_p(static_cast<long long>(c_[k]) * s, field_.p());
  return FieldElement(field_, std::move(v));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && c_ == o.c_;
}

int trace(const FieldElement& a) { return a.trace(); }

std::vector<FieldElement> dual_basis(const GaloisField& field) {
  std::vector<FieldElement> g;
  for (const auto& c : field.dual_coeffs()) g.push_back(field.element(c));
  return g;
}

}  // namespace finphase
