// Copyright 2026 The qpl Authors
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

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpl {

using Integer = boost::multiprecision::cpp_int;

/// Factor count of a q-product; std::nullopt stands for an infinite product.
using Count = std::optional<int>;
inline constexpr Count kInfinite = std::nullopt;

/// Power series in q modulo q^{N+1} with exact integer coefficients.
class QSeries {
 public:
  explicit QSeries(int trunc = 0) : coeffs_(checked_size(trunc)) {}

  /// Coefficients past q^N are dropped; missing ones are zero.
  QSeries(int trunc, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(trunc));
  }

  static QSeries one(int trunc) { return monomial(trunc, 0); }

  /// c * q^e, or zero when e > N.
  static QSeries monomial(int trunc, int exponent, const Integer& c = 1) {
    if (exponent < 0) throw std::invalid_argument("QSeries: negative exponent");
    QSeries s(trunc);
    if (exponent <= trunc) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
    return s;
  }

  int trunc() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  const Integer& operator[](int e) const { return coeffs_.at(static_cast<std::size_t>(e)); }
  Integer& operator[](int e) { return coeffs_.at(static_cast<std::size_t>(e)); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.is_zero(); });
  }

  /// Exponent of the lowest nonzero coefficient.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return std::nullopt;
  }

  /// Exponent of the highest nonzero coefficient.
  std::optional<int> degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return std::nullopt;
  }

  /// Same coefficients under a different truncation. Growing is exact only
  /// when the series is a polynomial of degree <= the old truncation.
  QSeries resized(int trunc) const { return QSeries(trunc, coeffs_); }

  /// Multiplies by q^e, dropping what falls past q^N.
  QSeries shifted(int e) const {
    if (e < 0) throw std::invalid_argument("QSeries: negative shift");
    QSeries out(trunc());
    for (int i = 0; i + e <= trunc(); ++i) out.coeffs_[static_cast<std::size_t>(i + e)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
  }

  QSeries& operator+=(const QSeries& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  QSeries& operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend QSeries operator*(QSeries a, const Integer& c) { return a *= c; }
  friend QSeries operator*(const Integer& c, QSeries a) { return a *= c; }

  /// Schoolbook convolution truncated at q^N.
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.require_same(b);
    const int n = a.trunc();
    QSeries out(n);
    for (int i = 0; i <= n; ++i) {
      const Integer& x = a.coeffs_[static_cast<std::size_t>(i)];
      if (x.is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        const Integer& y = b.coeffs_[static_cast<std::size_t>(j)];
        if (!y.is_zero()) out.coeffs_[static_cast<std::size_t>(i + j)] += x * y;
      }
    }
    return out;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  static std::size_t checked_size(int trunc) {
    if (trunc < 0) throw std::invalid_argument("QSeries: negative truncation");
    return static_cast<std::size_t>(trunc) + 1;
  }

  void require_same(const QSeries& o) const {
    if (o.trunc() != trunc())
      throw std::invalid_argument("QSeries: truncation mismatch (" + std::to_string(trunc()) + " vs " +
                                  std::to_string(o.trunc()) + ")");
  }

  std::vector<Integer> coeffs_;
};

/// Inverse modulo q^{N+1}; the constant term must be +1 or -1.
inline QSeries reciprocal(const QSeries& a) {
  const Integer& c0 = a[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("reciprocal: constant term is not a unit");
  const int n = a.trunc();
  QSeries b(n);
  b[0] = c0;  // 1/c0 == c0 for units
  for (int k = 1; k <= n; ++k) {
    Integer acc = 0;
    for (int i = 1; i <= k; ++i)
      if (!a[i].is_zero()) acc += a[i] * b[k - i];
    b[k] = -acc * c0;
  }
  return b;
}

/// Debug dump: one "exponent<TAB>coefficient" line per coefficient.
inline void dump(std::ostream& os, const QSeries& s) {
  for (int e = 0; e <= s.trunc(); ++e) os << e << '\t' << s[e] << '\n';
}

/// prod_{i < count} (1 - coef * q^{offset + step*i}) mod q^{N+1}. Infinite
/// products stop once the factor is 1 modulo q^{N+1}.
inline QSeries q_pochhammer(const Integer& coef, int offset, Count count, int trunc, int step = 1) {
  if (offset < 0 || step < 1) throw std::invalid_argument("q_pochhammer: bad offset/step");
  if (count && *count < 0) throw std::invalid_argument("q_pochhammer: negative count");
  QSeries out = QSeries::one(trunc);
  for (int i = 0; !count || i < *count; ++i) {
    const long e = offset + static_cast<long>(step) * i;
    if (e > trunc) break;  // this and later factors are 1 mod q^{N+1}
    // Multiply in place by (1 - coef q^e), high to low.
    const int ei = static_cast<int>(e);
    if (ei == 0) {
      out *= Integer(1 - coef);
      continue;
    }
    for (int d = trunc; d >= ei; --d)
      if (!out[d - ei].is_zero()) out[d] -= coef * out[d - ei];
  }
  return out;
}

/// omega(t) = 1 + sum_{i=1}^r 2 q^{it}.
inline QSeries omega(int t, int r, int trunc) {
  if (t < 1 || r < 1) throw std::invalid_argument("omega: t and r must be positive");
  QSeries s = QSeries::one(trunc);
  for (long i = 1; i <= r && i * t <= trunc; ++i) s[static_cast<int>(i * t)] += 2;
  return s;
}

/// omega(m; count) = prod_{i < count} omega(m + i).
inline QSeries omega_product(int m, Count count, int r, int trunc) {
  if (m < 1) throw std::invalid_argument("omega_product: m must be positive");
  if (count && *count < 0) throw std::invalid_argument("omega_product: negative count");
  QSeries out = QSeries::one(trunc);
  for (int i = 0; !count || i < *count; ++i) {
    const int t = m + i;
    if (t > trunc) break;  // remaining factors are 1 mod q^{N+1}
    out *= omega(t, r, trunc);
  }
  return out;
}

/// Gaussian binomial [A, B] in base q^k as an exact polynomial (truncation =
/// its degree k*B*(A-B)). Zero unless A >= B >= 0.
inline QSeries gaussian_binomial(int a, int b, int k) {
  if (k < 1) throw std::invalid_argument("gaussian_binomial: k must be positive");
  if (b < 0 || a < b) return QSeries(0);
  const int deg = k * b * (a - b);
  const QSeries num = q_pochhammer(1, k, a, deg, k);
  const QSeries den = q_pochhammer(1, k, b, deg, k) * q_pochhammer(1, k, a - b, deg, k);
  return num * reciprocal(den);
}

/// Gaussian binomial truncated (or zero-extended) to q^N.
inline QSeries gaussian_binomial(int a, int b, int k, int trunc) {
  if (k < 1) throw std::invalid_argument("gaussian_binomial: k must be positive");
  if (b < 0 || a < b) return QSeries(trunc);
  const int n = std::min(trunc, k * b * (a - b));
  const QSeries num = q_pochhammer(1, k, a, n, k);
  const QSeries den = q_pochhammer(1, k, b, n, k) * q_pochhammer(1, k, a - b, n, k);
  return (num * reciprocal(den)).resized(trunc);
}

/// Polynomial in z with QSeries coefficients sharing one truncation. The
/// z-degree is exact; zero coefficients are never stored.
class ZQPoly {
 public:
  explicit ZQPoly(int trunc = 0) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("ZQPoly: negative truncation");
  }

  /// Series placed at z^0.
  explicit ZQPoly(const QSeries& s) : trunc_(s.trunc()) { set(0, s); }

  /// c * z^d * q^e.
  static ZQPoly monomial(int trunc, int zdeg, int qexp, const Integer& c = 1) {
    ZQPoly p(trunc);
    p.set(zdeg, QSeries::monomial(trunc, qexp, c));
    return p;
  }

  static ZQPoly one(int trunc) { return monomial(trunc, 0, 0); }

  int trunc() const noexcept { return trunc_; }
  const std::map<int, QSeries>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Highest z-degree present; -1 for the zero polynomial.
  int z_degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  QSeries coefficient(int zdeg) const {
    auto it = terms_.find(zdeg);
    return it == terms_.end() ? QSeries(trunc_) : it->second;
  }

  Integer coefficient(int zdeg, int qexp) const {
    auto it = terms_.find(zdeg);
    return it == terms_.end() ? Integer(0) : it->second[qexp];
  }

  /// Replaces the z^d coefficient (erasing it if zero).
  void set(int zdeg, QSeries s) {
    if (zdeg < 0) throw std::invalid_argument("ZQPoly: negative z-degree");
    if (s.trunc() != trunc_) throw std::invalid_argument("ZQPoly: truncation mismatch");
    if (s.is_zero())
      terms_.erase(zdeg);
    else
      terms_.insert_or_assign(zdeg, std::move(s));
  }

  /// Adds c to the coefficient of z^d q^e.
  void add_to(int zdeg, int qexp, const Integer& c) {
    if (qexp > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(zdeg, trunc_);
    it->second[qexp] += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Value at z = 1.
  QSeries at_one() const {
    QSeries s(trunc_);
    for (const auto& [d, c] : terms_) s += c;
    return s;
  }

  /// sum_d d * [z^d]: the z-derivative at z = 1.
  QSeries z_moment() const {
    QSeries s(trunc_);
    for (const auto& [d, c] : terms_) s += c * Integer(d);
    return s;
  }

  ZQPoly shifted_q(int e) const {
    ZQPoly out(trunc_);
    for (const auto& [d, c] : terms_) out.set(d, c.shifted(e));
    return out;
  }

  ZQPoly shifted_z(int by) const {
    ZQPoly out(trunc_);
    for (const auto& [d, c] : terms_) out.set(d + by, c);
    return out;
  }

  /// Divides by z; the z^0 coefficient must be zero.
  ZQPoly divided_by_z() const {
    if (terms_.count(0)) throw std::domain_error("ZQPoly: z^0 term present, cannot divide by z");
    ZQPoly out(trunc_);
    for (const auto& [d, c] : terms_) out.set(d - 1, c);
    return out;
  }

  /// Drops z-degrees above zmax.
  ZQPoly truncated_z(int zmax) const {
    ZQPoly out(trunc_);
    for (const auto& [d, c] : terms_)
      if (d <= zmax) out.set(d, c);
    return out;
  }

  ZQPoly resized(int trunc) const {
    ZQPoly out(trunc);
    for (const auto& [d, c] : terms_) out.set(d, c.resized(trunc));
    return out;
  }

  ZQPoly& operator+=(const ZQPoly& o) {
    require_same(o);
    for (const auto& [d, c] : o.terms_) set(d, coefficient(d) + c);
    return *this;
  }
  ZQPoly& operator-=(const ZQPoly& o) {
    require_same(o);
    for (const auto& [d, c] : o.terms_) set(d, coefficient(d) - c);
    return *this;
  }
  ZQPoly& operator*=(const Integer& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= k;
    return *this;
  }
  ZQPoly& operator*=(const QSeries& s) {
    ZQPoly out(trunc_);
    for (const auto& [d, c] : terms_) out.set(d, c * s);
    return *this = std::move(out);
  }
  ZQPoly& operator*=(const ZQPoly& o) { return *this = *this * o; }

  friend ZQPoly operator+(ZQPoly a, const ZQPoly& b) { return a += b; }
  friend ZQPoly operator-(ZQPoly a, const ZQPoly& b) { return a -= b; }
  friend ZQPoly operator*(ZQPoly a, const Integer& k) { return a *= k; }
  friend ZQPoly operator*(ZQPoly a, const QSeries& s) { return a *= s; }
  friend ZQPoly operator*(const QSeries& s, ZQPoly a) { return a *= s; }

  /// z-degrees add exactly; q is truncated.
  friend ZQPoly operator*(const ZQPoly& a, const ZQPoly& b) {
    a.require_same(b);
    std::map<int, QSeries> acc;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) {
        auto [it, inserted] = acc.try_emplace(da + db, a.trunc_);
        it->second += ca * cb;
      }
    ZQPoly out(a.trunc_);
    for (auto& [d, c] : acc) out.set(d, std::move(c));
    return out;
  }

  friend bool operator==(const ZQPoly&, const ZQPoly&) = default;

 private:
  void require_same(const ZQPoly& o) const {
    if (o.trunc_ != trunc_)
      throw std::invalid_argument("ZQPoly: truncation mismatch (" + std::to_string(trunc_) + " vs " +
                                  std::to_string(o.trunc_) + ")");
  }

  int trunc_;
  std::map<int, QSeries> terms_;
};

/// Inverse of a ZQPoly whose z^0 coefficient is a unit series and whose other
/// coefficients all vanish at q^0 (so the inverse has bounded z-degree).
inline ZQPoly reciprocal(const ZQPoly& a) {
  const int n = a.trunc();
  const QSeries base_inv = reciprocal(a.coefficient(0));
  ZQPoly rest(n);
  for (const auto& [d, c] : a.terms()) {
    if (d == 0) continue;
    if (!c[0].is_zero()) throw std::domain_error("reciprocal: z-terms must vanish at q^0");
    rest.set(d, c);
  }
  // 1/(a0 + R) = a0^{-1} * sum_i (-R a0^{-1})^i; each power gains a factor q.
  const ZQPoly step = rest * (-base_inv);
  ZQPoly term(base_inv);
  ZQPoly out(n);
  while (!term.is_zero()) {
    out += term;
    term = term * step;
  }
  return out;
}

/// prod_{i < count} (1 - coef * z * q^{offset + step*i}).
inline ZQPoly z_pochhammer(const Integer& coef, int offset, Count count, int trunc, int step = 1) {
  if (offset < 0 || step < 1) throw std::invalid_argument("z_pochhammer: bad offset/step");
  if (count && *count < 0) throw std::invalid_argument("z_pochhammer: negative count");
  ZQPoly out = ZQPoly::one(trunc);
  for (int i = 0; !count || i < *count; ++i) {
    const long e = offset + static_cast<long>(step) * i;
    if (e > trunc) break;
    ZQPoly factor = ZQPoly::one(trunc);
    factor.add_to(1, static_cast<int>(e), -coef);
    out *= factor;
  }
  return out;
}

inline void dump(std::ostream& os, const ZQPoly& p) {
  if (p.terms().size() <= 1 && (p.is_zero() || p.terms().begin()->first == 0)) {
    dump(os, p.coefficient(0));
    return;
  }
  for (const auto& [d, c] : p.terms()) {
    os << "# z^" << d << '\n';
    dump(os, c);
  }
}

}  // namespace qpl
