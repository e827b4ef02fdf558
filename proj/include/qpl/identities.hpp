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
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpl/classes.hpp"
#include "qpl/enumeration.hpp"
#include "qpl/overpartition.hpp"
#include "qpl/separable.hpp"
#include "qpl/series.hpp"

namespace qpl {

// Catalog of generating-function identities.
//
//   I1   sigma_1 mes closed form (sum over k of 2^k q^{k(k+1)/2} / (-q;q)_k)
//   I2   sigma_r mes closed form
//   I3   sigma_r maes closed form
//   I4   identity obtained by comparing I1 with I2 at r = 1
//   I5   sum over largest repeating size j of all overpartitions
//   I6   same sum restricted to j <= n - 1
//   I7   bivariate z^{mes} generator
//   I8   overpartitions with a positive repeating size
//   I9   same with smallest positive repeating size <= m
//   I10  bivariate z^{maes} generator (maes > 0)
//   I11  L_k generating function
//   I12  F_k generating function
//   I13  GL_k(k(m-1)+s, j) + GL_k(k(m-1)+s, j-bar) closed form
//   I14  GF_k(k(m-1)+s, j) + GF_k(k(m-1)+s, j-bar) closed form
//   I15  Euler: sum z^j q^{j(j-1)/2} / (q;q)_j = (-z;q)_inf
//   I16  q-binomial recurrence [A,B] = [A-1,B-1] + q^{kB} [A-1,B]
//   I17  sum_{m>=j} q^{k(m-j)} [m-1, j-1]_k = 1 / (q^k;q^k)_j
//   I18  BL'/BL'' generating function = (1 + 1/z)((-zq^s;q^k)_inf - 1)
//   I19  BF''  = ((-zq^s;q^k)_inf - 1)/z, BF' = (-zq^k;q^k)_inf - 1
enum class IdentityId { I1 = 1, I2, I3, I4, I5, I6, I7, I8, I9, I10, I11, I12, I13, I14, I15, I16, I17, I18, I19 };

inline constexpr std::array<IdentityId, 19> kAllIdentities = {
    IdentityId::I1,  IdentityId::I2,  IdentityId::I3,  IdentityId::I4,  IdentityId::I5,
    IdentityId::I6,  IdentityId::I7,  IdentityId::I8,  IdentityId::I9,  IdentityId::I10,
    IdentityId::I11, IdentityId::I12, IdentityId::I13, IdentityId::I14, IdentityId::I15,
    IdentityId::I16, IdentityId::I17, IdentityId::I18, IdentityId::I19};

inline std::string to_string(IdentityId id) { return "I" + std::to_string(static_cast<int>(id)); }

inline std::optional<IdentityId> parse_identity_id(std::string_view text) {
  for (IdentityId id : kAllIdentities)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

/// Named integer parameters (r, k, n, m, s, j, A, zmax, prime).
using Params = std::map<std::string, int>;

/// Reading of the lowercase w(n) factor in the sigma_r maes closed form.
enum class MaesFactor {
  Omega,       // w(n) = omega(n)
  OmegaFirst,  // w(n) = 1 + 2q^n
};

/// Reading of the bracket P - omega(1;n-1)(-q^n;q)_inf/(q^n;q)_inf + omega(1;inf)
/// used by I2, I4 and I6.
enum class LargestRepeatTail {
  AsPrinted,
  Corrected,  // (-q;q)_{n-1}/(q;q)_{n-1} * omega(n;inf)
};

struct Readings {
  MaesFactor maes_factor = MaesFactor::Omega;
  LargestRepeatTail repeat_tail = LargestRepeatTail::AsPrinted;
};

inline constexpr int kBruteForceGuard = 40;
inline constexpr int kSeriesGuard = 400;

struct ParamSpec {
  std::string name;
  int min = 0;
  int max = 0;
  int default_value = 0;
};

struct IdentityInfo {
  IdentityId id;
  std::string_view summary;
  std::vector<ParamSpec> params;
  bool has_brute_force = false;
  bool bivariate = false;
  int max_trunc = kSeriesGuard;
};

inline IdentityInfo identity_info(IdentityId id) {
  const ParamSpec r{"r", 1, 12, 2};
  const ParamSpec k{"k", 1, 12, 2};
  const ParamSpec s{"s", 1, 12, 1};  // further limited to <= k
  switch (id) {
    case IdentityId::I1: return {id, "sigma_1 mes generating function", {}, true, false, kBruteForceGuard};
    case IdentityId::I2: return {id, "sigma_r mes generating function", {r}, true, false, kBruteForceGuard};
    case IdentityId::I3: return {id, "sigma_r maes generating function", {r}, true, false, kBruteForceGuard};
    case IdentityId::I4: return {id, "sigma_1 mes bridge identity", {}, true, false, kBruteForceGuard};
    case IdentityId::I5: return {id, "overpartitions by largest repeating size", {r}, true, false, kBruteForceGuard};
    case IdentityId::I6:
      return {id, "largest repeating size <= n-1", {r, {"n", 1, 400, 3}}, true, false, kBruteForceGuard};
    case IdentityId::I7: return {id, "bivariate mes generator", {r}, true, true, kBruteForceGuard};
    case IdentityId::I8: return {id, "overpartitions with a positive repeating size", {r}, true, false, kBruteForceGuard};
    case IdentityId::I9:
      return {id, "smallest positive repeating size <= m", {r, {"m", 1, 400, 3}}, true, false, kBruteForceGuard};
    case IdentityId::I10: return {id, "bivariate maes generator", {r}, true, true, kBruteForceGuard};
    case IdentityId::I11: return {id, "L_k generating function", {k}, true, true, kBruteForceGuard};
    case IdentityId::I12: return {id, "F_k generating function", {k}, true, true, kBruteForceGuard};
    case IdentityId::I13:
      return {id, "GL_k basis polynomials", {k, {"m", 1, 40, 2}, s, {"j", 1, 40, 1}}, true, true, kSeriesGuard};
    case IdentityId::I14:
      return {id, "GF_k basis polynomials", {k, {"m", 1, 40, 2}, s, {"j", 1, 40, 1}}, true, true, kSeriesGuard};
    case IdentityId::I15: return {id, "Euler identity", {{"zmax", 0, 400, 12}}, false, true, kSeriesGuard};
    case IdentityId::I16: return {id, "q-binomial recurrence", {k, {"A", 1, 40, 12}}, false, true, kSeriesGuard};
    case IdentityId::I17: return {id, "sum of q-binomials = 1/(q^k;q^k)_j", {k, {"j", 1, 40, 3}}, false, false, kSeriesGuard};
    case IdentityId::I18: return {id, "BL' and BL'' generating function", {k, s}, true, true, kBruteForceGuard};
    case IdentityId::I19:
      return {id, "BF' and BF'' generating functions", {k, s, {"prime", 0, 1, 0}}, true, true, kBruteForceGuard};
  }
  throw std::invalid_argument("unknown identity");
}

/// Fills defaults and checks ranges; throws std::invalid_argument.
inline Params normalize_params(IdentityId id, const Params& given) {
  const IdentityInfo info = identity_info(id);
  Params out;
  for (const auto& [name, value] : given) {
    const bool known = std::any_of(info.params.begin(), info.params.end(), [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw std::invalid_argument(to_string(id) + ": unknown parameter '" + name + "'");
  }
  for (const ParamSpec& p : info.params) {
    auto it = given.find(p.name);
    const int v = it == given.end() ? p.default_value : it->second;
    if (v < p.min || v > p.max)
      throw std::invalid_argument(to_string(id) + ": parameter " + p.name + "=" + std::to_string(v) + " out of range [" +
                                  std::to_string(p.min) + ", " + std::to_string(p.max) + "]");
    out[p.name] = v;
  }
  if (out.count("s") && out.count("k") && out.at("s") > out.at("k"))
    throw std::invalid_argument(to_string(id) + ": need s <= k");
  if (id == IdentityId::I19 && out.at("prime") == 1 && out.at("s") != out.at("k"))
    throw std::invalid_argument("I19: prime=1 requires s = k");
  return out;
}

/// The two sides of an identity built from series primitives only. `lhs` is
/// absent when the left side is a purely combinatorial count.
struct Sides {
  std::optional<ZQPoly> lhs;
  ZQPoly rhs;
};

namespace detail {

inline long binom2(long j) { return j * (j - 1) / 2; }

// (-q;q)_inf / (q;q)_inf
inline QSeries overpartition_series(int n) {
  return q_pochhammer(-1, 1, kInfinite, n) * reciprocal(q_pochhammer(1, 1, kInfinite, n));
}

// (-q^a;q)_inf / (q^b;q)_inf
inline QSeries tail_ratio(int a, int b, int n) {
  return q_pochhammer(-1, a, kInfinite, n) * reciprocal(q_pochhammer(1, b, kInfinite, n));
}

// 1 / (q;q)_count
inline QSeries inverse_q_factorial(int count, int n) { return reciprocal(q_pochhammer(1, 1, count, n)); }

// Generating function of overpartitions with largest (r+1)-repeating size at
// most n - 1, in the requested reading.
inline QSeries repeat_bracket(int r, int nn, int n, LargestRepeatTail reading) {
  if (reading == LargestRepeatTail::Corrected)
    return q_pochhammer(-1, 1, nn - 1, n) * inverse_q_factorial(nn - 1, n) * omega_product(nn, kInfinite, r, n);
  return overpartition_series(n) - omega_product(1, nn - 1, r, n) * tail_ratio(nn, nn, n) +
         omega_product(1, kInfinite, r, n);
}

// q^{(r+1)j} (-1;q)_j / (q;q)_j * omega(j+1; inf)
inline QSeries largest_repeat_term(int r, int j, int n) {
  return (q_pochhammer(-1, 0, j, n) * inverse_q_factorial(j, n) * omega_product(j + 1, kInfinite, r, n))
      .shifted((r + 1) * j);
}

// 2 q^{(r+1)j} omega(1;j-1) (-q^{j+1};q)_inf / (q^j;q)_inf
inline QSeries smallest_repeat_term(int r, int j, int n) {
  return (omega_product(1, j - 1, r, n) * tail_ratio(j + 1, j, n) * Integer(2)).shifted((r + 1) * j);
}

// P * sum_{k >= first} 2^k q^{k(k+1)/2} / (-q;q)_k
inline QSeries sigma1_mes_sum(int first, int n) {
  QSeries acc(n);
  for (int k = first; static_cast<long>(k) * (k + 1) / 2 <= n; ++k) {
    acc += (reciprocal(q_pochhammer(-1, 1, k, n)) * (Integer(1) << k)).shifted(k * (k + 1) / 2);
  }
  return overpartition_series(n) * acc;
}

// prod_{t >= from} (1 + 2z q^t + ... + 2z^r q^{rt})
inline ZQPoly z_omega_product(int from, int r, int n) {
  ZQPoly acc = ZQPoly::one(n);
  for (int t = from; t <= n; ++t) {
    ZQPoly factor = ZQPoly::one(n);
    for (long i = 1; i <= r && i * t <= n; ++i) factor.add_to(static_cast<int>(i), static_cast<int>(i * t), 2);
    acc *= factor;
  }
  return acc;
}

// prod_{t >= from} 1 / (1 - z q^t)
inline ZQPoly z_inverse_tail(int from, int n) {
  ZQPoly acc = ZQPoly::one(n);
  for (int t = std::max(from, 1); t <= n; ++t) {
    ZQPoly factor(n);
    for (int i = 0; i * t <= n; ++i) factor.add_to(i, i * t, 1);
    acc *= factor;
  }
  return acc;
}

// sum over s, m, j of z^{j-1} q^{k C(j,2) + s j + k(m-j)} [m-1, j-1]_k / (q;q)_{k(m-1)+s}
// (with the (z^{j-1} + z^j) variant when `both`), optionally without the
// 1/(q;q) factor and for a single s.
struct BasisSumOptions {
  bool both_z = false;
  bool with_free_parts = true;
};

inline ZQPoly basis_closed_sum(int k, int s, int n, BasisSumOptions opt) {
  ZQPoly acc(n);
  for (int m = 1; static_cast<long>(k) * (m - 1) + s <= n; ++m) {
    const int parts = k * (m - 1) + s;
    ZQPoly inner(n);
    for (int j = 1; j <= m; ++j) {
      const long e = k * binom2(j) + static_cast<long>(s) * j + static_cast<long>(k) * (m - j);
      if (e > n) continue;
      const QSeries term = gaussian_binomial(m - 1, j - 1, k, n).shifted(static_cast<int>(e));
      inner.set(j - 1, inner.coefficient(j - 1) + term);
      if (opt.both_z) inner.set(j, inner.coefficient(j) + term);
    }
    if (opt.with_free_parts) inner *= inverse_q_factorial(parts, n);
    acc += inner;
  }
  return acc;
}

// sum over m, j of z^j q^{k C(j,2) + k m} [m-1, j-1]_k (/ (q;q)_{km})
inline ZQPoly bf_overlined_closed_sum(int k, int n, bool with_free_parts) {
  ZQPoly acc(n);
  for (int m = 1; static_cast<long>(k) * m <= n; ++m) {
    ZQPoly inner(n);
    for (int j = 1; j <= m; ++j) {
      const long e = k * binom2(j) + static_cast<long>(k) * m;
      if (e > n) continue;
      inner.set(j, inner.coefficient(j) + gaussian_binomial(m - 1, j - 1, k, n).shifted(static_cast<int>(e)));
    }
    if (with_free_parts) inner *= inverse_q_factorial(k * m, n);
    acc += inner;
  }
  return acc;
}

// Closed form of GL/GF basis sums at fixed (k, m, s, j).
inline ZQPoly basis_term_closed(Family family, int k, int m, int s, int j, int n) {
  ZQPoly out(n);
  if (j > m) return out;
  const QSeries bin = gaussian_binomial(m - 1, j - 1, k, n);
  const long e = k * binom2(j) + static_cast<long>(s) * j + static_cast<long>(k) * (m - j);
  if (e <= n) {
    const QSeries term = bin.shifted(static_cast<int>(e));
    out.set(j - 1, term);
    if (family == Family::BL) out.set(j, term);
  }
  if (family == Family::BF && s == k) {
    const long e2 = k * binom2(j) + static_cast<long>(k) * m;
    if (e2 <= n) out.set(j, out.coefficient(j) + bin.shifted(static_cast<int>(e2)));
  }
  return out;
}

inline ZQPoly univariate(const QSeries& s) { return ZQPoly(s); }

}  // namespace detail

/// Both sides of the identity modulo q^{N+1}, using series primitives only.
inline Sides closed_form(IdentityId id, const Params& given, int n, Readings readings = {}) {
  const Params p = normalize_params(id, given);
  if (n < 0) throw std::invalid_argument("closed_form: negative truncation");
  using namespace detail;
  auto get = [&](const char* name) { return p.at(name); };

  switch (id) {
    case IdentityId::I1:
      return {std::nullopt, univariate(sigma1_mes_sum(0, n))};

    case IdentityId::I2: {
      const int r = get("r");
      QSeries rhs = overpartition_series(n);
      for (int nn = 1; nn <= n; ++nn) {
        QSeries weights(n);
        for (long i = 1; i <= r && i * nn <= n; ++i) weights[static_cast<int>(i * nn)] = 2 * i;
        rhs += weights * reciprocal(omega(nn, r, n)) * repeat_bracket(r, nn, n, readings.repeat_tail);
      }
      return {std::nullopt, univariate(rhs)};
    }

    case IdentityId::I3: {
      const int r = get("r");
      const QSeries all = overpartition_series(n);
      QSeries rhs = (all - omega_product(1, kInfinite, r, n)) * Integer(r);
      QSeries lambert(n);
      for (int nn = 1; nn <= n; ++nn)
        lambert += (reciprocal(QSeries::one(n) - QSeries::monomial(n, 2 * nn)) * Integer(2)).shifted(nn);
      rhs += all * lambert;
      for (int nn = 1; nn <= n; ++nn) {
        const QSeries w = readings.maes_factor == MaesFactor::Omega ? omega(nn, r, n) : omega(nn, 1, n);
        rhs -= (omega_product(1, nn - 1, r, n) * tail_ratio(nn + 1, nn, n) * (QSeries::one(n) + w)).shifted(nn);
      }
      return {std::nullopt, univariate(rhs)};
    }

    case IdentityId::I4: {
      const QSeries lhs = sigma1_mes_sum(1, n);
      const QSeries all = overpartition_series(n);
      const QSeries two_q_inf = q_pochhammer(-2, 1, kInfinite, n);
      QSeries rhs(n);
      for (int nn = 1; nn <= n; ++nn) {
        QSeries bracket(n);
        if (readings.repeat_tail == LargestRepeatTail::Corrected)
          bracket = q_pochhammer(-1, 1, nn - 1, n) * inverse_q_factorial(nn - 1, n) * q_pochhammer(-2, nn, kInfinite, n);
        else
          bracket = all - q_pochhammer(-2, 1, nn - 1, n) * tail_ratio(nn, nn, n) + two_q_inf;
        rhs += (reciprocal(omega(nn, 1, n)) * bracket * Integer(2)).shifted(nn);
      }
      return {univariate(lhs), univariate(rhs)};
    }

    case IdentityId::I5: {
      const int r = get("r");
      QSeries lhs(n);
      for (int j = 0; static_cast<long>(r + 1) * j <= n; ++j) lhs += largest_repeat_term(r, j, n);
      return {univariate(lhs), univariate(overpartition_series(n))};
    }

    case IdentityId::I6: {
      const int r = get("r"), nn = get("n");
      QSeries lhs(n);
      for (int j = 0; j <= nn - 1 && static_cast<long>(r + 1) * j <= n; ++j) lhs += largest_repeat_term(r, j, n);
      return {univariate(lhs), univariate(repeat_bracket(r, nn, n, readings.repeat_tail))};
    }

    case IdentityId::I7: {
      const int r = get("r");
      ZQPoly rhs(n);
      for (int j = 0; static_cast<long>(r + 1) * j <= n; ++j) {
        const QSeries coeff =
            (q_pochhammer(-1, 0, j, n) * inverse_q_factorial(j, n)).shifted((r + 1) * j);
        rhs += (z_omega_product(j + 1, r, n) * coeff).shifted_z(1);
      }
      return {std::nullopt, rhs};
    }

    case IdentityId::I8: {
      const int r = get("r");
      QSeries lhs(n);
      for (int j = 1; static_cast<long>(r + 1) * j <= n; ++j) lhs += smallest_repeat_term(r, j, n);
      return {univariate(lhs), univariate(overpartition_series(n) - omega_product(1, kInfinite, r, n))};
    }

    case IdentityId::I9: {
      const int r = get("r"), m = get("m");
      QSeries lhs(n);
      for (int j = 1; j <= m && static_cast<long>(r + 1) * j <= n; ++j) lhs += smallest_repeat_term(r, j, n);
      const QSeries rhs = overpartition_series(n) - omega_product(1, m, r, n) * tail_ratio(m + 1, m + 1, n);
      return {univariate(lhs), univariate(rhs)};
    }

    case IdentityId::I10: {
      const int r = get("r");
      ZQPoly rhs(n);
      for (int j = 1; static_cast<long>(r + 1) * j <= n; ++j) {
        const QSeries coeff = (omega_product(1, j - 1, r, n) * Integer(2)).shifted((r + 1) * j);
        const ZQPoly zpart = z_pochhammer(-1, j + 1, kInfinite, n) * z_inverse_tail(j, n);
        rhs += (zpart * coeff).shifted_z(r);
      }
      return {std::nullopt, rhs};
    }

    case IdentityId::I11: {
      const int k = get("k");
      ZQPoly rhs = ZQPoly::one(n);
      for (int s = 1; s <= k; ++s) rhs += basis_closed_sum(k, s, n, {.both_z = true, .with_free_parts = true});
      return {std::nullopt, rhs};
    }

    case IdentityId::I12: {
      const int k = get("k");
      ZQPoly rhs = ZQPoly::one(n);
      for (int s = 1; s <= k; ++s) rhs += basis_closed_sum(k, s, n, {.both_z = false, .with_free_parts = true});
      rhs += bf_overlined_closed_sum(k, n, true);
      return {std::nullopt, rhs};
    }

    case IdentityId::I13:
      return {std::nullopt, basis_term_closed(Family::BL, get("k"), get("m"), get("s"), get("j"), n)};

    case IdentityId::I14:
      return {std::nullopt, basis_term_closed(Family::BF, get("k"), get("m"), get("s"), get("j"), n)};

    case IdentityId::I15: {
      const int zmax = get("zmax");
      ZQPoly lhs(n);
      for (int j = 0; binom2(j) <= n; ++j)
        lhs.set(j, inverse_q_factorial(j, n).shifted(static_cast<int>(binom2(j))));
      return {lhs.truncated_z(zmax), z_pochhammer(-1, 0, kInfinite, n).truncated_z(zmax)};
    }

    case IdentityId::I16: {
      const int k = get("k"), a = get("A");
      ZQPoly lhs(n), rhs(n);
      for (int b = 0; b <= a; ++b) {
        lhs.set(b, gaussian_binomial(a, b, k, n));
        rhs.set(b, gaussian_binomial(a - 1, b - 1, k, n) + gaussian_binomial(a - 1, b, k, n).shifted(k * b));
      }
      return {lhs, rhs};
    }

    case IdentityId::I17: {
      const int k = get("k"), j = get("j");
      QSeries lhs(n);
      for (int m = j; static_cast<long>(k) * (m - j) <= n; ++m)
        lhs += gaussian_binomial(m - 1, j - 1, k, n).shifted(k * (m - j));
      return {univariate(lhs), univariate(reciprocal(q_pochhammer(1, k, j, n, k)))};
    }

    case IdentityId::I18: {
      const int k = get("k"), s = get("s");
      const ZQPoly lhs = basis_closed_sum(k, s, n, {.both_z = true, .with_free_parts = false});
      const ZQPoly distinct = z_pochhammer(-1, s, kInfinite, n, k) - ZQPoly::one(n);
      const ZQPoly rhs = (ZQPoly::monomial(n, 1, 0) + ZQPoly::one(n)) * distinct;
      return {lhs, rhs.divided_by_z()};
    }

    case IdentityId::I19: {
      const int k = get("k"), s = get("s");
      if (get("prime") == 1) {
        const ZQPoly lhs = bf_overlined_closed_sum(k, n, false);
        return {lhs, z_pochhammer(-1, k, kInfinite, n, k) - ZQPoly::one(n)};
      }
      const ZQPoly lhs = basis_closed_sum(k, s, n, {.both_z = false, .with_free_parts = false});
      return {lhs, (z_pochhammer(-1, s, kInfinite, n, k) - ZQPoly::one(n)).divided_by_z()};
    }
  }
  throw std::invalid_argument("closed_form: unknown identity");
}

namespace detail {

// sum over all overpartitions of weight <= n of z^{stat(pi)} q^{|pi|}; stat
// returns std::nullopt to skip pi.
template <class Stat>
ZQPoly overpartition_sum(int n, Convention convention, Stat stat) {
  ZQPoly out(n);
  for (int w = 0; w <= n; ++w)
    for_each_overpartition(w, convention, [&](const Overpartition& pi) {
      if (const std::optional<int> d = stat(pi)) out.add_to(*d, w, 1);
    });
  return out;
}

// Moment form: sum of value(pi) q^{|pi|}.
template <class Value>
ZQPoly overpartition_total(int n, Value value) {
  QSeries out(n);
  for (int w = 0; w <= n; ++w)
    for_each_overpartition(w, Convention::LastOccurrence, [&](const Overpartition& pi) { out[w] += value(pi); });
  return ZQPoly(out);
}

// sum of z^{l_o} q^{|lambda|} over basis elements of weight <= n whose part
// count and largest part pass the filter.
template <class Filter>
ZQPoly basis_sum(Family family, int k, int n, Filter keep) {
  ZQPoly out(n);
  for (int m = 1; m <= n; ++m)
    for_each_basis_element(family, k, m, n, [&](const Overpartition& lam) {
      if (keep(lam)) out.add_to(lam.overlined_count(), static_cast<int>(lam.weight()), 1);
    });
  return out;
}

}  // namespace detail

/// The combinatorial side by exhaustive enumeration, or std::nullopt when the
/// identity has none. Throws std::out_of_range past the enumeration guard.
inline std::optional<ZQPoly> brute_force(IdentityId id, const Params& given, int n) {
  const Params p = normalize_params(id, given);
  const IdentityInfo info = identity_info(id);
  if (!info.has_brute_force) return std::nullopt;
  if (n < 0 || n > info.max_trunc)
    throw std::out_of_range(to_string(id) + ": truncation " + std::to_string(n) + " outside enumeration guard [0, " +
                            std::to_string(info.max_trunc) + "]");
  using namespace detail;
  const Convention last = Convention::LastOccurrence;
  auto get = [&](const char* name) { return p.at(name); };

  switch (id) {
    case IdentityId::I1:
      return overpartition_total(n, [](const Overpartition& pi) { return mes(pi, 1); });
    case IdentityId::I2:
      return overpartition_total(n, [r = get("r")](const Overpartition& pi) { return mes(pi, r); });
    case IdentityId::I3:
      return overpartition_total(n, [r = get("r")](const Overpartition& pi) { return maes(pi, r); });
    case IdentityId::I4:
      return overpartition_total(n, [](const Overpartition& pi) { return mes(pi, 1) - 1; });
    case IdentityId::I5:
      return overpartition_sum(n, last, [](const Overpartition&) { return std::optional<int>(0); });
    case IdentityId::I6:
      return overpartition_sum(n, last, [r = get("r"), nn = get("n")](const Overpartition& pi) {
        return largest_repeating_size(pi, r) <= nn - 1 ? std::optional<int>(0) : std::nullopt;
      });
    case IdentityId::I7:
      return overpartition_sum(n, last, [r = get("r")](const Overpartition& pi) { return std::optional<int>(mes(pi, r)); });
    case IdentityId::I8:
      return overpartition_sum(n, last, [r = get("r")](const Overpartition& pi) {
        return smallest_positive_repeating_size(pi, r) ? std::optional<int>(0) : std::nullopt;
      });
    case IdentityId::I9:
      return overpartition_sum(n, last, [r = get("r"), m = get("m")](const Overpartition& pi) {
        const auto j = smallest_positive_repeating_size(pi, r);
        return j && *j <= m ? std::optional<int>(0) : std::nullopt;
      });
    case IdentityId::I10:
      return overpartition_sum(n, last, [r = get("r")](const Overpartition& pi) {
        const int a = maes(pi, r);
        return a > 0 ? std::optional<int>(a) : std::nullopt;
      });
    case IdentityId::I11:
    case IdentityId::I12: {
      const ClassTag tag = id == IdentityId::I11 ? ClassTag::L(get("k")) : ClassTag::F(get("k"));
      return overpartition_sum(n, tag.convention(), [tag](const Overpartition& pi) {
        return is_member(pi, tag) ? std::optional<int>(pi.overlined_count()) : std::nullopt;
      });
    }
    case IdentityId::I13:
    case IdentityId::I14: {
      const Family family = id == IdentityId::I13 ? Family::BL : Family::BF;
      const int k = get("k"), parts = k * (get("m") - 1) + get("s"), j = get("j");
      return basis_gf(family, k, parts, j, false, n) + basis_gf(family, k, parts, j, true, n);
    }
    case IdentityId::I18: {
      const int k = get("k"), s = get("s");
      return basis_sum(Family::BL, k, n, [k, s](const Overpartition& lam) { return mod(lam.length() - s, k) == 0; });
    }
    case IdentityId::I19: {
      const int k = get("k"), s = get("s");
      const bool prime = get("prime") == 1;
      return basis_sum(Family::BF, k, n, [k, s, prime](const Overpartition& lam) {
        return mod(lam.length() - s, k) == 0 && lam.is_overlined(lam.largest_size()) == prime;
      });
    }
    default:
      return std::nullopt;
  }
}

struct Mismatch {
  int q = 0;
  std::optional<int> z;
  Integer lhs;
  Integer rhs;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  std::string identity;
  Params params;
  int trunc = 0;
  bool pass = true;
  std::vector<Mismatch> mismatches;
};

/// Coefficientwise differences between two ZQPolys of equal truncation,
/// ordered by q-exponent then z-degree.
inline std::vector<Mismatch> compare(const ZQPoly& lhs, const ZQPoly& rhs, bool bivariate) {
  if (lhs.trunc() != rhs.trunc()) throw std::invalid_argument("compare: truncation mismatch");
  std::set<int> degrees;
  for (const auto& [d, c] : lhs.terms()) degrees.insert(d);
  for (const auto& [d, c] : rhs.terms()) degrees.insert(d);
  std::vector<Mismatch> out;
  for (int e = 0; e <= lhs.trunc(); ++e)
    for (int d : degrees) {
      Integer a = lhs.coefficient(d, e), b = rhs.coefficient(d, e);
      if (a != b) out.push_back({e, bivariate || d != 0 ? std::optional<int>(d) : std::nullopt, std::move(a), std::move(b)});
    }
  return out;
}

/// Compares the closed-form sides with each other and the brute-force side
/// (when there is one) with the closed-form right side.
inline VerificationReport verify(IdentityId id, const Params& given, int n, Readings readings = {}) {
  const IdentityInfo info = identity_info(id);
  VerificationReport report{to_string(id), normalize_params(id, given), n, true, {}};
  if (n < 0 || n > info.max_trunc)
    throw std::out_of_range(to_string(id) + ": truncation " + std::to_string(n) + " outside guard [0, " +
                            std::to_string(info.max_trunc) + "]");
  const Sides sides = closed_form(id, report.params, n, readings);
  if (sides.lhs) {
    auto m = compare(*sides.lhs, sides.rhs, info.bivariate);
    report.mismatches.insert(report.mismatches.end(), m.begin(), m.end());
  }
  if (const auto brute = brute_force(id, report.params, n)) {
    auto m = compare(*brute, sides.rhs, info.bivariate);
    report.mismatches.insert(report.mismatches.end(), m.begin(), m.end());
  }
  auto key = [](const Mismatch& m) { return std::tie(m.q, m.z, m.lhs, m.rhs); };
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [&](const Mismatch& a, const Mismatch& b) { return key(a) < key(b); });
  report.mismatches.erase(std::unique(report.mismatches.begin(), report.mismatches.end()), report.mismatches.end());
  report.pass = report.mismatches.empty();
  return report;
}

enum class Theorem { Thm2_1, Thm2_2 };

inline std::string to_string(Theorem t) { return t == Theorem::Thm2_1 ? "Thm2_1" : "Thm2_2"; }

/// Joint counts of (k, j) at weight n for both sides of the excludant /
/// repeating-size correspondences, keyed by (k, j).
///
/// Thm2_1: #{pi : mes(pi;r) = k, j parts > k} vs
///         #{lambda : largest repeating size j, k-1 parts > j}   (j >= 0, k >= 1)
/// Thm2_2: #{pi : maes(pi;r) = k, j parts > k} vs
///         #{lambda : smallest positive repeating size j, k+1 parts >= j}   (j, k >= 1)
using TheoremCounts = std::map<std::pair<int, int>, std::pair<Integer, Integer>>;

inline TheoremCounts theorem_counts(Theorem which, int n, int r) {
  if (n < 0 || n > kBruteForceGuard) throw std::out_of_range("theorem_counts: n outside enumeration guard");
  if (r < 1) throw std::invalid_argument("theorem_counts: r must be positive");
  TheoremCounts counts;
  for_each_overpartition(n, Convention::LastOccurrence, [&](const Overpartition& pi) {
    if (which == Theorem::Thm2_1) {
      const int k = mes(pi, r);
      counts[{k, parts_of_size_above(pi, k)}].first += 1;
      const int j = largest_repeating_size(pi, r);
      counts[{parts_of_size_above(pi, j) + 1, j}].second += 1;
    } else {
      const int k = maes(pi, r);
      if (k >= 1) {
        const int j = parts_of_size_above(pi, k);
        if (j >= 1) counts[{k, j}].first += 1;
      }
      if (const auto j = smallest_positive_repeating_size(pi, r)) {
        const int kk = parts_of_size_above(pi, *j, Bound::Inclusive) - 1;
        if (kk >= 1) counts[{kk, *j}].second += 1;
      }
    }
  });
  return counts;
}

/// Compares theorem_counts sides; mismatches report q := k and z := j.
inline VerificationReport theorem_count_check(Theorem which, int n, int r) {
  VerificationReport report{to_string(which), {{"n", n}, {"r", r}}, n, true, {}};
  for (const auto& [key, value] : theorem_counts(which, n, r))
    if (value.first != value.second) report.mismatches.push_back({key.first, key.second, value.first, value.second});
  report.pass = report.mismatches.empty();
  return report;
}

/// Default (identity, params) grid used by `verify --all`, in catalog order.
inline std::vector<std::pair<IdentityId, Params>> default_grid() {
  std::vector<std::pair<IdentityId, Params>> grid;
  auto add = [&](IdentityId id, Params p = {}) { grid.emplace_back(id, std::move(p)); };
  add(IdentityId::I1);
  for (int r = 1; r <= 3; ++r) add(IdentityId::I2, {{"r", r}});
  for (int r = 1; r <= 3; ++r) add(IdentityId::I3, {{"r", r}});
  add(IdentityId::I4);
  for (int r = 1; r <= 3; ++r) add(IdentityId::I5, {{"r", r}});
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 8; ++n) add(IdentityId::I6, {{"r", r}, {"n", n}});
  for (int r = 1; r <= 3; ++r) add(IdentityId::I7, {{"r", r}});
  for (int r = 1; r <= 3; ++r) add(IdentityId::I8, {{"r", r}});
  for (int r = 1; r <= 3; ++r)
    for (int m = 1; m <= 8; ++m) add(IdentityId::I9, {{"r", r}, {"m", m}});
  for (int r = 1; r <= 3; ++r) add(IdentityId::I10, {{"r", r}});
  for (int k = 1; k <= 4; ++k) add(IdentityId::I11, {{"k", k}});
  for (int k = 1; k <= 4; ++k) add(IdentityId::I12, {{"k", k}});
  for (IdentityId id : {IdentityId::I13, IdentityId::I14})
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= 4; ++m)
        for (int s = 1; s <= k; ++s)
          for (int j = 1; j <= m; ++j) add(id, {{"k", k}, {"m", m}, {"s", s}, {"j", j}});
  add(IdentityId::I15, {{"zmax", 12}});
  for (int k = 1; k <= 4; ++k)
    for (int a = 1; a <= 12; ++a) add(IdentityId::I16, {{"k", k}, {"A", a}});
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 6; ++j) add(IdentityId::I17, {{"k", k}, {"j", j}});
  for (int k = 1; k <= 3; ++k)
    for (int s = 1; s <= k; ++s) add(IdentityId::I18, {{"k", k}, {"s", s}});
  for (int k = 1; k <= 3; ++k) {
    for (int s = 1; s <= k; ++s) add(IdentityId::I19, {{"k", k}, {"s", s}, {"prime", 0}});
    add(IdentityId::I19, {{"k", k}, {"s", k}, {"prime", 1}});
  }
  return grid;
}

/// Report as JSON: identity, params, trunc, status, mismatches (coefficients
/// as decimal strings).
inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
  for (const Mismatch& m : report.mismatches) {
    nlohmann::ordered_json entry;
    entry["q"] = m.q;
    entry["z"] = m.z ? nlohmann::ordered_json(*m.z) : nlohmann::ordered_json(nullptr);
    entry["lhs"] = m.lhs.str();
    entry["rhs"] = m.rhs.str();
    mismatches.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["identity"] = report.identity;
  out["params"] = std::move(params);
  out["trunc"] = report.trunc;
  out["status"] = report.pass ? "pass" : "fail";
  out["mismatches"] = std::move(mismatches);
  return out;
}

}  // namespace qpl
