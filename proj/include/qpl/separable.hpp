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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpl/classes.hpp"
#include "qpl/enumeration.hpp"
#include "qpl/overpartition.hpp"
#include "qpl/series.hpp"

namespace qpl {

inline ClassTag class_of(Family family, int k) {
  return family == Family::BL ? ClassTag::L(k) : ClassTag::F(k);
}

/// Basis test for BL_k / BF_k. The overpartition is read under the family's
/// convention regardless of its own tag.
///
/// BL_k(m): in L_k, smallest part 1 or 1-bar, and |l_i| <= |l_{i+1}| + 1 with
/// strict inequality when l_i is plain.
/// BF_k(m): in F_k, smallest part 1 (1 or 1-bar when k = 1), and
/// |l_i| <= |l_{i+1}| + 1 with strict inequality when l_{i+1} is plain.
inline bool is_basis_element(const Overpartition& lam, Family family, int k) {
  if (k < 1) throw std::invalid_argument("is_basis_element: k must be positive");
  if (lam.empty()) return false;
  const Overpartition view = lam.with_convention(convention_of(family));
  if (!detail::member_by_counts(view, class_of(family, k))) return false;

  const std::vector<Part> parts = view.parts();
  const Part& last = parts.back();
  if (last.size != 1) return false;
  if (family == Family::BF && k >= 2 && last.overlined) return false;

  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const Part& cur = parts[i];
    const Part& next = parts[i + 1];
    const bool strict = family == Family::BL ? !cur.overlined : !next.overlined;
    const int bound = next.size + 1;
    if (strict ? cur.size >= bound : cur.size > bound) return false;
  }
  return true;
}

/// lambda (a basis element) plus a non-increasing nonnegative padding mu.
struct DecompositionWitness {
  Overpartition basis;
  std::vector<int> padding;

  friend bool operator==(const DecompositionWitness&, const DecompositionWitness&) = default;
};

/// Partwise lambda_i + mu_i with c-bar + d = (c+d)-bar. A short padding is
/// extended with zeros.
inline Overpartition compose(const DecompositionWitness& w) {
  std::vector<Part> parts = w.basis.parts();
  if (w.padding.size() > parts.size()) throw std::invalid_argument("compose: padding longer than basis");
  for (std::size_t i = 0; i < w.padding.size(); ++i) {
    if (w.padding[i] < 0) throw std::invalid_argument("compose: negative padding");
    if (i > 0 && w.padding[i] > w.padding[i - 1]) throw std::invalid_argument("compose: padding increasing");
    parts[i].size += w.padding[i];
  }
  return Overpartition::from_parts(parts, w.basis.convention());
}

/// The unique (lambda, mu) with pi = lambda + mu, lambda in the basis. lambda
/// is forced by pi's overline pattern: reading from the smallest part up, each
/// step keeps the size or adds one exactly where the basis growth rule does.
inline DecompositionWitness decompose(const Overpartition& pi, Family family, int k) {
  if (!is_member(pi, class_of(family, k)))
    throw std::invalid_argument("decompose: " + to_string(pi) + " is not in " + to_string(class_of(family, k)));
  if (pi.empty()) return {Overpartition(pi.convention()), {}};

  const std::vector<Part> parts = pi.parts();
  const std::size_t m = parts.size();
  std::vector<Part> lam(m);
  lam[m - 1] = {1, parts[m - 1].overlined};
  for (std::size_t i = m - 1; i-- > 0;) {
    const bool step = family == Family::BL ? parts[i].overlined : lam[i + 1].overlined;
    lam[i] = {lam[i + 1].size + (step ? 1 : 0), parts[i].overlined};
  }

  DecompositionWitness w{Overpartition::from_parts(lam, pi.convention()), std::vector<int>(m)};
  for (std::size_t i = 0; i < m; ++i) w.padding[i] = parts[i].size - lam[i].size;

  const bool padding_ok = std::all_of(w.padding.begin(), w.padding.end(), [](int x) { return x >= 0; }) &&
                          std::is_sorted(w.padding.rbegin(), w.padding.rend());
  if (!padding_ok || !is_basis_element(w.basis, family, k) || compose(w) != pi)
    throw std::logic_error("decompose: witness check failed for " + to_string(pi));
  return w;
}

/// sum of z^{l_o} q^{|lambda|} over basis elements with `parts` parts whose
/// largest part is j (plain) or j-bar (overlined). Truncation defaults to
/// parts * j, which holds every such element exactly.
inline ZQPoly basis_gf(Family family, int k, int parts, int j, bool overlined, std::optional<int> trunc = {}) {
  if (parts < 1 || j < 1) throw std::invalid_argument("basis_gf: parts and j must be positive");
  const int n = trunc.value_or(parts * j);
  ZQPoly out(n);
  for_each_basis_element(family, k, parts, n, [&](const Overpartition& lam) {
    const Part top = lam.parts().front();
    if (top.size == j && top.overlined == overlined)
      out.add_to(lam.overlined_count(), static_cast<int>(lam.weight()), 1);
  });
  return out;
}

/// Flips the overline on the smallest part (BL, which must have size 1) or on
/// the largest part (BF).
inline Overpartition toggle_extreme_overline(const Overpartition& lam, Family family) {
  if (lam.empty()) throw std::invalid_argument("toggle_extreme_overline: empty overpartition");
  std::vector<Overpartition::Entry> entries(lam.entries().begin(), lam.entries().end());
  if (family == Family::BL) {
    if (entries.back().size != 1) throw std::invalid_argument("toggle_extreme_overline: smallest part is not 1");
    entries.back().overlined = !entries.back().overlined;
  } else {
    entries.front().overlined = !entries.front().overlined;
  }
  return Overpartition::from_entries(std::move(entries), lam.convention());
}

namespace detail {

inline void check_modulus(int k, int s) {
  if (k < 1 || s < 1 || s > k) throw std::invalid_argument("bijection: need 1 <= s <= k");
}

// Strips k copies of each size t < j and s copies of j, conjugates the rest
// and adds the staircase (k(j-1)+s, ..., k+s, s).
inline Partition staircase_to_distinct(const Overpartition& lam, int k, int s) {
  const int j = lam.largest_size();
  std::vector<int> rest;
  for (const auto& e : lam.entries()) {
    const int removed = e.size < j ? k : s;
    const int left = e.multiplicity - removed;
    if (left < 0 || left % k != 0) throw std::logic_error("bijection: staircase removal failed");
    rest.insert(rest.end(), static_cast<std::size_t>(left), e.size);
  }
  for (int t = 1; t <= j; ++t)
    if (lam.multiplicity(t) == 0) throw std::logic_error("bijection: size gap below the largest part");
  const Partition mu_conj = conjugate(Partition(rest));
  std::vector<int> nu(static_cast<std::size_t>(j));
  for (int i = 1; i <= j; ++i) {
    const int extra = i <= mu_conj.length() ? mu_conj[i - 1] : 0;
    nu[static_cast<std::size_t>(i - 1)] = extra + k * (j - i) + s;
  }
  return Partition(std::move(nu));
}

// Inverse of staircase_to_distinct: returns the multiplicities of sizes 1..j
// (index 0 unused).
inline std::vector<int> distinct_to_staircase(const Partition& nu, int k, int s) {
  const int j = nu.length();
  if (j == 0) throw std::invalid_argument("bijection: empty partition");
  std::vector<int> conj;
  for (int i = 1; i <= j; ++i) {
    const int v = nu[i - 1];
    if (mod(v - s, k) != 0) throw std::invalid_argument("bijection: part not congruent to s mod k");
    if (i < j && nu[i] >= v) throw std::invalid_argument("bijection: parts are not distinct");
    const int extra = v - k * (j - i) - s;
    if (extra < 0) throw std::invalid_argument("bijection: parts too small for the staircase");
    if (extra > 0) conj.push_back(extra);
  }
  const Partition mu = conjugate(Partition(conj));
  std::vector<int> count(static_cast<std::size_t>(j) + 1, 0);
  for (int p : mu.parts()) ++count[static_cast<std::size_t>(p)];
  for (int t = 1; t <= j; ++t) count[static_cast<std::size_t>(t)] += t < j ? k : s;
  return count;
}

inline void require_length_class(const Overpartition& lam, int k, int s) {
  if (mod(lam.length() - s, k) != 0) throw std::invalid_argument("bijection: length is not s mod k");
}

}  // namespace detail

/// BL'_{k,s}(n, j) -> D_{k,s}(n, j). Input: BL_k basis element with length
/// s mod k and smallest part 1-bar. Removes 1-bar, (k-1) 1's, ..., j-bar,
/// (s-1) j's, conjugates the remainder and adds the staircase.
inline Partition bl_bijection_to_distinct(const Overpartition& lam, int k, int s) {
  detail::check_modulus(k, s);
  if (!is_basis_element(lam, Family::BL, k)) throw std::invalid_argument("bl_bijection: not a BL_k basis element");
  detail::require_length_class(lam, k, s);
  if (!lam.is_overlined(1)) throw std::invalid_argument("bl_bijection: smallest part is not 1-bar");
  return detail::staircase_to_distinct(lam, k, s);
}

/// D_{k,s}(n, j) -> BL'_{k,s}(n, j).
inline Overpartition distinct_to_bl(const Partition& nu, int k, int s) {
  detail::check_modulus(k, s);
  const std::vector<int> count = detail::distinct_to_staircase(nu, k, s);
  std::vector<Overpartition::Entry> entries;
  for (int t = 1; t < static_cast<int>(count.size()); ++t) entries.push_back({t, count[static_cast<std::size_t>(t)], true});
  return Overpartition::from_entries(std::move(entries), Convention::LastOccurrence);
}

/// BF''_{k,s}(n, j-1) -> D_{k,s}(n, j). Input: BF_k basis element with length
/// s mod k and plain largest part j. Removes (k-1) 1's and 1-bar, ...,
/// (k-1) (j-1)'s and (j-1)-bar, and s j's. BF' elements go through
/// toggle_extreme_overline first.
inline Partition bf_bijection_to_distinct(const Overpartition& lam, int k, int s) {
  detail::check_modulus(k, s);
  if (!is_basis_element(lam, Family::BF, k)) throw std::invalid_argument("bf_bijection: not a BF_k basis element");
  detail::require_length_class(lam, k, s);
  if (lam.is_overlined(lam.largest_size())) throw std::invalid_argument("bf_bijection: largest part is overlined");
  return detail::staircase_to_distinct(lam, k, s);
}

/// D_{k,s}(n, j) -> BF''_{k,s}(n, j-1).
inline Overpartition distinct_to_bf(const Partition& nu, int k, int s) {
  detail::check_modulus(k, s);
  const std::vector<int> count = detail::distinct_to_staircase(nu, k, s);
  const int j = static_cast<int>(count.size()) - 1;
  std::vector<Overpartition::Entry> entries;
  for (int t = 1; t <= j; ++t) entries.push_back({t, count[static_cast<std::size_t>(t)], t < j});
  return Overpartition::from_entries(std::move(entries), Convention::FirstOccurrence);
}

}  // namespace qpl
