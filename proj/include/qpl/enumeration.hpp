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
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpl/classes.hpp"
#include "qpl/overpartition.hpp"

namespace qpl {

namespace detail {

template <class Fn>
void partitions_by_multiplicity(int remaining, int max_size, std::vector<Overpartition::Entry>& cur, Fn& fn) {
  if (remaining == 0) {
    fn(static_cast<const std::vector<Overpartition::Entry>&>(cur));
    return;
  }
  for (int size = std::min(remaining, max_size); size >= 1; --size) {
    for (int mult = 1; mult * size <= remaining; ++mult) {
      cur.push_back({size, mult, false});
      partitions_by_multiplicity(remaining - mult * size, size - 1, cur, fn);
      cur.pop_back();
    }
  }
}

}  // namespace detail

/// Calls fn(const Overpartition&) once for every overpartition of n, in no
/// particular order. Partitions are built as size/multiplicity lists first;
/// each one is then expanded over all 2^{distinct sizes} overline choices.
template <class Fn>
void for_each_overpartition(int n, Convention convention, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("for_each_overpartition: negative weight");
  std::vector<Overpartition::Entry> cur;
  auto expand = [&](const std::vector<Overpartition::Entry>& shape) {
    const std::size_t d = shape.size();
    if (d >= 31) throw std::length_error("for_each_overpartition: too many distinct sizes");
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
      std::vector<Overpartition::Entry> entries = shape;
      for (std::size_t i = 0; i < d; ++i) entries[i].overlined = (mask >> i) & 1u;
      fn(static_cast<const Overpartition&>(Overpartition::from_entries(std::move(entries), convention)));
    }
  };
  detail::partitions_by_multiplicity(n, n, cur, expand);
}

/// All overpartitions of n ordered lexicographically by canonical text.
inline std::vector<Overpartition> overpartitions_of(int n, Convention convention = Convention::LastOccurrence) {
  std::vector<std::pair<std::string, Overpartition>> keyed;
  for_each_overpartition(n, convention, [&](const Overpartition& pi) { keyed.emplace_back(to_string(pi), pi); });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Overpartition> out;
  out.reserve(keyed.size());
  for (auto& [key, pi] : keyed) out.push_back(std::move(pi));
  return out;
}

/// Overpartitions of n in the class, lexicographic on canonical text. L uses
/// LastOccurrence, F uses FirstOccurrence; `all` uses the given convention.
inline std::vector<Overpartition> enumerate_class(int n, ClassTag tag,
                                                  Convention all_convention = Convention::LastOccurrence) {
  const Convention c = tag.kind == ClassTag::Kind::All ? all_convention : tag.convention();
  std::vector<Overpartition> out = overpartitions_of(n, c);
  std::erase_if(out, [&](const Overpartition& pi) { return !is_member(pi, tag); });
  return out;
}

namespace detail {

// Grows a basis element from its smallest part upward. `rev` holds the parts
// from position m down to the current one.
template <class Fn>
void grow_basis(Family family, int k, int m, long max_weight, std::vector<Part>& rev, long weight, Fn& fn) {
  const int placed = static_cast<int>(rev.size());
  if (placed == m) {
    std::vector<Part> parts(rev.rbegin(), rev.rend());
    fn(static_cast<const Overpartition&>(Overpartition::from_parts(parts, convention_of(family))));
    return;
  }
  const int i = m - placed;  // 1-based position being filled
  auto place = [&](Part p) {
    // Every part still to be placed is at least p.size.
    if (weight + static_cast<long>(p.size) * (m - placed) > max_weight) return;
    rev.push_back(p);
    grow_basis(family, k, m, max_weight, rev, weight + p.size, fn);
    rev.pop_back();
  };
  if (placed == 0) {
    place({1, false});
    if (family == Family::BL || k == 1) place({1, true});
    return;
  }
  const Part below = rev.back();
  if (family == Family::BL) {
    place({below.size, false});
    if ((m - i) % k == 0) place({below.size + 1, true});
  } else {
    const int size = below.overlined ? below.size + 1 : below.size;
    place({size, false});
    if ((m - i) % k == k - 1) place({size, true});
  }
}

}  // namespace detail

/// Calls fn for each basis element of BL_k or BF_k with exactly m parts and
/// weight at most max_weight.
template <class Fn>
void for_each_basis_element(Family family, int k, int m, long max_weight, Fn&& fn) {
  if (k < 1) throw std::invalid_argument("basis_elements: k must be positive");
  if (m < 1) throw std::invalid_argument("basis_elements: m must be positive");
  std::vector<Part> rev;
  rev.reserve(static_cast<std::size_t>(m));
  detail::grow_basis(family, k, m, max_weight, rev, 0, fn);
}

/// All basis elements with exactly m parts, in growth order.
inline std::vector<Overpartition> basis_elements(Family family, int k, int m) {
  std::vector<Overpartition> out;
  for_each_basis_element(family, k, m, std::numeric_limits<long>::max(),
                         [&](const Overpartition& lam) { out.push_back(lam); });
  return out;
}

/// Partitions of n into exactly j distinct parts, each congruent to s mod k,
/// in decreasing lexicographic order.
inline std::vector<Partition> distinct_congruent_partitions(int n, int j, int k, int s) {
  if (k < 1 || s < 1 || s > k) throw std::invalid_argument("distinct_congruent_partitions: need 1 <= s <= k");
  if (j < 0 || n < 0) throw std::invalid_argument("distinct_congruent_partitions: negative argument");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int slots, int max_part) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    // Smallest admissible sum of `slots` distinct parts s, s+k, ...
    const long min_sum = static_cast<long>(slots) * s + static_cast<long>(k) * slots * (slots - 1) / 2;
    if (remaining < min_sum) return;
    int top = std::min(remaining, max_part);
    top -= detail::mod(top - s, k);
    for (int p = top; p >= s; p -= k) {
      cur.push_back(p);
      self(self, remaining - p, slots - 1, p - k);
      cur.pop_back();
    }
  };
  rec(rec, n, j, n);
  return out;
}

}  // namespace qpl
