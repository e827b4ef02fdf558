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

#include <stdexcept>
#include <string>

#include "qpl/overpartition.hpp"

namespace qpl {

/// Basis families of the two separable classes: BL_k spans L_k, BF_k spans F_k.
enum class Family { BL, BF };

inline Convention convention_of(Family f) noexcept {
  return f == Family::BL ? Convention::LastOccurrence : Convention::FirstOccurrence;
}

inline std::string to_string(Family f) { return f == Family::BL ? "BL" : "BF"; }

/// Selects all overpartitions, L_k-overpartitions or F_k-overpartitions.
struct ClassTag {
  enum class Kind { All, L, F };

  Kind kind = Kind::All;
  int k = 1;

  static ClassTag all() { return {Kind::All, 1}; }
  static ClassTag L(int k) { return {Kind::L, checked(k)}; }
  static ClassTag F(int k) { return {Kind::F, checked(k)}; }

  /// Overline convention the class is defined under.
  Convention convention() const noexcept {
    return kind == Kind::F ? Convention::FirstOccurrence : Convention::LastOccurrence;
  }

  friend bool operator==(const ClassTag&, const ClassTag&) = default;

 private:
  static int checked(int k) {
    if (k < 1) throw std::invalid_argument("class tag: k must be positive");
    return k;
  }
};

inline std::string to_string(const ClassTag& tag) {
  switch (tag.kind) {
    case ClassTag::Kind::All: return "all";
    case ClassTag::Kind::L: return "L" + std::to_string(tag.k);
    case ClassTag::Kind::F: return "F" + std::to_string(tag.k);
  }
  return "?";
}

namespace detail {

inline int mod(long a, int k) {
  const long m = a % k;
  return static_cast<int>(m < 0 ? m + k : m);
}

// Count form of the index test. Under LastOccurrence the overlined copy of t
// has l - i = #(parts < t); under FirstOccurrence l - i + 1 = #(parts <= t).
inline bool member_by_counts(const Overpartition& pi, ClassTag tag) {
  if (tag.kind == ClassTag::Kind::All) return true;
  int below = 0;  // parts strictly smaller than the current entry
  const auto entries = pi.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->overlined) {
      const int count = tag.kind == ClassTag::Kind::L ? below : below + it->multiplicity;
      if (mod(count, tag.k) != 0) return false;
    }
    below += it->multiplicity;
  }
  return true;
}

}  // namespace detail

/// Membership via an explicit scan of the part list positions.
inline bool is_member_positional(const Overpartition& pi, ClassTag tag) {
  if (tag.kind == ClassTag::Kind::All) return true;
  const auto parts = pi.with_convention(tag.convention()).parts();
  const int length = static_cast<int>(parts.size());
  const int target = tag.kind == ClassTag::Kind::L ? 0 : detail::mod(-1, tag.k);
  for (int i = 1; i <= length; ++i)
    if (parts[static_cast<std::size_t>(i - 1)].overlined && detail::mod(length - i, tag.k) != target)
      return false;
  return true;
}

/// L_k: every overlined part sits at an index i with l - i = 0 (mod k).
/// F_k: every overlined part sits at an index i with l - i = -1 (mod k).
/// The overpartition's convention must match the class.
inline bool is_member(const Overpartition& pi, ClassTag tag) {
  if (tag.kind != ClassTag::Kind::All && pi.convention() != tag.convention())
    throw std::invalid_argument("is_member: convention does not match class " + to_string(tag));
  return detail::member_by_counts(pi, tag);
}

}  // namespace qpl
