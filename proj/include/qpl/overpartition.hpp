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
#include <cctype>
#include <charconv>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpl {

/// Which occurrence of a repeated size carries the overline.
enum class Convention { LastOccurrence, FirstOccurrence };

/// One part of an overpartition as it sits in the non-increasing part list.
struct Part {
  int size = 0;
  bool overlined = false;

  friend bool operator==(const Part&, const Part&) = default;
};

/// An overpartition stored as size -> (multiplicity, overlined).
///
/// Storage does not depend on the convention: the tag only decides where the
/// overlined copy of a size sits when the parts are laid out in a list
/// (last copy under LastOccurrence, first copy under FirstOccurrence).
class Overpartition {
 public:
  struct Entry {
    int size = 0;
    int multiplicity = 0;
    bool overlined = false;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Overpartition() = default;
  explicit Overpartition(Convention convention) : convention_(convention) {}

  /// Builds from entries in any order. Sizes must be distinct and positive,
  /// multiplicities positive.
  static Overpartition from_entries(std::vector<Entry> entries,
                                    Convention convention = Convention::LastOccurrence) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.size > b.size; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].size <= 0) throw std::invalid_argument("overpartition: part size must be positive");
      if (entries[i].multiplicity <= 0)
        throw std::invalid_argument("overpartition: multiplicity must be positive");
      if (i > 0 && entries[i].size == entries[i - 1].size)
        throw std::invalid_argument("overpartition: duplicate size entry");
    }
    Overpartition result(convention);
    result.entries_ = std::move(entries);
    return result;
  }

  /// Builds from a non-increasing part list. At most one copy of each size may
  /// be overlined; its position inside the run of equal sizes is not checked.
  static Overpartition from_parts(std::span<const Part> parts,
                                  Convention convention = Convention::LastOccurrence) {
    Overpartition result(convention);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Part& p = parts[i];
      if (p.size <= 0) throw std::invalid_argument("overpartition: part size must be positive");
      if (i > 0 && p.size > parts[i - 1].size)
        throw std::invalid_argument("overpartition: parts must be non-increasing");
      if (result.entries_.empty() || result.entries_.back().size != p.size) {
        result.entries_.push_back({p.size, 1, p.overlined});
      } else {
        Entry& e = result.entries_.back();
        if (p.overlined && e.overlined)
          throw std::invalid_argument("overpartition: size " + std::to_string(p.size) +
                                      " overlined twice");
        ++e.multiplicity;
        e.overlined = e.overlined || p.overlined;
      }
    }
    return result;
  }

  /// Entries ordered by decreasing size.
  std::span<const Entry> entries() const noexcept { return entries_; }
  Convention convention() const noexcept { return convention_; }
  bool empty() const noexcept { return entries_.empty(); }

  Overpartition with_convention(Convention c) const {
    Overpartition copy = *this;
    copy.convention_ = c;
    return copy;
  }

  long weight() const noexcept {
    long w = 0;
    for (const Entry& e : entries_) w += static_cast<long>(e.size) * e.multiplicity;
    return w;
  }

  /// Number of parts.
  int length() const noexcept {
    int n = 0;
    for (const Entry& e : entries_) n += e.multiplicity;
    return n;
  }

  int overlined_count() const noexcept {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                          [](const Entry& e) { return e.overlined; }));
  }

  /// f_t + f_{t-bar}: number of parts of the given size.
  int multiplicity(int size) const noexcept {
    const Entry* e = find(size);
    return e ? e->multiplicity : 0;
  }

  bool is_overlined(int size) const noexcept {
    const Entry* e = find(size);
    return e && e->overlined;
  }

  /// 0 for the empty overpartition.
  int largest_size() const noexcept { return entries_.empty() ? 0 : entries_.front().size; }
  int smallest_size() const noexcept { return entries_.empty() ? 0 : entries_.back().size; }

  /// Non-increasing part list with the overline placed per the convention.
  std::vector<Part> parts() const {
    std::vector<Part> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const Entry& e : entries_) {
      for (int c = 0; c < e.multiplicity; ++c) {
        const bool here = convention_ == Convention::LastOccurrence ? c == e.multiplicity - 1 : c == 0;
        out.push_back({e.size, e.overlined && here});
      }
    }
    return out;
  }

  friend bool operator==(const Overpartition&, const Overpartition&) = default;

 private:
  const Entry* find(int size) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), size,
                               [](const Entry& e, int s) { return e.size > s; });
    return it != entries_.end() && it->size == size ? &*it : nullptr;
  }

  std::vector<Entry> entries_;
  Convention convention_ = Convention::LastOccurrence;
};

/// Canonical text: comma-separated sizes, "~" after the overlined copy.
inline std::string to_string(const Overpartition& pi) {
  std::string out;
  bool first = true;
  for (const Part& p : pi.parts()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(p.size);
    if (p.overlined) out += '~';
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Overpartition& pi) {
  return os << '(' << to_string(pi) << ')';
}

/// Parses "3~,1" style text. Whitespace around tokens is ignored.
inline Overpartition parse_overpartition(std::string_view text,
                                         Convention convention = Convention::LastOccurrence) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<Part> parts;
  if (text.empty()) return Overpartition(convention);

  while (true) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    Part part;
    if (!token.empty() && token.back() == '~') {
      part.overlined = true;
      token = trim(token.substr(0, token.size() - 1));
    }
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("overpartition: bad token '" + std::string(token) + "'");
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), part.size);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("overpartition: bad token '" + std::string(token) + "'");
    if (part.size <= 0) throw std::invalid_argument("overpartition: part sizes must be positive");
    parts.push_back(part);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Overpartition::from_parts(parts, convention);
}

/// An ordinary partition: non-increasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition: parts must be non-increasing");
    }
  }

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  long weight() const noexcept {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  /// Number of parts equal to t.
  int frequency(int t) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), t));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << to_string(p) << ')';
}

/// Ferrers transpose: the i-th part counts parts >= i.
inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

/// Overpartition conjugate. The i-th part of the (last-occurrence) list
/// contributes |pi_i| - |pi_{i+1}| parts of size i to the result, one of them
/// overlined exactly when pi_i is. The result uses LastOccurrence.
inline Overpartition conjugate(const Overpartition& pi) {
  const std::vector<Part> parts = pi.with_convention(Convention::LastOccurrence).parts();
  const int length = static_cast<int>(parts.size());
  std::vector<Overpartition::Entry> entries;
  for (int t = 1; t <= length; ++t) {
    const Part& cur = parts[static_cast<std::size_t>(t - 1)];
    const int next = t < length ? parts[static_cast<std::size_t>(t)].size : 0;
    const int count = cur.size - next;
    if (count > 0) entries.push_back({t, count, cur.overlined});
  }
  return Overpartition::from_entries(std::move(entries), Convention::LastOccurrence);
}

/// r-chain minimal excludant size: least t >= 1 with no part of size in
/// [t, t + r - 1].
inline int mes(const Overpartition& pi, int r) {
  if (r < 1) throw std::invalid_argument("mes: r must be positive");
  int t = 1;
  const auto entries = pi.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->size >= t + r) break;
    if (it->size >= t) t = it->size + 1;
  }
  return t;
}

/// r-chain maximal excludant size: greatest t with r <= t < largest size and no
/// part of size in [t - r + 1, t]; 0 when there is none.
inline int maes(const Overpartition& pi, int r) {
  if (r < 1) throw std::invalid_argument("maes: r must be positive");
  const auto entries = pi.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int above = entries[i].size;
    const int below = i + 1 < entries.size() ? entries[i + 1].size : 0;
    // Largest candidate in this gap is above - 1; it needs r free sizes.
    if (above - below - 1 >= r) return above - 1;
  }
  return 0;
}

/// Largest j with at least r + 1 parts of size j, or 0 (always repeating).
inline int largest_repeating_size(const Overpartition& pi, int r) {
  if (r < 1) throw std::invalid_argument("largest_repeating_size: r must be positive");
  for (const auto& e : pi.entries())
    if (e.multiplicity >= r + 1) return e.size;
  return 0;
}

inline std::optional<int> smallest_positive_repeating_size(const Overpartition& pi, int r) {
  if (r < 1) throw std::invalid_argument("smallest_positive_repeating_size: r must be positive");
  const auto entries = pi.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    if (it->multiplicity >= r + 1) return it->size;
  return std::nullopt;
}

enum class Bound { Strict, Inclusive };

/// Parts of size > t (Strict) or >= t (Inclusive).
inline int parts_of_size_above(const Overpartition& pi, int t, Bound bound = Bound::Strict) {
  int n = 0;
  for (const auto& e : pi.entries())
    if (e.size > t || (bound == Bound::Inclusive && e.size == t)) n += e.multiplicity;
  return n;
}

}  // namespace qpl
