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

// Naive reference implementations written straight from the definitions.
// They share no algorithms with the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qpl/overpartition.hpp"

namespace oracle {

using qpl::Convention;
using qpl::Part;
using Parts = std::vector<Part>;

// Every overpartition of n as an explicit non-increasing part list. Under
// LastOccurrence only the last copy of a size may carry the overline, under
// FirstOccurrence only the first.
inline std::vector<Parts> overpartitions(int n, Convention c) {
  std::vector<Parts> out;
  Parts cur;
  auto rec = [&](auto&& self, int remaining, int max_size) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int size = std::min(remaining, max_size); size >= 1; --size)
      for (int ov = 0; ov < 2; ++ov) {
        const bool overlined = ov == 1;
        if (!cur.empty() && cur.back().size == size) {
          if (c == Convention::LastOccurrence && cur.back().overlined) continue;
          if (c == Convention::FirstOccurrence && overlined) continue;
        }
        cur.push_back({size, overlined});
        self(self, remaining - size, size);
        cur.pop_back();
      }
  };
  rec(rec, n, n);
  return out;
}

// Overpartition counts from the product prod (1 + q^i) / (1 - q^i): each size
// is absent or present with any multiplicity and an optional overline.
inline std::vector<std::int64_t> overpartition_counts(int n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int size = 1; size <= n; ++size) {
    std::vector<std::int64_t> next = c;
    for (int w = 0; w <= n; ++w)
      for (int mult = 1; w + mult * size <= n; ++mult) next[w + mult * size] += 2 * c[w];
    c = std::move(next);
  }
  return c;
}

inline std::set<int> sizes(const Parts& p) {
  std::set<int> s;
  for (const Part& x : p) s.insert(x.size);
  return s;
}

inline int count_of(const Parts& p, int size) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [&](const Part& x) { return x.size == size; }));
}

inline int mes(const Parts& p, int r) {
  const std::set<int> s = sizes(p);
  for (int t = 1;; ++t) {
    bool clear = true;
    for (int u = t; u < t + r; ++u) clear = clear && !s.count(u);
    if (clear) return t;
  }
}

inline int maes(const Parts& p, int r) {
  if (p.empty()) return 0;
  const std::set<int> s = sizes(p);
  const int largest = p.front().size;
  for (int t = largest - 1; t >= std::max(r, 1); --t) {
    bool clear = true;
    for (int u = t - r + 1; u <= t; ++u) clear = clear && !s.count(u);
    if (clear) return t;
  }
  return 0;
}

inline int largest_repeating(const Parts& p, int r) {
  int best = 0;
  for (int t : sizes(p))
    if (count_of(p, t) >= r + 1) best = std::max(best, t);
  return best;
}

inline int smallest_positive_repeating(const Parts& p, int r) {
  for (int t : sizes(p))
    if (count_of(p, t) >= r + 1) return t;
  return 0;
}

inline int above(const Parts& p, int t, bool inclusive) {
  return static_cast<int>(
      std::count_if(p.begin(), p.end(), [&](const Part& x) { return inclusive ? x.size >= t : x.size > t; }));
}

// Definitions 1.4 / 1.5 by index: the overlined part at 1-based position i of
// an l-part list needs l - i = 0 (L) or -1 (F) modulo k.
inline bool in_class(const Parts& p, bool L, int k) {
  const int l = static_cast<int>(p.size());
  for (int i = 1; i <= l; ++i) {
    if (!p[i - 1].overlined) continue;
    const int v = ((l - i) % k + k) % k;
    if (v != (L ? 0 : k - 1)) return false;
  }
  return true;
}

// Basis membership from the definitions of BL_k and BF_k.
inline bool in_basis(const Parts& p, bool L, int k) {
  if (p.empty() || !in_class(p, L, k)) return false;
  const Part last = p.back();
  if (last.size != 1) return false;
  if (!L && k > 1 && last.overlined) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Part a = p[i], b = p[i + 1];
    const bool strict = L ? !a.overlined : !b.overlined;
    if (strict && !(a.size < b.size + 1)) return false;
    if (!strict && !(a.size <= b.size + 1)) return false;
  }
  return true;
}

// Every (lambda, mu) with pi = lambda + mu, lambda in the basis, found by
// trying every basis candidate of the right length.
struct Split {
  Parts basis;
  std::vector<int> padding;
};

inline std::vector<Split> all_decompositions(const Parts& pi, bool L, int k,
                                             const std::vector<Parts>& candidates) {
  std::vector<Split> out;
  for (const Parts& lam : candidates) {
    if (lam.size() != pi.size()) continue;
    std::vector<int> mu(pi.size());
    bool ok = true;
    for (std::size_t i = 0; i < pi.size() && ok; ++i) {
      mu[i] = pi[i].size - lam[i].size;
      ok = mu[i] >= 0 && pi[i].overlined == lam[i].overlined && (i == 0 || mu[i] <= mu[i - 1]);
    }
    if (ok && in_basis(lam, L, k)) out.push_back({lam, mu});
  }
  return out;
}

// Partitions of n into exactly j distinct parts congruent to s mod k, by
// subset search over the admissible part sizes.
inline std::set<std::vector<int>> distinct_congruent(int n, int j, int k, int s) {
  std::vector<int> pool;
  for (int v = s; v <= n; v += k) pool.push_back(v);
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t idx, int sum) -> void {
    if (static_cast<int>(cur.size()) == j) {
      if (sum == n) {
        std::vector<int> sorted(cur.rbegin(), cur.rend());
        out.insert(sorted);
      }
      return;
    }
    for (std::size_t i = idx; i < pool.size() && sum + pool[i] <= n; ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1, sum + pool[i]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline qpl::Overpartition make(const Parts& p, Convention c) { return qpl::Overpartition::from_parts(p, c); }

}  // namespace oracle
