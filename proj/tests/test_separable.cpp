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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "qpl/enumeration.hpp"
#include "qpl/separable.hpp"

namespace {

using qpl::ClassTag;
using qpl::Convention;
using qpl::DecompositionWitness;
using qpl::Family;
using qpl::Overpartition;
using qpl::Partition;

Overpartition last(const char* text) { return qpl::parse_overpartition(text, Convention::LastOccurrence); }
Overpartition first(const char* text) { return qpl::parse_overpartition(text, Convention::FirstOccurrence); }

TEST(BasisTest, Examples) {
  EXPECT_TRUE(qpl::is_basis_element(last("2,2,2~,1,1"), Family::BL, 2));
  EXPECT_TRUE(qpl::is_basis_element(first("3,2~,2,1~,1"), Family::BF, 2));
  EXPECT_FALSE(qpl::is_basis_element(last("2,1"), Family::BL, 1));
  EXPECT_FALSE(qpl::is_basis_element(last(""), Family::BL, 1));
  EXPECT_FALSE(qpl::is_basis_element(first("1~"), Family::BF, 2));
  EXPECT_TRUE(qpl::is_basis_element(first("1~"), Family::BF, 1));
}

TEST(Decompose, Examples) {
  const DecompositionWitness w = qpl::decompose(last("4,4,3~,2,1"), Family::BL, 2);
  EXPECT_EQ(w.basis, last("2,2,2~,1,1"));
  EXPECT_EQ(w.padding, (std::vector<int>{2, 2, 1, 1, 0}));

  const DecompositionWitness b = qpl::decompose(last("2,2,2~,1,1"), Family::BL, 2);
  EXPECT_EQ(b.basis, last("2,2,2~,1,1"));
  EXPECT_EQ(b.padding, std::vector<int>(5, 0));

  const DecompositionWitness ones = qpl::decompose(last("1,1,1,1"), Family::BL, 2);
  EXPECT_EQ(ones.basis, last("1,1,1,1"));
  EXPECT_EQ(ones.padding, std::vector<int>(4, 0));

  EXPECT_THROW(qpl::decompose(last("3~,1"), Family::BL, 2), std::invalid_argument);
}

TEST(Compose, Examples) {
  EXPECT_EQ(qpl::compose({last("1~"), {3}}), last("4~"));
  EXPECT_EQ(qpl::compose({last("2,2,2~,1,1"), {2, 2, 1, 1, 0}}), last("4,4,3~,2,1"));
  EXPECT_EQ(qpl::compose({last("1,1"), {0, 0}}), last("1,1"));
  EXPECT_EQ(qpl::compose({last("1,1"), {1}}), last("2,1"));
  EXPECT_THROW(qpl::compose({last("1,1"), {0, 1}}), std::invalid_argument);
  EXPECT_THROW(qpl::compose({last("1"), {1, 1}}), std::invalid_argument);
  EXPECT_THROW(qpl::compose({last("1"), {-1}}), std::invalid_argument);
}

TEST(Decompose, RoundTripOnAllClassMembers) {
  for (int k = 1; k <= 3; ++k)
    for (Family family : {Family::BL, Family::BF}) {
      const ClassTag tag = qpl::class_of(family, k);
      for (int n = 0; n <= 20; ++n)
        qpl::for_each_overpartition(n, tag.convention(), [&](const Overpartition& pi) {
          if (!qpl::is_member(pi, tag)) return;
          const DecompositionWitness w = qpl::decompose(pi, family, k);
          ASSERT_EQ(qpl::compose(w), pi);
          if (!pi.empty()) {
            ASSERT_TRUE(qpl::is_basis_element(w.basis, family, k));
            ASSERT_EQ(qpl::decompose(qpl::compose(w), family, k), w);
          }
        });
    }
}

TEST(Decompose, UniqueByExhaustiveSearch) {
  for (int k = 1; k <= 3; ++k)
    for (bool L : {true, false}) {
      const Family family = L ? Family::BL : Family::BF;
      const Convention c = qpl::convention_of(family);
      std::vector<oracle::Parts> candidates;
      for (int w = 1; w <= 12; ++w)
        for (const auto& parts : oracle::overpartitions(w, c))
          if (oracle::in_basis(parts, L, k)) candidates.push_back(parts);
      for (int n = 1; n <= 12; ++n)
        for (const auto& parts : oracle::overpartitions(n, c)) {
          if (!oracle::in_class(parts, L, k)) continue;
          const auto splits = oracle::all_decompositions(parts, L, k, candidates);
          ASSERT_EQ(splits.size(), 1u) << qpl::to_string(oracle::make(parts, c));
          const DecompositionWitness w = qpl::decompose(oracle::make(parts, c), family, k);
          ASSERT_EQ(w.basis, oracle::make(splits[0].basis, c));
          ASSERT_EQ(w.padding, splits[0].padding);
        }
    }
}

// Non-members have no split at all.
TEST(Decompose, NonMembersHaveNoSplit) {
  for (int k = 2; k <= 3; ++k)
    for (bool L : {true, false}) {
      const Convention c = L ? Convention::LastOccurrence : Convention::FirstOccurrence;
      std::vector<oracle::Parts> candidates;
      for (int w = 1; w <= 9; ++w)
        for (const auto& parts : oracle::overpartitions(w, c))
          if (oracle::in_basis(parts, L, k)) candidates.push_back(parts);
      for (int n = 1; n <= 9; ++n)
        for (const auto& parts : oracle::overpartitions(n, c))
          if (!oracle::in_class(parts, L, k)) {
            ASSERT_TRUE(oracle::all_decompositions(parts, L, k, candidates).empty());
          }
    }
}

TEST(BasisGf, Examples) {
  EXPECT_EQ(qpl::basis_gf(Family::BL, 2, 1, 1, true, 6), qpl::ZQPoly::monomial(6, 1, 1));
  EXPECT_EQ(qpl::basis_gf(Family::BL, 2, 1, 1, false, 6), qpl::ZQPoly::monomial(6, 0, 1));
  // BF_2(2) = {(1,1), (1-bar,1)}: plain top gives q^2, overlined top z q^2.
  EXPECT_EQ(qpl::basis_gf(Family::BF, 2, 2, 1, false, 6), qpl::ZQPoly::monomial(6, 0, 2));
  EXPECT_EQ(qpl::basis_gf(Family::BF, 2, 2, 1, true, 6), qpl::ZQPoly::monomial(6, 1, 2));
  EXPECT_TRUE(qpl::basis_gf(Family::BF, 2, 3, 1, true, 6).is_zero());
}

// Where BL_k(k(m-1)+s, j) and BL_k(., j-bar) can be nonempty.
TEST(BasisGf, SupportOfBlFamilies) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 7; ++m)
      for (int s = 1; s <= k; ++s) {
        const int parts = k * (m - 1) + s;
        std::map<std::pair<int, bool>, int> seen;
        for (const auto& lam : qpl::basis_elements(Family::BL, k, parts)) {
          const qpl::Part top = lam.parts().front();
          ++seen[{top.size, top.overlined}];
        }
        for (const auto& [key, count] : seen) {
          const auto [j, overlined] = key;
          if (overlined) {
            EXPECT_EQ(s, 1) << k << ' ' << m << ' ' << j;
          }
          EXPECT_GE(m, j);
          if (!overlined && s == 1 && m >= 2) {
            EXPECT_GT(m, j) << k << ' ' << m << ' ' << j;
          }
        }
      }
}

TEST(BasisGf, SupportOfBfFamilies) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 7; ++m)
      for (int s = 1; s <= k; ++s) {
        const int parts = k * (m - 1) + s;
        for (const auto& lam : qpl::basis_elements(Family::BF, k, parts)) {
          const qpl::Part top = lam.parts().front();
          if (top.overlined) {
            EXPECT_EQ(s, k);
          }
          EXPECT_GE(m, top.size);
        }
      }
}

TEST(BasisGf, OverlinedTopIsZTimesPlainTop) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 6; ++m)
      for (int j = 1; j <= m + 1; ++j) {
        const int n = k * m * (m + 1);
        EXPECT_EQ(qpl::basis_gf(Family::BF, k, k * m, j, true, n),
                  qpl::basis_gf(Family::BF, k, k * m, j, false, n).shifted_z(1))
            << k << ' ' << m << ' ' << j;
      }
}

TEST(Toggle, Examples) {
  EXPECT_EQ(qpl::toggle_extreme_overline(last("1~"), Family::BL), last("1"));
  EXPECT_EQ(qpl::toggle_extreme_overline(last("2~,1,1~"), Family::BL), last("2~,1,1"));
  const Overpartition bf = first("2~,2,1~,1");
  const Overpartition toggled = qpl::toggle_extreme_overline(bf, Family::BF);
  EXPECT_EQ(toggled, first("2,2,1~,1"));
  EXPECT_TRUE(qpl::is_basis_element(bf, Family::BF, 2));
  EXPECT_TRUE(qpl::is_basis_element(toggled, Family::BF, 2));
  EXPECT_EQ(qpl::toggle_extreme_overline(toggled, Family::BF), bf);
  EXPECT_THROW(qpl::toggle_extreme_overline(last("2"), Family::BL), std::invalid_argument);
  EXPECT_THROW(qpl::toggle_extreme_overline(last(""), Family::BF), std::invalid_argument);
}

TEST(Bijection, Examples) {
  EXPECT_EQ(qpl::bl_bijection_to_distinct(last("1~"), 2, 1), Partition({1}));
  EXPECT_EQ(qpl::bl_bijection_to_distinct(last("2~,1,1~"), 2, 1), Partition({3, 1}));
  EXPECT_EQ(qpl::bl_bijection_to_distinct(last("1,1,1~"), 1, 1), Partition({3}));
  EXPECT_EQ(qpl::bf_bijection_to_distinct(first("1"), 1, 1), Partition({1}));
  EXPECT_EQ(qpl::bf_bijection_to_distinct(qpl::toggle_extreme_overline(first("1~,1"), Family::BF), 2, 2),
            Partition({2}));
  EXPECT_EQ(qpl::bf_bijection_to_distinct(first("2,1~,1"), 2, 1), Partition({3, 1}));
  EXPECT_THROW(qpl::bl_bijection_to_distinct(last("1"), 2, 1), std::invalid_argument);
  EXPECT_THROW(qpl::bf_bijection_to_distinct(first("1~,1"), 2, 2), std::invalid_argument);
  EXPECT_THROW(qpl::bl_bijection_to_distinct(last("1~"), 2, 3), std::invalid_argument);
}

// Primed/double-primed subsets at weight n whose image lands in D(n, j).
struct Sets {
  std::vector<Overpartition> bl_primed;   // smallest part 1-bar
  std::vector<Overpartition> bl_double;   // smallest part 1
  std::vector<Overpartition> bf_primed;   // overlined largest part
  std::vector<Overpartition> bf_double;   // plain largest part
};

Sets basis_sets(int n, int k, int s) {
  Sets out;
  for (int m = 1; m <= n; ++m) {
    if (qpl::detail::mod(m - s, k) != 0) continue;
    qpl::for_each_basis_element(Family::BL, k, m, n, [&](const Overpartition& lam) {
      if (lam.weight() != n) return;
      (lam.is_overlined(1) ? out.bl_primed : out.bl_double).push_back(lam);
    });
    qpl::for_each_basis_element(Family::BF, k, m, n, [&](const Overpartition& lam) {
      if (lam.weight() != n) return;
      (lam.is_overlined(lam.largest_size()) ? out.bf_primed : out.bf_double).push_back(lam);
    });
  }
  return out;
}

TEST(Bijection, BijectiveOntoDistinctCongruentParts) {
  for (int k = 1; k <= 3; ++k)
    for (int s = 1; s <= k; ++s)
      for (int n = 1; n <= 25; ++n) {
        const Sets sets = basis_sets(n, k, s);
        std::map<int, std::set<std::vector<int>>> bl_images, bf_images;
        std::map<int, int> bl_double_by_j, bf_primed_by_j;
        for (const auto& lam : sets.bl_primed) {
          const Partition nu = qpl::bl_bijection_to_distinct(lam, k, s);
          ASSERT_EQ(nu.weight(), n);
          ASSERT_EQ(nu.length(), lam.overlined_count());
          ASSERT_TRUE(bl_images[nu.length()].insert({nu.parts().begin(), nu.parts().end()}).second) << "not injective";
          ASSERT_EQ(qpl::distinct_to_bl(nu, k, s), lam);
        }
        for (const auto& lam : sets.bl_double) {
          const Overpartition primed = qpl::toggle_extreme_overline(lam, Family::BL);
          ASSERT_TRUE(qpl::is_basis_element(primed, Family::BL, k));
          ++bl_double_by_j[primed.overlined_count()];
        }
        for (const auto& lam : sets.bf_double) {
          const Partition nu = qpl::bf_bijection_to_distinct(lam, k, s);
          ASSERT_EQ(nu.weight(), n);
          ASSERT_EQ(nu.length(), lam.overlined_count() + 1);
          ASSERT_TRUE(bf_images[nu.length()].insert({nu.parts().begin(), nu.parts().end()}).second) << "not injective";
          ASSERT_EQ(qpl::distinct_to_bf(nu, k, s), lam);
        }
        for (const auto& lam : sets.bf_primed) {
          ASSERT_EQ(s, k);
          const Overpartition plain = qpl::toggle_extreme_overline(lam, Family::BF);
          ASSERT_TRUE(qpl::is_basis_element(plain, Family::BF, k));
          ++bf_primed_by_j[lam.overlined_count()];
        }
        for (int j = 1; j <= 7; ++j) {
          const auto expected = oracle::distinct_congruent(n, j, k, s);
          ASSERT_EQ(bl_images[j], expected) << "BL k=" << k << " s=" << s << " n=" << n << " j=" << j;
          ASSERT_EQ(bf_images[j], expected) << "BF k=" << k << " s=" << s << " n=" << n << " j=" << j;
          ASSERT_EQ(static_cast<std::size_t>(bl_double_by_j[j]), expected.size());
          if (s == k) {
            ASSERT_EQ(static_cast<std::size_t>(bf_primed_by_j[j]), expected.size());
          }
        }
      }
}

TEST(Bijection, InverseRejectsBadInput) {
  EXPECT_THROW(qpl::distinct_to_bl(Partition({2}), 2, 1), std::invalid_argument);
  EXPECT_THROW(qpl::distinct_to_bl(Partition({3, 3}), 2, 1), std::invalid_argument);
  EXPECT_THROW(qpl::distinct_to_bf(Partition(), 2, 1), std::invalid_argument);
}

}  // namespace
