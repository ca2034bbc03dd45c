#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "abacore/partition.hpp"
#include "abacore/beta_set.hpp"
#include "abacore/verify.hpp"
#include "support.hpp"

using namespace abacore;

TEST_CASE("construction validates part lists") {
  CHECK(Partition{}.empty());
  CHECK(Partition({5, 5, 2}).size() == 12);
  CHECK(Partition({5, 5, 2}).length() == 3);
  CHECK(Partition({5, 5, 2}).part(3) == 2);
  CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("enumeration matches the recursive count and is duplicate-free") {
  const long long known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
  for (int n = 0; n <= 14; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(static_cast<long long>(all.size()) == known[n]);
    CHECK(static_cast<long long>(all.size()) == testing::partition_count(n));
    std::set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const Partition& lam : all) CHECK(lam.size() == n);
  }
}

TEST_CASE("hook lengths on a fixed diagram") {
  const Partition lam({7, 5, 4, 1});
  CHECK(hook_length_at(lam, {1, 1}) == 10);
  CHECK(hook_length_at(lam, {2, 3}) == 4);
  CHECK(hook_length_at(lam, {4, 1}) == 1);
  CHECK(arm_length(lam, {1, 2}) == 5);
  CHECK(leg_length(lam, {1, 2}) == 2);
  CHECK(hook_lengths_direct(lam) ==
        Multiset<int>({1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 7, 7, 8, 10}));
  CHECK_THROWS_AS(hook_length_at(lam, {1, 8}), std::invalid_argument);
  CHECK_THROWS_AS(hook_length_at(lam, {5, 1}), std::invalid_argument);
}

TEST_CASE("hook multiset has one entry per cell and survives conjugation") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      CHECK(static_cast<int>(hook_lengths_direct(lam).size()) == n);
      CHECK(hook_lengths_direct(conjugate(lam)) == hook_lengths_direct(lam));
      CHECK(conjugate(conjugate(lam)) == lam);
    }
  CHECK(conjugate(Partition({7, 5, 4, 1})) == Partition({4, 3, 3, 3, 2, 1, 1}));
}

TEST_CASE("residues and hand/foot residues") {
  CHECK(residue({1, 1}, 3) == 0);
  CHECK(residue({1, 4}, 3) == 0);
  CHECK(residue({4, 1}, 3) == 0);
  CHECK(residue({2, 1}, 3) == 2);  // (col - row) mod d, kept in [0, d)
  const Partition lam({3, 2, 2, 2});
  const Partition conj = conjugate(lam);
  for (int d = 2; d <= 5; ++d)
    for (int r = 1; r <= lam.length(); ++r)
      for (int c = 1; c <= lam.part(r); ++c) {
        const HandFoot hf = hand_foot_residues(lam, {r, c}, d);
        CHECK(hf.hand == residue({r, lam.part(r)}, d));
        CHECK(hf.foot == residue({conj.part(c), c}, d));
      }
}

TEST_CASE("character degrees: fixed values and the square sum") {
  CHECK(character_degree(Partition{}) == 1);
  CHECK(character_degree(Partition({6})) == 1);
  CHECK(character_degree(Partition({1, 1, 1, 1})) == 1);
  CHECK(character_degree(Partition({2, 1})) == 2);
  CHECK(character_degree(Partition({7, 5, 4, 1})) == 1050192);
  for (int n = 0; n <= 8; ++n) {
    BigInt sum = 0;
    for (const Partition& lam : enumerate_partitions(n)) {
      const BigInt deg = character_degree(lam);
      sum += deg * deg;
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("degrees match the standard-tableaux backtracking counter") {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(character_degree(lam) == testing::count_standard_tableaux(lam));
}

TEST_CASE("removal core is order-independent and matches the abacus core") {
  const Partition fixed({7, 5, 4, 1});
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(d_core_by_removal(fixed, 3, seed) == Partition({4, 2, 1, 1}));
  CHECK(d_core_by_removal(fixed, 3, std::vector<int>{0, 0, 0, 0, 0}) ==
        Partition({4, 2, 1, 1}));
  CHECK(d_core_by_removal(fixed, 3, std::vector<int>{1, 2, 1, 2, 1}) ==
        Partition({4, 2, 1, 1}));
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const BetaSet x = random_beta_set(rng, 20, 7);
    const Partition lam = partition_of(x);
    const int d = 2 + rng.below(4);
    const Partition via_abacus = d_core_partition(beta_set_for(lam, lam.length()), d);
    for (int k = 0; k < 5; ++k)
      CHECK(d_core_by_removal(lam, d, rng.next()) == via_abacus);
  }
}

TEST_CASE("quotient components of the worked partition") {
  const auto comps = partition_d_quotient(Partition({7, 5, 4, 1}), 3);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == Partition({1}));
  CHECK(comps[1] == Partition{});
  CHECK(comps[2] == Partition({1, 1}));
}

TEST_CASE("size splits into core size plus d times total component size") {
  for (int n = 0; n <= 10; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      for (int d = 2; d <= 5; ++d) {
        const Partition core = d_core_by_removal(lam, d, 7u);
        int total = 0;
        for (const Partition& comp : partition_d_quotient(lam, d))
          total += comp.size();
        CHECK(lam.size() == core.size() + d * total);
      }
}

TEST_CASE("core hooks need not embed into the original hooks") {
  // The (2d,1^{d+1}) family: 2d+1 is a hook length of (2d,1) but not of the
  // larger partition, so hook-multiset containment fails for these pairs.
  for (int d = 2; d <= 4; ++d) {
    std::vector<int> parts{2 * d};
    for (int k = 0; k < d + 1; ++k) parts.push_back(1);
    const Partition lam(parts);
    const Partition mu({2 * d, 1});
    const auto h_lam = hook_lengths_direct(lam);
    const auto h_mu = hook_lengths_direct(mu);
    CHECK(h_mu.contains(Multiset<int>({2 * d + 1})));
    CHECK_FALSE(h_lam.contains(Multiset<int>({2 * d + 1})));
    CHECK_FALSE(h_lam.contains(h_mu));
  }
}
