#pragma once

// β-sets: finite sets of distinct nonnegative integers, viewed as bead
// positions on an abacus. Stored sorted decreasing; equality is set equality.

#include <string>
#include <vector>

#include "abacore/partition.hpp"

namespace abacore {

class BetaSet {
 public:
  BetaSet() = default;
  explicit BetaSet(std::vector<int> elements);

  const std::vector<int>& elements() const { return elems_; }  // decreasing
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int value) const;
  int max_element() const;  // -1 when empty

  friend bool operator==(const BetaSet&, const BetaSet&) = default;
  friend auto operator<=>(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<int> elems_;
};

// bead a swaps to the empty position b; length is a - b
struct BetaHook {
  int a = 0;
  int b = 0;
  int length() const { return a - b; }
  friend bool operator==(const BetaHook&, const BetaHook&) = default;
};

// with X = {a_1 > ... > a_t}: parts are the nonzero a_i - (t - i)
Partition partition_of(const BetaSet& x);

// the unique β-set of cardinality t for λ; t = length(λ) gives exactly the
// first-column hook lengths
BetaSet beta_set_for(const Partition& lam, int t);

// X^{+s}: add s to every element, then adjoin 0..s-1; preserves partition_of
BetaSet shift(const BetaSet& x, int s);

// all pairs (a,b) with a in X, 0 <= b < a, b not in X;
// enumerated a decreasing, b increasing
std::vector<BetaHook> hooks(const BetaSet& x);

BetaSet remove_hook(const BetaSet& x, BetaHook z);

// abacus push-up: runner j keeps its bead count at the lowest levels
BetaSet d_core(const BetaSet& x, int d);
Partition d_core_partition(const BetaSet& x, int d);

// balanced per-runner bead sets, reassembled into one β-set
BetaSet d_quotient(const BetaSet& x, int d);
Partition d_quotient_partition(const BetaSet& x, int d);

struct PartitionHookRef {
  Node corner;
  int length = 0;
  friend bool operator==(const PartitionHookRef&,
                         const PartitionHookRef&) = default;
};

// the hook of p(X) matching (a,b): row = position of a in X (1-indexed,
// decreasing), col = number of empty positions <= b; length preserved
PartitionHookRef partition_hook_of(const BetaSet& x, BetaHook z);

// d columns, one abacus position per cell, occupied positions bracketed
std::string abacus_render(const BetaSet& x, int d);

}  // namespace abacore
