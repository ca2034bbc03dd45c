#pragma once

// d-symbols: ordered d-tuples of β-sets, with symbol hooks, hook removal,
// and the balanced-quotient / core decomposition.

#include <vector>

#include "abacore/beta_set.hpp"
#include "abacore/partition.hpp"

namespace abacore {

class DSymbol {
 public:
  explicit DSymbol(std::vector<BetaSet> rows);

  int d() const { return static_cast<int>(rows_.size()); }
  const std::vector<BetaSet>& rows() const { return rows_; }
  const BetaSet& row(int i) const { return rows_.at(i); }  // 0-indexed
  std::vector<int> row_sizes() const;

  friend bool operator==(const DSymbol&, const DSymbol&) = default;

 private:
  std::vector<BetaSet> rows_;
};

// quadruple (a,b,i,j): bead a of row i against empty position b of row j.
// Plain data; validity (a >= b, membership, i > j when short) is checked by
// the producing/consuming operations, so that "reversed" short quadruples
// can also be represented.
struct SymbolHook {
  int a = 0;
  int b = 0;
  int i = 0;
  int j = 0;
  int length() const { return a - b; }
  bool is_short() const { return a == b; }
  // class index (i-j) mod d; note the twisted-core machinery in ell.hpp
  // classifies by (j-i) mod d instead — see le_hooks
  int e_class(int d) const { return ((i - j) % d + d) % d; }
  friend bool operator==(const SymbolHook&, const SymbolHook&) = default;
};

// runner split: row j of the result holds {k : j + k*d in x}
DSymbol to_symbol(const BetaSet& x, int d);
BetaSet to_beta_set(const DSymbol& s);

Partition partition_of(const DSymbol& s);

// complete enumeration, short hooks included; ordered by row i ascending,
// a descending, then j ascending, b ascending
std::vector<SymbolHook> hooks(const DSymbol& s);

std::vector<SymbolHook> long_hooks(const DSymbol& s);

// hooks with fixed (i, j) and length ell
std::vector<SymbolHook> hooks_in_class(const DSymbol& s, int i, int j,
                                       int ell);

// closed-form size of hooks_in_class: |X_i| - |X_i ∩ X_j^{+ell}|,
// and 0 when ell = 0 with i <= j
int class_count(const DSymbol& s, int i, int j, int ell);

DSymbol remove_hook(const DSymbol& s, SymbolHook z);

// the balanced symbol with row partitions κ_0..κ_{d-1}; every row gets the
// common cardinality r = max length of the κ_i
DSymbol from_partitions(const std::vector<Partition>& kappas);

// all rows of equal size and some row omits 0
bool is_balanced(const DSymbol& s);

DSymbol balanced_quotient(const DSymbol& s);  // from_partitions of row partitions
DSymbol core(const DSymbol& s);               // ([x_0],...,[x_{d-1}]), x_i = |X_i|
Partition quotient_partition(const DSymbol& s);
Partition core_partition(const DSymbol& s);

// inverse of S -> (balanced_quotient, core): row i is the β-set of
// cardinality |C row i| for the i-th row partition of q
DSymbol reconstruct(const DSymbol& q, const DSymbol& c);

// S^{+s}: shift every row; hook lengths and classes are unchanged
DSymbol shift_symbol(const DSymbol& s, int sh);

// short hooks (a,a,i,j) between rows i > j: one per element of X_i \ X_j.
// reversed_short_hooks gives the i < j counterparts (not members of hooks(s))
std::vector<SymbolHook> short_hooks(const DSymbol& s, int i, int j);
std::vector<SymbolHook> reversed_short_hooks(const DSymbol& s, int i, int j);

// length-scaling correspondence with the hooks of the underlying β-set:
// (a,b) of to_beta_set(s) matches (a/d, b/d, a mod d, b mod d)
SymbolHook symbol_hook_of(const DSymbol& s, BetaHook z);
BetaHook beta_hook_of(const DSymbol& s, SymbolHook z);

// the diagram cell of p(S) carrying hook z (through the β-set of s)
PartitionHookRef diagram_position(const DSymbol& s, SymbolHook z);

}  // namespace abacore
