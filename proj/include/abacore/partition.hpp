#pragma once

// Integer partitions and classical hook-length machinery on Young diagrams.
// Rows and columns of a diagram are 1-indexed from the top-left cell.

#include <cstdint>
#include <vector>

#include "abacore/multiset.hpp"
#include "abacore/numeric.hpp"

namespace abacore {

// Weakly decreasing positive parts; () is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }  // the partitioned number n
  bool empty() const { return parts_.empty(); }
  int part(int row) const { return parts_[row - 1]; }  // row is 1-indexed

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Diagram cell (row, col), both 1-indexed.
struct Node {
  int row = 0;
  int col = 0;
  friend bool operator==(const Node&, const Node&) = default;
};

bool diagram_contains(const Partition& lam, Node node);
int arm_length(const Partition& lam, Node node);
int leg_length(const Partition& lam, Node node);
int hook_length_at(const Partition& lam, Node node);  // arm + leg + 1

// all |lam| hook lengths, as a multiset
Multiset<int> hook_lengths_direct(const Partition& lam);

Partition conjugate(const Partition& lam);

// (col - row) mod d, taken in [0, d)
int residue(Node node, int d);

struct HandFoot {
  int hand = 0;
  int foot = 0;
};

// hand: residue of the rightmost node in the row; foot: residue of the
// bottom node in the column
HandFoot hand_foot_residues(const Partition& lam, Node node, int d);

// n! / (product of all hook lengths); exact by construction
BigInt character_degree(const Partition& lam);

// every partition of n, in lexicographically decreasing order
std::vector<Partition> enumerate_partitions(int n);

// Slow oracle for the d-core: removes one available d-hook at a time until
// none remains, picking among candidates with a seeded generator. The result
// is order-independent; tests exercise many seeds per instance.
Partition d_core_by_removal(const Partition& lam, int d, std::uint64_t seed);

// same, but candidate choices are dictated by picks[step] % (#candidates)
Partition d_core_by_removal(const Partition& lam, int d,
                            const std::vector<int>& picks);

// d-tuple of quotient components. Uses the first-column hook lengths as the
// canonical bead set X; with t minimal in [0,d) such that d divides |X|+t,
// component r collects the beads on runner (t+r) mod d.
std::vector<Partition> partition_d_quotient(const Partition& lam, int d);

}  // namespace abacore
