#include "abacore/partition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace abacore {
namespace {

// partition encoded by distinct bead values, sorted decreasing:
// part i is beads[i] - (t - 1 - i) with zero parts dropped
Partition partition_from_beads(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  int t = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 0; i < t; ++i) {
    int p = beads[i] - (t - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

std::vector<int> first_column_hooks(const Partition& lam) {
  int len = lam.length();
  std::vector<int> beads(len);
  for (int i = 0; i < len; ++i) beads[i] = lam.parts()[i] + (len - 1 - i);
  return beads;  // sorted decreasing, distinct
}

template <typename Pick>
Partition removal_core(const Partition& lam, int d, Pick&& pick) {
  std::vector<int> beads = first_column_hooks(lam);
  auto occupied = [&](int v) {
    return std::find(beads.begin(), beads.end(), v) != beads.end();
  };
  for (;;) {
    std::vector<int> candidates;
    for (int b : beads)
      if (b >= d && !occupied(b - d)) candidates.push_back(b);
    if (candidates.empty()) break;
    int chosen = candidates[pick(candidates.size())];
    *std::find(beads.begin(), beads.end(), chosen) = chosen - d;
  }
  return partition_from_beads(std::move(beads));
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

bool diagram_contains(const Partition& lam, Node node) {
  return node.row >= 1 && node.row <= lam.length() && node.col >= 1 &&
         node.col <= lam.part(node.row);
}

int arm_length(const Partition& lam, Node node) {
  if (!diagram_contains(lam, node))
    throw std::invalid_argument("node outside diagram");
  return lam.part(node.row) - node.col;
}

int leg_length(const Partition& lam, Node node) {
  if (!diagram_contains(lam, node))
    throw std::invalid_argument("node outside diagram");
  int below = 0;
  for (int r = node.row + 1; r <= lam.length(); ++r)
    if (lam.part(r) >= node.col) ++below;
  return below;
}

int hook_length_at(const Partition& lam, Node node) {
  return arm_length(lam, node) + leg_length(lam, node) + 1;
}

Multiset<int> hook_lengths_direct(const Partition& lam) {
  std::vector<int> out;
  out.reserve(lam.size());
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam.part(r); ++c)
      out.push_back(hook_length_at(lam, Node{r, c}));
  return Multiset<int>(std::move(out));
}

Partition conjugate(const Partition& lam) {
  std::vector<int> cols;
  if (!lam.empty()) {
    cols.resize(lam.parts()[0]);
    for (int c = 1; c <= lam.parts()[0]; ++c)
      for (int r = 1; r <= lam.length(); ++r)
        if (lam.part(r) >= c) ++cols[c - 1];
  }
  return Partition(std::move(cols));
}

int residue(Node node, int d) {
  if (d <= 0) throw std::invalid_argument("modulus must be positive");
  return ((node.col - node.row) % d + d) % d;
}

HandFoot hand_foot_residues(const Partition& lam, Node node, int d) {
  if (!diagram_contains(lam, node))
    throw std::invalid_argument("node outside diagram");
  int bottom_row = node.row + leg_length(lam, node);
  return HandFoot{residue(Node{node.row, lam.part(node.row)}, d),
                  residue(Node{bottom_row, node.col}, d)};
}

BigInt character_degree(const Partition& lam) {
  BigInt denom = product_as<BigInt>(hook_lengths_direct(lam));
  BigInt q, r;
  boost::multiprecision::divide_qr(factorial(lam.size()), denom, q, r);
  if (r != 0) throw std::logic_error("hook product must divide n!");
  return q;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition d_core_by_removal(const Partition& lam, int d, std::uint64_t seed) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  std::mt19937_64 rng(seed);
  return removal_core(lam, d, [&](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  });
}

Partition d_core_by_removal(const Partition& lam, int d,
                            const std::vector<int>& picks) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  std::size_t step = 0;
  return removal_core(lam, d, [&](std::size_t n) {
    std::size_t idx = step < picks.size()
                          ? static_cast<std::size_t>(picks[step]) % n
                          : 0;
    ++step;
    return idx;
  });
}

std::vector<Partition> partition_d_quotient(const Partition& lam, int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  std::vector<int> beads = first_column_hooks(lam);
  int t = (d - lam.length() % d) % d;
  std::vector<Partition> out;
  out.reserve(d);
  for (int r = 0; r < d; ++r) {
    int runner = (t + r) % d;
    std::vector<int> levels;
    for (int b : beads)
      if (b % d == runner) levels.push_back(b / d);
    out.push_back(partition_from_beads(std::move(levels)));
  }
  return out;
}

}  // namespace abacore
