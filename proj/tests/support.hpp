#pragma once

// Slow reference implementations and small helpers used only by the tests.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abacore/partition.hpp"

namespace abacore::testing {

// Number of standard fillings of the diagram of lam, counted by direct
// backtracking over which row receives the next entry. Exponential; keep
// n <= 6 or so.
inline long long count_standard_tableaux(const Partition& lam) {
  const int n = lam.size();
  std::vector<int> fill(lam.length(), 0);
  long long count = 0;
  auto place = [&](auto&& self, int placed) -> void {
    if (placed == n) {
      ++count;
      return;
    }
    for (int r = 0; r < lam.length(); ++r) {
      if (fill[r] == lam.part(r + 1)) continue;            // row full
      if (r > 0 && fill[r - 1] <= fill[r]) continue;       // column order
      ++fill[r];
      self(self, placed + 1);
      --fill[r];
    }
  };
  place(place, 0);
  return count;
}

// p(n) by the two-argument recursion, independent of enumerate_partitions.
inline long long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  long long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p)
    total += partition_count(n - p, p);
  return total;
}

inline long long partition_count(int n) { return partition_count(n, n); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace abacore::testing
