#include "abacore/beta_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace abacore {
namespace {

// levels of the beads sitting on runner j, largest first
std::vector<int> runner_levels(const BetaSet& x, int d, int j) {
  std::vector<int> levels;
  for (int v : x.elements())
    if (v % d == j) levels.push_back(v / d);
  return levels;
}

}  // namespace

BetaSet::BetaSet(std::vector<int> elements) : elems_(std::move(elements)) {
  std::sort(elems_.rbegin(), elems_.rend());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 0)
      throw std::invalid_argument("β-set elements must be nonnegative");
    if (i > 0 && elems_[i] == elems_[i - 1])
      throw std::invalid_argument("β-set elements must be distinct");
  }
}

bool BetaSet::contains(int value) const {
  return std::find(elems_.begin(), elems_.end(), value) != elems_.end();
}

int BetaSet::max_element() const { return elems_.empty() ? -1 : elems_[0]; }

Partition partition_of(const BetaSet& x) {
  int t = x.size();
  std::vector<int> parts;
  for (int i = 0; i < t; ++i) {
    int p = x.elements()[i] - (t - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

BetaSet beta_set_for(const Partition& lam, int t) {
  if (t < lam.length())
    throw std::invalid_argument("β-set size below partition length");
  std::vector<int> out;
  out.reserve(t);
  for (int i = 1; i <= lam.length(); ++i) out.push_back(lam.part(i) + t - i);
  for (int i = lam.length() + 1; i <= t; ++i) out.push_back(t - i);
  return BetaSet(std::move(out));
}

BetaSet shift(const BetaSet& x, int s) {
  if (s < 0) throw std::invalid_argument("shift must be nonnegative");
  std::vector<int> out;
  out.reserve(x.size() + s);
  for (int v : x.elements()) out.push_back(v + s);
  for (int v = s - 1; v >= 0; --v) out.push_back(v);
  return BetaSet(std::move(out));
}

std::vector<BetaHook> hooks(const BetaSet& x) {
  std::vector<BetaHook> out;
  for (int a : x.elements())
    for (int b = 0; b < a; ++b)
      if (!x.contains(b)) out.push_back(BetaHook{a, b});
  return out;
}

BetaSet remove_hook(const BetaSet& x, BetaHook z) {
  if (z.b < 0 || z.b >= z.a || !x.contains(z.a) || x.contains(z.b))
    throw std::invalid_argument("not a hook of this β-set");
  std::vector<int> out = x.elements();
  *std::find(out.begin(), out.end(), z.a) = z.b;
  return BetaSet(std::move(out));
}

BetaSet d_core(const BetaSet& x, int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  std::vector<int> out;
  for (int j = 0; j < d; ++j) {
    int count = static_cast<int>(runner_levels(x, d, j).size());
    for (int k = 0; k < count; ++k) out.push_back(j + k * d);
  }
  return BetaSet(std::move(out));
}

Partition d_core_partition(const BetaSet& x, int d) {
  return partition_of(d_core(x, d));
}

BetaSet d_quotient(const BetaSet& x, int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  // per-runner partitions, padded to a common cardinality (the balanced form)
  std::vector<Partition> kappas;
  int r = 0;
  for (int j = 0; j < d; ++j) {
    kappas.push_back(partition_of(BetaSet(runner_levels(x, d, j))));
    r = std::max(r, kappas.back().length());
  }
  std::vector<int> out;
  for (int j = 0; j < d; ++j) {
    const BetaSet row = beta_set_for(kappas[j], r);
    for (int k : row.elements()) out.push_back(j + k * d);
  }
  return BetaSet(std::move(out));
}

Partition d_quotient_partition(const BetaSet& x, int d) {
  return partition_of(d_quotient(x, d));
}

PartitionHookRef partition_hook_of(const BetaSet& x, BetaHook z) {
  if (z.b < 0 || z.b >= z.a || !x.contains(z.a) || x.contains(z.b))
    throw std::invalid_argument("not a hook of this β-set");
  const auto& elems = x.elements();
  int row = 1 + static_cast<int>(std::find(elems.begin(), elems.end(), z.a) -
                                 elems.begin());
  int below = 0;  // beads strictly below b
  for (int v : elems)
    if (v < z.b) ++below;
  int col = z.b + 1 - below;
  return PartitionHookRef{Node{row, col}, z.length()};
}

std::string abacus_render(const BetaSet& x, int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  if (x.empty()) return "";
  int rows = x.max_element() / d + 1;
  int width = static_cast<int>(std::to_string(rows * d - 1).size());
  std::string out;
  for (int r = 0; r < rows; ++r) {
    std::string line;
    for (int j = 0; j < d; ++j) {
      int pos = r * d + j;
      std::string num = std::to_string(pos);
      num.insert(0, width - num.size(), ' ');
      if (j > 0) line += ' ';
      line += x.contains(pos) ? "[" + num + "]" : " " + num + " ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace abacore
