#include "abacore/symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace abacore {
namespace {

void check_row_index(const DSymbol& s, int i) {
  if (i < 0 || i >= s.d()) throw std::invalid_argument("row index out of range");
}

bool is_valid_hook(const DSymbol& s, SymbolHook z) {
  if (z.i < 0 || z.i >= s.d() || z.j < 0 || z.j >= s.d()) return false;
  if (z.b < 0 || z.b > z.a) return false;
  if (z.a == z.b && z.i <= z.j) return false;
  return s.row(z.i).contains(z.a) && !s.row(z.j).contains(z.b);
}

}  // namespace

DSymbol::DSymbol(std::vector<BetaSet> rows) : rows_(std::move(rows)) {
  if (rows_.empty())
    throw std::invalid_argument("symbol needs at least one row");
}

std::vector<int> DSymbol::row_sizes() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const BetaSet& r : rows_) out.push_back(r.size());
  return out;
}

DSymbol to_symbol(const BetaSet& x, int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  std::vector<std::vector<int>> rows(d);
  for (int v : x.elements()) rows[v % d].push_back(v / d);
  std::vector<BetaSet> out;
  out.reserve(d);
  for (auto& r : rows) out.push_back(BetaSet(std::move(r)));
  return DSymbol(std::move(out));
}

BetaSet to_beta_set(const DSymbol& s) {
  std::vector<int> out;
  for (int j = 0; j < s.d(); ++j)
    for (int k : s.row(j).elements()) out.push_back(j + k * s.d());
  return BetaSet(std::move(out));
}

Partition partition_of(const DSymbol& s) {
  return partition_of(to_beta_set(s));
}

std::vector<SymbolHook> hooks(const DSymbol& s) {
  std::vector<SymbolHook> out;
  for (int i = 0; i < s.d(); ++i)
    for (int a : s.row(i).elements())
      for (int j = 0; j < s.d(); ++j)
        for (int b = 0; b <= a; ++b) {
          if (s.row(j).contains(b)) continue;
          if (b == a && i <= j) continue;
          out.push_back(SymbolHook{a, b, i, j});
        }
  return out;
}

std::vector<SymbolHook> long_hooks(const DSymbol& s) {
  std::vector<SymbolHook> out;
  for (SymbolHook z : hooks(s))
    if (!z.is_short()) out.push_back(z);
  return out;
}

std::vector<SymbolHook> hooks_in_class(const DSymbol& s, int i, int j,
                                       int ell) {
  check_row_index(s, i);
  check_row_index(s, j);
  if (ell < 0) throw std::invalid_argument("hook length must be nonnegative");
  std::vector<SymbolHook> out;
  if (ell == 0 && i <= j) return out;
  for (int a : s.row(i).elements())
    if (a >= ell && !s.row(j).contains(a - ell))
      out.push_back(SymbolHook{a, a - ell, i, j});
  return out;
}

int class_count(const DSymbol& s, int i, int j, int ell) {
  check_row_index(s, i);
  check_row_index(s, j);
  if (ell < 0) throw std::invalid_argument("hook length must be nonnegative");
  if (ell == 0 && i <= j) return 0;
  int meet = 0;  // |X_i ∩ X_j^{+ell}|
  for (int v : s.row(i).elements())
    if (v < ell || s.row(j).contains(v - ell)) ++meet;
  return s.row(i).size() - meet;
}

DSymbol remove_hook(const DSymbol& s, SymbolHook z) {
  if (!is_valid_hook(s, z))
    throw std::invalid_argument("not a hook of this symbol");
  std::vector<BetaSet> rows = s.rows();
  if (z.i == z.j) {
    std::vector<int> row = rows[z.i].elements();
    *std::find(row.begin(), row.end(), z.a) = z.b;
    rows[z.i] = BetaSet(std::move(row));
  } else {
    std::vector<int> from = rows[z.i].elements();
    from.erase(std::find(from.begin(), from.end(), z.a));
    std::vector<int> to = rows[z.j].elements();
    to.push_back(z.b);
    rows[z.i] = BetaSet(std::move(from));
    rows[z.j] = BetaSet(std::move(to));
  }
  return DSymbol(std::move(rows));
}

DSymbol from_partitions(const std::vector<Partition>& kappas) {
  if (kappas.empty())
    throw std::invalid_argument("symbol needs at least one row");
  int r = 0;
  for (const Partition& k : kappas) r = std::max(r, k.length());
  std::vector<BetaSet> rows;
  rows.reserve(kappas.size());
  for (const Partition& k : kappas) rows.push_back(beta_set_for(k, r));
  return DSymbol(std::move(rows));
}

bool is_balanced(const DSymbol& s) {
  for (int i = 1; i < s.d(); ++i)
    if (s.row(i).size() != s.row(0).size()) return false;
  for (int i = 0; i < s.d(); ++i)
    if (!s.row(i).contains(0)) return true;
  return false;
}

DSymbol balanced_quotient(const DSymbol& s) {
  std::vector<Partition> kappas;
  kappas.reserve(s.d());
  for (const BetaSet& row : s.rows()) kappas.push_back(partition_of(row));
  return from_partitions(kappas);
}

DSymbol core(const DSymbol& s) {
  std::vector<BetaSet> rows;
  rows.reserve(s.d());
  for (const BetaSet& row : s.rows())
    rows.push_back(beta_set_for(Partition(), row.size()));
  return DSymbol(std::move(rows));
}

Partition quotient_partition(const DSymbol& s) {
  return partition_of(balanced_quotient(s));
}

Partition core_partition(const DSymbol& s) {
  return partition_of(core(s));
}

DSymbol reconstruct(const DSymbol& q, const DSymbol& c) {
  if (q.d() != c.d())
    throw std::invalid_argument("quotient and core dimensions differ");
  if (!is_balanced(q))
    throw std::invalid_argument("quotient part must be balanced");
  std::vector<BetaSet> rows;
  rows.reserve(q.d());
  for (int i = 0; i < q.d(); ++i) {
    const BetaSet& ci = c.row(i);
    if (ci != beta_set_for(Partition(), ci.size()))
      throw std::invalid_argument("core rows must be of the form {x-1,...,0}");
    Partition kappa = partition_of(q.row(i));
    if (ci.size() < kappa.length())
      throw std::invalid_argument("core row cardinality below row partition length");
    rows.push_back(beta_set_for(kappa, ci.size()));
  }
  return DSymbol(std::move(rows));
}

DSymbol shift_symbol(const DSymbol& s, int sh) {
  std::vector<BetaSet> rows;
  rows.reserve(s.d());
  for (const BetaSet& row : s.rows()) rows.push_back(shift(row, sh));
  return DSymbol(std::move(rows));
}

std::vector<SymbolHook> short_hooks(const DSymbol& s, int i, int j) {
  check_row_index(s, i);
  check_row_index(s, j);
  if (i <= j) throw std::invalid_argument("short hooks need i > j");
  return hooks_in_class(s, i, j, 0);
}

std::vector<SymbolHook> reversed_short_hooks(const DSymbol& s, int i, int j) {
  check_row_index(s, i);
  check_row_index(s, j);
  if (i >= j) throw std::invalid_argument("reversed short hooks need i < j");
  std::vector<SymbolHook> out;
  for (int a : s.row(i).elements())
    if (!s.row(j).contains(a)) out.push_back(SymbolHook{a, a, i, j});
  return out;
}

SymbolHook symbol_hook_of(const DSymbol& s, BetaHook z) {
  const int d = s.d();
  SymbolHook out{z.a / d, z.b / d, z.a % d, z.b % d};
  if (z.a < 0 || z.b < 0 || !is_valid_hook(s, out))
    throw std::invalid_argument("not a hook of the underlying β-set");
  return out;
}

BetaHook beta_hook_of(const DSymbol& s, SymbolHook z) {
  if (!is_valid_hook(s, z))
    throw std::invalid_argument("not a hook of this symbol");
  return BetaHook{z.a * s.d() + z.i, z.b * s.d() + z.j};
}

PartitionHookRef diagram_position(const DSymbol& s, SymbolHook z) {
  return partition_hook_of(to_beta_set(s), beta_hook_of(s, z));
}

}  // namespace abacore
