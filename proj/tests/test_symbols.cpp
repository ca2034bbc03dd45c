#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

#include "abacore/symbol.hpp"
#include "abacore/verify.hpp"
#include "support.hpp"

using namespace abacore;

namespace {
DSymbol worked_symbol() {
  return to_symbol(BetaSet({11, 8, 6, 2, 0}), 3);
}
}  // namespace

TEST_CASE("runner split and reassembly are inverse") {
  const DSymbol s = worked_symbol();
  CHECK(s == DSymbol({BetaSet({2, 0}), BetaSet{}, BetaSet({3, 2, 0})}));
  CHECK(to_beta_set(s) == BetaSet({11, 8, 6, 2, 0}));
  CHECK_THROWS_AS(DSymbol(std::vector<BetaSet>{}), std::invalid_argument);
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const BetaSet x = random_beta_set(rng, 24, 8);
    const int d = 1 + rng.below(5);
    CHECK(to_beta_set(to_symbol(x, d)) == x);
    const DSymbol s2 = random_symbol(rng);
    CHECK(to_symbol(to_beta_set(s2), s2.d()) == s2);
    CHECK(partition_of(s2) == partition_of(to_beta_set(s2)));
  }
}

TEST_CASE("hook enumeration covers one hook per cell of the partition") {
  Rng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const DSymbol s = random_symbol(rng);
    const auto zs = hooks(s);
    CHECK(static_cast<int>(zs.size()) == partition_of(s).size());
    int shorts = 0;
    for (const SymbolHook& z : zs) {
      CHECK(s.row(z.i).contains(z.a));
      CHECK_FALSE(s.row(z.j).contains(z.b));
      CHECK(z.a >= z.b);
      if (z.is_short()) {
        CHECK(z.i > z.j);
        ++shorts;
      }
    }
    CHECK(static_cast<int>(long_hooks(s).size()) ==
          static_cast<int>(zs.size()) - shorts);
  }
}

TEST_CASE("class counts agree with direct enumeration") {
  Rng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 300; ++trial) {
    const DSymbol s = random_symbol(rng);
    std::map<std::tuple<int, int, int>, int> seen;
    int max_len = 0;
    for (const SymbolHook& z : hooks(s)) {
      ++seen[{z.i, z.j, z.length()}];
      max_len = std::max(max_len, z.length());
    }
    for (int i = 0; i < s.d(); ++i)
      for (int j = 0; j < s.d(); ++j)
        for (int ell = 0; ell <= max_len + 1; ++ell) {
          const auto in_class = hooks_in_class(s, i, j, ell);
          CHECK(class_count(s, i, j, ell) ==
                static_cast<int>(in_class.size()));
          auto it = seen.find({i, j, ell});
          CHECK(static_cast<int>(in_class.size()) ==
                (it == seen.end() ? 0 : it->second));
        }
    CHECK(class_count(s, 0, s.d() - 1, 0) == 0);  // short hooks need i > j
  }
}

TEST_CASE("hook removal drops the weight by d(a-b) + (i-j)") {
  Rng rng(kDefaultSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const DSymbol s = random_symbol(rng);
    const int before = partition_of(s).size();
    for (const SymbolHook& z : hooks(s)) {
      const DSymbol t = remove_hook(s, z);
      CHECK(partition_of(t).size() ==
            before - (s.d() * (z.a - z.b) + (z.i - z.j)));
      CHECK(t.d() == s.d());
    }
  }
  CHECK_THROWS_AS(remove_hook(worked_symbol(), SymbolHook{1, 1, 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("balanced quotient and core of the worked symbol") {
  const DSymbol s = worked_symbol();
  CHECK(balanced_quotient(s) ==
        DSymbol({BetaSet({2, 0}), BetaSet({1, 0}), BetaSet({2, 1})}));
  CHECK(core(s) == DSymbol({BetaSet({1, 0}), BetaSet{}, BetaSet({2, 1, 0})}));
  CHECK(quotient_partition(s) == Partition({3, 2, 2, 2}));
  CHECK(core_partition(s) == Partition({4, 2, 1, 1}));
}

TEST_CASE("balance predicate and idempotence of the quotient") {
  CHECK_FALSE(is_balanced(worked_symbol()));
  CHECK(is_balanced(DSymbol({BetaSet({2, 1}), BetaSet({1, 0})})));
  CHECK_FALSE(is_balanced(DSymbol({BetaSet({1, 0}), BetaSet({2, 0})})));
  CHECK_FALSE(is_balanced(DSymbol({BetaSet({2, 1}), BetaSet({1})})));
  Rng rng(kDefaultSeed + 4);
  for (int trial = 0; trial < 200; ++trial) {
    const DSymbol s = random_symbol(rng);
    const DSymbol q = balanced_quotient(s);
    CHECK(is_balanced(q));
    CHECK(balanced_quotient(q) == q);
  }
}

TEST_CASE("a symbol is rebuilt from its quotient and core") {
  Rng rng(kDefaultSeed + 5);
  for (int trial = 0; trial < 300; ++trial) {
    const DSymbol s = random_symbol(rng);
    CHECK(reconstruct(balanced_quotient(s), core(s)) == s);
    CHECK(hooks(s).size() ==
          hooks(balanced_quotient(s)).size() + hooks(core(s)).size());
  }
  const DSymbol q({BetaSet({1, 0}), BetaSet({2, 0})});  // not balanced
  CHECK_THROWS_AS(reconstruct(q, core(worked_symbol())), std::invalid_argument);
}

TEST_CASE("shifting a symbol preserves hook lengths and classes") {
  Rng rng(kDefaultSeed + 6);
  for (int trial = 0; trial < 100; ++trial) {
    const DSymbol s = random_symbol(rng);
    Multiset<int> base;
    for (const SymbolHook& z : hooks(s)) base.insert(z.length());
    for (int sh = 1; sh <= 3; ++sh) {
      const DSymbol t = shift_symbol(s, sh);
      CHECK(partition_of(t) == partition_of(s));
      Multiset<int> moved;
      for (const SymbolHook& z : hooks(t)) moved.insert(z.length());
      CHECK(moved == base);
    }
  }
}

TEST_CASE("short hooks pair off against their reversed counterparts") {
  Rng rng(kDefaultSeed + 7);
  for (int trial = 0; trial < 100; ++trial) {
    DSymbol s = balanced_quotient(random_symbol(rng));
    for (int i = 0; i < s.d(); ++i)
      for (int j = 0; j < i; ++j) {
        const auto fwd = short_hooks(s, i, j);
        const auto rev = reversed_short_hooks(s, j, i);
        CHECK(fwd.size() == rev.size());
        for (const SymbolHook& z : fwd) {
          CHECK(z.is_short());
          CHECK(z.i == i);
          CHECK(z.j == j);
        }
        for (const SymbolHook& z : rev) {
          CHECK(z.is_short());
          CHECK(z.i == j);
          CHECK(z.j == i);
        }
      }
  }
}

TEST_CASE("symbol hooks mirror the hooks of the underlying beta set") {
  Rng rng(kDefaultSeed + 8);
  for (int trial = 0; trial < 200; ++trial) {
    const DSymbol s = random_symbol(rng);
    const BetaSet x = to_beta_set(s);
    const Partition lam = partition_of(s);
    std::set<std::pair<int, int>> cells;
    for (const BetaHook& b : hooks(x)) {
      const SymbolHook z = symbol_hook_of(s, b);
      CHECK(beta_hook_of(s, z) == b);
      CHECK(b.length() == s.d() * z.length() + (z.i - z.j));
      const PartitionHookRef ref = diagram_position(s, z);
      CHECK(ref.length == b.length());
      CHECK(cells.insert({ref.corner.row, ref.corner.col}).second);
    }
    CHECK(static_cast<int>(cells.size()) == lam.size());
    for (const SymbolHook& z : hooks(s))
      CHECK(symbol_hook_of(s, beta_hook_of(s, z)) == z);
  }
}

TEST_CASE("e_class tracks the row difference mod d") {
  CHECK(SymbolHook{3, 1, 2, 0}.e_class(3) == 2);
  CHECK(SymbolHook{3, 1, 0, 2}.e_class(3) == 1);
  CHECK(SymbolHook{3, 1, 1, 1}.e_class(3) == 0);
}
