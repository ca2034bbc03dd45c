#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>

#include "abacore/hook_data.hpp"
#include "abacore/io.hpp"
#include "abacore/verify.hpp"
#include "support.hpp"

using namespace abacore;

namespace {
const BetaSet& worked_set() {
  static const BetaSet x({11, 8, 6, 2, 0});
  return x;
}
}  // namespace

TEST_CASE("data tuple construction and the stock tuples") {
  CHECK(minimal_tuple(3) == DataTuple({0, 0, 0}, 1));
  CHECK(partition_tuple(3) == DataTuple({0, 1, 2}, 3));
  CHECK(DataTuple({1, 2}, 0).scale() == 0);
  CHECK_THROWS_AS(DataTuple({1}, -1), std::invalid_argument);
  CHECK_THROWS_AS(minimal_tuple(0), std::invalid_argument);
}

TEST_CASE("delta lengths on fixed hooks") {
  const DataTuple star = partition_tuple(3);
  CHECK(delta_length(star, {3, 1, 2, 0}) == Rational(8));
  CHECK(delta_length(star, {2, 2, 0, 1}) == Rational(-1));
  CHECK(delta_length(minimal_tuple(3), {3, 1, 2, 0}) == Rational(2));
  CHECK_THROWS_AS(delta_length(partition_tuple(2), SymbolHook{1, 0, 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("shifted tuple adds row size times scale") {
  const DSymbol s = to_symbol(worked_set(), 3);  // row sizes 2, 0, 3
  CHECK(shifted_tuple(minimal_tuple(3), s) == DataTuple({2, 0, 3}, 1));
  CHECK(shifted_tuple(partition_tuple(3), s) == DataTuple({6, 1, 11}, 3));
}

TEST_CASE("delta length is constant on each hook class") {
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const DSymbol s = random_symbol(rng);
    const DataTuple delta = random_tuple(rng, s.d());
    std::map<std::tuple<int, int, int>, Rational> value;
    for (const SymbolHook& z : hooks(s)) {
      const auto key = std::make_tuple(z.i, z.j, z.length());
      const Rational len = delta_length(delta, z);
      auto [it, fresh] = value.insert({key, len});
      if (!fresh) CHECK(it->second == len);
    }
  }
}

TEST_CASE("length multisets ignore symbol shifts") {
  Rng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 100; ++trial) {
    const DSymbol s = random_symbol(rng);
    const DataTuple delta = random_tuple(rng, s.d());
    const RationalMultiset base = length_multiset(delta, s);
    for (int sh = 1; sh <= 3; ++sh)
      CHECK(length_multiset(delta, shift_symbol(s, sh)) == base);
  }
}

TEST_CASE("abs and positive filters") {
  const RationalMultiset m({Rational(-2), Rational(0), Rational(1, 2)});
  CHECK(abs_multiset(m) == RationalMultiset({Rational(0), Rational(1, 2), Rational(2)}));
  CHECK(positive_part(m) == RationalMultiset({Rational(-2), Rational(1, 2)}));
}

TEST_CASE("the hook pairing is total, class-respecting and length-exact") {
  Rng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 300; ++trial) {
    const DSymbol s = random_symbol(rng);
    const auto pairs = universal_bijection(s);
    CHECK(pairs.size() == hooks(s).size());
    int to_quotient = 0;
    for (const HookPair& p : pairs)
      if (p.kind == TargetKind::quotient) ++to_quotient;
    CHECK(to_quotient == static_cast<int>(hooks(balanced_quotient(s)).size()));
    const DataTuple delta = random_tuple(rng, s.d());
    const PointwiseReport rep = verify_pointwise_decomposition(s, delta);
    CHECK(rep.ok);
    if (!rep.ok) MESSAGE(rep.detail);
  }
}

TEST_CASE("multiset decomposition holds with core containment") {
  Rng rng(kDefaultSeed + 3);
  for (int trial = 0; trial < 300; ++trial) {
    const DSymbol s = random_symbol(rng);
    const DataTuple delta = random_tuple(rng, s.d());
    const MultisetTripleReport rep = verify_multiset_decomposition(s, delta);
    CHECK(rep.equal);
    CHECK(rep.core_included);
    CHECK(rep.lhs.size() == rep.quotient.size() + rep.core.size());
  }
}

TEST_CASE("sign rule on the worked instance") {
  const DSymbol s = to_symbol(worked_set(), 3);
  const std::vector<int> sizes{2, 0, 3};
  CHECK(is_positive_branch(sizes, {2, 2, 1, 1}));  // diagonal, always positive
  // under the diagram tuple the identity leaves only positive values ...
  CHECK(signed_quotient_lengths(partition_tuple(3), s) ==
        RationalMultiset({Rational(1), Rational(3), Rational(3), Rational(5),
                          Rational(5), Rational(6), Rational(7), Rational(8),
                          Rational(10)}));
  // ... while the raw shifted-tuple lengths carry the table signs
  CHECK(length_multiset(shifted_tuple(partition_tuple(3), s),
                        balanced_quotient(s)) ==
        RationalMultiset({Rational(-7), Rational(-5), Rational(1), Rational(3),
                          Rational(3), Rational(5), Rational(6), Rational(8),
                          Rational(10)}));
}

TEST_CASE("partition hooks split into core hooks and quotient lengths") {
  const PartitionSplit split =
      partition_hook_split(Partition({7, 5, 4, 1}), worked_set(), 3);
  CHECK(split.core_lengths == Multiset<int>({1, 1, 1, 2, 2, 4, 4, 7}));
  CHECK(split.quotient_abs == Multiset<int>({1, 3, 3, 5, 5, 6, 7, 8, 10}));
  CHECK(hook_lengths_direct(Partition({7, 5, 4, 1})) ==
        split.core_lengths.united(split.quotient_abs));
  CHECK_THROWS_AS(partition_hook_split(Partition({3}), worked_set(), 3),
                  std::invalid_argument);
}

TEST_CASE("modified quotient lengths equal the shifted-tuple lengths") {
  CHECK(modified_quotient_lengths(Partition({7, 5, 4, 1}), worked_set(), 3) ==
        Multiset<int>({-7, -5, 1, 3, 3, 5, 6, 8, 10}));
  Rng rng(kDefaultSeed + 4);
  for (int trial = 0; trial < 300; ++trial) {
    const BetaSet x = random_beta_set(rng, 20, 6);
    const int d = 2 + rng.below(4);
    const Partition lam = partition_of(x);
    const DSymbol s = to_symbol(x, d);
    const auto modified = modified_quotient_lengths(lam, x, d)
                              .mapped([](int v) { return Rational(v); });
    CHECK(modified == length_multiset(shifted_tuple(partition_tuple(d), s),
                                      balanced_quotient(s)));
    // the sign rule only ever flips signs, never absolute values
    CHECK(abs_multiset(modified) ==
          abs_multiset(signed_quotient_lengths(partition_tuple(d), s)));
  }
}

TEST_CASE("degree factorization on the worked instance and small sweeps") {
  const DegreeFactorization f =
      relative_degree_factorization(Partition({7, 5, 4, 1}), worked_set(), 3);
  CHECK(f.symmetric_factor == BigInt(8821612800LL));
  CHECK(f.quotient_product == 756000);
  CHECK(f.core_degree == 90);
  CHECK(f.degree() == 1050192);
  for (int n = 0; n <= 9; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      for (int d = 2; d <= 3; ++d) {
        const BetaSet x = beta_set_for(lam, lam.length());
        CHECK(relative_degree_factorization(lam, x, d).degree() ==
              character_degree(lam));
      }
  DegreeFactorization bad;
  bad.symmetric_factor = 2;
  bad.core_degree = 5;
  bad.quotient_product = 3;
  CHECK_THROWS_AS(bad.degree(), std::logic_error);
}
