#include "abacore/verify.hpp"

#include <iomanip>
#include <sstream>

#include "abacore/io.hpp"

namespace abacore {

namespace {

std::string trial_key(int t) {
  std::ostringstream os;
  os << "trial " << std::setw(4) << std::setfill('0') << t;
  return os.str();
}

std::string triple_detail(const RationalMultiset& lhs,
                          const RationalMultiset& quotient,
                          const RationalMultiset& core) {
  const RationalMultiset rhs = quotient.united(core);
  return "lhs = " + format(lhs) + "\nquotient part = " + format(quotient) +
         "\ncore part = " + format(core) +
         "\nsymmetric difference = " + format(lhs.symmetric_difference(rhs));
}

int emit(const ReportSink& sink, Report rep) {
  const int failed = rep.pass ? 0 : 1;
  if (sink) sink(rep);
  return failed;
}

}  // namespace

BetaSet random_beta_set(Rng& rng, int max_element, int max_size) {
  std::vector<int> pool(max_element + 1);
  for (int v = 0; v <= max_element; ++v) pool[v] = v;
  const int size = rng.below(std::min(max_size, max_element + 1) + 1);
  for (int k = 0; k < size; ++k)
    std::swap(pool[k], pool[k + rng.below(static_cast<int>(pool.size()) - k)]);
  pool.resize(size);
  return BetaSet(std::move(pool));
}

DSymbol random_symbol(Rng& rng, int dmin, int dmax, int max_element,
                      int max_row) {
  const int d = dmin + rng.below(dmax - dmin + 1);
  std::vector<BetaSet> rows;
  rows.reserve(d);
  for (int i = 0; i < d; ++i)
    rows.push_back(random_beta_set(rng, max_element, max_row));
  return DSymbol(std::move(rows));
}

DataTuple random_tuple(Rng& rng, int d) {
  std::vector<Rational> offsets(d);
  for (int i = 0; i < d; ++i)
    offsets[i] = Rational(rng.below(13) - 6, 1 + rng.below(3));
  const Rational scale(1 + rng.below(6), 1 + rng.below(3));
  return DataTuple(std::move(offsets), scale);
}

int verify_symbol_decomposition_suite(int trials, std::uint64_t seed,
                                      const ReportSink& sink) {
  Rng rng(seed);
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const DSymbol s = random_symbol(rng);
    const DataTuple delta = random_tuple(rng, s.d());
    const std::string instance =
        trial_key(t) + " S=" + format(s) + " delta=" + format(delta);

    const PointwiseReport pw = verify_pointwise_decomposition(s, delta);
    failures += emit(sink, {"hook-bijection-pointwise", instance, pw.ok,
                            pw.ok ? "" : pw.detail});

    const MultisetTripleReport ms = verify_multiset_decomposition(s, delta);
    const bool ok = ms.equal && ms.core_included;
    failures += emit(sink, {"hook-multiset-decomposition", instance, ok,
                            ok ? ""
                               : triple_detail(ms.lhs, ms.quotient, ms.core)});
  }
  return failures;
}

int verify_partition_split_suite(const std::vector<int>& ns,
                                 const std::vector<int>& ds,
                                 const ReportSink& sink) {
  int failures = 0;
  for (int n : ns)
    for (const Partition& lam : enumerate_partitions(n))
      for (int d : ds) {
        const BetaSet x = beta_set_for(lam, lam.length());
        const PartitionSplit split = partition_hook_split(lam, x, d);
        const Multiset<int> lhs = hook_lengths_direct(lam);
        const Multiset<int> rhs = split.core_lengths.united(split.quotient_abs);
        std::ostringstream inst;
        inst << "n=" << std::setw(2) << std::setfill('0') << n << " d=" << d
             << " lam=" << format(lam);
        const bool ok = lhs == rhs;
        std::string detail;
        if (!ok)
          detail = "H = " + format(lhs) + "\ncore = " +
                   format(split.core_lengths) + "\n|adjusted| = " +
                   format(split.quotient_abs);
        failures += emit(sink, {"partition-hook-split", inst.str(), ok, detail});
      }
  return failures;
}

int verify_split_identity_suite(int trials, std::uint64_t seed, int max_ell,
                                const ReportSink& sink) {
  Rng rng(seed);
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const DSymbol s = random_symbol(rng);
    const int ell = 1 + rng.below(max_ell);
    const SplitIdentityReport rep = verify_split_identity(s, ell);
    const std::string instance =
        trial_key(t) + " S=" + format(s) + " ell=" + std::to_string(ell);
    failures += emit(
        sink, {"split-decomposition", instance, rep.equal,
               rep.equal ? ""
                         : triple_detail(rep.lhs, rep.quotient_abs, rep.core)});
  }
  return failures;
}

int verify_twisted_identity_suite(int trials, std::uint64_t seed, int max_ell,
                                  const ReportSink& sink) {
  Rng rng(seed);
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const DSymbol s = random_symbol(rng);
    const int ell = 1 + rng.below(max_ell);
    const int e = rng.below(s.d());
    const TwistedIdentityReport rep = verify_twisted_identity(s, ell, e);
    const std::string instance = trial_key(t) + " S=" + format(s) +
                                 " ell=" + std::to_string(ell) +
                                 " e=" + std::to_string(e);
    failures += emit(
        sink, {"twisted-decomposition", instance, rep.equal,
               rep.equal ? ""
                         : triple_detail(rep.lhs, rep.quotient_abs, rep.core)});
  }
  return failures;
}

int verify_degree_suite(int max_n, const std::vector<int>& ds,
                        const ReportSink& sink) {
  int failures = 0;
  for (int n = 0; n <= max_n; ++n) {
    const std::vector<Partition> lams = enumerate_partitions(n);
    BigInt sum = 0;
    for (const Partition& lam : lams) {
      const BigInt deg = character_degree(lam);
      sum += deg * deg;
    }
    const BigInt target = factorial(n);
    std::ostringstream inst;
    inst << "n=" << std::setw(2) << std::setfill('0') << n;
    const bool ok = sum == target;
    failures += emit(sink, {"degree-square-sum", inst.str(), ok,
                            ok ? ""
                               : "sum = " + sum.str() +
                                     ", expected = " + target.str()});

    for (const Partition& lam : lams)
      for (int d : ds) {
        const BetaSet x = beta_set_for(lam, lam.length());
        std::string detail;
        bool pass = false;
        try {
          const DegreeFactorization fac =
              relative_degree_factorization(lam, x, d);
          const BigInt direct = character_degree(lam);
          pass = fac.degree() == direct;
          if (!pass)
            detail = "factorized = " + fac.degree().str() +
                     ", direct = " + direct.str();
        } catch (const std::logic_error& e) {
          detail = e.what();
        }
        std::ostringstream key;
        key << "n=" << std::setw(2) << std::setfill('0') << n << " d=" << d
            << " lam=" << format(lam);
        failures += emit(sink, {"relative-degree-factorization", key.str(),
                                pass, detail});
      }
  }
  return failures;
}

int verify_oracle_suite(int core_trials, int le_trials, int hook_trials,
                        std::uint64_t seed, const ReportSink& sink) {
  Rng rng(seed);
  int failures = 0;

  for (int t = 0; t < core_trials; ++t) {
    const BetaSet x = random_beta_set(rng, 30, 8);
    const int d = 1 + rng.below(5);
    const Partition direct = d_core_partition(x, d);
    const Partition removed = d_core_by_removal(partition_of(x), d, rng.next());
    const bool ok = direct == removed;
    failures += emit(sink, {"core-removal-oracle",
                            trial_key(t) + " X=" + format(x) +
                                " d=" + std::to_string(d),
                            ok,
                            ok ? ""
                               : "abacus core = " + format(direct) +
                                     ", removal core = " + format(removed)});
  }

  for (int t = 0; t < le_trials; ++t) {
    const DSymbol s = random_symbol(rng);
    const int ell = 1 + rng.below(4);
    const int e = rng.below(s.d());
    DSymbol cur = s;
    while (true) {
      const std::vector<SymbolHook> cands = le_hooks(cur, ell, e);
      if (cands.empty()) break;
      cur = remove_hook(cur, cands[rng.below(static_cast<int>(cands.size()))]);
    }
    const DSymbol direct = le_core(s, ell, e);
    const bool ok = cur == direct;
    failures += emit(sink, {"twisted-core-removal-oracle",
                            trial_key(t) + " S=" + format(s) +
                                " ell=" + std::to_string(ell) +
                                " e=" + std::to_string(e),
                            ok,
                            ok ? ""
                               : "twist core = " + format(direct) +
                                     ", removal fixed point = " + format(cur)});
  }

  for (int t = 0; t < hook_trials; ++t) {
    const BetaSet x = random_beta_set(rng, 20, 8);
    const int d = 1 + rng.below(4);
    const Multiset<int> via_partition = hook_lengths_direct(partition_of(x));
    std::vector<int> lens;
    for (const BetaHook& z : hooks(x)) lens.push_back(z.length());
    const Multiset<int> via_beta = Multiset<int>(std::move(lens));
    const RationalMultiset via_symbol =
        length_multiset(partition_tuple(d), to_symbol(x, d));
    const RationalMultiset as_rational =
        via_partition.mapped([](int v) { return Rational(v); });
    const bool ok = via_partition == via_beta && as_rational == via_symbol;
    failures += emit(sink, {"hook-length-triple",
                            trial_key(t) + " X=" + format(x) +
                                " d=" + std::to_string(d),
                            ok,
                            ok ? ""
                               : "partition hooks = " + format(via_partition) +
                                     "\nβ-set hooks = " + format(via_beta) +
                                     "\nsymbol lengths = " +
                                     format(via_symbol)});
  }

  return failures;
}

}  // namespace abacore
