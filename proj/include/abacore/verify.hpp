#pragma once

// Batch identity checks over fixed sweeps and seeded random instances.
// Every check emits a Report through the caller's sink, in a deterministic
// order; each suite returns its failure count.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "abacore/ell.hpp"
#include "abacore/hook_data.hpp"

namespace abacore {

struct Report {
  std::string identity;  // which statement was checked
  std::string instance;  // the concrete input, as text
  bool pass = true;
  std::string detail;    // evidence on failure, empty otherwise
};

using ReportSink = std::function<void(const Report&)>;

inline constexpr std::uint64_t kDefaultSeed = 1729;

// Deterministic across platforms: all draws go through below().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  int below(int n) {
    return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

 private:
  std::mt19937_64 gen_;
};

BetaSet random_beta_set(Rng& rng, int max_element, int max_size);

// d between dmin and dmax, each row a β-set with elements < 12, size <= 6
DSymbol random_symbol(Rng& rng, int dmin = 2, int dmax = 4,
                      int max_element = 11, int max_row = 6);

// small rational offsets, positive rational scale
DataTuple random_tuple(Rng& rng, int d);

// pointwise + multiset hook decomposition on random (symbol, tuple) pairs;
// two reports per trial
int verify_symbol_decomposition_suite(int trials, std::uint64_t seed,
                                      const ReportSink& sink);

// H(λ) = H(core) ∪ |adjusted quotient lengths| for every partition of every
// n in ns, for each d in ds
int verify_partition_split_suite(const std::vector<int>& ns,
                                 const std::vector<int>& ds,
                                 const ReportSink& sink);

// hook lengths of S = |δ-lengths of the ell-quotient| ∪ lengths of the
// ell-core, on random symbols with ell in 1..max_ell
int verify_split_identity_suite(int trials, std::uint64_t seed, int max_ell,
                                const ReportSink& sink);

// same with a random twist residue e, zeros stripped
int verify_twisted_identity_suite(int trials, std::uint64_t seed, int max_ell,
                                  const ReportSink& sink);

// sum of squared character degrees = n! for each n <= max_n, and the
// relative-degree factorization against the direct degree for each
// partition of each n and each d in ds
int verify_degree_suite(int max_n, const std::vector<int>& ds,
                        const ReportSink& sink);

// cross-checks of independent computations:
//   core_trials   abacus core vs random-order hook removal
//   le_trials     twisted core vs random-order (ell,e)-hook removal
//   hook_trials   partition hooks vs β-set hooks vs symbol δ-lengths
int verify_oracle_suite(int core_trials, int le_trials, int hook_trials,
                        std::uint64_t seed, const ReportSink& sink);

}  // namespace abacore
