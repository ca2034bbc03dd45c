#pragma once

// Generalized hook length functions on symbol hooks: a data tuple
// (c_0,...,c_{d-1}; k) assigns the hook (a,b,i,j) the exact rational length
// k(a-b) + c_i - c_j. This module also builds the class-respecting bijection
// between the hooks of a symbol and those of its balanced quotient and core,
// and hosts the multiset-identity checks driven by it.

#include <vector>

#include "abacore/multiset.hpp"
#include "abacore/numeric.hpp"
#include "abacore/symbol.hpp"

namespace abacore {

class DataTuple {
 public:
  DataTuple() = default;
  DataTuple(std::vector<Rational> offsets, Rational scale);

  const std::vector<Rational>& offsets() const { return offsets_; }
  const Rational& offset(int i) const { return offsets_.at(i); }
  const Rational& scale() const { return scale_; }
  int dimension() const { return static_cast<int>(offsets_.size()); }

  friend bool operator==(const DataTuple&, const DataTuple&) = default;

 private:
  std::vector<Rational> offsets_;
  Rational scale_ = 1;
};

DataTuple minimal_tuple(int d);    // (0,...,0; 1): length is a-b
DataTuple partition_tuple(int d);  // (0,1,...,d-1; d): recovers diagram hooks

// δ_S: every offset bumped by (row size) * scale
DataTuple shifted_tuple(const DataTuple& delta, const DSymbol& s);

Rational delta_length(const DataTuple& delta, SymbolHook z);

using RationalMultiset = Multiset<Rational>;

RationalMultiset length_multiset(const DataTuple& delta, const DSymbol& s);
RationalMultiset length_multiset(const DataTuple& delta,
                                 const std::vector<SymbolHook>& zs);

RationalMultiset abs_multiset(const RationalMultiset& m);
RationalMultiset positive_part(const RationalMultiset& m);  // drop zeros

// Sign rule for hooks of the balanced quotient, driven by the original row
// sizes x: orient each row pair so Δ = x_i - x_j >= 0 (ties: larger index
// first); a hook is negative exactly when it runs against the orientation
// with length < Δ, or equals Δ with the oriented pair in increasing index
// order ruled out.
bool is_positive_branch(const std::vector<int>& x, SymbolHook z);

// h̄: delta_s-length of z with the sign rule applied
Rational signed_length(const DataTuple& delta_s, const std::vector<int>& x,
                       SymbolHook z);

// multiset of h̄ over all hooks of balanced_quotient(s), with δ_S and x
// derived from s
RationalMultiset signed_quotient_lengths(const DataTuple& delta,
                                         const DSymbol& s);

enum class TargetKind { quotient, core };

struct HookPair {
  SymbolHook source;  // hook of S
  TargetKind kind = TargetKind::quotient;
  SymbolHook target;  // hook of Q(S) or of C(S)
};

// Total, class-respecting pairing H(S) -> H(Q) ∪ H(C). Within a class,
// sources and targets are sorted by decreasing (a,b) and paired positionally;
// in the split cases the first hooks go to the quotient class, the rest to
// the core class.
std::vector<HookPair> universal_bijection(const DSymbol& s);

struct PointwiseReport {
  bool ok = true;
  std::string detail;  // first violation when !ok
};

// h^δ(z) must equal h̄^{δ_S}(ω(z)) for quotient targets and h^δ(ω(z)) for
// core targets, hook by hook
PointwiseReport verify_pointwise_decomposition(const DSymbol& s,
                                               const DataTuple& delta);

struct MultisetTripleReport {
  bool equal = false;
  bool core_included = false;
  RationalMultiset lhs;       // H^δ(S)
  RationalMultiset quotient;  // signed quotient lengths
  RationalMultiset core;      // H^δ(C)
};

// the multiset identity, computed without the bijection
MultisetTripleReport verify_multiset_decomposition(const DSymbol& s,
                                                   const DataTuple& delta);

struct PartitionSplit {
  Multiset<int> core_lengths;  // hook lengths of the d-core
  Multiset<int> quotient_abs;  // abs of the δ-lengths over the quotient
};

// diagram hooks of λ split through the d-runner symbol of X:
// hook_lengths_direct(λ) = core_lengths ∪ quotient_abs
PartitionSplit partition_hook_split(const Partition& lam, const BetaSet& x,
                                    int d);

// signed adjusted lengths on the quotient partition's diagram: each hook
// gets + (x_hand - x_{foot-1}) * d, residues read from the diagram
Multiset<int> modified_quotient_lengths(const Partition& lam, const BetaSet& x,
                                        int d);

struct DegreeFactorization {
  BigInt symmetric_factor = 1;  // n! / r!
  BigInt quotient_product = 1;  // |product of quotient δ-lengths|
  BigInt core_degree = 1;
  BigInt degree() const;  // symmetric_factor * core_degree / quotient_product
};

DegreeFactorization relative_degree_factorization(const Partition& lam,
                                                  const BetaSet& x, int d);

}  // namespace abacore
