#pragma once

// Splitting a d-symbol into d*ell rows, the ell-core/quotient pair, the
// (ell,e)-twist permutation, and the two multiset identities they satisfy.

#include <vector>

#include "abacore/hook_data.hpp"
#include "abacore/symbol.hpp"

namespace abacore {

// S_{*ell}: the same β-set re-read on d*ell runners
DSymbol split_symbol(const DSymbol& s, int ell);

// δ_{*ell}: entry s*d + i becomes s*scale + c_i; scale becomes scale*ell.
// Lengths are preserved across split_symbol's hook correspondence.
DataTuple expand_tuple(const DataTuple& delta, int ell);

DSymbol ell_quotient(const DSymbol& s, int ell);  // d*ell rows, balanced
DSymbol ell_core(const DSymbol& s, int ell);      // d rows, no (ell,0)-hooks

// counts[i][r] = number of elements of row i congruent to r mod ell
std::vector<std::vector<int>> runner_counts(const DSymbol& s, int ell);

// the tuple pairing with ell_quotient in the split identity:
// entry s*d + i is s + ell * counts[i][s], modulus ell
DataTuple delta_for_split(const DSymbol& s, int ell);

struct TwistSpec {
  int d = 1;
  int ell = 1;
  int e = 0;
};

// permutation of the nonnegative integers: write n = r*(d*ell) + s*d + t and
// replace t by (t + r*e) mod d; e = 0 is the identity
int twist(TwistSpec spec, int n);
int twist_inverse(TwistSpec spec, int n);

BetaSet twist_beta_set(TwistSpec spec, const BetaSet& x);
BetaSet untwist_beta_set(TwistSpec spec, const BetaSet& x);

// σ(S): twist the underlying β-set, re-read on d runners
DSymbol twist_symbol(TwistSpec spec, const DSymbol& s);
DSymbol untwist_symbol(TwistSpec spec, const DSymbol& s);

DSymbol split_twisted(const DSymbol& s, int ell, int e);  // S_{*ell,e}
DSymbol le_quotient(const DSymbol& s, int ell, int e);    // d*ell rows
DSymbol le_core(const DSymbol& s, int ell, int e);        // d rows

// The hooks whose exhaustive removal produces le_core: length ell and
// (j - i) ≡ e (mod d). Note the reversed orientation relative to
// SymbolHook::e_class — this is the class the twist turns into plain
// (ell,0)-hooks, and the removal fixed point matches le_core only this way.
std::vector<SymbolHook> le_hooks(const DSymbol& s, int ell, int e);

struct SplitIdentityReport {
  bool equal = false;
  RationalMultiset lhs;           // hook lengths of S, zeros included
  RationalMultiset quotient_abs;  // abs δ-lengths over ell_quotient
  RationalMultiset core;          // hook lengths of ell_core
};

SplitIdentityReport verify_split_identity(const DSymbol& s, int ell);

struct TwistedIdentityReport {
  bool equal = false;
  RationalMultiset lhs;           // nonzero hook lengths of S
  RationalMultiset quotient_abs;  // nonzero abs δ-lengths over le_quotient
  RationalMultiset core;          // nonzero hook lengths of le_core
  DataTuple delta;                // delta_for_split of the twisted symbol
};

TwistedIdentityReport verify_twisted_identity(const DSymbol& s, int ell,
                                              int e);

}  // namespace abacore
