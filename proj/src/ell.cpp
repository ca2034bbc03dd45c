#include "abacore/ell.hpp"

#include <stdexcept>

namespace abacore {

namespace {

void check_ell(int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
}

void check_spec(const TwistSpec& spec) {
  if (spec.d < 1 || spec.ell < 1)
    throw std::invalid_argument("twist needs d, ell >= 1");
  if (spec.e < 0 || spec.e >= spec.d)
    throw std::invalid_argument("twist residue e out of range");
}

}  // namespace

DSymbol split_symbol(const DSymbol& s, int ell) {
  check_ell(ell);
  return to_symbol(to_beta_set(s), s.d() * ell);
}

DataTuple expand_tuple(const DataTuple& delta, int ell) {
  check_ell(ell);
  const int d = delta.dimension();
  std::vector<Rational> offsets(static_cast<size_t>(d) * ell);
  for (int s = 0; s < ell; ++s)
    for (int i = 0; i < d; ++i)
      offsets[static_cast<size_t>(s) * d + i] = s * delta.scale() + delta.offset(i);
  return DataTuple(offsets, delta.scale() * ell);
}

DSymbol ell_quotient(const DSymbol& s, int ell) {
  return balanced_quotient(split_symbol(s, ell));
}

DSymbol ell_core(const DSymbol& s, int ell) {
  return to_symbol(to_beta_set(core(split_symbol(s, ell))), s.d());
}

std::vector<std::vector<int>> runner_counts(const DSymbol& s, int ell) {
  check_ell(ell);
  std::vector<std::vector<int>> counts(s.d());
  for (int i = 0; i < s.d(); ++i) {
    counts[i].assign(ell, 0);
    for (int v : s.row(i).elements()) ++counts[i][v % ell];
  }
  return counts;
}

DataTuple delta_for_split(const DSymbol& s, int ell) {
  const auto counts = runner_counts(s, ell);
  const int d = s.d();
  std::vector<Rational> offsets(static_cast<size_t>(d) * ell);
  for (int r = 0; r < ell; ++r)
    for (int i = 0; i < d; ++i)
      offsets[static_cast<size_t>(r) * d + i] = r + ell * counts[i][r];
  return DataTuple(offsets, ell);
}

int twist(TwistSpec spec, int n) {
  check_spec(spec);
  if (n < 0) throw std::invalid_argument("twist needs n >= 0");
  const int block = spec.d * spec.ell;
  const int r = n / block, rem = n % block;
  const int s = rem / spec.d, t = rem % spec.d;
  return r * block + s * spec.d + (t + r * spec.e) % spec.d;
}

int twist_inverse(TwistSpec spec, int n) {
  check_spec(spec);
  if (n < 0) throw std::invalid_argument("twist needs n >= 0");
  const int block = spec.d * spec.ell;
  const int r = n / block, rem = n % block;
  const int s = rem / spec.d, t = rem % spec.d;
  return r * block + s * spec.d + ((t - r * spec.e) % spec.d + spec.d) % spec.d;
}

BetaSet twist_beta_set(TwistSpec spec, const BetaSet& x) {
  std::vector<int> out;
  out.reserve(x.size());
  for (int v : x.elements()) out.push_back(twist(spec, v));
  return BetaSet(out);
}

BetaSet untwist_beta_set(TwistSpec spec, const BetaSet& x) {
  std::vector<int> out;
  out.reserve(x.size());
  for (int v : x.elements()) out.push_back(twist_inverse(spec, v));
  return BetaSet(out);
}

DSymbol twist_symbol(TwistSpec spec, const DSymbol& s) {
  if (spec.d != s.d())
    throw std::invalid_argument("twist dimension does not match symbol");
  return to_symbol(twist_beta_set(spec, to_beta_set(s)), s.d());
}

DSymbol untwist_symbol(TwistSpec spec, const DSymbol& s) {
  if (spec.d != s.d())
    throw std::invalid_argument("twist dimension does not match symbol");
  return to_symbol(untwist_beta_set(spec, to_beta_set(s)), s.d());
}

DSymbol split_twisted(const DSymbol& s, int ell, int e) {
  return split_symbol(twist_symbol({s.d(), ell, e}, s), ell);
}

DSymbol le_quotient(const DSymbol& s, int ell, int e) {
  return balanced_quotient(split_twisted(s, ell, e));
}

DSymbol le_core(const DSymbol& s, int ell, int e) {
  const TwistSpec spec{s.d(), ell, e};
  return untwist_symbol(spec, ell_core(twist_symbol(spec, s), ell));
}

std::vector<SymbolHook> le_hooks(const DSymbol& s, int ell, int e) {
  check_ell(ell);
  if (e < 0 || e >= s.d())
    throw std::invalid_argument("hook residue e out of range");
  std::vector<SymbolHook> out;
  for (const SymbolHook& z : hooks(s)) {
    const int cls = ((z.j - z.i) % s.d() + s.d()) % s.d();
    if (z.length() == ell && cls == e) out.push_back(z);
  }
  return out;
}

SplitIdentityReport verify_split_identity(const DSymbol& s, int ell) {
  SplitIdentityReport rep;
  rep.lhs = length_multiset(minimal_tuple(s.d()), s);
  rep.quotient_abs = abs_multiset(
      length_multiset(delta_for_split(s, ell), ell_quotient(s, ell)));
  rep.core = length_multiset(minimal_tuple(s.d()), ell_core(s, ell));
  rep.equal = rep.lhs == rep.quotient_abs.united(rep.core);
  return rep;
}

TwistedIdentityReport verify_twisted_identity(const DSymbol& s, int ell,
                                              int e) {
  TwistedIdentityReport rep;
  const DSymbol twisted = twist_symbol({s.d(), ell, e}, s);
  rep.delta = delta_for_split(twisted, ell);
  rep.lhs = positive_part(length_multiset(minimal_tuple(s.d()), s));
  rep.quotient_abs = positive_part(
      abs_multiset(length_multiset(rep.delta, le_quotient(s, ell, e))));
  rep.core =
      positive_part(length_multiset(minimal_tuple(s.d()), le_core(s, ell, e)));
  rep.equal = rep.lhs == rep.quotient_abs.united(rep.core);
  return rep;
}

}  // namespace abacore
