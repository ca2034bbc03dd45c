#include "abacore/hook_data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "abacore/beta_set.hpp"

namespace abacore {
namespace {

std::vector<SymbolHook> sorted_desc(std::vector<SymbolHook> v) {
  std::sort(v.begin(), v.end(), [](const SymbolHook& l, const SymbolHook& r) {
    return std::tie(l.a, l.b) > std::tie(r.a, r.b);
  });
  return v;
}

std::string hook_text(SymbolHook z) {
  std::ostringstream os;
  os << "(" << z.a << "," << z.b << "," << z.i << "," << z.j << ")";
  return os.str();
}

void check_dimension(const DataTuple& delta, const DSymbol& s) {
  if (delta.dimension() != s.d())
    throw std::invalid_argument("data tuple dimension does not match symbol");
}

}  // namespace

DataTuple::DataTuple(std::vector<Rational> offsets, Rational scale)
    : offsets_(std::move(offsets)), scale_(std::move(scale)) {
  if (scale_ < 0) throw std::invalid_argument("tuple scale must be >= 0");
}

DataTuple minimal_tuple(int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  return DataTuple(std::vector<Rational>(d, 0), 1);
}

DataTuple partition_tuple(int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  std::vector<Rational> c(d);
  for (int i = 0; i < d; ++i) c[i] = i;
  return DataTuple(std::move(c), d);
}

DataTuple shifted_tuple(const DataTuple& delta, const DSymbol& s) {
  check_dimension(delta, s);
  std::vector<Rational> c = delta.offsets();
  for (int i = 0; i < s.d(); ++i) c[i] += s.row(i).size() * delta.scale();
  return DataTuple(std::move(c), delta.scale());
}

Rational delta_length(const DataTuple& delta, SymbolHook z) {
  if (z.i < 0 || z.i >= delta.dimension() || z.j < 0 ||
      z.j >= delta.dimension())
    throw std::invalid_argument("hook indices outside tuple dimension");
  return delta.scale() * (z.a - z.b) + delta.offsets()[z.i] -
         delta.offsets()[z.j];
}

RationalMultiset length_multiset(const DataTuple& delta, const DSymbol& s) {
  check_dimension(delta, s);
  return length_multiset(delta, hooks(s));
}

RationalMultiset length_multiset(const DataTuple& delta,
                                 const std::vector<SymbolHook>& zs) {
  std::vector<Rational> out;
  out.reserve(zs.size());
  for (SymbolHook z : zs) out.push_back(delta_length(delta, z));
  return RationalMultiset(std::move(out));
}

RationalMultiset abs_multiset(const RationalMultiset& m) {
  return m.mapped([](const Rational& v) { return v < 0 ? Rational(-v) : v; });
}

RationalMultiset positive_part(const RationalMultiset& m) {
  return m.filtered([](const Rational& v) { return v != 0; });
}

bool is_positive_branch(const std::vector<int>& x, SymbolHook z) {
  if (z.i == z.j) return true;
  bool with_orientation =
      x[z.i] > x[z.j] || (x[z.i] == x[z.j] && z.i > z.j);
  if (with_orientation) return true;
  int delta = x[z.j] - x[z.i];
  int ell = z.length();
  return ell > delta || (ell == delta && z.j < z.i);
}

Rational signed_length(const DataTuple& delta_s, const std::vector<int>& x,
                       SymbolHook z) {
  Rational v = delta_length(delta_s, z);
  return is_positive_branch(x, z) ? v : Rational(-v);
}

RationalMultiset signed_quotient_lengths(const DataTuple& delta,
                                         const DSymbol& s) {
  check_dimension(delta, s);
  DataTuple ds = shifted_tuple(delta, s);
  std::vector<int> x = s.row_sizes();
  std::vector<Rational> out;
  for (SymbolHook z : hooks(balanced_quotient(s)))
    out.push_back(signed_length(ds, x, z));
  return RationalMultiset(std::move(out));
}

std::vector<HookPair> universal_bijection(const DSymbol& s) {
  DSymbol q = balanced_quotient(s);
  DSymbol c = core(s);
  std::vector<int> x = s.row_sizes();
  int d = s.d();

  int lmax = 1;
  const DSymbol* parts[] = {&s, &q, &c};
  for (const DSymbol* sym : parts)
    for (const BetaSet& row : sym->rows())
      lmax = std::max(lmax, row.max_element() + 1);
  int dmax = 0;
  for (int xi : x) dmax = std::max(dmax, xi);
  lmax += dmax;  // covers every class that can be nonempty on either side

  std::vector<HookPair> out;
  auto emit_split = [&](const std::vector<SymbolHook>& src,
                        const std::vector<SymbolHook>& q_tgt,
                        const std::vector<SymbolHook>& c_tgt) {
    if (src.size() != q_tgt.size() + c_tgt.size())
      throw std::logic_error("hook class cardinality mismatch");
    for (std::size_t t = 0; t < q_tgt.size(); ++t)
      out.push_back(HookPair{src[t], TargetKind::quotient, q_tgt[t]});
    for (std::size_t t = 0; t < c_tgt.size(); ++t)
      out.push_back(
          HookPair{src[q_tgt.size() + t], TargetKind::core, c_tgt[t]});
  };
  auto emit_all = [&](const std::vector<SymbolHook>& src,
                      const std::vector<SymbolHook>& q_tgt) {
    emit_split(src, q_tgt, {});
  };

  for (int i = 0; i < d; ++i)
    for (int ell = 1; ell <= lmax; ++ell)
      emit_all(sorted_desc(hooks_in_class(s, i, i, ell)),
               sorted_desc(hooks_in_class(q, i, i, ell)));

  for (int p = 0; p < d; ++p)
    for (int n = p + 1; n < d; ++n) {
      // orientation: row I has the weakly larger size, ties to larger index
      int I, J;
      if (x[p] > x[n] || (x[p] == x[n] && p > n)) {
        I = p;
        J = n;
      } else {
        I = n;
        J = p;
      }
      int delta = x[I] - x[J];

      // short hooks of the pair live where the first index is larger
      int hi = std::max(I, J), lo = std::min(I, J);
      auto src_short = sorted_desc(hooks_in_class(s, hi, lo, 0));
      if (delta == 0) {
        emit_all(src_short, sorted_desc(hooks_in_class(q, hi, lo, 0)));
      } else {
        emit_split(src_short, sorted_desc(hooks_in_class(q, J, I, delta)),
                   sorted_desc(hooks_in_class(c, hi, lo, 0)));
      }

      for (int ell = 1; ell <= lmax; ++ell) {
        auto src = sorted_desc(hooks_in_class(s, I, J, ell));
        if (ell > delta) {
          emit_all(src, sorted_desc(hooks_in_class(q, I, J, ell - delta)));
        } else if (ell == delta) {
          emit_all(src, I > J ? sorted_desc(hooks_in_class(q, I, J, 0))
                              : sorted_desc(hooks_in_class(q, J, I, 0)));
        } else {
          emit_split(src, sorted_desc(hooks_in_class(q, J, I, delta - ell)),
                     sorted_desc(hooks_in_class(c, I, J, ell)));
        }
        emit_all(sorted_desc(hooks_in_class(s, J, I, ell)),
                 sorted_desc(hooks_in_class(q, J, I, ell + delta)));
      }
    }
  return out;
}

PointwiseReport verify_pointwise_decomposition(const DSymbol& s,
                                               const DataTuple& delta) {
  check_dimension(delta, s);
  std::vector<HookPair> pairs = universal_bijection(s);
  DataTuple ds = shifted_tuple(delta, s);
  std::vector<int> x = s.row_sizes();

  if (pairs.size() != hooks(s).size())
    return {false, "pairing is not total over the symbol's hooks"};
  std::vector<std::tuple<int, int, int, int, int>> targets;
  for (const HookPair& hp : pairs)
    targets.emplace_back(static_cast<int>(hp.kind), hp.target.a, hp.target.b,
                         hp.target.i, hp.target.j);
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    return {false, "pairing repeats a target hook"};
  std::size_t q_count = hooks(balanced_quotient(s)).size();
  std::size_t c_count = hooks(core(s)).size();
  if (targets.size() != q_count + c_count)
    return {false, "pairing does not exhaust quotient and core hooks"};

  for (const HookPair& hp : pairs) {
    Rational lhs = delta_length(delta, hp.source);
    Rational rhs = hp.kind == TargetKind::quotient
                       ? signed_length(ds, x, hp.target)
                       : delta_length(delta, hp.target);
    if (lhs != rhs) {
      std::ostringstream os;
      os << "hook " << hook_text(hp.source) << " of length "
         << rational_to_string(lhs) << " maps to "
         << (hp.kind == TargetKind::quotient ? "quotient" : "core") << " hook "
         << hook_text(hp.target) << " of length " << rational_to_string(rhs);
      return {false, os.str()};
    }
  }
  return {};
}

MultisetTripleReport verify_multiset_decomposition(const DSymbol& s,
                                                   const DataTuple& delta) {
  MultisetTripleReport rep;
  rep.lhs = length_multiset(delta, s);
  rep.quotient = signed_quotient_lengths(delta, s);
  rep.core = length_multiset(delta, core(s));
  rep.equal = rep.lhs == rep.quotient.united(rep.core);
  rep.core_included = rep.lhs.contains(rep.core);
  return rep;
}

PartitionSplit partition_hook_split(const Partition& lam, const BetaSet& x,
                                    int d) {
  if (partition_of(x) != lam)
    throw std::invalid_argument("β-set does not encode the partition");
  DSymbol s = to_symbol(x, d);
  std::vector<int> sizes = s.row_sizes();
  std::vector<int> vals;
  for (SymbolHook z : hooks(balanced_quotient(s)))
    vals.push_back(d * z.length() + (z.i + d * sizes[z.i]) -
                   (z.j + d * sizes[z.j]));
  for (int& v : vals) v = v < 0 ? -v : v;
  return PartitionSplit{hook_lengths_direct(d_core_partition(x, d)),
                        Multiset<int>(std::move(vals))};
}

Multiset<int> modified_quotient_lengths(const Partition& lam, const BetaSet& x,
                                        int d) {
  if (partition_of(x) != lam)
    throw std::invalid_argument("β-set does not encode the partition");
  Partition mu = d_quotient_partition(x, d);
  std::vector<int> sizes = to_symbol(x, d).row_sizes();
  std::vector<int> out;
  for (int r = 1; r <= mu.length(); ++r)
    for (int col = 1; col <= mu.part(r); ++col) {
      Node node{r, col};
      HandFoot hf = hand_foot_residues(mu, node, d);
      int i = hf.hand;
      int j = ((hf.foot - 1) % d + d) % d;
      out.push_back(hook_length_at(mu, node) + (sizes[i] - sizes[j]) * d);
    }
  return Multiset<int>(std::move(out));
}

BigInt DegreeFactorization::degree() const {
  BigInt q, rem;
  boost::multiprecision::divide_qr(BigInt(symmetric_factor * core_degree),
                                   quotient_product, q, rem);
  if (rem != 0)
    throw std::logic_error("factorization must divide evenly");
  return q;
}

DegreeFactorization relative_degree_factorization(const Partition& lam,
                                                  const BetaSet& x, int d) {
  PartitionSplit split = partition_hook_split(lam, x, d);
  Partition core_part = d_core_partition(x, d);
  BigInt sym = 1;
  for (int v = core_part.size() + 1; v <= lam.size(); ++v) sym *= v;
  return DegreeFactorization{sym, product_as<BigInt>(split.quotient_abs),
                             character_degree(core_part)};
}

}  // namespace abacore
