#include "abacore/examples.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "abacore/ell.hpp"
#include "abacore/io.hpp"

namespace abacore {

namespace {

using nlohmann::json;

json to_json(const Partition& lam) { return json(lam.parts()); }
json to_json(const BetaSet& x) { return json(x.elements()); }

json to_json(const DSymbol& s) {
  json rows = json::array();
  for (const BetaSet& row : s.rows()) rows.push_back(row.elements());
  return rows;
}

json to_json(const RationalMultiset& m) {
  json vals = json::array();
  for (const Rational& v : m.values()) vals.push_back(rational_to_string(v));
  return vals;
}

json to_json(const Multiset<int>& m) {
  json vals = json::array();
  for (int v : m.values()) vals.push_back(std::to_string(v));
  return vals;
}

json to_json(const std::vector<Partition>& components) {
  json out = json::array();
  for (const Partition& comp : components) out.push_back(comp.parts());
  return out;
}

// accumulates the text form and the JSON form side by side
class Doc {
 public:
  void value(const std::string& label, const std::string& key,
             const std::string& text_value, json json_value) {
    text_ += label + " = " + text_value + "\n";
    j_[key] = std::move(json_value);
  }
  void number(const std::string& label, const std::string& key, int v) {
    value(label, key, std::to_string(v), json(v));
  }
  void big(const std::string& label, const std::string& key, const BigInt& v) {
    value(label, key, v.str(), json(v.str()));
  }
  void block(const std::string& label, const std::string& key,
             const std::string& rendered) {
    text_ += label + ":\n" + rendered;
    j_[key] = rendered;
  }
  void note(const std::string& line) { text_ += line + "\n"; }
  void check(const std::string& label, const std::string& key, bool ok) {
    text_ += "check " + label + ": " + (ok ? "pass" : "fail") + "\n";
    j_["checks"][key] = ok;
  }
  std::string text() const { return text_; }
  json dump(const std::string& id) const {
    json out = j_;
    out["id"] = id;
    return out;
  }

 private:
  std::string text_;
  json j_ = json::object();
};

Doc beta_symbol_instance() {
  Doc doc;
  const BetaSet x({11, 8, 6, 2, 0});
  const int d = 3;
  doc.value("X", "X", format(x), to_json(x));
  doc.number("d", "d", d);
  doc.value("p(X)", "p_X", format(partition_of(x)), to_json(partition_of(x)));
  doc.block("abacus", "abacus", abacus_render(x, d));

  const DSymbol s = to_symbol(x, d);
  doc.value("S", "S", format(s), to_json(s));
  doc.value("p(S)", "p_S", format(partition_of(s)), to_json(partition_of(s)));
  doc.value("Q(S)", "Q_S", format(balanced_quotient(s)),
            to_json(balanced_quotient(s)));
  doc.value("C(S)", "C_S", format(core(s)), to_json(core(s)));

  const BetaSet qset = d_quotient(x, d);
  const BetaSet cset = d_core(x, d);
  const Partition q = partition_of(qset);
  const Partition c = partition_of(cset);
  doc.value("Q_d(X)", "quotient_set", format(qset), to_json(qset));
  doc.value("q_d(X)", "quotient_partition", format(q), to_json(q));
  doc.value("C_d(X)", "core_set", format(cset), to_json(cset));
  doc.value("c_d(X)", "core_partition", format(c), to_json(c));

  const std::vector<Partition> comps = partition_d_quotient(partition_of(x), d);
  doc.value("quotient components", "components", format(comps),
            to_json(comps));

  int comp_total = 0;
  for (const Partition& comp : comps) comp_total += comp.size();
  std::ostringstream weights;
  weights << "|p(X)| = " << partition_of(x).size() << ", |c_d(X)| = "
          << c.size() << ", |q_d(X)| = " << q.size();
  doc.note(weights.str());
  doc.check("p(S) = p(X)", "same_partition", partition_of(s) == partition_of(x));
  doc.check("|p(X)| = |c_d(X)| + |q_d(X)|", "weights",
            partition_of(x).size() == c.size() + q.size());
  doc.check("|q_d(X)| = d * (total component size)", "component_weights",
            q.size() == d * comp_total);
  return doc;
}

Doc partition_split_instance() {
  Doc doc;
  const Partition lam({7, 5, 4, 1});
  const int d = 3;
  const BetaSet x = beta_set_for(lam, 5);
  doc.value("lambda", "lambda", format(lam), to_json(lam));
  doc.number("d", "d", d);
  doc.value("X", "X", format(x), to_json(x));
  doc.block("hook lengths", "hook_diagram", render_hook_diagram(lam));
  const Multiset<int> h = hook_lengths_direct(lam);
  doc.value("H(lambda)", "H_lambda", format(h), to_json(h));
  doc.block("residues", "residue_diagram", render_residue_diagram(lam, d));

  const Partition c = d_core_partition(x, d);
  doc.value("d-core", "core", format(c), to_json(c));
  doc.block("core hook lengths", "core_hook_diagram", render_hook_diagram(c));
  const Multiset<int> hc = hook_lengths_direct(c);
  doc.value("H(core)", "H_core", format(hc), to_json(hc));

  const std::vector<Partition> comps = partition_d_quotient(lam, d);
  doc.value("quotient components", "components", format(comps),
            to_json(comps));
  const Partition mu = d_quotient_partition(x, d);
  doc.value("quotient partition", "quotient_partition", format(mu),
            to_json(mu));
  const DSymbol s = to_symbol(x, d);
  doc.value("S", "S", format(s), to_json(s));
  std::ostringstream sizes;
  for (int i = 0; i < s.d(); ++i) sizes << (i ? "," : "") << s.row(i).size();
  doc.value("row sizes", "row_sizes", sizes.str(), json(s.row_sizes()));

  doc.block("adjusted quotient table", "adjusted_table",
            render_adjusted_quotient_table(x, d));
  const Multiset<int> adjusted = modified_quotient_lengths(lam, x, d);
  const Multiset<int> adjusted_abs =
      adjusted.mapped([](int v) { return v < 0 ? -v : v; });
  doc.value("adjusted lengths", "adjusted", format(adjusted),
            to_json(adjusted));
  doc.value("|adjusted lengths|", "adjusted_abs", format(adjusted_abs),
            to_json(adjusted_abs));
  doc.check("H(lambda) = H(core) union |adjusted|", "split",
            h == hc.united(adjusted_abs));

  const DegreeFactorization fac = relative_degree_factorization(lam, x, d);
  doc.big("n!/r!", "symmetric_factor", fac.symmetric_factor);
  doc.big("core degree", "core_degree", fac.core_degree);
  doc.big("quotient product", "quotient_product", fac.quotient_product);
  doc.big("factorized degree", "factorized_degree", fac.degree());
  doc.big("direct degree", "direct_degree", character_degree(lam));
  doc.check("factorized degree = direct degree", "degree",
            fac.degree() == character_degree(lam));
  return doc;
}

const DSymbol& running_symbol() {
  static const DSymbol s(
      std::vector<BetaSet>{BetaSet({9, 7, 4, 2}), BetaSet({3, 1, 0})});
  return s;
}

Doc split_core_instance() {
  Doc doc;
  const DSymbol& s = running_symbol();
  const int ell = 3;
  doc.value("S", "S", format(s), to_json(s));
  doc.number("d", "d", s.d());
  doc.number("ell", "ell", ell);
  doc.value("X", "X", format(to_beta_set(s)), to_json(to_beta_set(s)));
  doc.value("p(S)", "p_S", format(partition_of(s)), to_json(partition_of(s)));

  const DSymbol split = split_symbol(s, ell);
  doc.value("S_*3", "split", format(split), to_json(split));
  const DSymbol q = ell_quotient(s, ell);
  doc.value("Q_3(S)", "Q", format(q), to_json(q));
  const DSymbol csplit = core(split);
  doc.value("C(S_*3)", "C_split", format(csplit), to_json(csplit));
  doc.value("beta set of C(S_*3)", "C_split_beta", format(to_beta_set(csplit)),
            to_json(to_beta_set(csplit)));
  const DSymbol c = ell_core(s, ell);
  doc.value("C_(3)(S)", "C", format(c), to_json(c));
  doc.value("p(C_(3)(S))", "p_C", format(partition_of(c)),
            to_json(partition_of(c)));

  const DataTuple delta = delta_for_split(s, ell);
  doc.value("delta_(3,S)", "delta", format(delta), json(format(delta)));
  const DataTuple expanded =
      shifted_tuple(expand_tuple(minimal_tuple(s.d()), ell), split);
  doc.check("delta_(3,S) = shifted expansion of (0,0;1)", "delta_consistent",
            delta == expanded);
  return doc;
}

Doc split_identity_instance() {
  Doc doc;
  const DSymbol& s = running_symbol();
  const int ell = 3;
  doc.value("S", "S", format(s), to_json(s));
  doc.number("d", "d", s.d());
  doc.number("ell", "ell", ell);
  doc.value("p(S)", "p_S", format(partition_of(s)), to_json(partition_of(s)));
  doc.block("hook lengths over the diagram of p(S)", "hook_table",
            render_length_table(s, minimal_tuple(s.d())));

  const SplitIdentityReport rep = verify_split_identity(s, ell);
  doc.value("H(S)", "H_S", format(rep.lhs), to_json(rep.lhs));

  const DSymbol q = ell_quotient(s, ell);
  doc.value("Q_3(S)", "Q", format(q), to_json(q));
  doc.value("p(Q_3(S))", "p_Q", format(partition_of(q)),
            to_json(partition_of(q)));
  const DataTuple delta = delta_for_split(s, ell);
  doc.value("delta_(3,S)", "delta", format(delta), json(format(delta)));
  doc.block("delta-lengths over the diagram of p(Q_3(S))", "Q_table",
            render_length_table(q, delta));
  doc.value("|H^delta(Q_3(S))|", "Q_abs", format(rep.quotient_abs),
            to_json(rep.quotient_abs));

  const DSymbol c = ell_core(s, ell);
  doc.value("C_(3)(S)", "C", format(c), to_json(c));
  doc.value("p(C_(3)(S))", "p_C", format(partition_of(c)),
            to_json(partition_of(c)));
  doc.value("H(C_(3)(S))", "H_C", format(rep.core), to_json(rep.core));
  doc.check("H(S) = |H^delta(Q_3(S))| union H(C_(3)(S))", "identity",
            rep.equal);
  return doc;
}

Doc twisted_identity_instance() {
  Doc doc;
  const DSymbol& s = running_symbol();
  const int ell = 3, e = 1;
  const TwistSpec spec{s.d(), ell, e};
  doc.value("S", "S", format(s), to_json(s));
  doc.number("d", "d", s.d());
  doc.number("ell", "ell", ell);
  doc.number("e", "e", e);
  doc.value("X", "X", format(to_beta_set(s)), to_json(to_beta_set(s)));
  doc.value("sigma(X)", "sigma_X", format(twist_beta_set(spec, to_beta_set(s))),
            to_json(twist_beta_set(spec, to_beta_set(s))));
  const DSymbol twisted = twist_symbol(spec, s);
  doc.value("sigma(S)", "sigma_S", format(twisted), to_json(twisted));
  doc.value("S_(*3,1)", "split", format(split_twisted(s, ell, e)),
            to_json(split_twisted(s, ell, e)));

  const DSymbol q = le_quotient(s, ell, e);
  doc.value("Q_(3,1)(S)", "Q", format(q), to_json(q));
  doc.value("C(sigma(S)_*3)", "C_sigma_split", format(core(split_symbol(twisted, ell))),
            to_json(core(split_symbol(twisted, ell))));
  const DSymbol c = le_core(s, ell, e);
  doc.value("C_(3,1)(S)", "C", format(c), to_json(c));
  doc.value("p(C_(3,1)(S))", "p_C", format(partition_of(c)),
            to_json(partition_of(c)));

  const TwistedIdentityReport rep = verify_twisted_identity(s, ell, e);
  doc.value("delta_(3,sigma(S))", "delta", format(rep.delta),
            json(format(rep.delta)));
  doc.value("p(Q_(3,1)(S))", "p_Q", format(partition_of(q)),
            to_json(partition_of(q)));
  doc.block("delta-lengths over the diagram of p(Q_(3,1)(S))", "Q_table",
            render_length_table(q, rep.delta));
  doc.value("positive |H^delta(Q_(3,1)(S))|", "Q_positive",
            format(rep.quotient_abs), to_json(rep.quotient_abs));
  doc.value("positive H(S)", "H_S_positive", format(rep.lhs),
            to_json(rep.lhs));
  doc.value("positive H(C_(3,1)(S))", "H_C_positive", format(rep.core),
            to_json(rep.core));
  doc.check("positive H(S) = positive |H^delta(Q)| union positive H(C)",
            "identity", rep.equal);
  return doc;
}

Doc build(const std::string& id) {
  if (id == "1.15") return beta_symbol_instance();
  if (id == "4.8") return partition_split_instance();
  if (id == "5.1") return split_core_instance();
  if (id == "5.3") return split_identity_instance();
  if (id == "5.6") return twisted_identity_instance();
  throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace

std::vector<std::string> example_ids() {
  return {"1.15", "4.8", "5.1", "5.3", "5.6"};
}

std::string run_example(const std::string& id) { return build(id).text(); }

std::string run_example_json(const std::string& id) {
  return build(id).dump(id).dump(2) + "\n";
}

}  // namespace abacore
