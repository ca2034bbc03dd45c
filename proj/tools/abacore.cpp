// command line front end: exact hooks, cores, quotients and hook-length
// identities for partitions, β-sets and symbols.
//
// exit codes: 0 success, 1 a verification check failed, 2 bad usage/input

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abacore/examples.hpp"
#include "abacore/io.hpp"
#include "abacore/verify.hpp"

namespace {

using nlohmann::json;
using namespace abacore;

struct Options {
  std::string object;
  std::string example_id;
  int d = 0;    // 0 means not given
  int ell = 0;  // 0 means not given
  int e = -1;   // -1 means not given
  std::string delta;
  bool json_out = false;

  std::string suite;
  int n = -1;
  int trials = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string d_list;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int require_d(const Options& opt) {
  if (opt.d <= 0) throw UsageError("this operation needs --d");
  return opt.d;
}

json to_json(const Partition& lam) { return json(lam.parts()); }
json to_json(const BetaSet& x) { return json(x.elements()); }

json to_json(const DSymbol& s) {
  json rows = json::array();
  for (const BetaSet& row : s.rows()) rows.push_back(row.elements());
  return rows;
}

json to_json(const Multiset<int>& m) {
  json vals = json::array();
  for (int v : m.values()) vals.push_back(std::to_string(v));
  return vals;
}

json to_json(const RationalMultiset& m) {
  json vals = json::array();
  for (const Rational& v : m.values()) vals.push_back(rational_to_string(v));
  return vals;
}

json to_json(const std::vector<Partition>& components) {
  json out = json::array();
  for (const Partition& comp : components) out.push_back(comp.parts());
  return out;
}

void print(const Options& opt, const json& payload,
           const std::string& text) {
  if (opt.json_out)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

// the twist residue for symbol operations; defaults to 0 when --ell is used
int twist_residue(const Options& opt) { return opt.e < 0 ? 0 : opt.e; }

int run_core(const Options& opt) {
  const ParsedObject obj = parse_object(opt.object);
  json payload{{"op", "core"}};
  std::ostringstream text;
  if (const auto* lam = std::get_if<Partition>(&obj)) {
    const int d = require_d(opt);
    const Partition c =
        d_core_partition(beta_set_for(*lam, lam->length()), d);
    payload["input"] = to_json(*lam);
    payload["d"] = d;
    payload["core"] = to_json(c);
    text << "core = " << format(c) << "\n";
  } else if (const auto* x = std::get_if<BetaSet>(&obj)) {
    const int d = require_d(opt);
    const BetaSet c = d_core(*x, d);
    payload["input"] = to_json(*x);
    payload["d"] = d;
    payload["core_set"] = to_json(c);
    payload["core"] = to_json(partition_of(c));
    text << "C_d(X) = " << format(c) << "\n"
         << "c_d(X) = " << format(partition_of(c)) << "\n";
  } else {
    const DSymbol& s = std::get<DSymbol>(obj);
    payload["input"] = to_json(s);
    DSymbol c = opt.ell > 0 ? le_core(s, opt.ell, twist_residue(opt))
                            : core(s);
    if (opt.ell > 0) {
      payload["ell"] = opt.ell;
      payload["e"] = twist_residue(opt);
    }
    payload["core_symbol"] = to_json(c);
    payload["core"] = to_json(partition_of(c));
    text << "core symbol = " << format(c) << "\n"
         << "p = " << format(partition_of(c)) << "\n";
  }
  print(opt, payload, text.str());
  return 0;
}

int run_quotient(const Options& opt) {
  const ParsedObject obj = parse_object(opt.object);
  json payload{{"op", "quotient"}};
  std::ostringstream text;
  if (const auto* lam = std::get_if<Partition>(&obj)) {
    const int d = require_d(opt);
    const std::vector<Partition> comps = partition_d_quotient(*lam, d);
    payload["input"] = to_json(*lam);
    payload["d"] = d;
    payload["components"] = to_json(comps);
    text << "components = " << format(comps) << "\n";
  } else if (const auto* x = std::get_if<BetaSet>(&obj)) {
    const int d = require_d(opt);
    const BetaSet q = d_quotient(*x, d);
    payload["input"] = to_json(*x);
    payload["d"] = d;
    payload["quotient_set"] = to_json(q);
    payload["quotient"] = to_json(partition_of(q));
    text << "Q_d(X) = " << format(q) << "\n"
         << "q_d(X) = " << format(partition_of(q)) << "\n";
  } else {
    const DSymbol& s = std::get<DSymbol>(obj);
    payload["input"] = to_json(s);
    DSymbol q = opt.ell > 0 ? le_quotient(s, opt.ell, twist_residue(opt))
                            : balanced_quotient(s);
    if (opt.ell > 0) {
      payload["ell"] = opt.ell;
      payload["e"] = twist_residue(opt);
    }
    payload["quotient_symbol"] = to_json(q);
    payload["quotient"] = to_json(partition_of(q));
    text << "quotient symbol = " << format(q) << "\n"
         << "p = " << format(partition_of(q)) << "\n";
  }
  print(opt, payload, text.str());
  return 0;
}

int run_symbol(const Options& opt) {
  const ParsedObject obj = parse_object(opt.object);
  json payload{{"op", "symbol"}};
  std::ostringstream text;
  if (const auto* s = std::get_if<DSymbol>(&obj)) {
    payload["input"] = to_json(*s);
    payload["beta_set"] = to_json(to_beta_set(*s));
    payload["partition"] = to_json(partition_of(*s));
    text << "X = " << format(to_beta_set(*s)) << "\n"
         << "p(S) = " << format(partition_of(*s)) << "\n";
  } else {
    const int d = require_d(opt);
    const BetaSet x = std::holds_alternative<BetaSet>(obj)
                          ? std::get<BetaSet>(obj)
                          : beta_set_for(std::get<Partition>(obj),
                                         std::get<Partition>(obj).length());
    const DSymbol sym = to_symbol(x, d);
    payload["beta_set"] = to_json(x);
    payload["d"] = d;
    payload["symbol"] = to_json(sym);
    payload["partition"] = to_json(partition_of(sym));
    text << "S = " << format(sym) << "\n"
         << "p(S) = " << format(partition_of(sym)) << "\n";
  }
  print(opt, payload, text.str());
  return 0;
}

int run_hooks(const Options& opt) {
  const ParsedObject obj = parse_object(opt.object);
  json payload{{"op", "hooks"}};
  std::ostringstream text;
  if (const auto* lam = std::get_if<Partition>(&obj)) {
    payload["input"] = to_json(*lam);
    payload["diagram"] = render_hook_diagram(*lam);
    payload["lengths"] = to_json(hook_lengths_direct(*lam));
    text << render_hook_diagram(*lam)
         << "H = " << format(hook_lengths_direct(*lam)) << "\n";
    if (opt.d > 0) {
      payload["d"] = opt.d;
      payload["residues"] = render_residue_diagram(*lam, opt.d);
      text << "residues:\n" << render_residue_diagram(*lam, opt.d);
    }
  } else if (const auto* x = std::get_if<BetaSet>(&obj)) {
    payload["input"] = to_json(*x);
    json list = json::array();
    std::vector<int> lens;
    for (const BetaHook& z : hooks(*x)) {
      list.push_back({z.a, z.b});
      lens.push_back(z.length());
      text << "(" << z.a << "," << z.b << ") length " << z.length() << "\n";
    }
    payload["hooks"] = list;
    payload["lengths"] = to_json(Multiset<int>(lens));
    text << "lengths = " << format(Multiset<int>(std::move(lens))) << "\n";
  } else {
    const DSymbol& s = std::get<DSymbol>(obj);
    payload["input"] = to_json(s);
    std::vector<SymbolHook> zs;
    if (opt.ell > 0) {
      payload["ell"] = opt.ell;
      payload["e"] = twist_residue(opt);
      zs = le_hooks(s, opt.ell, twist_residue(opt));
    } else {
      zs = hooks(s);
    }
    json list = json::array();
    for (const SymbolHook& z : zs) {
      list.push_back({z.a, z.b, z.i, z.j});
      text << format(z) << "\n";
    }
    payload["hooks"] = list;
    payload["count"] = zs.size();
    text << "count = " << zs.size() << "\n";
  }
  print(opt, payload, text.str());
  return 0;
}

int run_lengths(const Options& opt) {
  const ParsedObject obj = parse_object(opt.object);
  json payload{{"op", "lengths"}};
  std::ostringstream text;
  if (const auto* s = std::get_if<DSymbol>(&obj)) {
    const DataTuple delta = opt.delta.empty() ? minimal_tuple(s->d())
                                              : parse_data_tuple(opt.delta);
    const RationalMultiset m = length_multiset(delta, *s);
    payload["input"] = to_json(*s);
    payload["delta"] = format(delta);
    payload["lengths"] = to_json(m);
    text << "H = " << format(m) << "\n";
  } else {
    if (!opt.delta.empty())
      throw UsageError("--delta applies to symbols only");
    Multiset<int> m;
    if (const auto* lam = std::get_if<Partition>(&obj)) {
      payload["input"] = to_json(*lam);
      m = hook_lengths_direct(*lam);
    } else {
      const BetaSet& x = std::get<BetaSet>(obj);
      payload["input"] = to_json(x);
      std::vector<int> lens;
      for (const BetaHook& z : hooks(x)) lens.push_back(z.length());
      m = Multiset<int>(std::move(lens));
    }
    payload["lengths"] = to_json(m);
    text << "H = " << format(m) << "\n";
  }
  print(opt, payload, text.str());
  return 0;
}

Partition partition_of_object(const ParsedObject& obj) {
  if (const auto* lam = std::get_if<Partition>(&obj)) return *lam;
  if (const auto* x = std::get_if<BetaSet>(&obj)) return partition_of(*x);
  return partition_of(std::get<DSymbol>(obj));
}

int run_degree(const Options& opt) {
  const Partition lam = partition_of_object(parse_object(opt.object));
  const BigInt deg = character_degree(lam);
  json payload{{"op", "degree"},
               {"partition", to_json(lam)},
               {"degree", deg.str()}};
  print(opt, payload, "degree = " + deg.str() + "\n");
  return 0;
}

int run_reldegree(const Options& opt) {
  const ParsedObject obj = parse_object(opt.object);
  BetaSet x;
  int d;
  if (const auto* s = std::get_if<DSymbol>(&obj)) {
    x = to_beta_set(*s);
    d = s->d();
  } else {
    d = require_d(opt);
    x = std::holds_alternative<BetaSet>(obj)
            ? std::get<BetaSet>(obj)
            : beta_set_for(std::get<Partition>(obj),
                           std::get<Partition>(obj).length());
  }
  const Partition lam = partition_of(x);
  const Partition c = d_core_partition(x, d);
  const DegreeFactorization fac = relative_degree_factorization(lam, x, d);
  const BigInt direct = character_degree(lam);
  const bool agree = fac.degree() == direct;
  json payload{{"op", "reldegree"},
               {"partition", to_json(lam)},
               {"d", d},
               {"core", to_json(c)},
               {"symmetric_factor", fac.symmetric_factor.str()},
               {"core_degree", fac.core_degree.str()},
               {"quotient_product", fac.quotient_product.str()},
               {"degree", fac.degree().str()},
               {"direct_degree", direct.str()},
               {"agreement", agree}};
  std::ostringstream text;
  text << "lambda = " << format(lam) << "\n"
       << "core = " << format(c) << "\n"
       << "n!/r! = " << fac.symmetric_factor.str() << "\n"
       << "core degree = " << fac.core_degree.str() << "\n"
       << "quotient product = " << fac.quotient_product.str() << "\n"
       << "degree = " << fac.degree().str() << "\n"
       << "direct degree = " << direct.str() << "\n"
       << "agreement: " << (agree ? "pass" : "fail") << "\n";
  print(opt, payload, text.str());
  return agree ? 0 : 1;
}

int run_abacus(const Options& opt) {
  const ParsedObject obj = parse_object(opt.object);
  BetaSet x;
  int d;
  if (const auto* s = std::get_if<DSymbol>(&obj)) {
    x = to_beta_set(*s);
    d = opt.d > 0 ? opt.d : s->d();
  } else {
    d = require_d(opt);
    x = std::holds_alternative<BetaSet>(obj)
            ? std::get<BetaSet>(obj)
            : beta_set_for(std::get<Partition>(obj),
                           std::get<Partition>(obj).length());
  }
  const std::string rendered = abacus_render(x, d);
  json payload{{"op", "abacus"},
               {"beta_set", to_json(x)},
               {"d", d},
               {"rendered", rendered}};
  print(opt, payload, rendered);
  return 0;
}

int run_example_cmd(const Options& opt) {
  if (opt.json_out)
    std::cout << run_example_json(opt.example_id);
  else
    std::cout << run_example(opt.example_id);
  return 0;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + text);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

int run_verify(const Options& opt) {
  json reports = json::array();
  int checks = 0;
  const ReportSink sink = [&](const Report& rep) {
    ++checks;
    if (opt.json_out) {
      reports.push_back({{"identity", rep.identity},
                         {"instance", rep.instance},
                         {"pass", rep.pass},
                         {"detail", rep.detail}});
    } else if (!rep.pass) {
      std::cout << "FAIL " << rep.identity << " | " << rep.instance << "\n";
      if (!rep.detail.empty()) std::cout << rep.detail << "\n";
    }
  };

  int failures = 0;
  if (opt.suite == "thm33") {
    const int trials = opt.trials > 0 ? opt.trials : 1000;
    failures = verify_symbol_decomposition_suite(trials, opt.seed, sink);
  } else if (opt.suite == "thm44") {
    const int n = opt.n >= 0 ? opt.n : 10;
    const std::vector<int> ds =
        parse_int_list(opt.d_list.empty() ? "2,3,4,5" : opt.d_list);
    failures = verify_partition_split_suite({n}, ds, sink);
  } else if (opt.suite == "thm52") {
    const int trials = opt.trials > 0 ? opt.trials : 500;
    const int max_ell = opt.ell > 0 ? opt.ell : 4;
    failures = verify_split_identity_suite(trials, opt.seed, max_ell, sink);
  } else if (opt.suite == "thm54") {
    const int trials = opt.trials > 0 ? opt.trials : 500;
    const int max_ell = opt.ell > 0 ? opt.ell : 4;
    failures = verify_twisted_identity_suite(trials, opt.seed, max_ell, sink);
  } else if (opt.suite == "degrees") {
    const int n = opt.n >= 0 ? opt.n : 8;
    const std::vector<int> ds =
        parse_int_list(opt.d_list.empty() ? "2,3" : opt.d_list);
    failures = verify_degree_suite(n, ds, sink);
  } else if (opt.suite == "oracles") {
    const int t = opt.trials;
    failures = verify_oracle_suite(t > 0 ? t : 500, t > 0 ? t : 200,
                                   t > 0 ? t : 500, opt.seed, sink);
  } else {
    throw UsageError("unknown suite: " + opt.suite +
                     " (expected thm33|thm44|thm52|thm54|degrees|oracles)");
  }

  if (opt.json_out) {
    std::cout << reports.dump(2) << "\n";
  } else {
    std::cout << "suite " << opt.suite << ": " << checks << " checks, "
              << failures << " failures\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "exact hooks, cores and quotients for partitions, β-sets and symbols"};
  app.require_subcommand(1);

  app.add_option("--d", opt.d, "number of runners / symbol rows");
  app.add_option("--ell", opt.ell, "hook length parameter");
  app.add_option("--e", opt.e, "twist residue class (with --ell)");
  app.add_option("--delta", opt.delta, "data tuple (c_0,...,c_{d-1};k)");
  app.add_flag("--json", opt.json_out, "emit JSON instead of text");

  const char* object_help =
      "partition 7,5,4,1 | β-set {11,8,6,2,0} | symbol ({9,7,4,2}|{3,1,0})";

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> handlers;
  auto object_sub = [&](const char* name, const char* help,
                        int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("object", opt.object, object_help)->required();
    handlers.emplace_back(sub, fn);
  };

  object_sub("core", "d-core, or (ell,e)-core of a symbol", run_core);
  object_sub("quotient", "d-quotient, or (ell,e)-quotient of a symbol",
             run_quotient);
  object_sub("symbol", "read a β-set or partition on d runners", run_symbol);
  object_sub("hooks", "enumerate hooks (symbols: --ell/--e filter)",
             run_hooks);
  object_sub("lengths", "hook length multiset (symbols: under --delta)",
             run_lengths);
  object_sub("degree", "symmetric group character degree", run_degree);
  object_sub("reldegree", "degree factorization through core and quotient",
             run_reldegree);
  object_sub("abacus", "render the abacus on d runners", run_abacus);

  CLI::App* example = app.add_subcommand("example", "run a worked instance");
  example->fallthrough();
  std::string ids;
  for (const std::string& id : example_ids()) ids += (ids.empty() ? "" : "|") + id;
  example->add_option("id", opt.example_id, ids)->required();
  handlers.emplace_back(example, run_example_cmd);

  CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
  verify->fallthrough();
  verify
      ->add_option("--suite", opt.suite,
                   "thm33|thm44|thm52|thm54|degrees|oracles")
      ->required();
  verify->add_option("--n", opt.n, "partition weight (thm44: exact n; degrees: all n <= N)");
  verify->add_option("--trials", opt.trials, "number of random instances");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--d", opt.d_list, "comma list of d values");
  handlers.emplace_back(verify, run_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn(opt);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
