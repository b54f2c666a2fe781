// Command-line front end for the genlab library.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "genlab/bond_lattice.hpp"
#include "genlab/dperms.hpp"
#include "genlab/drops.hpp"
#include "genlab/errors.hpp"
#include "genlab/rational.hpp"
#include "genlab/verify.hpp"

using namespace genlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool json = false;
  bool csv = false;
  std::string cache_dir;
};

Rational parse_rational(const std::string& s) {
  Rational x(s);
  x.canonicalize();
  return x;
}

struct CharpolyArgs {
  int n = 0;
  std::string method = "dperm";
  std::string eval;
  bool emit_lattice = false;
};

int cmd_charpoly(const Globals& g, const CharpolyArgs& a) {
  if (a.n < 1) throw InvalidArgument("n must be positive");
  if (a.emit_lattice) {
    BondLattice bl = build_bond_lattice(2 * a.n);
    for (const auto& line : bl.poset.to_json_lines()) std::cout << line.dump() << "\n";
    return 0;
  }
  if (a.method == "all") {
    nlohmann::json r = chi_all_routes(a.n);
    if (!a.eval.empty() && r.contains("coeffs")) {
      Polynomial p = Polynomial::from_json({{"coeffs", r["coeffs"]}});
      r["eval"] = {{"t", a.eval}, {"value", to_json(p.eval(parse_rational(a.eval)))}};
    }
    std::cout << r.dump() << "\n";
    return r["agree"].get<bool>() ? 0 : kExitFail;
  }
  ChiMethod m = chi_method_from_string(a.method);
  ResultCache cache = ResultCache::open(g.cache_dir.empty() ? std::nullopt
                                                            : std::optional<std::filesystem::path>(g.cache_dir));
  bool hit = false;
  Polynomial p = chi_cached(cache, m, a.n, &hit);
  if (!a.eval.empty()) {
    Rational v = p.eval(parse_rational(a.eval));
    if (g.json)
      std::cout << nlohmann::json{{"n", a.n}, {"t", a.eval}, {"value", to_json(v)}}.dump() << "\n";
    else
      std::cout << to_string(v) << "\n";
    return 0;
  }
  nlohmann::json out = p.to_json();
  out["n"] = a.n;
  out["method"] = to_string(m);
  out["polynomial"] = p.to_string();
  if (cache.enabled()) out["cache_hit"] = hit;
  std::cout << out.dump() << "\n";
  return 0;
}

struct CountArgs {
  std::string family;
  int size = 0;
  bool by_cycles = false;
};

int cmd_count(const Globals& g, const CountArgs& a) {
  if (a.size < 0) throw InvalidArgument("size must be nonnegative");
  std::vector<int> ground = interval(a.size);
  if (a.family == "eo-drop" || a.family == "eo-cycle") {
    bool cycles = a.family == "eo-cycle";
    if (a.by_cycles && !cycles) {
      nlohmann::json j = nlohmann::json::object();
      for (const auto& [k, v] : eo_drop_by_cycles(ground)) j[std::to_string(k)] = v;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << count_eo_drop(ground, cycles) << "\n";
    }
    return 0;
  }
  DClass c = dclass_from_string(a.family);
  if (a.by_cycles) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : count_by_cycles(ground, c)) j[std::to_string(k)] = v;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::uint64_t n = count_class(ground, c);
  if (g.json)
    std::cout << nlohmann::json{{"family", a.family}, {"size", a.size}, {"count", n}}.dump() << "\n";
  else
    std::cout << n << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite;
  SuiteOptions opts;
  bool timing = false;
};

int emit_report(const Globals& g, const VerificationReport& r, bool timing) {
  if (g.json)
    std::cout << r.to_json(timing).dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.passed() && !r.any_falsified() ? 0 : kExitFail;
}

struct TableArgs {
  std::string family;
  TableOptions opts;
};

int cmd_table(const Globals& g, const TableArgs& a) {
  Table t = make_table(a.family, a.opts);
  if (g.json)
    std::cout << t.to_json().dump(2) << "\n";
  else
    std::cout << t.to_csv();
  return 0;
}

struct ConjectureArgs {
  int max_n = 5;
  bool cycles = false;
  bool full = false;
  bool allow_large = false;
};

int cmd_conjecture(const Globals& g, const ConjectureArgs& a) {
  if (a.max_n > 5 && !a.allow_large) throw SizeLimit("n = 6 needs --allow-large");
  ConjectureOptions o;
  o.max_n = a.max_n;
  o.by_cycles_max_n = std::min(a.max_n, a.allow_large ? 6 : 5);
  o.mobius_max_n = std::min(a.max_n, 4);
  o.include_cycles = a.cycles || !a.full;
  o.include_full = a.full || !a.cycles;
  VerificationReport r = conjecture_checks(o);
  Globals jg = g;
  jg.json = true;
  return emit_report(jg, r, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ferrers bond lattices, D-permutations and Genocchi numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output (tables)");
  app.add_option("--cache", g.cache_dir, "Cache directory for computed polynomials (GENLAB_CACHE overrides)");

  CharpolyArgs cp;
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of the bond lattice on [2n]");
  charpoly->add_option("n", cp.n, "n")->required();
  charpoly->add_option("--method", cp.method,
                       "lattice|dperm|idforest|chromatic|reduced|reduced-form|evenfp|drops|thm61|geometry|all");
  charpoly->add_option("--eval", cp.eval, "Evaluate at a rational t");
  charpoly->add_flag("--emit-lattice", cp.emit_lattice, "Dump lattice elements with Mobius values as JSON lines");

  CountArgs ct;
  auto* count = app.add_subcommand("count", "Count a permutation class on [m]");
  count->add_option("family", ct.family, "dperm|dcycle|dumont|dumont-derangement|eo-drop|eo-cycle")->required();
  count->add_option("m", ct.size, "ground set size")->required();
  count->add_flag("--by-cycles", ct.by_cycles, "Counts keyed by number of cycles");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", vf.suite, "bijections|charpoly-cross|genfun|geometry|chung-graham|conjectures|all")
      ->required();
  verify->add_option("--max-n,--n", vf.opts.max_n, "Largest n");
  verify->add_option("--order", vf.opts.order, "Series order");
  verify->add_option("--seed", vf.opts.seed, "Seed for sampled checks");
  verify->add_option("--samples", vf.opts.samples, "Number of sampled points");
  verify->add_flag("--timing", vf.timing, "Include elapsed times in JSON");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Print a table");
  table->add_option("family", tb.family, "genocchi|charpoly|sd|dtable|decomp|reduced")->required();
  table->add_option("--upto", tb.opts.upto, "Last n");
  table->add_option("--n", tb.opts.n, "n for single-n tables");
  table->add_flag("--allow-large", tb.opts.allow_large, "Enumerate beyond the default caps");

  ConjectureArgs cj;
  auto* conjecture = app.add_subcommand("conjecture", "Even-odd drop cycle comparisons");
  conjecture->add_option("--max-n", cj.max_n, "Largest n");
  auto* cyc = conjecture->add_flag("--cycles", cj.cycles, "Cycle counts on [2n] and on subsets");
  conjecture->add_flag("--full", cj.full, "Permutation counts by cycles and by cycle support")->excludes(cyc);
  conjecture->add_flag("--allow-large", cj.allow_large, "Allow n = 6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*charpoly) return cmd_charpoly(g, cp);
    if (*count) return cmd_count(g, ct);
    if (*verify) return emit_report(g, run_suite(vf.suite, vf.opts), vf.timing);
    if (*table) return cmd_table(g, tb);
    if (*conjecture) return cmd_conjecture(g, cj);
  } catch (const SizeLimit& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
