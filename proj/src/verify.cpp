#include "genlab/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "genlab/bond_lattice.hpp"
#include "genlab/dperms.hpp"
#include "genlab/drops.hpp"
#include "genlab/errors.hpp"
#include "genlab/ferrers.hpp"
#include "genlab/genfun.hpp"
#include "genlab/geometry.hpp"
#include "genlab/id_forests.hpp"
#include "genlab/series.hpp"
#include "genlab/set_partition.hpp"
#include "genlab/staircases.hpp"

namespace genlab {

std::vector<ChiMethod> all_chi_methods() {
  return {ChiMethod::Lattice,     ChiMethod::DPerm,  ChiMethod::IdForest, ChiMethod::Chromatic, ChiMethod::Reduced,
          ChiMethod::ReducedForm, ChiMethod::EvenFp, ChiMethod::Drops,    ChiMethod::Geometry};
}

std::string to_string(ChiMethod m) {
  switch (m) {
    case ChiMethod::Lattice:
      return "lattice";
    case ChiMethod::DPerm:
      return "dperm";
    case ChiMethod::IdForest:
      return "idforest";
    case ChiMethod::Chromatic:
      return "chromatic";
    case ChiMethod::Reduced:
      return "reduced";
    case ChiMethod::ReducedForm:
      return "reduced-form";
    case ChiMethod::EvenFp:
      return "evenfp";
    case ChiMethod::Drops:
      return "drops";
    case ChiMethod::Geometry:
      return "geometry";
  }
  return "?";
}

ChiMethod chi_method_from_string(const std::string& s) {
  if (s == "thm61") return ChiMethod::Drops;
  for (ChiMethod m : all_chi_methods())
    if (to_string(m) == s) return m;
  throw InvalidArgument("unknown method: " + s);
}

int chi_method_min_n(ChiMethod m) {
  return (m == ChiMethod::Reduced || m == ChiMethod::ReducedForm) ? 2 : 1;
}

int chi_method_max_n(ChiMethod m) {
  switch (m) {
    case ChiMethod::Lattice:
      return 5;
    case ChiMethod::Geometry:
      return 4;
    case ChiMethod::EvenFp:
      return 7;
    case ChiMethod::ReducedForm:
      return 8;
    case ChiMethod::Reduced:
      return 6;
    default:
      return 6;
  }
}

namespace {

Polynomial signed_counts(const std::map<std::size_t, std::uint64_t>& by_k, std::size_t size, int shift) {
  Polynomial p;
  for (const auto& [k, c] : by_k) {
    Rational coef(Integer(std::to_string(c)));
    if ((size - k) % 2 == 1) coef = -coef;
    std::vector<Rational> mono(k - static_cast<std::size_t>(shift) + 1, Rational(0));
    mono.back() = coef;
    p += Polynomial(mono);
  }
  return p;
}

std::map<std::size_t, std::uint64_t> forest_counts(const std::vector<int>& v) {
  std::map<std::size_t, std::uint64_t> by_k;
  for_each_id_forest(v, std::nullopt, [&](const IDForest& f) { ++by_k[f.size()]; });
  return by_k;
}

}  // namespace

Polynomial chi_by(ChiMethod m, int n) {
  if (n < chi_method_min_n(m) || n > chi_method_max_n(m))
    throw SizeLimit("method " + to_string(m) + " runs for " + std::to_string(chi_method_min_n(m)) +
                    " <= n <= " + std::to_string(chi_method_max_n(m)));
  const Polynomial t_minus_1{-1, 1};
  switch (m) {
    case ChiMethod::Lattice:
      return build_bond_lattice(2 * n).poset.characteristic_polynomial();
    case ChiMethod::DPerm:
      return char_poly_from_sd(n);
    case ChiMethod::IdForest:
      return signed_counts(forest_counts(interval(2 * n)), static_cast<std::size_t>(2 * n), 1);
    case ChiMethod::Chromatic:
      return chromatic_polynomial(FerrersGraph::build(interval(2 * n))).divide_exact(Polynomial::t());
    case ChiMethod::Reduced:
      return pow(t_minus_1, 3) * build_reduced(n).characteristic_polynomial();
    case ChiMethod::ReducedForm:
      return char_poly_reduced_form(n);
    case ChiMethod::EvenFp:
      return char_poly_even_fp(n);
    case ChiMethod::Drops:
      return chi_from_drops(n);
    case ChiMethod::Geometry:
      return intersection_poset(build_H(n)).characteristic_polynomial();
  }
  throw InvalidArgument("unknown method");
}

nlohmann::json chi_all_routes(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const auto methods = all_chi_methods();
  std::vector<std::future<Polynomial>> jobs;
  std::vector<ChiMethod> ran;
  nlohmann::json routes = nlohmann::json::object();
  for (ChiMethod m : methods) {
    if (n < chi_method_min_n(m) || n > chi_method_max_n(m)) {
      routes[to_string(m)] = {{"status", "skipped"},
                              {"reason", "outside " + std::to_string(chi_method_min_n(m)) + " <= n <= " +
                                             std::to_string(chi_method_max_n(m))}};
      continue;
    }
    ran.push_back(m);
    jobs.push_back(std::async(std::launch::async, [m, n] { return chi_by(m, n); }));
  }
  std::vector<std::optional<Polynomial>> values;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      values.emplace_back(jobs[i].get());
      routes[to_string(ran[i])] = {{"status", "ok"}, {"coeffs", values.back()->to_json()["coeffs"]}};
    } catch (const Error& e) {
      values.emplace_back(std::nullopt);
      routes[to_string(ran[i])] = {{"status", "error"}, {"reason", e.what()}};
    }
  }
  nlohmann::json matrix = nlohmann::json::object();
  bool agree = !values.empty();
  std::optional<Polynomial> agreed;
  for (std::size_t i = 0; i < ran.size(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t j = 0; j < ran.size(); ++j) {
      bool same = values[i] && values[j] && *values[i] == *values[j];
      row[to_string(ran[j])] = same;
      if (!same) agree = false;
    }
    matrix[to_string(ran[i])] = row;
    if (values[i] && !agreed) agreed = values[i];
  }
  nlohmann::json out = {{"n", n}, {"routes", routes}, {"agreement", matrix}, {"agree", agree},
                        {"routes_run", ran.size()}};
  if (agreed) {
    out["coeffs"] = agreed->to_json()["coeffs"];
    out["polynomial"] = agreed->to_string();
    out["at_minus_1"] = to_json(agreed->eval(Rational(-1)));
    out["at_0"] = to_json(agreed->eval(Rational(0)));
  }
  return out;
}

ResultCache ResultCache::open(const std::optional<std::filesystem::path>& dir) {
  ResultCache c;
  if (const char* env = std::getenv("GENLAB_CACHE"); env && *env)
    c.dir_ = env;
  else if (dir)
    c.dir_ = *dir;
  if (c.enabled()) std::filesystem::create_directories(c.dir_);
  return c;
}

std::filesystem::path ResultCache::path_for(const std::string& family, int n, const std::string& method) const {
  return dir_ / (family + "-n" + std::to_string(n) + "-" + method + "-v" + kCodeVersion + ".json");
}

std::optional<Polynomial> ResultCache::load(const std::string& family, int n, const std::string& method) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(family, n, method));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("schema_version", 0) != kCacheSchemaVersion) return std::nullopt;
    if (j.value("family", "") != family || j.value("n", -1) != n || j.value("method", "") != method ||
        j.value("code_version", "") != kCodeVersion)
      return std::nullopt;
    return Polynomial::from_json(j.at("value"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& family, int n, const std::string& method, const Polynomial& p) const {
  if (!enabled()) return;
  nlohmann::json j = {{"schema_version", kCacheSchemaVersion},
                      {"family", family},
                      {"n", n},
                      {"method", method},
                      {"code_version", kCodeVersion},
                      {"value", p.to_json()}};
  std::filesystem::path target = path_for(family, n, method);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, target);
}

Polynomial chi_cached(const ResultCache& cache, ChiMethod m, int n, bool* hit) {
  if (hit) *hit = false;
  const std::string family = "charpoly";
  if (auto cached = cache.load(family, n, to_string(m))) {
    ChiMethod cheap = n <= chi_method_max_n(ChiMethod::EvenFp) ? ChiMethod::EvenFp : ChiMethod::Drops;
    if (chi_by(cheap, n) == *cached) {
      if (hit) *hit = true;
      return *cached;
    }
  }
  Polynomial p = chi_by(m, n);
  cache.store(family, n, to_string(m), p);
  return p;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

std::string pad2(int n) {
  std::ostringstream os;
  os << std::setw(2) << std::setfill('0') << n;
  return os.str();
}

Integer big(std::uint64_t v) { return Integer(std::to_string(v)); }

// Nonempty subsets of [m] in mask order.
std::vector<std::vector<int>> subsets(int m) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> a;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) a.push_back(i + 1);
    out.push_back(std::move(a));
  }
  return out;
}

CheckOutcome fail_at(CheckOutcome o, const std::string& what, nlohmann::json where) {
  o.ok = false;
  o.witness["failure"] = what;
  o.witness["at"] = std::move(where);
  return o;
}

// --- bijections -------------------------------------------------------------

CheckOutcome check_psi_forest(int m) {
  CheckOutcome o{true, {{"max_ground", m}}};
  std::uint64_t forests = 0;
  for (const auto& v : subsets(m)) {
    std::set<Permutation> images;
    bool bad = false;
    nlohmann::json where;
    for_each_id_forest(v, std::nullopt, [&](const IDForest& f) {
      if (bad) return;
      ++forests;
      Permutation p = psi_forest(f);
      if (!is_d_permutation(p) || p.num_cycles() != f.size() || p.cycle_support() != forest_support(f) ||
          !images.insert(p).second) {
        bad = true;
        where = {{"V", v}, {"forest", forest_key(f)}, {"image", p.to_cycle_string()}};
      }
    });
    if (bad) return fail_at(o, "psi image", where);
    if (images.size() != count_class(v, DClass::D)) return fail_at(o, "not onto", {{"V", v}});
  }
  o.witness["forests"] = forests;
  return o;
}

CheckOutcome check_tree_words(int m) {
  CheckOutcome o{true, {{"max_ground", m}}};
  std::uint64_t trees = 0, words = 0;
  for (const auto& v : subsets(m)) {
    for (const auto& t : id_trees(v)) {
      ++trees;
      for (const PlaneTree& form : {hat_form(t), tilde_form(t)}) {
        std::vector<int> w = postorder(form);
        if (!is_w_word(w) || !(gamma(w) == form)) return fail_at(o, "gamma after postorder", {{"tree", t.key()}});
      }
      if (psi(t) != psi_tilde(t)) return fail_at(o, "hat and tilde cycles differ", {{"tree", t.key()}});
    }
    std::vector<int> w = v;
    do {
      if (!is_w_word(w)) continue;
      ++words;
      if (postorder(gamma(w)) != w) return fail_at(o, "postorder after gamma", {{"word", w}});
    } while (std::next_permutation(w.begin(), w.end()));
  }
  o.witness["trees"] = trees;
  o.witness["words"] = words;
  return o;
}

CheckOutcome check_nbc_id(int m) {
  CheckOutcome o{true, {{"max_ground", m}}};
  for (const auto& v : subsets(m)) {
    NbcIdReport r = nbc_equals_id(FerrersGraph::build(v));
    if (!r.equal) return fail_at(o, "NBC forests differ from ID forests", {{"V", v}});
  }
  return o;
}

CheckOutcome check_gamma_slide(int n) {
  CheckOutcome o{true, {{"n", n}}};
  std::set<ExcedentFunction> images;
  bool bad = false;
  nlohmann::json where;
  std::uint64_t members = 0;
  for_each_g_set_member(2 * n, [&](const ExcedentFunction& g) {
    if (bad) return;
    ++members;
    ExcedentFunction f = gamma_slide(g);
    if (!is_surjective_staircase(f) || six_statistics(f).me != 0 || !(gamma_unslide(f) == g) ||
        !slide_properties_hold(g) || !images.insert(f).second) {
      bad = true;
      where = g.to_json();
    }
  });
  if (bad) return fail_at(o, "slide round trip", where);
  std::vector<ExcedentFunction> target = staircases(2 * n + 2, true);
  for (const auto& f : target)
    if (!(gamma_slide(gamma_unslide(f)) == f)) return fail_at(o, "unslide round trip", f.to_json());
  o.witness["members"] = members;
  o.witness["targets"] = target.size();
  if (images.size() != target.size()) return fail_at(o, "not onto", nullptr);
  return o;
}

CheckOutcome check_staircase_counts(int n) {
  std::size_t s = staircases(2 * n + 2, true).size();
  std::uint64_t d = count_class(interval(2 * n), DClass::D);
  Integer h = genocchi_h(n);
  CheckOutcome o{true, {{"n", n}, {"staircases", s}, {"dperms", d}, {"h_n", to_json(h)}}};
  o.ok = s == d && big(d) == h && joint_distribution_matches(n);
  PolynomialIdentity id = cycle_count_identity(n);
  o.witness["cycle_identity"] = id.lhs.to_string();
  o.ok = o.ok && id.equal;
  return o;
}

CheckOutcome check_class_chain(int n) {
  CheckOutcome o{true, {{"n", n}}};
  const auto v = interval(2 * n);
  for (DClass c : {DClass::Dumont, DClass::DumontDerangement, DClass::DCycle, DClass::D}) {
    std::uint64_t count = 0;
    bool bad = false;
    std::string where;
    for_each_d_permutation(v, c, [&](const Permutation& p) {
      ++count;
      bool ok = in_class(p, c) && is_d_permutation(p);
      if (c == DClass::DumontDerangement) ok = ok && is_dumont(p);
      if (c == DClass::DCycle) ok = ok && p.num_cycles() == 1;
      if (!ok && !bad) {
        bad = true;
        where = p.to_cycle_string();
      }
    });
    o.witness[to_string(c)] = count;
    if (bad) return fail_at(o, "containment", where);
  }
  return o;
}

CheckOutcome check_permutation_cycles(int m) {
  CheckOutcome o{true, {{"max_ground", m}}};
  std::uint64_t tested = 0;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> w = interval(k);
    do {
      Permutation p = Permutation::from_one_line(w);
      ++tested;
      Permutation back = k == 0 ? p : Permutation::from_cycles(p.cycles());
      if (back != p) return fail_at(o, "cycle round trip", w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  o.witness["permutations"] = tested;
  return o;
}

CheckOutcome check_refinement_order(int m) {
  std::vector<SetPartition> all;
  for_each_set_partition(interval(m), [&](const SetPartition& p) { all.push_back(p); });
  CheckOutcome o{true, {{"ground", m}, {"partitions", all.size()}}};
  for (const auto& a : all) {
    if (!a.refines(a)) return fail_at(o, "reflexive", a.to_string());
    for (const auto& b : all) {
      if (a != b && a.refines(b) && b.refines(a)) return fail_at(o, "antisymmetric", a.to_string());
      if (!a.refines(b)) continue;
      for (const auto& c : all)
        if (b.refines(c) && !a.refines(c)) return fail_at(o, "transitive", a.to_string());
    }
  }
  return o;
}

// --- charpoly-cross ----------------------------------------------------------

CheckOutcome check_routes_agree(int n) {
  nlohmann::json r = chi_all_routes(n);
  CheckOutcome o{r.at("agree").get<bool>(), r};
  return o;
}

// ch(t) of the Ferrers graph on v through five independent routes.
CheckOutcome check_subset_routes(int m) {
  CheckOutcome o{true, {{"max_ground", m}}};
  const Polynomial t = Polynomial::t();
  for (const auto& v : subsets(m)) {
    FerrersGraph g = FerrersGraph::build(v);
    Polynomial ch = chromatic_polynomial(g);
    const int c = static_cast<int>(g.num_components());
    Polynomial lattice = build_bond_lattice(v).poset.characteristic_polynomial() * pow(t, static_cast<unsigned>(c));
    Polynomial forests = signed_counts(forest_counts(v), v.size(), 0);
    Polynomial dperms = signed_counts(count_by_cycles(v, DClass::D), v.size(), 0);
    Polynomial whitney;
    for_each_nbc_set(g, [&](const std::vector<Edge>& s) {
      Polynomial term = pow(t, static_cast<unsigned>(v.size() - s.size()));
      whitney += (s.size() % 2 == 0) ? term : -term;
    });
    if (!(lattice == ch && forests == ch && dperms == ch && whitney == ch))
      return fail_at(o, "routes differ",
                     {{"V", v},
                      {"chromatic", ch.to_string()},
                      {"lattice", lattice.to_string()},
                      {"forests", forests.to_string()},
                      {"dperms", dperms.to_string()},
                      {"nbc", whitney.to_string()}});
  }
  return o;
}

CheckOutcome check_lattice_properties(int n) {
  BondLattice bl = build_bond_lattice(2 * n);
  const PartitionPoset& p = bl.poset;
  CheckOutcome o{true, {{"n", n}, {"size", p.size()}, {"criterion_mismatches", bl.criterion_mismatches}}};
  if (bl.criterion_mismatches != 0) return fail_at(o, "membership criteria disagree", nullptr);
  // Signed Mobius sum per rank against forest counts.
  auto forests = forest_counts(interval(2 * n));
  std::map<int, std::int64_t> by_rank;
  for (std::size_t i = 0; i < p.size(); ++i) by_rank[p.ranks()[i]] += p.mobius_values()[i];
  for (const auto& [r, s] : by_rank) {
    std::size_t trees = static_cast<std::size_t>(2 * n - r);
    std::int64_t expect = static_cast<std::int64_t>(forests.count(trees) ? forests.at(trees) : 0);
    if (r % 2 == 1) expect = -expect;
    if (s != expect) return fail_at(o, "rank Mobius sum", {{"rank", r}, {"sum", s}, {"forests", expect}});
  }
  Polynomial chi = p.characteristic_polynomial();
  if (n >= 2) {
    auto [q, rem] = chi.divmod(pow(Polynomial{-1, 1}, 3));
    if (!rem.is_zero()) return fail_at(o, "(t-1)^3 does not divide", chi.to_string());
  }
  Integer regions = zaslavsky_regions(chi, p.length());
  o.witness["regions"] = to_json(regions);
  o.witness["length"] = p.length();
  if (regions != genocchi_h(n)) return fail_at(o, "regions differ from h_n", nullptr);
  // Generic recursion as an oracle for the block-product Mobius values.
  if (2 * n <= 8) {
    PartitionPoset generic(p.ground(), p.elements());
    if (generic.mobius_values() != p.mobius_values()) return fail_at(o, "Mobius values differ", nullptr);
  }
  return o;
}

CheckOutcome check_polynomial_ring(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, 4);
  auto random_poly = [&] {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(coef(rng));
    return Polynomial(c);
  };
  CheckOutcome o{true, {{"seed", seed}, {"samples", samples}}};
  for (int i = 0; i < samples; ++i) {
    Polynomial f = random_poly(), g = random_poly(), h = random_poly();
    if (!((f + g) * h == f * h + g * h)) return fail_at(o, "distributivity", i);
    Rational q(coef(rng));
    TruncatedSeries inv = series_inverse_linear(q, h, 6);
    TruncatedSeries lin = TruncatedSeries::one(6) - TruncatedSeries::monomial(6, 1, h * q);
    if (!(inv * lin == TruncatedSeries::one(6))) return fail_at(o, "series inverse", i);
  }
  return o;
}

// --- geometry ---------------------------------------------------------------

CheckOutcome check_flat_canonical(int n) {
  Arrangement h = build_H(n);
  IntersectionPoset lh = intersection_poset(h);
  CheckOutcome o{true, {{"n", n}, {"flats", lh.size()}}};
  for (std::size_t i = 0; i < lh.size(); ++i) {
    const Flat& f = lh.flats()[i];
    if (rref(f.rows()) != f.rows()) return fail_at(o, "rref not idempotent", i);
    auto again = Flat::solve(f.ambient_dim(), f.rows());
    if (!again || !(*again == f)) return fail_at(o, "re-solving changed the flat", i);
    for (std::size_t j = 0; j < lh.size(); ++j) {
      const Flat& g = lh.flats()[j];
      bool eq = f == g;
      if (eq != (g == f) || eq != (i == j)) return fail_at(o, "flat equality", {i, j});
      if (lh.leq(i, j) != g.subset_of(f)) return fail_at(o, "order differs from containment", {i, j});
    }
  }
  Polynomial chi = lh.characteristic_polynomial();
  Integer r_geo = zaslavsky_regions(chi, lh.length());
  BondLattice bl = build_bond_lattice(2 * n);
  Integer r_lat = zaslavsky_regions(bl.poset.characteristic_polynomial(), bl.poset.length());
  o.witness["regions"] = to_json(r_geo);
  o.witness["length"] = lh.length();
  if (r_geo != r_lat) return fail_at(o, "region counts differ", {{"lattice", to_json(r_lat)}});
  return o;
}

CheckOutcome check_bounded_regions(int n) {
  CheckOutcome o = verify_reduced_arrangement(n);
  Integer b = bounded_regions(n);
  Integer h = genocchi_h(n - 3);
  Integer lattice_side = zaslavsky_bounded(build_reduced(n).characteristic_polynomial());
  o.witness["h"] = to_json(h);
  o.ok = o.ok && b == h && b == lattice_side;
  return o;
}

// --- chung-graham ------------------------------------------------------------

FinitePoset random_poset(std::mt19937_64& rng, int size) {
  // Random DAG on 1..size respecting the natural order, then transitive closure.
  std::bernoulli_distribution coin(0.35);
  std::vector<std::vector<char>> rel(static_cast<std::size_t>(size), std::vector<char>(static_cast<std::size_t>(size), 0));
  for (int i = 0; i < size; ++i) {
    rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int j = i + 1; j < size; ++j) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coin(rng) ? 1 : 0;
  }
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return FinitePoset::make(interval(size), [rel](int x, int y) {
    return rel[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] != 0;
  });
}

CheckOutcome check_random_posets(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 7);
  CheckOutcome o{true, {{"seed", seed}, {"samples", samples}}};
  for (int i = 0; i < samples; ++i) {
    FinitePoset p = random_poset(rng, size(rng));
    CheckOutcome r = chung_graham_check(p);
    if (!r.ok) return fail_at(o, "expansion differs", r.witness);
  }
  return o;
}

CheckOutcome check_drop_models(int n) {
  CheckOutcome o{true, {{"n", n}}};
  std::vector<std::uint64_t> d = d_table(2 * n);
  std::uint64_t total = 0;
  for (auto x : d) total += x;
  o.witness["d"] = d;
  if (big(total) != factorial(static_cast<unsigned>(2 * n))) return fail_at(o, "row sum", total);
  if (d != p_drop_table(parity_poset(2 * n))) return fail_at(o, "parity poset drops differ", nullptr);
  if (!parity_poset_matches_ferrers(n)) return fail_at(o, "incomparability graph", nullptr);
  if (chi_from_drops(n) != char_poly_even_fp(n)) return fail_at(o, "drop expansion", nullptr);
  if (genocchi_from_drops(n) != genocchi_g(n)) return fail_at(o, "drop formula for g_n", nullptr);
  std::uint64_t eo = count_eo_drop(interval(2 * n), false);
  if (big(eo) != genocchi_h(n) || big(d[0]) != genocchi_h(n)) return fail_at(o, "only even-odd drops vs h_n", eo);
  if (2 * n <= 10) {
    std::uint64_t desc = count_eo_descent(2 * n);
    o.witness["eo_descents"] = desc;
    if (desc != eo) return fail_at(o, "descent variant", desc);
  }
  return o;
}

// --- genfun ------------------------------------------------------------------

std::vector<PendingCheck> genfun_checks(const SuiteOptions& o) {
  const int order = o.order;
  const int six_order = std::min(order, 4);
  const std::uint64_t seed = o.seed;
  const int samples = o.samples;
  const int max_n = std::min(std::max(o.max_n, 1), 6);
  std::vector<PendingCheck> c;
  c.push_back({"chi-series", "chi generating function", [=] { return check_chi_series(order); }});
  c.push_back({"chi-series-shifted", "shifted chi generating function", [=] { return check_shifted_chi_series(order); }});
  c.push_back({"chi-series-reduced", "reduced chi generating function", [=] { return check_reduced_chi_series(order); }});
  c.push_back({"chi-series-specializations", "chi series at t = 0, -1, 1",
               [=] { return check_chi_series_specializations(order); }});
  c.push_back({"six-variable", "six-variable generating function at sampled points",
               [=] { return check_six_variable_identity(six_order, samples, seed); }});
  c.push_back({"closing-h", "closing formula for h", [=] { return check_closing_h_formula(order); }});
  for (GenocchiSeries s : {GenocchiSeries::GFactorials, GenocchiSeries::HFactorials, GenocchiSeries::GSquares,
                           GenocchiSeries::HSquares})
    c.push_back({"genocchi-series/" + to_string(s), "quotient series for Genocchi numbers",
                 [=] { return check_genocchi_series(s, order); }});
  c.push_back({"tangent-and-parity", "tangent and parity-descent models of g",
               [=] { return check_tangent_and_parity_models(max_n); }});
  return c;
}

std::vector<PendingCheck> bijection_checks(const SuiteOptions& o) {
  const int m = std::min(2 * o.max_n, 8);
  std::vector<PendingCheck> c;
  c.push_back({"psi-forest", "ID forests to D-permutations", [=] { return check_psi_forest(m); }});
  c.push_back({"tree-words", "postorder and gamma round trips", [=] { return check_tree_words(m); }});
  c.push_back({"nbc-id", "NBC forests equal ID forests", [=] { return check_nbc_id(m); }});
  c.push_back({"permutation-cycles", "cycle decomposition round trip",
               [=] { return check_permutation_cycles(std::max(m, 5)); }});
  c.push_back({"refinement-order", "refinement is a partial order", [] { return check_refinement_order(5); }});
  for (int n = 1; n <= std::min(o.max_n, 4); ++n) {
    c.push_back({"gamma-slide/n=" + pad2(n), "slide bijection onto staircases", [=] { return check_gamma_slide(n); }});
    c.push_back({"staircase-counts/n=" + pad2(n), "staircases without even maxima vs D-permutations",
                 [=] { return check_staircase_counts(n); }});
  }
  for (int n = 1; n <= std::min(o.max_n, 5); ++n)
    c.push_back({"class-chain/n=" + pad2(n), "permutation class containments", [=] { return check_class_chain(n); }});
  return c;
}

std::vector<PendingCheck> charpoly_checks(const SuiteOptions& o) {
  std::vector<PendingCheck> c;
  for (int n = 1; n <= std::min(o.max_n, 6); ++n)
    c.push_back({"routes/n=" + pad2(n), "characteristic polynomial routes agree", [=] { return check_routes_agree(n); }});
  for (int n = 1; n <= std::min(o.max_n, 4); ++n)
    c.push_back({"lattice/n=" + pad2(n), "bond lattice Mobius, divisibility and regions",
                 [=] { return check_lattice_properties(n); }});
  const int m = std::min(2 * o.max_n, 8);
  c.push_back({"subsets", "chromatic, lattice, forest, D-permutation and NBC routes on every V",
               [=] { return check_subset_routes(m); }});
  const std::uint64_t seed = o.seed;
  const int samples = o.samples;
  c.push_back({"polynomial-ring", "polynomial and series arithmetic", [=] { return check_polynomial_ring(seed, samples); }});
  return c;
}

std::vector<PendingCheck> geometry_checks(const SuiteOptions& o) {
  std::vector<PendingCheck> c;
  for (int n = 1; n <= std::min(o.max_n, 4); ++n) {
    c.push_back({"linear-isomorphism/n=" + pad2(n), "flats of H and K under (A^-1)^T",
                 [=] { return verify_linear_isomorphism(n); }});
    c.push_back({"flats/n=" + pad2(n), "canonical flats and region counts", [=] { return check_flat_canonical(n); }});
  }
  for (int n = 3; n <= std::min(std::max(o.max_n, 3), 5); ++n)
    c.push_back({"bounded-regions/n=" + pad2(n), "deconed arrangement and reduced semilattice",
                 [=] { return check_bounded_regions(n); }});
  return c;
}

std::vector<PendingCheck> chung_graham_checks(const SuiteOptions& o) {
  std::vector<PendingCheck> c;
  c.push_back({"antichain", "expansion on an antichain", [] { return chung_graham_check(FinitePoset::antichain(2)); }});
  c.push_back({"chain", "expansion on a chain", [] { return chung_graham_check(FinitePoset::chain(2)); }});
  for (int n = 1; n <= std::min(o.max_n, 4); ++n)
    c.push_back({"parity-poset/n=" + pad2(n), "expansion on the parity poset",
                 [=] { return chung_graham_check(parity_poset(2 * n)); }});
  const std::uint64_t seed = o.seed;
  const int samples = o.samples;
  c.push_back({"random-posets", "expansion on random posets", [=] { return check_random_posets(seed, samples); }});
  for (int n = 1; n <= std::min(o.max_n, 5); ++n)
    c.push_back({"drops/n=" + pad2(n), "drop counts, expansion and even-odd models", [=] { return check_drop_models(n); }});
  return c;
}

std::vector<PendingCheck> prefixed(const std::string& prefix, std::vector<PendingCheck> checks) {
  for (auto& c : checks) c.id = prefix + "/" + c.id;
  return checks;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bijections", "charpoly-cross", "genfun", "geometry", "chung-graham", "conjectures", "all"};
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (opts.max_n < 1) throw InvalidArgument("max-n must be positive");
  auto conjectures = [&] {
    ConjectureOptions c;
    c.max_n = std::min(opts.max_n, 6);
    c.by_cycles_max_n = std::min(opts.max_n, 5);
    c.mobius_max_n = std::min(opts.max_n, 4);
    c.subset_universe = std::min(2 * opts.max_n, 8);
    return conjecture_checks(c);
  };
  if (suite == "bijections") return run_checks(suite, bijection_checks(opts));
  if (suite == "charpoly-cross") return run_checks(suite, charpoly_checks(opts));
  if (suite == "genfun") return run_checks(suite, genfun_checks(opts));
  if (suite == "geometry") return run_checks(suite, geometry_checks(opts));
  if (suite == "chung-graham") return run_checks(suite, chung_graham_checks(opts));
  if (suite == "conjectures") return conjectures();
  if (suite == "all") {
    std::vector<PendingCheck> all;
    auto add = [&](const std::string& name, std::vector<PendingCheck> cs) {
      for (auto& c : prefixed(name, std::move(cs))) all.push_back(std::move(c));
    };
    add("bijections", bijection_checks(opts));
    add("charpoly-cross", charpoly_checks(opts));
    add("chung-graham", chung_graham_checks(opts));
    add("genfun", genfun_checks(opts));
    add("geometry", geometry_checks(opts));
    VerificationReport r = run_checks("all", std::move(all));
    VerificationReport c = conjectures();
    for (auto& ch : c.checks) ch.id = "conjectures/" + ch.id;
    r.append(c);
    std::stable_sort(r.checks.begin(), r.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return r;
  }
  throw InvalidArgument("unknown suite: " + suite);
}

// ---------------------------------------------------------------------------
// Tables

std::string Table::to_csv() const {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << cell(header[i]);
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
    os << "\n";
  }
  return os.str();
}

nlohmann::json Table::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t i = 0; i < header.size() && i < r.size(); ++i) row[header[i]] = r[i];
    out.push_back(row);
  }
  return out;
}

std::vector<std::string> table_names() { return {"genocchi", "charpoly", "sd", "dtable", "decomp", "reduced"}; }

namespace {

std::string coeff_list(const Polynomial& p) {
  std::string s;
  for (int i = p.degree(); i >= 0; --i) s += (i == p.degree() ? "" : " ") + to_string(p.coeff(i));
  return s;
}

}  // namespace

Table make_table(const std::string& family, const TableOptions& o) {
  Table t;
  if (family == "genocchi") {
    if (o.upto < 0 || o.upto > 8) throw SizeLimit("genocchi table runs for n <= 8");
    t.header = {"n", "g", "h", "h_source"};
    for (int n = 0; n <= o.upto; ++n) {
      std::string g = n >= 1 ? to_string(genocchi_g(n)) : "";
      std::string h, source;
      if (2 * n + 2 <= static_cast<int>(kMaxDPermGround)) {
        h = to_string(genocchi_h_enumerated(n));
        source = "dumont-derangements";
      } else if (o.allow_large && 2 * n <= static_cast<int>(kMaxDPermGround)) {
        h = std::to_string(count_class(interval(2 * n), DClass::D));
        source = "dperms";
      } else {
        h = to_string(genocchi_h_series(n));
        source = "series";
      }
      t.rows.push_back({std::to_string(n), g, h, source});
    }
    return t;
  }
  if (family == "charpoly") {
    t.header = {"n", "coefficients", "polynomial", "t=-1", "t=0"};
    for (int n = 1; n <= o.upto; ++n) {
      Polynomial p = chi_by(n <= 7 ? ChiMethod::EvenFp : ChiMethod::Drops, n);
      t.rows.push_back({std::to_string(n), coeff_list(p), p.to_string(), to_string(p.eval(Rational(-1))),
                        to_string(p.eval(Rational(0)))});
    }
    return t;
  }
  if (family == "sd") {
    t.header = {"k", "s_D"};
    for (const auto& [k, v] : s_d_table(o.n)) t.rows.push_back({std::to_string(k), to_string(v)});
    return t;
  }
  if (family == "dtable") {
    if (2 * o.n > 10 && !o.allow_large) throw SizeLimit("d(2n,k) beyond 2n = 10 needs the opt-in flag");
    t.header = {"k", "d"};
    auto d = d_table(2 * o.n);
    for (std::size_t k = 0; k < d.size(); ++k) t.rows.push_back({std::to_string(k), std::to_string(d[k])});
    return t;
  }
  if (family == "decomp") {
    t.header = {"n", "h", "h_parts", "g", "g_parts"};
    auto parts = [](const std::map<std::size_t, std::uint64_t>& m) {
      std::string s;
      for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
      return s;
    };
    for (int n = 2; n <= std::min(o.upto, 7); ++n) {
      PowerOfTwoDecomposition d = power_of_two_decompositions(n);
      t.rows.push_back({std::to_string(n), to_string(d.h_total), parts(d.h_parts), to_string(d.g_total), parts(d.g_parts)});
    }
    return t;
  }
  if (family == "reduced") {
    t.header = {"n", "coefficients", "polynomial", "bounded_regions"};
    for (int n = 2; n <= std::min(o.upto, 6); ++n) {
      Polynomial p = build_reduced(n).characteristic_polynomial();
      t.rows.push_back({std::to_string(n), coeff_list(p), p.to_string(), to_string(zaslavsky_bounded(p))});
    }
    return t;
  }
  throw InvalidArgument("unknown table: " + family);
}

}  // namespace genlab
