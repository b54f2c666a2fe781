#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "genlab/errors.hpp"
#include "genlab/verify.hpp"

using namespace genlab;
namespace fs = std::filesystem;

TEST_CASE("method names") {
  for (ChiMethod m : all_chi_methods()) CHECK(chi_method_from_string(to_string(m)) == m);
  CHECK(chi_method_from_string("thm61") == ChiMethod::Drops);
  CHECK_THROWS_AS(chi_method_from_string("bogus"), InvalidArgument);
}

TEST_CASE("every route gives the same polynomial") {
  Polynomial chi3{-3, 12, -19, 15, -6, 1};
  for (ChiMethod m : all_chi_methods()) {
    if (chi_method_min_n(m) > 3 || chi_method_max_n(m) < 3) continue;
    CAPTURE(to_string(m));
    CHECK(chi_by(m, 3) == chi3);
  }
  CHECK_THROWS_AS(chi_by(ChiMethod::Lattice, 9), SizeLimit);
  nlohmann::json all = chi_all_routes(2);
  CHECK(all["agree"].get<bool>());
  CHECK(all["at_minus_1"] == -8);
  CHECK(all["at_0"] == -1);
}

TEST_CASE("result cache round trip") {
  fs::path dir = fs::temp_directory_path() / "genlab_unit_cache";
  fs::remove_all(dir);
  ResultCache c = ResultCache::open(dir);
  REQUIRE(c.enabled());
  CHECK_FALSE(c.load("charpoly", 2, "dperm").has_value());
  bool hit = true;
  Polynomial p = chi_cached(c, ChiMethod::DPerm, 2, &hit);
  CHECK_FALSE(hit);
  CHECK(fs::exists(c.path_for("charpoly", 2, "dperm")));
  Polynomial q = chi_cached(c, ChiMethod::DPerm, 2, &hit);
  CHECK(hit);
  CHECK(p == q);

  // a tampered entry is detected and replaced
  {
    std::ofstream out(c.path_for("charpoly", 2, "dperm"));
    out << R"({"schema":1,"family":"charpoly","n":2,"method":"dperm","version":"1.0.0","coeffs":[1,1]})";
  }
  Polynomial r = chi_cached(c, ChiMethod::DPerm, 2, &hit);
  CHECK_FALSE(hit);
  CHECK(r == p);
  {
    std::ofstream out(c.path_for("charpoly", 2, "dperm"));
    out << "not json";
  }
  CHECK_FALSE(c.load("charpoly", 2, "dperm").has_value());
  fs::remove_all(dir);
  if (std::getenv("GENLAB_CACHE") == nullptr) CHECK_FALSE(ResultCache::open(std::nullopt).enabled());
}

TEST_CASE("tables") {
  TableOptions o;
  Table g = make_table("genocchi", o);
  CHECK(g.header.front() == "n");
  CHECK(g.to_csv().find("4,17,608") != std::string::npos);
  o.upto = 4;
  Table c = make_table("charpoly", o);
  CHECK(c.rows.size() == 4);
  CHECK(c.rows[3].back() == "-17");
  o.n = 2;
  CHECK(make_table("sd", o).to_csv() == "k,s_D\n1,-1\n2,3\n3,-3\n4,1\n");
  CHECK(make_table("dtable", o).rows.size() == 4);
  CHECK(make_table("decomp", o).to_json().is_array());
  CHECK_THROWS_AS(make_table("nope", o), InvalidArgument);
  o.n = 6;
  CHECK_THROWS_AS(make_table("dtable", o), SizeLimit);
}

TEST_CASE("suites") {
  SuiteOptions o;
  o.max_n = 2;
  o.order = 3;
  o.samples = 4;
  for (const auto& s : suite_names()) {
    if (s == "all" || s == "conjectures") continue;
    CAPTURE(s);
    VerificationReport r = run_suite(s, o);
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
  }
  CHECK_THROWS_AS(run_suite("nope", o), InvalidArgument);
  VerificationReport r = run_suite("bijections", o);
  CHECK(r.to_json().dump() == run_suite("bijections", o).to_json().dump());
  CHECK(r.to_text().find("PASS") != std::string::npos);
}
