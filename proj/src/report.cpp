#include "genlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "genlab/errors.hpp"

namespace genlab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

bool VerificationReport::any_falsified() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.falsified; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"witness", c.witness}};
    if (c.falsified) j["verdict"] = "CONJECTURE-FALSIFIED";
    if (include_timing) j["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(std::move(j));
  }
  return {{"suite", suite},
          {"passed", passed()},
          {"counts",
           {{"pass", count(CheckStatus::Pass)},
            {"fail", count(CheckStatus::Fail)},
            {"skipped", count(CheckStatus::Skipped)}}},
          {"checks", arr}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP") << "  " << c.id;
    if (!c.anchor.empty()) os << "  [" << c.anchor << "]";
    if (c.falsified) os << "  CONJECTURE-FALSIFIED";
    if (c.status != CheckStatus::Pass && !c.witness.empty()) os << "\n      " << c.witness.dump();
    os << '\n';
  }
  os << suite << ": " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
     << count(CheckStatus::Skipped) << " skipped\n";
  return os.str();
}

VerificationReport run_checks(const std::string& suite, std::vector<PendingCheck> checks) {
  auto run_one = [](const PendingCheck& p) {
    CheckResult r;
    r.id = p.id;
    r.anchor = p.anchor;
    auto start = std::chrono::steady_clock::now();
    try {
      CheckOutcome o = p.run();
      r.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
      r.witness = std::move(o.witness);
      if (r.witness.is_object() && r.witness.value("falsified", false)) r.falsified = true;
    } catch (const SizeLimit& e) {
      r.status = CheckStatus::Skipped;
      r.witness = {{"reason", e.what()}};
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.witness = {{"error", e.what()}};
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  std::vector<std::future<CheckResult>> futures;
  for (const auto& p : checks) futures.push_back(std::async(std::launch::async, run_one, std::cref(p)));
  VerificationReport rep;
  rep.suite = suite;
  for (auto& f : futures) rep.checks.push_back(f.get());
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return rep;
}

}  // namespace genlab
