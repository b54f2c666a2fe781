#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace genlab {

/// Result of a single self-check: pass/fail plus whatever data explains it.
struct CheckOutcome {
  bool ok = false;
  nlohmann::json witness = nlohmann::json::object();
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::Fail;
  nlohmann::json witness = nlohmann::json::object();
  double elapsed_ms = 0;
  /// Set when a conjecture check found a counterexample.
  bool falsified = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  bool any_falsified() const;
  void append(const VerificationReport& other);

  nlohmann::json to_json(bool include_timing = false) const;
  std::string to_text() const;
};

/// A named check waiting to run. SizeLimit thrown by `run` turns into a
/// skipped result carrying the reason; any other Error is a failure.
struct PendingCheck {
  std::string id;
  std::string anchor;
  std::function<CheckOutcome()> run;
};

/// Runs checks concurrently and returns results ordered by id.
VerificationReport run_checks(const std::string& suite, std::vector<PendingCheck> checks);

}  // namespace genlab
