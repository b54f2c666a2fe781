#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genlab/polynomial.hpp"
#include "genlab/report.hpp"

namespace genlab {

inline constexpr const char* kCodeVersion = "1.0.0";
inline constexpr int kCacheSchemaVersion = 1;

/// Independent ways of computing the characteristic polynomial of the
/// Ferrers bond lattice on [2n].
enum class ChiMethod {
  /// Mobius function of the bond lattice.
  Lattice,
  /// Signed D-permutation counts by cycles.
  DPerm,
  /// Signed ID-forest counts by trees.
  IdForest,
  /// Deletion-contraction divided by t.
  Chromatic,
  /// (t-1)^3 times the reduced semilattice polynomial.
  Reduced,
  /// (t-1)^3 times the weighted D-permutation sum on [2n-4].
  ReducedForm,
  /// Weighted D-permutation sum on [2n-2] with even fixed points marked.
  EvenFp,
  /// Drop-count expansion.
  Drops,
  /// Intersection poset of the hyperplane arrangement.
  Geometry,
};

std::vector<ChiMethod> all_chi_methods();
std::string to_string(ChiMethod m);
/// Also accepts "thm61" for Drops. Throws InvalidArgument.
ChiMethod chi_method_from_string(const std::string& s);
/// Smallest and largest n the method runs for by default.
int chi_method_min_n(ChiMethod m);
int chi_method_max_n(ChiMethod m);

/// Throws SizeLimit outside the method's range.
Polynomial chi_by(ChiMethod m, int n);

/// Every method in range, run concurrently. The JSON carries the agreed
/// polynomial, its values at -1 and 0, per-route status and the pairwise
/// agreement matrix. "agree" is false when two routes differ or no route ran.
nlohmann::json chi_all_routes(int n);

/// Polynomial cache keyed by (family, n, method, code version).
class ResultCache {
 public:
  /// GENLAB_CACHE overrides `dir`; disabled when both are empty.
  static ResultCache open(const std::optional<std::filesystem::path>& dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& family, int n, const std::string& method) const;
  std::optional<Polynomial> load(const std::string& family, int n, const std::string& method) const;
  void store(const std::string& family, int n, const std::string& method, const Polynomial& p) const;

 private:
  std::filesystem::path dir_;
};

/// chi_by with the cache in front. A hit is compared with a cheap route and
/// recomputed on mismatch; `hit` reports whether the cached value was used.
Polynomial chi_cached(const ResultCache& cache, ChiMethod m, int n, bool* hit = nullptr);

struct SuiteOptions {
  int max_n = 3;
  int order = 5;
  std::uint64_t seed = 1;
  int samples = 20;
};

/// bijections, charpoly-cross, genfun, geometry, chung-graham, conjectures, all
std::vector<std::string> suite_names();
/// Throws InvalidArgument for an unknown suite.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opts);

/// Header plus string cells; rendered as CSV or an array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

struct TableOptions {
  int upto = 6;
  /// Single-n tables (sd, dtable).
  int n = 2;
  /// Enables enumeration beyond the default caps.
  bool allow_large = false;
};

/// genocchi, charpoly, sd, dtable, decomp, reduced
std::vector<std::string> table_names();
Table make_table(const std::string& family, const TableOptions& opts);

}  // namespace genlab
