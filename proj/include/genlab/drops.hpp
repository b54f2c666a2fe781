#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "genlab/ferrers.hpp"
#include "genlab/permutation.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/report.hpp"

namespace genlab {

/// A relation on a finite ground set, stored as a dense matrix.
class FinitePoset {
 public:
  /// leq(x, y) on labels. The relation is taken as given; see is_partial_order.
  static FinitePoset make(std::vector<int> ground, const std::function<bool(int, int)>& leq);
  static FinitePoset antichain(int size);
  static FinitePoset chain(int size);

  const std::vector<int>& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  /// By index into ground().
  bool leq(std::size_t i, std::size_t j) const { return le_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && le_[i][j]; }

  bool is_partial_order() const;
  /// Vertices are indices into ground().
  SimpleGraph incomparability_graph() const;

 private:
  std::vector<int> ground_;
  std::vector<std::vector<char>> le_;
};

/// Same parity and x <= y, or x < y with x even and y odd; on [m].
FinitePoset parity_poset(int m);
/// The incomparability graph of parity_poset(2n) has exactly the edges of
/// the Ferrers graph on [2n].
bool parity_poset_matches_ferrers(int n);

inline constexpr int kMaxDropGround = 12;

/// Entry k: number of permutations of the poset with exactly k drops x >_P s(x).
/// Throws SizeLimit above kMaxDropGround elements.
std::vector<std::uint64_t> p_drop_table(const FinitePoset& p);
/// Entry k: permutations of [m] with exactly k drops that are not even-odd.
std::vector<std::uint64_t> d_table(int m);

/// (1/(2n)!) sum_k d(2n,k) (t+1)^(k) (t-1)_(2n-1-k); throws IntegralityFailure.
Polynomial chi_from_drops(int n);
/// (1/(2n)!) sum_k (-1)^k d(2n,k) k! (2n-1-k)!
Integer genocchi_from_drops(int n);

/// Chromatic polynomial of inc(P) against sum_k d(P,k) binomial(t+k, |P|).
CheckOutcome chung_graham_check(const FinitePoset& p);

/// Every drop (i, s(i)) has i even and s(i) odd.
bool has_only_eo_drops(const Permutation& p);
/// Every descent s(i) > s(i+1) in one-line notation has s(i) even and s(i+1) odd.
bool has_only_eo_descents(const std::vector<int>& one_line);

/// Pruned backtracking over permutations (or single cycles) of the ground set
/// with only even-odd drops. Throws SizeLimit above kMaxDropGround.
void for_each_eo_drop_permutation(const std::vector<int>& ground, bool cycles_only,
                                  const std::function<void(const Permutation&)>& visit);
/// Counts split on the image of min(ground) and run concurrently.
std::uint64_t count_eo_drop(const std::vector<int>& ground, bool cycles_only);
/// Number of permutations with only even-odd drops and k cycles, keyed by k.
std::map<std::size_t, std::uint64_t> eo_drop_by_cycles(const std::vector<int>& ground);
/// One-line permutations of [m] with only even-odd descents.
std::uint64_t count_eo_descent(int m);

struct ConjectureOptions {
  int max_n = 5;
  /// Largest n for the per-cycle-count comparison on [2n].
  int by_cycles_max_n = 5;
  /// All nonempty subsets of [subset_universe] are compared.
  int subset_universe = 8;
  /// Largest n for the Mobius / cycle-support comparison.
  int mobius_max_n = 4;
  bool include_cycles = true;
  bool include_full = true;
};

/// Per-instance verdicts for the even-odd-drop cycle counts; a mismatch is
/// reported with "falsified": true and a witness instead of throwing.
VerificationReport conjecture_checks(const ConjectureOptions& opts);

}  // namespace genlab
