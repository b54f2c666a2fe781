#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "genlab/permutation.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/rational.hpp"

namespace genlab {

/// Permutation classes on a ground set A of positive integers.
enum class DClass {
  /// odd i: i <= s(i); even i: i >= s(i)
  D,
  /// single-cycle members of D
  DCycle,
  /// odd i: i <= s(i); even i: i > s(i)
  Dumont,
  /// odd i: i < s(i); even i: i > s(i)
  DumontDerangement,
};

std::string to_string(DClass c);
/// Accepts "dperm", "dcycle", "dumont", "dumont-derangement".
DClass dclass_from_string(const std::string& s);

bool is_d_permutation(const Permutation& p);
bool is_d_cycle(const Permutation& p);
bool is_dumont(const Permutation& p);
bool is_dumont_derangement(const Permutation& p);
bool in_class(const Permutation& p, DClass c);

inline constexpr std::size_t kMaxDPermGround = 12;

/// Visit every member of the class on A. Images are assigned position by
/// position from the parity-restricted domains; cycle classes are grown as a
/// single cycle from min(A). Throws SizeLimit when |A| > kMaxDPermGround.
void for_each_d_permutation(const std::vector<int>& ground, DClass c,
                            const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> d_permutations(const std::vector<int>& ground, DClass c);

std::uint64_t count_class(const std::vector<int>& ground, DClass c);
/// Number of members with k cycles, keyed by k.
std::map<std::size_t, std::uint64_t> count_by_cycles(const std::vector<int>& ground, DClass c);

/// [1..m]
std::vector<int> interval(int m);

/// k -> (-1)^(2n-k) * #{D-permutations on [2n] with k cycles}. n <= 6.
std::map<std::size_t, Integer> s_d_table(int n);
/// sum_k s_D(2n,k) t^(k-1)
Polynomial char_poly_from_sd(int n);

/// (t-1) * sum over D on [2n-2] of (-t)^(even fixed points) (1-t)^(other cycles)
Polynomial char_poly_even_fp(int n);
/// (t-1)^3 * sum over D on [2n-4] of (1-t)^(fixed points) (2-t)^(other cycles); n >= 2
Polynomial char_poly_reduced_form(int n);
/// sum over D on [2n-4] of (1-t)^(fixed points) (2-t)^(other cycles); n >= 2
Polynomial reduced_sum(int n);

struct PowerOfTwoDecomposition {
  int n = 0;
  /// j -> number of D on [2n-2] with j cycles that are not even fixed points
  std::map<std::size_t, std::uint64_t> h_parts;
  /// j -> number of D on [2n-2] with j cycles that are not fixed points
  std::map<std::size_t, std::uint64_t> g_parts;
  /// sum_j h_parts[j] 2^(j+1)
  Integer h_total;
  /// sum_j g_parts[j] 2^j
  Integer g_total;
};

/// Requires 2 <= n <= 7.
PowerOfTwoDecomposition power_of_two_decompositions(int n);

}  // namespace genlab
