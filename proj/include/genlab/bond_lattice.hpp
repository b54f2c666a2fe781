#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "genlab/ferrers.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/set_partition.hpp"

namespace genlab {

inline constexpr std::size_t kMaxLatticeVertices = 10;

/// A finite set of partitions of one ground set ordered by refinement,
/// listed by rank with the all-singletons partition first.
///
/// mu(0^, x) is computed once at construction.
class PartitionPoset {
 public:
  PartitionPoset() = default;
  /// Mobius values come from the defining recursion over the whole poset.
  PartitionPoset(std::vector<int> ground, std::vector<SetPartition> elements);
  /// Mobius values supplied by the caller, indexed like the rank-sorted
  /// elements.
  PartitionPoset(std::vector<int> ground, std::vector<SetPartition> elements,
                 const std::function<std::int64_t(const SetPartition&)>& mobius);

  const std::vector<int>& ground() const { return ground_; }
  const std::vector<SetPartition>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<int>& ranks() const { return ranks_; }
  int length() const;

  /// -1 when p is not an element.
  long index_of(const SetPartition& p) const;
  bool contains(const SetPartition& p) const { return index_of(p) >= 0; }
  bool leq(std::size_t i, std::size_t j) const;

  /// mu(0^, p); throws ElementNotInLattice.
  std::int64_t mobius(const SetPartition& p) const;
  const std::vector<std::int64_t>& mobius_values() const { return mu_; }

  Polynomial characteristic_polynomial() const;
  /// Number of elements in each rank 0..length.
  std::vector<std::size_t> rank_sizes() const;
  bool has_maximum() const;

  /// One JSON object per element: {"partition":..,"rank":..,"mu":..}
  std::vector<nlohmann::json> to_json_lines() const;

 private:
  std::vector<int> ground_;
  std::vector<SetPartition> elements_;
  std::vector<int> ranks_;
  std::vector<std::int64_t> mu_;
  std::map<SetPartition, std::size_t> index_;
};

/// True when every block of p induces a connected subgraph of the Ferrers
/// graph on the ground set.
bool blocks_connected(const SetPartition& p);
/// True when every nonsingleton block has an odd minimum and an even maximum.
bool blocks_odd_min_even_max(const SetPartition& p);

struct BondLattice {
  PartitionPoset poset;
  /// Number of partitions where the two membership criteria disagreed.
  std::size_t criterion_mismatches = 0;
};

/// The bond lattice of the Ferrers graph on V. Throws SizeLimit when
/// |V| > kMaxLatticeVertices.
///
/// mu(0^, pi) is the product over blocks B of mu(0^, 1^) in the bond
/// lattice of B, each computed by the defining recursion and memoized.
BondLattice build_bond_lattice(const std::vector<int>& vertices);
BondLattice build_bond_lattice(int two_n);

/// Bond-lattice elements on [2n] minus {2, 2n-1} with 1 and 2n in different
/// blocks. Requires n >= 2.
PartitionPoset build_reduced(int n);
std::vector<int> reduced_ground(int n);

/// (-1)^length * chi(-1). Throws NegativeResult on a negative value.
Integer zaslavsky_regions(const Polynomial& chi, int length);
/// |chi(1)|.
Integer zaslavsky_bounded(const Polynomial& chi);

}  // namespace genlab
