#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "genlab/bond_lattice.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/rational.hpp"
#include "genlab/report.hpp"
#include "genlab/set_partition.hpp"

namespace genlab {

using RVec = std::vector<Rational>;
using RMatrix = std::vector<RVec>;

/// Reduced row-echelon form with zero rows dropped; pivots are 1.
RMatrix rref(RMatrix m);
Rational determinant(RMatrix m);
/// Throws InvalidArgument for a singular matrix.
RMatrix inverse(const RMatrix& m);
RMatrix transpose(const RMatrix& m);
RVec multiply(const RMatrix& m, const RVec& v);

/// {x : normal . x = offset}, scaled to a primitive integer equation whose
/// first nonzero normal entry is positive.
struct Hyperplane {
  RVec normal;
  Rational offset;

  /// Throws InvalidArgument for a zero normal.
  static Hyperplane make(RVec normal, Rational offset = Rational(0));
  int dim() const { return static_cast<int>(normal.size()); }
  /// The augmented row (normal | offset).
  RVec row() const;
  /// [a_1, ..., a_d, offset] as integers.
  nlohmann::json to_json() const;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Nonempty affine subspace of Q^d stored as the RREF of its augmented
/// equation system; equal subspaces have identical rows.
class Flat {
 public:
  static Flat ambient(int d);
  /// nullopt when the system is inconsistent.
  static std::optional<Flat> solve(int d, RMatrix augmented_rows);

  int ambient_dim() const { return d_; }
  int codim() const { return static_cast<int>(rows_.size()); }
  int dim() const { return d_ - codim(); }
  const RMatrix& rows() const { return rows_; }

  std::optional<Flat> intersect(const Hyperplane& h) const;
  /// Every point of *this satisfies the augmented equation.
  bool implies(const RVec& augmented_row) const;
  /// *this is a subset of other.
  bool subset_of(const Flat& other) const;

  auto operator<=>(const Flat& o) const { return rows_ <=> o.rows_; }
  bool operator==(const Flat& o) const { return rows_ == o.rows_; }

 private:
  int d_ = 0;
  RMatrix rows_;
};

struct Arrangement {
  std::string name;
  int dim = 0;
  /// Flat every hyperplane is restricted to (the whole space if unset).
  std::optional<Flat> base;
  std::vector<Hyperplane> hyperplanes;
  /// Coordinate labels, used when reading flats as partitions.
  std::vector<int> labels;

  nlohmann::json to_json() const;
};

/// Hyperplanes e_i - e_{n+1+i} - e_{j+1}, 1 <= i <= j <= n, in Q^{2n+1}.
Arrangement build_H(int n);
/// Hyperplanes e_{2i-1} - e_{2j}, 1 <= i <= j <= n, in Q^{2n+1}.
Arrangement build_K(int n);
/// Edge hyperplanes x_u = x_v of the Ferrers graph on [2n] minus {2, 2n-1},
/// except {1, 2n}, inside x_1 - x_{2n} = 1. Requires 3 <= n <= 5.
Arrangement build_P(int n);

inline constexpr std::size_t kMaxArrangementSize = 15;

/// Flats ordered by reverse inclusion, rank = codimension inside the base.
class IntersectionPoset {
 public:
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  const std::vector<int>& ranks() const { return ranks_; }
  int length() const { return ranks_.empty() ? 0 : ranks_.back(); }
  /// flats()[i] contains flats()[j].
  bool leq(std::size_t i, std::size_t j) const;
  long index_of(const Flat& f) const;
  const std::vector<std::int64_t>& mobius_values() const { return mu_; }
  Polynomial characteristic_polynomial() const;

  friend IntersectionPoset intersection_poset(const Arrangement& arr);

 private:
  std::vector<Flat> flats_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::uint64_t>> up_;  // up_[i] bit j: i <= j
  std::vector<std::int64_t> mu_;
  std::map<Flat, std::size_t> index_;
};

/// Built by closing the base flat under intersection with every hyperplane.
/// Throws SizeLimit when the arrangement has more than kMaxArrangementSize
/// hyperplanes.
IntersectionPoset intersection_poset(const Arrangement& arr);

/// Coordinates u ~ v when x_u = x_v holds on the flat.
SetPartition flat_partition(const Flat& f, const std::vector<int>& labels);

/// Matrix A with A e_{2i-1} = e_i - e_{n+1+i}, A e_{2i} = e_{i+1}, A e_{2n+1} = e_1.
/// The last column only has to complete a basis; K normals vanish there.
RMatrix linear_map_matrix(int n);
/// Image of a central flat under (A^{-1})^T: each equation a becomes A a.
Flat transport_flat(const Flat& f, const RMatrix& a);

/// The flats of K map bijectively and order-preservingly onto those of H
/// under (A^{-1})^T, and the flats of K read as partitions are exactly the
/// Ferrers bond lattice with the same order. n <= 4.
CheckOutcome verify_linear_isomorphism(int n);

/// Flats of P read as partitions match the reduced semilattice, and the
/// characteristic polynomials agree.
CheckOutcome verify_reduced_arrangement(int n);
/// |chi(1)| of the intersection semilattice of P_{2n}.
Integer bounded_regions(int n);

}  // namespace genlab
