#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "genlab/set_partition.hpp"

namespace genlab {

using Cycle = std::vector<int>;

/// A bijection of a finite set of positive integers onto itself.
///
/// ground() is ascending; image()[i] is the image of ground()[i].
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless image is a rearrangement of ground.
  Permutation(std::vector<int> ground, std::vector<int> image);

  static Permutation identity(std::vector<int> ground);
  /// Cycle notation; the ground set is the union of the cycles.
  static Permutation from_cycles(const std::vector<Cycle>& cycles);
  /// One-line notation on [n].
  static Permutation from_one_line(const std::vector<int>& one_line);

  const std::vector<int>& ground() const { return ground_; }
  const std::vector<int>& image() const { return image_; }
  std::size_t size() const { return ground_.size(); }

  int operator()(int x) const;

  /// Each cycle starts at its minimum; cycles ordered by minimum.
  std::vector<Cycle> cycles() const;
  std::size_t num_cycles() const;
  std::vector<int> fixed_points() const;
  /// Pairs (i, p(i)) with i > p(i), ascending in i.
  std::vector<std::pair<int, int>> drops() const;
  SetPartition cycle_support() const;

  /// "(1,3,4,2)(5)"
  std::string to_cycle_string() const;
  nlohmann::json to_json() const;
  static Permutation from_json(const nlohmann::json& j);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> ground_;
  std::vector<int> image_;
};

}  // namespace genlab
