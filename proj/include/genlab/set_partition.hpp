#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace genlab {

/// A set partition of a finite ground set of positive integers.
///
/// Blocks are stored canonically: each block ascending, blocks ordered by
/// their minimum. Two partitions compare equal iff they have the same blocks.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws InvalidArgument if the blocks overlap, are empty, or contain
  /// non-positive integers.
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  static SetPartition singletons(const std::vector<int>& ground);
  static SetPartition one_block(const std::vector<int>& ground);

  const std::vector<int>& ground() const { return ground_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  int rank() const { return static_cast<int>(ground_.size() - blocks_.size()); }

  /// Index of the block holding x, or -1.
  int block_of(int x) const;
  bool same_block(int x, int y) const;

  /// True when every block of *this lies inside a block of coarser. Both
  /// partitions must share a ground set.
  bool refines(const SetPartition& coarser) const;

  /// "1247|5|3689"-style rendering; letters separated by commas when any
  /// element exceeds 9.
  std::string to_string() const;

  nlohmann::json to_json() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<int> ground_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> label_;  // label_[i] = block index of ground_[i]
};

/// Visit every set partition of ground (restricted-growth order).
void for_each_set_partition(const std::vector<int>& ground,
                            const std::function<void(const SetPartition&)>& visit);

}  // namespace genlab
