#include "genlab/set_partition.hpp"

#include <algorithm>

#include "genlab/errors.hpp"

namespace genlab {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) {
    if (b.empty()) throw InvalidArgument("set partition has an empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x <= 0) throw InvalidArgument("set partition ground must be positive integers");
      ground_.push_back(x);
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw InvalidArgument("set partition blocks overlap");
  blocks_ = std::move(blocks);
  label_.assign(ground_.size(), -1);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int x : blocks_[bi]) {
      auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
      label_[static_cast<std::size_t>(it - ground_.begin())] = static_cast<int>(bi);
    }
  }
}

SetPartition SetPartition::singletons(const std::vector<int>& ground) {
  std::vector<std::vector<int>> blocks;
  for (int x : ground) blocks.push_back({x});
  return SetPartition(std::move(blocks));
}

SetPartition SetPartition::one_block(const std::vector<int>& ground) {
  if (ground.empty()) return SetPartition();
  return SetPartition({ground});
}

int SetPartition::block_of(int x) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
  if (it == ground_.end() || *it != x) return -1;
  return label_[static_cast<std::size_t>(it - ground_.begin())];
}

bool SetPartition::same_block(int x, int y) const {
  int a = block_of(x);
  return a >= 0 && a == block_of(y);
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (ground_ != coarser.ground_) throw InvalidArgument("refinement across different ground sets");
  // Each block of *this maps to a single block of coarser: compare labels
  // position-by-position (both label arrays are indexed by the shared ground).
  std::vector<int> image(blocks_.size(), -1);
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    int& target = image[static_cast<std::size_t>(label_[i])];
    if (target < 0)
      target = coarser.label_[i];
    else if (target != coarser.label_[i])
      return false;
  }
  return true;
}

std::string SetPartition::to_string() const {
  bool wide = !ground_.empty() && ground_.back() > 9;
  std::string s;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    if (bi) s += '|';
    for (std::size_t k = 0; k < blocks_[bi].size(); ++k) {
      if (wide && k) s += ',';
      s += std::to_string(blocks_[bi][k]);
    }
  }
  return s;
}

nlohmann::json SetPartition::to_json() const { return blocks_; }

namespace {

void rgs_recurse(const std::vector<int>& ground, std::size_t pos, std::vector<std::vector<int>>& blocks,
                 const std::function<void(const SetPartition&)>& visit) {
  if (pos == ground.size()) {
    visit(SetPartition(blocks));
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(ground[pos]);
    rgs_recurse(ground, pos + 1, blocks, visit);
    blocks[b].pop_back();
  }
  blocks.push_back({ground[pos]});
  rgs_recurse(ground, pos + 1, blocks, visit);
  blocks.pop_back();
}

}  // namespace

void for_each_set_partition(const std::vector<int>& ground,
                            const std::function<void(const SetPartition&)>& visit) {
  std::vector<int> sorted = ground;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> blocks;
  if (sorted.empty()) {
    visit(SetPartition());
    return;
  }
  rgs_recurse(sorted, 0, blocks, visit);
}

}  // namespace genlab
