#include "genlab/bond_lattice.hpp"

#include <algorithm>
#include <numeric>

#include "genlab/errors.hpp"
#include "genlab/poset.hpp"

namespace genlab {

namespace {

std::vector<std::size_t> rank_order(const std::vector<SetPartition>& elements) {
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return elements[a].rank() < elements[b].rank(); });
  return order;
}

}  // namespace

PartitionPoset::PartitionPoset(std::vector<int> ground, std::vector<SetPartition> elements,
                               const std::function<std::int64_t(const SetPartition&)>& mobius)
    : ground_(std::move(ground)) {
  std::sort(ground_.begin(), ground_.end());
  std::sort(elements.begin(), elements.end());
  for (std::size_t i : rank_order(elements)) elements_.push_back(std::move(elements[i]));
  if (elements_.empty() || elements_.front().num_blocks() != ground_.size())
    throw InvalidArgument("partition poset must contain the all-singletons partition");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].ground() != ground_) throw InvalidArgument("partition poset elements must share the ground set");
    ranks_.push_back(elements_[i].rank());
    index_.emplace(elements_[i], i);
  }
  if (mobius) {
    for (const auto& e : elements_) mu_.push_back(mobius(e));
  } else {
    mu_ = mobius_from_bottom(ranks_, [this](std::size_t a, std::size_t b) { return leq(a, b); });
  }
}

PartitionPoset::PartitionPoset(std::vector<int> ground, std::vector<SetPartition> elements)
    : PartitionPoset(std::move(ground), std::move(elements), nullptr) {}

int PartitionPoset::length() const { return ranks_.empty() ? 0 : ranks_.back(); }

long PartitionPoset::index_of(const SetPartition& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

bool PartitionPoset::leq(std::size_t i, std::size_t j) const { return elements_[i].refines(elements_[j]); }

std::int64_t PartitionPoset::mobius(const SetPartition& p) const {
  long i = index_of(p);
  if (i < 0) throw ElementNotInLattice("partition " + p.to_string() + " is not an element");
  return mu_[static_cast<std::size_t>(i)];
}

Polynomial PartitionPoset::characteristic_polynomial() const { return genlab::characteristic_polynomial(ranks_, mu_); }

std::vector<std::size_t> PartitionPoset::rank_sizes() const {
  std::vector<std::size_t> s(static_cast<std::size_t>(length() + 1), 0);
  for (int r : ranks_) ++s[static_cast<std::size_t>(r)];
  return s;
}

bool PartitionPoset::has_maximum() const {
  if (elements_.empty()) return false;
  const std::size_t top = elements_.size() - 1;
  if (rank_sizes().back() != 1) return false;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!leq(i, top)) return false;
  return true;
}

std::vector<nlohmann::json> PartitionPoset::to_json_lines() const {
  std::vector<nlohmann::json> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    out.push_back({{"partition", elements_[i].to_string()}, {"rank", ranks_[i]}, {"mu", mu_[i]}});
  return out;
}

namespace {

bool block_connected(const std::vector<int>& b) {
  if (b.size() <= 1) return true;
  std::vector<char> seen(b.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (seen[j]) continue;
      int u = std::min(b[i], b[j]);
      int v = std::max(b[i], b[j]);
      if (u % 2 == 1 && v % 2 == 0) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == b.size();
}

class BlockMobius {
 public:
  // mu(0^, 1^) in the bond lattice of the Ferrers graph on b (b connected).
  std::int64_t top(const std::vector<int>& b) {
    if (b.size() == 1) return 1;
    auto it = memo_.find(b);
    if (it != memo_.end()) return it->second;
    std::int64_t sum = 0;
    for_each_set_partition(b, [&](const SetPartition& p) {
      if (p.num_blocks() == 1 || !blocks_connected(p)) return;
      sum += of(p);
    });
    memo_.emplace(b, -sum);
    return -sum;
  }

  std::int64_t of(const SetPartition& p) {
    std::int64_t r = 1;
    for (const auto& b : p.blocks()) r *= top(b);
    return r;
  }

 private:
  std::map<std::vector<int>, std::int64_t> memo_;
};

}  // namespace

bool blocks_connected(const SetPartition& p) {
  return std::all_of(p.blocks().begin(), p.blocks().end(), block_connected);
}

bool blocks_odd_min_even_max(const SetPartition& p) {
  return std::all_of(p.blocks().begin(), p.blocks().end(), [](const std::vector<int>& b) {
    return b.size() == 1 || (b.front() % 2 == 1 && b.back() % 2 == 0);
  });
}

BondLattice build_bond_lattice(const std::vector<int>& vertices) {
  if (vertices.size() > kMaxLatticeVertices)
    throw SizeLimit("bond lattice materialization is capped at " + std::to_string(kMaxLatticeVertices) +
                    " vertices");
  if (vertices.empty()) throw InvalidArgument("bond lattice needs a nonempty vertex set");
  std::vector<int> ground = vertices;
  std::sort(ground.begin(), ground.end());
  BondLattice out;
  std::vector<SetPartition> elements;
  for_each_set_partition(ground, [&](const SetPartition& p) {
    bool connected = blocks_connected(p);
    if (connected != blocks_odd_min_even_max(p)) ++out.criterion_mismatches;
    if (connected) elements.push_back(p);
  });
  BlockMobius bm;
  out.poset = PartitionPoset(ground, std::move(elements), [&](const SetPartition& p) { return bm.of(p); });
  return out;
}

BondLattice build_bond_lattice(int two_n) {
  if (two_n < 1) throw InvalidArgument("ground size must be positive");
  std::vector<int> v(static_cast<std::size_t>(two_n));
  std::iota(v.begin(), v.end(), 1);
  return build_bond_lattice(v);
}

std::vector<int> reduced_ground(int n) {
  if (n < 2) throw InvalidArgument("reduced semilattice needs n >= 2");
  std::vector<int> v;
  for (int i = 1; i <= 2 * n; ++i)
    if (i != 2 && i != 2 * n - 1) v.push_back(i);
  return v;
}

PartitionPoset build_reduced(int n) {
  std::vector<int> ground = reduced_ground(n);
  BondLattice full = build_bond_lattice(ground);
  const int hi = 2 * n;
  std::vector<SetPartition> elements;
  for (const auto& p : full.poset.elements())
    if (!p.same_block(1, hi)) elements.push_back(p);
  // The lower intervals are unchanged, so the Mobius values carry over.
  const PartitionPoset& lat = full.poset;
  return PartitionPoset(ground, std::move(elements), [&](const SetPartition& p) { return lat.mobius(p); });
}

Integer zaslavsky_regions(const Polynomial& chi, int length) {
  Rational v = chi.eval(Rational(-1));
  if (length % 2 != 0) v = -v;
  if (!is_integer(v)) throw IntegralityFailure("region count is not an integer");
  if (v < 0) throw NegativeResult("region count is negative: " + to_string(v));
  return v.get_num();
}

Integer zaslavsky_bounded(const Polynomial& chi) {
  Rational v = chi.eval(Rational(1));
  if (!is_integer(v)) throw IntegralityFailure("bounded region count is not an integer");
  return abs(v.get_num());
}

}  // namespace genlab
