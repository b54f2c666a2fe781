#include "genlab/permutation.hpp"

#include <algorithm>

#include "genlab/errors.hpp"

namespace genlab {

namespace {

std::size_t index_in(const std::vector<int>& ground, int x) {
  auto it = std::lower_bound(ground.begin(), ground.end(), x);
  if (it == ground.end() || *it != x)
    throw InvalidArgument("element " + std::to_string(x) + " not in permutation ground set");
  return static_cast<std::size_t>(it - ground.begin());
}

}  // namespace

Permutation::Permutation(std::vector<int> ground, std::vector<int> image) {
  if (ground.size() != image.size()) throw InvalidArgument("permutation ground/image size mismatch");
  // Sort ground together with its images.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) pairs.emplace_back(ground[i], image[i]);
  std::sort(pairs.begin(), pairs.end());
  ground_.clear();
  image_.clear();
  for (auto [g, im] : pairs) {
    ground_.push_back(g);
    image_.push_back(im);
  }
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw InvalidArgument("permutation ground has repeated elements");
  if (!ground_.empty() && ground_.front() <= 0) throw InvalidArgument("permutation ground must be positive");
  std::vector<int> sorted_image = image_;
  std::sort(sorted_image.begin(), sorted_image.end());
  if (sorted_image != ground_) throw InvalidArgument("image is not a rearrangement of ground");
}

Permutation Permutation::identity(std::vector<int> ground) {
  std::vector<int> image = ground;
  return Permutation(std::move(ground), std::move(image));
}

Permutation Permutation::from_cycles(const std::vector<Cycle>& cycles) {
  std::vector<int> ground;
  std::vector<int> image;
  for (const auto& c : cycles) {
    if (c.empty()) throw InvalidArgument("empty cycle");
    for (std::size_t i = 0; i < c.size(); ++i) {
      ground.push_back(c[i]);
      image.push_back(c[(i + 1) % c.size()]);
    }
  }
  return Permutation(std::move(ground), std::move(image));
}

Permutation Permutation::from_one_line(const std::vector<int>& one_line) {
  std::vector<int> ground(one_line.size());
  for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = static_cast<int>(i) + 1;
  return Permutation(std::move(ground), one_line);
}

int Permutation::operator()(int x) const { return image_[index_in(ground_, x)]; }

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<char> seen(ground_.size(), 0);
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (seen[i]) continue;
    Cycle c;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      c.push_back(ground_[j]);
      j = index_in(ground_, image_[j]);
    }
    // ground_ ascending, so c already starts at its minimum.
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Permutation::num_cycles() const { return cycles().size(); }

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> fp;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (ground_[i] == image_[i]) fp.push_back(ground_[i]);
  return fp;
}

std::vector<std::pair<int, int>> Permutation::drops() const {
  std::vector<std::pair<int, int>> d;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (ground_[i] > image_[i]) d.emplace_back(ground_[i], image_[i]);
  return d;
}

SetPartition Permutation::cycle_support() const { return SetPartition(cycles()); }

std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

nlohmann::json Permutation::to_json() const { return {{"ground", ground_}, {"image", image_}}; }

Permutation Permutation::from_json(const nlohmann::json& j) {
  return Permutation(j.at("ground").get<std::vector<int>>(), j.at("image").get<std::vector<int>>());
}

}  // namespace genlab
