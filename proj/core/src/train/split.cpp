#include "mgnn/train/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "mgnn/tensor/ops.hpp"

namespace mgnn {

SplitIndices stratified_split(std::span<const std::uint32_t> labels, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0)) {
    throw std::invalid_argument("stratified_split: fraction must lie in [0, 1]");
  }
  if (labels.empty()) throw std::invalid_argument("stratified_split: no samples");

  std::map<std::uint32_t, std::vector<std::uint32_t>> members;
  for (std::uint32_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);

  struct Quota {
    std::vector<std::uint32_t>* ids;
    std::size_t take;
    double exact;
  };
  std::vector<Quota> quotas;
  std::size_t assigned = 0;
  for (auto& [cls, ids] : members) {
    const double exact = static_cast<double>(ids.size()) * test_fraction;
    const auto take = static_cast<std::size_t>(std::llround(exact));
    quotas.push_back({&ids, take, exact});
    assigned += take;
  }
  const auto target = static_cast<std::size_t>(std::llround(static_cast<double>(labels.size()) * test_fraction));
  while (assigned > target) {
    Quota* best = nullptr;
    for (Quota& q : quotas) {
      if (q.take > 0 && (!best || q.take - q.exact > best->take - best->exact)) best = &q;
    }
    --best->take;
    --assigned;
  }
  while (assigned < target) {
    Quota* best = nullptr;
    for (Quota& q : quotas) {
      if (q.take < q.ids->size() && (!best || q.exact - q.take > best->exact - best->take)) best = &q;
    }
    ++best->take;
    ++assigned;
  }

  Rng rng(seed);
  SplitIndices out;
  for (Quota& q : quotas) {
    std::vector<std::uint32_t> ids = *q.ids;
    shuffle_in_place(ids, rng);
    out.test.insert(out.test.end(), ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(q.take));
    out.train.insert(out.train.end(), ids.begin() + static_cast<std::ptrdiff_t>(q.take), ids.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

SplitIndices stratified_split(std::span<const std::uint32_t> labels, std::size_t n_classes, double test_fraction,
                              std::uint64_t seed) {
  std::vector<std::size_t> count(n_classes, 0);
  for (std::uint32_t y : labels) {
    if (y >= n_classes) throw std::out_of_range("stratified_split: label " + std::to_string(y) + " out of range");
    ++count[y];
  }
  for (std::size_t k = 0; k < n_classes; ++k) {
    if (count[k] == 0) throw std::invalid_argument("stratified_split: class " + std::to_string(k) + " is empty");
  }
  return stratified_split(labels, test_fraction, seed);
}

}  // namespace mgnn
