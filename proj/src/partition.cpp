#include "grpd/partition.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace grpd {

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  Partition out;
  out.class_of_.resize(labels.size());
  std::unordered_map<std::uint32_t, std::uint32_t> dense;
  for (std::uint32_t g = 0; g < labels.size(); ++g) {
    auto [it, inserted] = dense.try_emplace(labels[g], static_cast<std::uint32_t>(dense.size()));
    if (inserted) out.classes_.emplace_back();
    out.class_of_[g] = it->second;
    out.classes_[it->second].push_back(ArrowId{g});
  }
  return out;
}

Partition Partition::discrete(std::size_t arrow_count) {
  std::vector<std::uint32_t> labels(arrow_count);
  for (std::uint32_t g = 0; g < arrow_count; ++g) labels[g] = g;
  return from_labels(labels);
}

Partition Partition::single_class(std::size_t arrow_count) {
  std::vector<std::uint32_t> labels(arrow_count, 0);
  return from_labels(labels);
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.arrow_count() != b.arrow_count()) {
    throw std::invalid_argument("partitions of different arrow sets");
  }
  return Partition::by_key(a.arrow_count(), [&](ArrowId g) {
    return std::pair{a.class_of(g), b.class_of(g)};
  });
}

}  // namespace grpd
