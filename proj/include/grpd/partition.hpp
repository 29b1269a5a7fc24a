#ifndef GRPD_PARTITION_HPP
#define GRPD_PARTITION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <type_traits>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

/// Equivalence relation on the arrows of a groupoid, stored both ways.
/// Classes are numbered by their smallest arrow, so two partitions of the
/// same arrow set compare equal iff they are the same relation.
class Partition {
 public:
  Partition() = default;

  /// Any labelling of arrows by class; labels need not be dense.
  static Partition from_labels(std::span<const std::uint32_t> labels);

  /// Groups arrows by an ordered key.
  template <class KeyFn, class Less = std::less<>>
  static Partition by_key(std::size_t arrow_count, KeyFn key, Less less = {}) {
    using Key = std::decay_t<decltype(key(ArrowId{0}))>;
    std::map<Key, std::uint32_t, Less> seen(less);
    std::vector<std::uint32_t> labels(arrow_count);
    for (std::uint32_t g = 0; g < arrow_count; ++g) {
      auto [it, inserted] = seen.try_emplace(key(ArrowId{g}), static_cast<std::uint32_t>(seen.size()));
      labels[g] = it->second;
    }
    return from_labels(labels);
  }

  static Partition discrete(std::size_t arrow_count);
  static Partition single_class(std::size_t arrow_count);

  std::size_t arrow_count() const { return class_of_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  std::uint32_t class_of(ArrowId g) const { return class_of_[idx(g)]; }
  std::span<const ArrowId> members(std::uint32_t cls) const { return classes_[cls]; }
  std::span<const ArrowId> class_members(ArrowId g) const { return classes_[class_of(g)]; }
  bool related(ArrowId g, ArrowId h) const { return class_of(g) == class_of(h); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<ArrowId>> classes_;
};

/// Coarsest common refinement: g ~ h iff related in both.
Partition meet(const Partition& a, const Partition& b);

}  // namespace grpd

#endif  // GRPD_PARTITION_HPP
