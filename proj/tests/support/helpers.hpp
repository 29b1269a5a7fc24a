#ifndef GRPD_TESTS_HELPERS_HPP
#define GRPD_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "grpd/error.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/partition.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(GRPD_FIXTURES) + "/" + name; }

inline grpd::ArrowId arrow(const grpd::FiniteGroupoid& G, const std::string& label) { return *G.find_arrow(label); }
inline grpd::ObjectId object(const grpd::FiniteGroupoid& G, const std::string& label) {
  return *G.find_object(label);
}

inline grpd::Witness arrows(std::initializer_list<int> ids) {
  grpd::Witness w;
  for (int i : ids) w.push_back({grpd::WitnessItem::Kind::Arrow, static_cast<std::uint32_t>(i)});
  return w;
}

inline grpd::WitnessItem obj(int p) { return {grpd::WitnessItem::Kind::Object, static_cast<std::uint32_t>(p)}; }
inline grpd::WitnessItem arr(int g) { return {grpd::WitnessItem::Kind::Arrow, static_cast<std::uint32_t>(g)}; }

inline grpd::Partition partition_of(const std::vector<int>& labels) {
  std::vector<std::uint32_t> l(labels.begin(), labels.end());
  return grpd::Partition::from_labels(l);
}

/// Same relation, regardless of class numbering.
inline bool same_relation(const grpd::Partition& p, const std::vector<int>& labels) {
  for (std::size_t g = 0; g < labels.size(); ++g) {
    for (std::size_t h = 0; h < labels.size(); ++h) {
      if (p.related(grpd::ArrowId{static_cast<std::uint32_t>(g)}, grpd::ArrowId{static_cast<std::uint32_t>(h)}) !=
          (labels[g] == labels[h])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace testing

#endif  // GRPD_TESTS_HELPERS_HPP
