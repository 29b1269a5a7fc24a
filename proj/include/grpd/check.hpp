#ifndef GRPD_CHECK_HPP
#define GRPD_CHECK_HPP

#include <string>

#include "grpd/error.hpp"

namespace grpd {

/// Outcome of one exhaustive scan. On failure `witness` holds the first
/// counterexample in arrow-index order.
struct Check {
  bool holds = true;
  Witness witness;
  std::string detail;

  static Check pass() { return {}; }
  static Check fail(Witness w, std::string why = {}) { return {false, std::move(w), std::move(why)}; }

  explicit operator bool() const { return holds; }
};

}  // namespace grpd

#endif  // GRPD_CHECK_HPP
