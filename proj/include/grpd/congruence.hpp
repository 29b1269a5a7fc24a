#ifndef GRPD_CONGRUENCE_HPP
#define GRPD_CONGRUENCE_HPP

#include <optional>
#include <vector>

#include "grpd/check.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/hom.hpp"
#include "grpd/partition.hpp"

namespace grpd {

/// Result of testing both affine-congruence axioms. Witnesses are the tuple
/// (g1, g2, h1, h2) with g1 ~ g2 and h1 ~ h2:
///  - congruence:  g1h1 and g2h2 defined, but g1h1 !~ g2h2;
///  - parallelism: g1h2 and h1g2 defined, but g1h2 !~ h1g2.
struct AffineCongruenceReport {
  Check congruence;
  Check parallelism;

  bool holds() const { return congruence.holds && parallelism.holds; }
};

AffineCongruenceReport validate_affine_congruence(const FiniteGroupoid& groupoid,
                                                  const Partition& lambda);

/// Witnesses are (g, p): the class of g misses the source fiber at p
/// (complete), or meets it more than once (simple).
struct CongruenceProfile {
  Check complete;
  Check simple;

  bool efficient() const { return complete.holds && simple.holds; }
};

/// Throws Error(NotACongruence) when lambda fails either axiom.
CongruenceProfile congruence_profile(const FiniteGroupoid& groupoid, const Partition& lambda);

/// Profile without re-checking the axioms; used where they are already known.
CongruenceProfile profile_unchecked(const FiniteGroupoid& groupoid, const Partition& lambda);

/// [g] restricted to arrows leaving p, ascending.
std::vector<ArrowId> class_at(const FiniteGroupoid& groupoid, const Partition& lambda, ArrowId g,
                              ObjectId p);

/// g ~ h iff theta(g) == theta(h).
Partition congruence_from_hom(const GroupoidHom& theta);

/// Kernel triviality: every arrow sent to zero is an identity. The witness is
/// the first non-identity arrow in the kernel.
struct MonomorphismResult {
  bool holds = true;
  std::optional<ArrowId> witness;
};

MonomorphismResult is_monomorphism(const GroupoidHom& theta);

}  // namespace grpd

#endif  // GRPD_CONGRUENCE_HPP
