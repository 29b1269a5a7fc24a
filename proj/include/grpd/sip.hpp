#ifndef GRPD_SIP_HPP
#define GRPD_SIP_HPP

#include <optional>
#include <span>
#include <vector>

#include "grpd/check.hpp"
#include "grpd/congruence.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/hom.hpp"
#include "grpd/partition.hpp"
#include "grpd/scalars.hpp"

namespace grpd {

enum class FieldTag : std::uint8_t { Real, Complex };

/// Scalar-valued map on pairs of arrows, additive in each argument
/// separately. Fully tabulated, row-major.
class Bihom {
 public:
  const FiniteGroupoid& groupoid() const { return groupoid_; }
  FieldTag field() const { return field_; }
  const Gaussian& operator()(ArrowId g, ArrowId h) const {
    return table_[idx(g) * groupoid_.arrow_count() + idx(h)];
  }
  std::span<const Gaussian> row(ArrowId g) const {
    return std::span(table_).subspan(idx(g) * groupoid_.arrow_count(), groupoid_.arrow_count());
  }
  std::span<const Gaussian> table() const { return table_; }

 private:
  Bihom(FiniteGroupoid g, FieldTag field, std::vector<Gaussian> table)
      : groupoid_(std::move(g)), field_(field), table_(std::move(table)) {}
  friend Bihom validate_bihom(const FiniteGroupoid&, std::vector<Gaussian>, std::optional<FieldTag>);

  FiniteGroupoid groupoid_;
  FieldTag field_;
  std::vector<Gaussian> table_;
};

/// Checks additivity in the first slot, then the second, over all
/// composable pairs and all third arrows. Throws NotBihom with witness
/// (g, h, k) where B(gh, k) != B(g, k) + B(h, k) (slot 1) or
/// B(k, gh) != B(k, g) + B(k, h) (slot 2). When `field` is omitted it is
/// inferred from the entries; a Real tag with a non-real entry is BadTarget.
Bihom validate_bihom(const FiniteGroupoid& groupoid, std::vector<Gaussian> table,
                     std::optional<FieldTag> field = std::nullopt);

/// B(g, h) = sum_i theta_i(g) * conj(theta_i(h)). The family must be scalar
/// valued, over one groupoid, and jointly separate identities: an arrow
/// killed by every theta_i must be an identity (else NotSeparating).
Bihom sip_from_thetas(std::span<const GroupoidHom> thetas);

struct SipReport {
  Check conjugate_symmetric;  // witness (g, h)
  Check positive_definite;    // witness (g)
  Check cauchy_schwarz;       // witness (g, h)

  bool is_sip() const {
    return conjugate_symmetric.holds && positive_definite.holds && cauchy_schwarz.holds;
  }
};

/// Cauchy-Schwarz is decided in squared form |B(g,h)|^2 <= B(g,g) B(h,h).
/// A non-real diagonal entry is reported under conjugate symmetry.
SipReport validate_sip(const Bihom& b);

struct BRelation {
  bool congruent = false;   // rows equal
  bool opposite = false;    // rows negated
  bool orthogonal = false;  // B(g1, g2) == 0
};

BRelation b_relate(const Bihom& b, ArrowId g1, ArrowId g2);

/// Arrows with equal rows.
Partition b_congruence(const Bihom& b);

/// g1, g2 opposite and g2, g3 opposite imply g1, g3 congruent; witness
/// (g1, g2, g3).
Check opposite_twice_is_congruent(const Bihom& b);

struct BPartitionReport {
  Partition partition;
  AffineCongruenceReport axioms;
  CongruenceProfile profile;
  /// Semi-unitary with a complete row relation.
  bool b_affine = false;
};

BPartitionReport b_partition(const Bihom& b);

/// When every theta_j has a Kronecker arrow h_j (theta_i(h_j) = delta_ij),
/// returns whether the row relation of B equals the relation induced by the
/// product of the family. nullopt when some h_j is missing.
std::optional<bool> kronecker_agreement(std::span<const GroupoidHom> thetas, const Bihom& b);

/// { k : B(k, h) = c B(g, h) for every h }, optionally cut to arrows leaving
/// `at`. Ascending.
std::vector<ArrowId> scalar_set(const Bihom& b, const Gaussian& c, ArrowId g,
                                std::optional<ObjectId> at = std::nullopt);

/// The members of c.g meet each source fiber at most once; witness
/// (first two members sharing a source).
Check scalar_set_at_most_one_per_fiber(const Bihom& b, std::span<const ArrowId> members);

/// B(g, k) = conj(c) B(g, h) for every g and every k in c.h; witness (g, k).
Check conjugate_scalar_law(const Bihom& b, const Gaussian& c, ArrowId h);

struct TransitivePropsReport {
  bool applicable = false;
  /// Vanishing on one source fiber forces vanishing everywhere; witness (g, p).
  Check vanishing_rows;
  /// Rows compared only on G_s give the global row relation; witness
  /// (s, g1, g2) with g1, g2 equal on G_s but not everywhere.
  Check fiber_congruence;
};

TransitivePropsReport transitive_props_check(const Bihom& b);

}  // namespace grpd

#endif  // GRPD_SIP_HPP
