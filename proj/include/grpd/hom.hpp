#ifndef GRPD_HOM_HPP
#define GRPD_HOM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/scalars.hpp"

namespace grpd {

/// One factor of a finitely generated commutative target group.
struct Component {
  enum class Kind : std::uint8_t { Integer, Modular, Rational, Gaussian };
  Kind kind = Kind::Integer;
  std::uint32_t modulus = 0;  // only for Modular, >= 2

  friend bool operator==(const Component&, const Component&) = default;
};

/// Value in a product group: one Gaussian rational per component. Integer,
/// modular and rational components keep a zero imaginary part; modular
/// components hold their canonical representative in 0..m-1.
struct AbelianElement {
  std::vector<Gaussian> parts;

  friend bool operator==(const AbelianElement&, const AbelianElement&) = default;
};

/// Total order on elements, only for use as a container key.
struct ElementLess {
  bool operator()(const AbelianElement& a, const AbelianElement& b) const;
};

class AbelianGroupSig {
 public:
  AbelianGroupSig() = default;
  /// Throws Error(BadTarget) for an empty signature or a modulus below 2.
  explicit AbelianGroupSig(std::vector<Component> components);

  static AbelianGroupSig integers();
  static AbelianGroupSig modular(std::uint32_t m);
  static AbelianGroupSig rationals();
  static AbelianGroupSig gaussian();

  std::span<const Component> components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  /// Single Integer, Rational or Gaussian factor, i.e. embeds in the complex
  /// rationals as an additive group.
  bool is_scalar() const;

  AbelianElement zero() const;
  AbelianElement add(const AbelianElement& a, const AbelianElement& b) const;
  AbelianElement negate(const AbelianElement& a) const;
  bool is_zero(const AbelianElement& a) const;
  /// Reduces modular parts and checks each part lies in its factor. Throws
  /// Error(BadTarget) when it does not.
  AbelianElement normalize(AbelianElement a) const;

  /// e.g. "Z x Z/3 x C".
  std::string str() const;

  friend bool operator==(const AbelianGroupSig&, const AbelianGroupSig&) = default;

 private:
  std::vector<Component> components_;
};

/// A validated homomorphism from a finite groupoid into a commutative group.
class GroupoidHom {
 public:
  const FiniteGroupoid& groupoid() const { return groupoid_; }
  const AbelianGroupSig& target() const { return target_; }
  const AbelianElement& operator()(ArrowId g) const { return values_[idx(g)]; }
  std::span<const AbelianElement> values() const { return values_; }

  /// Value of a scalar homomorphism (see AbelianGroupSig::is_scalar).
  const Gaussian& scalar(ArrowId g) const { return values_[idx(g)].parts.front(); }

 private:
  GroupoidHom(FiniteGroupoid g, AbelianGroupSig sig, std::vector<AbelianElement> values)
      : groupoid_(std::move(g)), target_(std::move(sig)), values_(std::move(values)) {}
  friend GroupoidHom validate_hom(const FiniteGroupoid&, std::vector<std::optional<AbelianElement>>,
                                  const AbelianGroupSig&);

  FiniteGroupoid groupoid_;
  AbelianGroupSig target_;
  std::vector<AbelianElement> values_;
};

/// Checks theta(gh) = theta(g) + theta(h) on every composable pair. Throws
/// MissingArrow(g) for an unassigned arrow, BadTarget for a value outside
/// the target group, NotAdditive(g, h) at the first failing pair.
GroupoidHom validate_hom(const FiniteGroupoid& groupoid,
                         std::vector<std::optional<AbelianElement>> values,
                         const AbelianGroupSig& target);

/// Tabulates `value` over all arrows and validates the result.
GroupoidHom make_hom(const FiniteGroupoid& groupoid, const AbelianGroupSig& target,
                     const std::function<AbelianElement(ArrowId)>& value);

/// Same, for a single-component target.
GroupoidHom make_scalar_hom(const FiniteGroupoid& groupoid, const AbelianGroupSig& target,
                            const std::function<Gaussian(ArrowId)>& value);

GroupoidHom zero_hom(const FiniteGroupoid& groupoid, const AbelianGroupSig& target);

/// Packs a family into one homomorphism into the product group. Throws
/// EmptyList or MixedGroupoids.
GroupoidHom product_hom(std::span<const GroupoidHom> thetas);

}  // namespace grpd

#endif  // GRPD_HOM_HPP
