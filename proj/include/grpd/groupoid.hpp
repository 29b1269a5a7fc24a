#ifndef GRPD_GROUPOID_HPP
#define GRPD_GROUPOID_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grpd/error.hpp"

namespace grpd {

enum class ObjectId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::uint32_t idx(ObjectId p) { return static_cast<std::uint32_t>(p); }
constexpr std::uint32_t idx(ArrowId g) { return static_cast<std::uint32_t>(g); }

inline WitnessItem item(ArrowId g) { return {WitnessItem::Kind::Arrow, idx(g)}; }
inline WitnessItem item(ObjectId p) { return {WitnessItem::Kind::Object, idx(p)}; }

/// Size caps enforced when a groupoid is built. Every check in the library is
/// a brute-force scan, so these bound the running time.
struct Limits {
  std::size_t max_objects = 64;
  std::size_t max_arrows = 4096;

  /// Defaults, with the arrow cap taken from GRPD_MAX_ARROWS when set.
  static Limits from_env();
};

struct RawArrow {
  std::string label;
  std::uint32_t source = 0;
  std::uint32_t target = 0;
};

/// Unvalidated groupoid tables, indices only. A compose triple {f, g, h}
/// reads "f then g is h" and is only meaningful when target(f) == source(g).
struct RawGroupoid {
  std::vector<std::string> object_labels;
  std::vector<RawArrow> arrows;
  std::vector<std::array<std::uint32_t, 3>> compose;
  std::optional<std::vector<std::uint32_t>> inverse;
  std::optional<std::vector<std::uint32_t>> identity;
};

class FiniteGroupoid;

/// Checks the groupoid axioms and builds the immutable lookup structure.
/// Throws Error with the first violated axiom: DanglingReference, TooLarge,
/// EmptyBase, BadCompositionDomain(f, g), MissingIdentity(p),
/// NotAssociative(f, g, h), BadInverse(g).
FiniteGroupoid validate_groupoid(const RawGroupoid& raw, const Limits& limits = {});

/// A validated finite groupoid. Composition is diagrammatic: gh is defined
/// exactly when target(g) == source(h), and then runs from source(g) to
/// target(h). Copies share the same immutable tables.
class FiniteGroupoid {
 public:
  std::size_t object_count() const;
  std::size_t arrow_count() const;

  auto objects() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(object_count())) |
           std::views::transform([](std::uint32_t i) { return ObjectId{i}; });
  }
  auto arrows() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(arrow_count())) |
           std::views::transform([](std::uint32_t i) { return ArrowId{i}; });
  }

  ObjectId source(ArrowId g) const;
  ObjectId target(ArrowId g) const;
  ArrowId inverse_of(ArrowId g) const;
  ArrowId identity_at(ObjectId p) const;
  bool is_identity(ArrowId g) const;

  bool composable(ArrowId g, ArrowId h) const { return target(g) == source(h); }
  std::optional<ArrowId> try_compose(ArrowId g, ArrowId h) const;
  /// Throws Error(NotComposable) when target(g) != source(h).
  ArrowId compose(ArrowId g, ArrowId h) const;

  /// Arrows leaving p (the source fiber), ascending.
  std::span<const ArrowId> source_fiber(ObjectId p) const;
  /// Arrows entering q, ascending.
  std::span<const ArrowId> target_fiber(ObjectId q) const;

  /// { g : source(g) in from, target(g) in to }, ascending. Throws
  /// Error(UnknownObject) on an out-of-range object.
  std::vector<ArrowId> slice(std::span<const ObjectId> from, std::span<const ObjectId> to) const;
  std::vector<ArrowId> isotropy(ObjectId p) const;

  bool is_transitive() const;

  /// Full subgroupoid over `base`, re-validated. Arrow order is inherited.
  FiniteGroupoid restrict_to(std::span<const ObjectId> base) const;

  const std::string& label(ArrowId g) const;
  const std::string& label(ObjectId p) const;
  std::optional<ArrowId> find_arrow(std::string_view label) const;
  std::optional<ObjectId> find_object(std::string_view label) const;

  /// Tables with the full composition, suitable for serialization.
  RawGroupoid to_raw() const;

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b);

 private:
  struct Impl;
  explicit FiniteGroupoid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend FiniteGroupoid validate_groupoid(const RawGroupoid&, const Limits&);

  std::shared_ptr<const Impl> impl_;
};

}  // namespace grpd

#endif  // GRPD_GROUPOID_HPP
