#include "grpd/groupoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace grpd {

namespace {

constexpr std::uint32_t kUndefined = static_cast<std::uint32_t>(-1);

std::string describe(const RawGroupoid& raw, std::uint32_t arrow) {
  return "'" + raw.arrows[arrow].label + "'";
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  if (const char* value = std::getenv("GRPD_MAX_ARROWS")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end != value && *end == '\0' && parsed > 0) limits.max_arrows = parsed;
  }
  return limits;
}

struct FiniteGroupoid::Impl {
  std::vector<std::string> object_labels;
  std::vector<std::string> arrow_labels;
  std::vector<ObjectId> source;
  std::vector<ObjectId> target;
  std::vector<ArrowId> inverse;
  std::vector<ArrowId> identity;
  std::vector<bool> is_identity;
  std::vector<std::vector<ArrowId>> source_fibers;
  std::vector<std::vector<ArrowId>> target_fibers;
  // Position of each arrow inside its source fiber.
  std::vector<std::uint32_t> fiber_pos;
  // Row of g starts at row_offset[g]; entry fiber_pos[h] holds gh.
  std::vector<std::size_t> row_offset;
  std::vector<ArrowId> products;
  std::unordered_map<std::string, std::uint32_t> arrow_by_label;
  std::unordered_map<std::string, std::uint32_t> object_by_label;

  ArrowId product(ArrowId g, ArrowId h) const {
    return products[row_offset[idx(g)] + fiber_pos[idx(h)]];
  }
};

FiniteGroupoid validate_groupoid(const RawGroupoid& raw, const Limits& limits) {
  const std::size_t n_obj = raw.object_labels.size();
  const std::size_t n_arr = raw.arrows.size();

  if (n_obj == 0) throw Error(Errc::EmptyBase, "a groupoid needs at least one object");
  if (n_obj > limits.max_objects) {
    throw Error(Errc::TooLarge, std::to_string(n_obj) + " objects exceed the cap of " +
                                    std::to_string(limits.max_objects));
  }
  if (n_arr > limits.max_arrows) {
    throw Error(Errc::TooLarge, std::to_string(n_arr) + " arrows exceed the cap of " +
                                    std::to_string(limits.max_arrows));
  }

  for (std::size_t g = 0; g < n_arr; ++g) {
    if (raw.arrows[g].source >= n_obj || raw.arrows[g].target >= n_obj) {
      throw Error(Errc::DanglingReference,
                  "arrow " + std::to_string(g) + " refers to a missing object");
    }
  }
  for (std::size_t t = 0; t < raw.compose.size(); ++t) {
    for (std::uint32_t a : raw.compose[t]) {
      if (a >= n_arr) {
        throw Error(Errc::DanglingReference,
                    "compose entry " + std::to_string(t) + " refers to a missing arrow");
      }
    }
  }
  if (raw.inverse && raw.inverse->size() != n_arr) {
    throw Error(Errc::DanglingReference, "inverse map must cover every arrow");
  }
  if (raw.identity && raw.identity->size() != n_obj) {
    throw Error(Errc::DanglingReference, "identity map must cover every object");
  }
  if (raw.inverse) {
    for (std::uint32_t a : *raw.inverse) {
      if (a >= n_arr) throw Error(Errc::DanglingReference, "inverse map refers to a missing arrow");
    }
  }
  if (raw.identity) {
    for (std::uint32_t a : *raw.identity) {
      if (a >= n_arr) throw Error(Errc::DanglingReference, "identity map refers to a missing arrow");
    }
  }

  auto impl = std::make_shared<FiniteGroupoid::Impl>();
  impl->object_labels = raw.object_labels;
  for (std::size_t p = 0; p < n_obj; ++p) {
    if (impl->object_labels[p].empty()) impl->object_labels[p] = std::to_string(p);
  }
  impl->source.resize(n_arr);
  impl->target.resize(n_arr);
  impl->arrow_labels.resize(n_arr);
  impl->source_fibers.resize(n_obj);
  impl->target_fibers.resize(n_obj);
  impl->fiber_pos.resize(n_arr);
  for (std::uint32_t g = 0; g < n_arr; ++g) {
    const RawArrow& a = raw.arrows[g];
    impl->arrow_labels[g] = a.label.empty() ? "g" + std::to_string(g) : a.label;
    impl->source[g] = ObjectId{a.source};
    impl->target[g] = ObjectId{a.target};
    impl->fiber_pos[g] = static_cast<std::uint32_t>(impl->source_fibers[a.source].size());
    impl->source_fibers[a.source].push_back(ArrowId{g});
    impl->target_fibers[a.target].push_back(ArrowId{g});
  }
  for (std::uint32_t p = 0; p < n_obj; ++p) impl->object_by_label.emplace(impl->object_labels[p], p);
  for (std::uint32_t g = 0; g < n_arr; ++g) impl->arrow_by_label.emplace(impl->arrow_labels[g], g);

  impl->row_offset.resize(n_arr);
  std::size_t total = 0;
  for (std::uint32_t g = 0; g < n_arr; ++g) {
    impl->row_offset[g] = total;
    total += impl->source_fibers[raw.arrows[g].target].size();
  }
  std::vector<std::uint32_t> table(total, kUndefined);

  for (const auto& [f, g, h] : raw.compose) {
    const RawArrow& af = raw.arrows[f];
    const RawArrow& ag = raw.arrows[g];
    const RawArrow& ah = raw.arrows[h];
    Witness w{item(ArrowId{f}), item(ArrowId{g})};
    if (af.target != ag.source) {
      throw Error(Errc::BadCompositionDomain,
                  describe(raw, f) + " then " + describe(raw, g) +
                      " is listed but target and source differ",
                  w);
    }
    if (ah.source != af.source || ah.target != ag.target) {
      throw Error(Errc::BadCompositionDomain,
                  "product of " + describe(raw, f) + " and " + describe(raw, g) +
                      " must run from the source of the first to the target of the second",
                  w);
    }
    std::uint32_t& slot = table[impl->row_offset[f] + impl->fiber_pos[g]];
    if (slot != kUndefined && slot != h) {
      throw Error(Errc::BadCompositionDomain,
                  "conflicting products for " + describe(raw, f) + " and " + describe(raw, g), w);
    }
    slot = h;
  }
  for (std::uint32_t g = 0; g < n_arr; ++g) {
    for (ArrowId h : impl->source_fibers[raw.arrows[g].target]) {
      if (table[impl->row_offset[g] + impl->fiber_pos[idx(h)]] == kUndefined) {
        throw Error(Errc::BadCompositionDomain,
                    "missing product for composable pair " + describe(raw, g) + ", " +
                        describe(raw, idx(h)),
                    {item(ArrowId{g}), item(h)});
      }
    }
  }
  impl->products.reserve(total);
  for (std::uint32_t v : table) impl->products.push_back(ArrowId{v});

  const auto& I = *impl;
  auto neutral_at = [&](ArrowId e, std::uint32_t p) {
    if (idx(I.source[idx(e)]) != p || idx(I.target[idx(e)]) != p) return false;
    for (ArrowId g : I.source_fibers[p]) {
      if (I.product(e, g) != g) return false;
    }
    for (ArrowId g : I.target_fibers[p]) {
      if (I.product(g, e) != g) return false;
    }
    return true;
  };

  impl->identity.resize(n_obj);
  impl->is_identity.assign(n_arr, false);
  for (std::uint32_t p = 0; p < n_obj; ++p) {
    std::optional<ArrowId> found;
    if (raw.identity) {
      ArrowId declared{(*raw.identity)[p]};
      if (neutral_at(declared, p)) found = declared;
    } else {
      for (ArrowId e : I.source_fibers[p]) {
        if (neutral_at(e, p)) {
          found = e;
          break;
        }
      }
    }
    if (!found) {
      throw Error(Errc::MissingIdentity,
                  "no neutral arrow at object '" + I.object_labels[p] + "'",
                  {item(ObjectId{p})});
    }
    impl->identity[p] = *found;
    impl->is_identity[idx(*found)] = true;
  }

  for (std::uint32_t f = 0; f < n_arr; ++f) {
    for (ArrowId g : I.source_fibers[idx(I.target[f])]) {
      ArrowId fg = I.product(ArrowId{f}, g);
      for (ArrowId h : I.source_fibers[idx(I.target[idx(g)])]) {
        if (I.product(fg, h) != I.product(ArrowId{f}, I.product(g, h))) {
          throw Error(Errc::NotAssociative,
                      "(" + I.arrow_labels[f] + " " + I.arrow_labels[idx(g)] + ") " +
                          I.arrow_labels[idx(h)] + " differs from " + I.arrow_labels[f] + " (" +
                          I.arrow_labels[idx(g)] + " " + I.arrow_labels[idx(h)] + ")",
                      {item(ArrowId{f}), item(g), item(h)});
        }
      }
    }
  }

  impl->inverse.resize(n_arr);
  for (std::uint32_t g = 0; g < n_arr; ++g) {
    const ArrowId ga{g};
    const ArrowId left = I.identity[idx(I.source[g])];
    const ArrowId right = I.identity[idx(I.target[g])];
    auto inverts = [&](ArrowId h) {
      return I.source[idx(h)] == I.target[g] && I.target[idx(h)] == I.source[g] &&
             I.product(ga, h) == left && I.product(h, ga) == right;
    };
    std::optional<ArrowId> found;
    if (raw.inverse) {
      ArrowId declared{(*raw.inverse)[g]};
      if (inverts(declared)) found = declared;
    } else {
      for (ArrowId h : I.source_fibers[idx(I.target[g])]) {
        if (inverts(h)) {
          found = h;
          break;
        }
      }
    }
    if (!found) {
      throw Error(Errc::BadInverse, "arrow '" + I.arrow_labels[g] + "' has no two-sided inverse",
                  {item(ga)});
    }
    impl->inverse[g] = *found;
  }

  return FiniteGroupoid(std::move(impl));
}

std::size_t FiniteGroupoid::object_count() const { return impl_->object_labels.size(); }
std::size_t FiniteGroupoid::arrow_count() const { return impl_->arrow_labels.size(); }

ObjectId FiniteGroupoid::source(ArrowId g) const { return impl_->source[idx(g)]; }
ObjectId FiniteGroupoid::target(ArrowId g) const { return impl_->target[idx(g)]; }
ArrowId FiniteGroupoid::inverse_of(ArrowId g) const { return impl_->inverse[idx(g)]; }
ArrowId FiniteGroupoid::identity_at(ObjectId p) const { return impl_->identity[idx(p)]; }
bool FiniteGroupoid::is_identity(ArrowId g) const { return impl_->is_identity[idx(g)]; }

std::optional<ArrowId> FiniteGroupoid::try_compose(ArrowId g, ArrowId h) const {
  if (!composable(g, h)) return std::nullopt;
  return impl_->product(g, h);
}

ArrowId FiniteGroupoid::compose(ArrowId g, ArrowId h) const {
  if (!composable(g, h)) {
    throw Error(Errc::NotComposable,
                "'" + label(g) + "' ends where '" + label(h) + "' does not start",
                {item(g), item(h)});
  }
  return impl_->product(g, h);
}

std::span<const ArrowId> FiniteGroupoid::source_fiber(ObjectId p) const {
  return impl_->source_fibers[idx(p)];
}

std::span<const ArrowId> FiniteGroupoid::target_fiber(ObjectId q) const {
  return impl_->target_fibers[idx(q)];
}

std::vector<ArrowId> FiniteGroupoid::slice(std::span<const ObjectId> from,
                                           std::span<const ObjectId> to) const {
  std::vector<bool> in_from(object_count(), false);
  std::vector<bool> in_to(object_count(), false);
  for (ObjectId p : from) {
    if (idx(p) >= object_count()) {
      throw Error(Errc::UnknownObject, "object index " + std::to_string(idx(p)));
    }
    in_from[idx(p)] = true;
  }
  for (ObjectId q : to) {
    if (idx(q) >= object_count()) {
      throw Error(Errc::UnknownObject, "object index " + std::to_string(idx(q)));
    }
    in_to[idx(q)] = true;
  }
  std::vector<ArrowId> out;
  for (ArrowId g : arrows()) {
    if (in_from[idx(source(g))] && in_to[idx(target(g))]) out.push_back(g);
  }
  return out;
}

std::vector<ArrowId> FiniteGroupoid::isotropy(ObjectId p) const {
  const std::array<ObjectId, 1> base{p};
  return slice(base, base);
}

bool FiniteGroupoid::is_transitive() const {
  // Every object must be reachable from object 0 in one step; composing
  // through object 0 then connects every ordered pair.
  std::vector<bool> reached(object_count(), false);
  for (ArrowId g : source_fiber(ObjectId{0})) reached[idx(target(g))] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

FiniteGroupoid FiniteGroupoid::restrict_to(std::span<const ObjectId> base) const {
  if (base.empty()) throw Error(Errc::EmptyBase, "restriction needs a nonempty base");
  std::vector<std::uint32_t> new_object(object_count(), kUndefined);
  RawGroupoid raw;
  for (ObjectId p : base) {
    if (idx(p) >= object_count()) {
      throw Error(Errc::UnknownObject, "object index " + std::to_string(idx(p)));
    }
    if (new_object[idx(p)] != kUndefined) continue;
    new_object[idx(p)] = static_cast<std::uint32_t>(raw.object_labels.size());
    raw.object_labels.push_back(label(p));
  }
  std::vector<std::uint32_t> new_arrow(arrow_count(), kUndefined);
  for (ArrowId g : arrows()) {
    std::uint32_t s = new_object[idx(source(g))];
    std::uint32_t t = new_object[idx(target(g))];
    if (s == kUndefined || t == kUndefined) continue;
    new_arrow[idx(g)] = static_cast<std::uint32_t>(raw.arrows.size());
    raw.arrows.push_back({label(g), s, t});
  }
  for (ArrowId g : arrows()) {
    if (new_arrow[idx(g)] == kUndefined) continue;
    for (ArrowId h : source_fiber(target(g))) {
      if (new_arrow[idx(h)] == kUndefined) continue;
      raw.compose.push_back({new_arrow[idx(g)], new_arrow[idx(h)], new_arrow[idx(impl_->product(g, h))]});
    }
  }
  return validate_groupoid(raw, Limits{object_count(), arrow_count()});
}

const std::string& FiniteGroupoid::label(ArrowId g) const { return impl_->arrow_labels[idx(g)]; }
const std::string& FiniteGroupoid::label(ObjectId p) const { return impl_->object_labels[idx(p)]; }

std::optional<ArrowId> FiniteGroupoid::find_arrow(std::string_view label) const {
  auto it = impl_->arrow_by_label.find(std::string(label));
  if (it == impl_->arrow_by_label.end()) return std::nullopt;
  return ArrowId{it->second};
}

std::optional<ObjectId> FiniteGroupoid::find_object(std::string_view label) const {
  auto it = impl_->object_by_label.find(std::string(label));
  if (it == impl_->object_by_label.end()) return std::nullopt;
  return ObjectId{it->second};
}

RawGroupoid FiniteGroupoid::to_raw() const {
  RawGroupoid raw;
  raw.object_labels = impl_->object_labels;
  for (ArrowId g : arrows()) raw.arrows.push_back({label(g), idx(source(g)), idx(target(g))});
  for (ArrowId g : arrows()) {
    for (ArrowId h : source_fiber(target(g))) {
      raw.compose.push_back({idx(g), idx(h), idx(impl_->product(g, h))});
    }
  }
  std::vector<std::uint32_t> inverse;
  for (ArrowId g : arrows()) inverse.push_back(idx(inverse_of(g)));
  std::vector<std::uint32_t> identity;
  for (ObjectId p : objects()) identity.push_back(idx(identity_at(p)));
  raw.inverse = std::move(inverse);
  raw.identity = std::move(identity);
  return raw;
}

bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  return x.object_labels == y.object_labels && x.arrow_labels == y.arrow_labels &&
         x.source == y.source && x.target == y.target && x.products == y.products;
}

}  // namespace grpd
