#include "grpd/hom.hpp"

#include <algorithm>

namespace grpd {

namespace {

int compare(const Rational& a, const Rational& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Rational reduce_mod(const Rational& value, std::uint32_t m) {
  mpz_class r = value.numerator() % static_cast<unsigned long>(m);
  if (r < 0) r += m;
  return Rational(r, 1);
}

}  // namespace

bool ElementLess::operator()(const AbelianElement& a, const AbelianElement& b) const {
  if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (int c = compare(a.parts[i].re, b.parts[i].re)) return c < 0;
    if (int c = compare(a.parts[i].im, b.parts[i].im)) return c < 0;
  }
  return false;
}

AbelianGroupSig::AbelianGroupSig(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw Error(Errc::BadTarget, "target group needs a component");
  for (const Component& c : components_) {
    if (c.kind == Component::Kind::Modular && c.modulus < 2) {
      throw Error(Errc::BadTarget, "modulus must be at least 2");
    }
  }
}

AbelianGroupSig AbelianGroupSig::integers() {
  return AbelianGroupSig({{Component::Kind::Integer, 0}});
}
AbelianGroupSig AbelianGroupSig::modular(std::uint32_t m) {
  return AbelianGroupSig({{Component::Kind::Modular, m}});
}
AbelianGroupSig AbelianGroupSig::rationals() {
  return AbelianGroupSig({{Component::Kind::Rational, 0}});
}
AbelianGroupSig AbelianGroupSig::gaussian() {
  return AbelianGroupSig({{Component::Kind::Gaussian, 0}});
}

bool AbelianGroupSig::is_scalar() const {
  return components_.size() == 1 && components_[0].kind != Component::Kind::Modular;
}

AbelianElement AbelianGroupSig::zero() const {
  return AbelianElement{std::vector<Gaussian>(components_.size())};
}

AbelianElement AbelianGroupSig::add(const AbelianElement& a, const AbelianElement& b) const {
  AbelianElement out;
  out.parts.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    Gaussian sum = a.parts[i] + b.parts[i];
    if (components_[i].kind == Component::Kind::Modular) {
      sum.re = reduce_mod(sum.re, components_[i].modulus);
    }
    out.parts.push_back(std::move(sum));
  }
  return out;
}

AbelianElement AbelianGroupSig::negate(const AbelianElement& a) const {
  AbelianElement out;
  out.parts.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    Gaussian neg = -a.parts[i];
    if (components_[i].kind == Component::Kind::Modular) {
      neg.re = reduce_mod(neg.re, components_[i].modulus);
    }
    out.parts.push_back(std::move(neg));
  }
  return out;
}

bool AbelianGroupSig::is_zero(const AbelianElement& a) const {
  return std::all_of(a.parts.begin(), a.parts.end(), [](const Gaussian& z) { return z.is_zero(); });
}

AbelianElement AbelianGroupSig::normalize(AbelianElement a) const {
  if (a.parts.size() != components_.size()) {
    throw Error(Errc::BadTarget, "expected " + std::to_string(components_.size()) +
                                     " components, got " + std::to_string(a.parts.size()));
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    Gaussian& z = a.parts[i];
    switch (components_[i].kind) {
      case Component::Kind::Integer:
        if (!z.is_real() || !z.re.is_integer()) {
          throw Error(Errc::BadTarget, z.str() + " is not an integer");
        }
        break;
      case Component::Kind::Modular:
        if (!z.is_real() || !z.re.is_integer()) {
          throw Error(Errc::BadTarget, z.str() + " is not an integer residue");
        }
        z.re = reduce_mod(z.re, components_[i].modulus);
        break;
      case Component::Kind::Rational:
        if (!z.is_real()) throw Error(Errc::BadTarget, z.str() + " is not rational");
        break;
      case Component::Kind::Gaussian:
        break;
    }
  }
  return a;
}

std::string AbelianGroupSig::str() const {
  std::string out;
  for (const Component& c : components_) {
    if (!out.empty()) out += " x ";
    switch (c.kind) {
      case Component::Kind::Integer: out += "Z"; break;
      case Component::Kind::Modular: out += "Z/" + std::to_string(c.modulus); break;
      case Component::Kind::Rational: out += "Q"; break;
      case Component::Kind::Gaussian: out += "C"; break;
    }
  }
  return out;
}

GroupoidHom validate_hom(const FiniteGroupoid& groupoid,
                         std::vector<std::optional<AbelianElement>> values,
                         const AbelianGroupSig& target) {
  if (values.size() != groupoid.arrow_count()) {
    throw Error(Errc::MissingArrow, "homomorphism must assign a value to every arrow");
  }
  std::vector<AbelianElement> table;
  table.reserve(values.size());
  for (ArrowId g : groupoid.arrows()) {
    auto& v = values[idx(g)];
    if (!v) {
      throw Error(Errc::MissingArrow, "no value for arrow '" + groupoid.label(g) + "'", {item(g)});
    }
    table.push_back(target.normalize(std::move(*v)));
  }
  for (ArrowId g : groupoid.arrows()) {
    for (ArrowId h : groupoid.source_fiber(groupoid.target(g))) {
      ArrowId gh = groupoid.compose(g, h);
      if (table[idx(gh)] != target.add(table[idx(g)], table[idx(h)])) {
        throw Error(Errc::NotAdditive,
                    "value at '" + groupoid.label(gh) + "' is not the sum of the values at '" +
                        groupoid.label(g) + "' and '" + groupoid.label(h) + "'",
                    {item(g), item(h)});
      }
    }
  }
  return GroupoidHom(groupoid, target, std::move(table));
}

GroupoidHom make_hom(const FiniteGroupoid& groupoid, const AbelianGroupSig& target,
                     const std::function<AbelianElement(ArrowId)>& value) {
  std::vector<std::optional<AbelianElement>> values;
  values.reserve(groupoid.arrow_count());
  for (ArrowId g : groupoid.arrows()) values.emplace_back(value(g));
  return validate_hom(groupoid, std::move(values), target);
}

GroupoidHom make_scalar_hom(const FiniteGroupoid& groupoid, const AbelianGroupSig& target,
                            const std::function<Gaussian(ArrowId)>& value) {
  return make_hom(groupoid, target, [&](ArrowId g) { return AbelianElement{{value(g)}}; });
}

GroupoidHom zero_hom(const FiniteGroupoid& groupoid, const AbelianGroupSig& target) {
  return make_hom(groupoid, target, [&](ArrowId) { return target.zero(); });
}

GroupoidHom product_hom(std::span<const GroupoidHom> thetas) {
  if (thetas.empty()) throw Error(Errc::EmptyList, "product of an empty family");
  const FiniteGroupoid& groupoid = thetas.front().groupoid();
  std::vector<Component> components;
  for (const GroupoidHom& theta : thetas) {
    if (!(theta.groupoid() == groupoid)) {
      throw Error(Errc::MixedGroupoids, "homomorphisms are defined on different groupoids");
    }
    auto c = theta.target().components();
    components.insert(components.end(), c.begin(), c.end());
  }
  AbelianGroupSig target(std::move(components));
  return make_hom(groupoid, target, [&](ArrowId g) {
    AbelianElement out;
    for (const GroupoidHom& theta : thetas) {
      const auto& parts = theta(g).parts;
      out.parts.insert(out.parts.end(), parts.begin(), parts.end());
    }
    return out;
  });
}

}  // namespace grpd
