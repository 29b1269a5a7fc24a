#include "grpd/congruence.hpp"

#include <unordered_map>

namespace grpd {

namespace {

// Distinct product classes seen for one ordered pair of classes; two values
// are enough to tell "one" from "several".
struct ProductClasses {
  std::uint32_t first = 0;
  bool several = false;
};

using ClassPairMap = std::unordered_map<std::uint64_t, ProductClasses>;

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

ClassPairMap product_classes(const FiniteGroupoid& G, const Partition& lambda) {
  ClassPairMap out;
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.source_fiber(G.target(g))) {
      std::uint32_t prod = lambda.class_of(G.compose(g, h));
      auto [it, inserted] =
          out.try_emplace(pair_key(lambda.class_of(g), lambda.class_of(h)), ProductClasses{prod});
      if (!inserted && it->second.first != prod) it->second.several = true;
    }
  }
  return out;
}

Witness first_congruence_violation(const FiniteGroupoid& G, const Partition& lambda) {
  for (ArrowId g1 : G.arrows()) {
    for (ArrowId g2 : lambda.class_members(g1)) {
      for (ArrowId h1 : G.source_fiber(G.target(g1))) {
        const std::uint32_t c1 = lambda.class_of(G.compose(g1, h1));
        for (ArrowId h2 : lambda.class_members(h1)) {
          if (!G.composable(g2, h2)) continue;
          if (lambda.class_of(G.compose(g2, h2)) != c1) {
            return {item(g1), item(g2), item(h1), item(h2)};
          }
        }
      }
    }
  }
  return {};
}

Witness first_parallelism_violation(const FiniteGroupoid& G, const Partition& lambda) {
  for (ArrowId g1 : G.arrows()) {
    for (ArrowId g2 : lambda.class_members(g1)) {
      for (ArrowId h1 : G.target_fiber(G.source(g2))) {
        const std::uint32_t c1 = lambda.class_of(G.compose(h1, g2));
        for (ArrowId h2 : lambda.class_members(h1)) {
          if (!G.composable(g1, h2)) continue;
          if (lambda.class_of(G.compose(g1, h2)) != c1) {
            return {item(g1), item(g2), item(h1), item(h2)};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

AffineCongruenceReport validate_affine_congruence(const FiniteGroupoid& G, const Partition& lambda) {
  if (lambda.arrow_count() != G.arrow_count()) {
    throw Error(Errc::MissingArrow, "partition does not cover the arrows of the groupoid");
  }
  // Class-pair summary first; the ordered scans only run to locate the first
  // witness once a violation is known to exist.
  const ClassPairMap products = product_classes(G, lambda);

  bool congruence_broken = false;
  bool parallelism_broken = false;
  for (const auto& [key, cd] : products) {
    if (cd.several) congruence_broken = true;
    auto c = static_cast<std::uint32_t>(key >> 32);
    auto d = static_cast<std::uint32_t>(key & 0xffffffffu);
    auto dc = products.find(pair_key(d, c));
    if (dc == products.end()) continue;
    if (cd.several || dc->second.several || cd.first != dc->second.first) parallelism_broken = true;
  }

  AffineCongruenceReport report;
  if (congruence_broken) {
    report.congruence = Check::fail(first_congruence_violation(G, lambda),
                                    "g1h1 and g2h2 fall in different classes");
  }
  if (parallelism_broken) {
    report.parallelism = Check::fail(first_parallelism_violation(G, lambda),
                                     "g1h2 and h1g2 fall in different classes");
  }
  return report;
}

CongruenceProfile profile_unchecked(const FiniteGroupoid& G, const Partition& lambda) {
  // hits[c * |M| + p] = |[c] intersected with G_p|
  const std::size_t n_obj = G.object_count();
  std::vector<std::uint32_t> hits(lambda.class_count() * n_obj, 0);
  for (ArrowId g : G.arrows()) ++hits[lambda.class_of(g) * n_obj + idx(G.source(g))];

  CongruenceProfile profile;
  for (ArrowId g : G.arrows()) {
    const std::size_t row = lambda.class_of(g) * n_obj;
    for (ObjectId p : G.objects()) {
      const std::uint32_t n = hits[row + idx(p)];
      if (n == 0 && profile.complete.holds) {
        profile.complete = Check::fail({item(g), item(p)}, "class meets no arrow leaving the object");
      }
      if (n > 1 && profile.simple.holds) {
        profile.simple = Check::fail({item(g), item(p)}, "class meets the object's fiber twice");
      }
    }
    if (!profile.complete.holds && !profile.simple.holds) break;
  }
  return profile;
}

CongruenceProfile congruence_profile(const FiniteGroupoid& G, const Partition& lambda) {
  auto axioms = validate_affine_congruence(G, lambda);
  if (!axioms.holds()) {
    const Check& bad = axioms.congruence.holds ? axioms.parallelism : axioms.congruence;
    throw Error(Errc::NotACongruence, "relation is not an affine congruence", bad.witness);
  }
  return profile_unchecked(G, lambda);
}

std::vector<ArrowId> class_at(const FiniteGroupoid& G, const Partition& lambda, ArrowId g,
                              ObjectId p) {
  std::vector<ArrowId> out;
  for (ArrowId h : lambda.class_members(g)) {
    if (G.source(h) == p) out.push_back(h);
  }
  return out;
}

Partition congruence_from_hom(const GroupoidHom& theta) {
  return Partition::by_key(
      theta.groupoid().arrow_count(), [&](ArrowId g) { return theta(g); }, ElementLess{});
}

MonomorphismResult is_monomorphism(const GroupoidHom& theta) {
  const FiniteGroupoid& G = theta.groupoid();
  for (ArrowId g : G.arrows()) {
    if (!G.is_identity(g) && theta.target().is_zero(theta(g))) return {false, g};
  }
  return {};
}

}  // namespace grpd
