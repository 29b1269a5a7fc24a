#include "grpd/families.hpp"

#include <string>

namespace grpd {

namespace {

void require_size(std::size_t n, const char* what) {
  if (n == 0) throw Error(Errc::BadParams, std::string(what) + " needs size >= 1");
}

void require_fits(std::size_t objects, std::size_t arrows, const Limits& limits) {
  if (objects > limits.max_objects || arrows > limits.max_arrows) {
    throw Error(Errc::BadParams, std::to_string(objects) + " objects / " + std::to_string(arrows) +
                                     " arrows exceed the configured caps");
  }
}

std::string pair_label(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

// Pair groupoid over the given object labels: arrow (x,y) has index x*n+y.
RawGroupoid pair_tables(const std::vector<std::string>& objects) {
  const auto n = static_cast<std::uint32_t>(objects.size());
  RawGroupoid raw;
  raw.object_labels = objects;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) raw.arrows.push_back({pair_label(objects[x], objects[y]), x, y});
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) raw.compose.push_back({x * n + y, y * n + z, x * n + z});
    }
  }
  return raw;
}

}  // namespace

GeneratedFamily pair_groupoid(std::size_t n, const Limits& limits) {
  require_size(n, "pair");
  require_fits(n, n * n, limits);
  std::vector<std::string> objects;
  for (std::size_t x = 0; x < n; ++x) objects.push_back(std::to_string(x));
  FiniteGroupoid G = validate_groupoid(pair_tables(objects), limits);
  auto theta = make_scalar_hom(G, AbelianGroupSig::integers(), [&](ArrowId g) {
    return Gaussian(Rational(idx(G.source(g))) - Rational(idx(G.target(g))));
  });
  return {G, {theta}};
}

GeneratedFamily group_groupoid(const std::vector<std::vector<std::uint32_t>>& cayley,
                               const Limits& limits) {
  const auto n = static_cast<std::uint32_t>(cayley.size());
  require_size(n, "group");
  require_fits(1, n, limits);
  RawGroupoid raw;
  raw.object_labels = {"*"};
  for (std::uint32_t a = 0; a < n; ++a) raw.arrows.push_back({std::to_string(a), 0, 0});
  for (std::uint32_t a = 0; a < n; ++a) {
    if (cayley[a].size() != n) throw Error(Errc::BadParams, "Cayley table must be square");
    for (std::uint32_t b = 0; b < n; ++b) {
      if (cayley[a][b] >= n) throw Error(Errc::BadParams, "Cayley table entry out of range");
      raw.compose.push_back({a, b, cayley[a][b]});
    }
  }
  try {
    return {validate_groupoid(raw, limits), {}};
  } catch (const Error& e) {
    throw Error(Errc::BadParams, std::string("Cayley table is not a group: ") + e.what());
  }
}

GeneratedFamily cyclic_group(std::size_t n, const Limits& limits) {
  require_size(n, "group");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<std::uint32_t>((a + b) % n);
  }
  GeneratedFamily family = group_groupoid(table, limits);
  if (n >= 2) {
    const FiniteGroupoid& G = family.groupoid;
    family.canonical_homs.push_back(make_scalar_hom(
        G, AbelianGroupSig::modular(static_cast<std::uint32_t>(n)), [](ArrowId g) { return Gaussian(idx(g)); }));
  }
  return family;
}

GeneratedFamily affine_cyclic(std::size_t n, const Limits& limits) {
  require_size(n, "affine_cyclic");
  require_fits(n, n * n, limits);
  const auto m = static_cast<std::uint32_t>(n);
  RawGroupoid raw;
  for (std::uint32_t p = 0; p < m; ++p) raw.object_labels.push_back(std::to_string(p));
  for (std::uint32_t p = 0; p < m; ++p) {
    for (std::uint32_t v = 0; v < m; ++v) {
      raw.arrows.push_back({pair_label(std::to_string(p), std::to_string(v)), p, (p + v) % m});
    }
  }
  for (std::uint32_t p = 0; p < m; ++p) {
    for (std::uint32_t v = 0; v < m; ++v) {
      const std::uint32_t q = (p + v) % m;
      for (std::uint32_t w = 0; w < m; ++w) raw.compose.push_back({p * m + v, q * m + w, p * m + (v + w) % m});
    }
  }
  FiniteGroupoid G = validate_groupoid(raw, limits);
  auto sig = m >= 2 ? AbelianGroupSig::modular(m) : AbelianGroupSig::integers();
  auto theta = make_scalar_hom(G, sig, [m](ArrowId g) { return Gaussian(idx(g) % m); });
  return {G, {theta}};
}

GeneratedFamily complex_pair(std::size_t n, const Limits& limits) {
  require_size(n, "complex_pair");
  const std::size_t objects = n * n;
  require_fits(objects, objects * objects, limits);
  std::vector<std::string> labels;
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = 0; x2 < n; ++x2) labels.push_back(pair_label(std::to_string(x1), std::to_string(x2)));
  }
  FiniteGroupoid G = validate_groupoid(pair_tables(labels), limits);
  auto coord = [&G, n](ArrowId g, bool second) {
    const std::uint32_t x = idx(G.source(g));
    const std::uint32_t y = idx(G.target(g));
    const auto w = static_cast<std::uint32_t>(n);
    return second ? Rational(x % w) - Rational(y % w) : Rational(x / w) - Rational(y / w);
  };
  auto gaussian = make_scalar_hom(G, AbelianGroupSig::gaussian(),
                                  [&](ArrowId g) { return Gaussian(coord(g, false), coord(g, true)); });
  auto first = make_scalar_hom(G, AbelianGroupSig::integers(), [&](ArrowId g) { return Gaussian(coord(g, false)); });
  auto second = make_scalar_hom(G, AbelianGroupSig::integers(), [&](ArrowId g) { return Gaussian(coord(g, true)); });
  return {G, {gaussian, first, second}};
}

GeneratedFamily generate(std::string_view kind, std::size_t size, const Limits& limits) {
  if (kind == "pair") return pair_groupoid(size, limits);
  if (kind == "group") return cyclic_group(size, limits);
  if (kind == "affine_cyclic") return affine_cyclic(size, limits);
  if (kind == "complex_pair") return complex_pair(size, limits);
  throw Error(Errc::BadParams, "unknown family '" + std::string(kind) + "'");
}

}  // namespace grpd
