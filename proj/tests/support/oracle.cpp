#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::optional<int> Model::compose(int g, int h) const {
  const Arrow& u = arrows[g];
  const Arrow& v = arrows[h];
  if (u.y != v.x) return std::nullopt;
  const int m = modulus[u.block];
  return index.at({u.block, u.x, v.y, (u.a + v.a) % m});
}

int Model::inverse(int g) const {
  const Arrow& u = arrows[g];
  const int m = modulus[u.block];
  return index.at({u.block, u.y, u.x, (m - u.a) % m});
}

int Model::identity_at(int p) const { return index.at({object_block[p], p, p, 0}); }

grpd::RawGroupoid Model::raw() const {
  grpd::RawGroupoid raw;
  const bool principal = std::all_of(modulus.begin(), modulus.end(), [](int m) { return m == 1; });
  for (int p = 0; p < object_count; ++p) raw.object_labels.push_back(std::to_string(p));
  for (const Arrow& a : arrows) {
    std::string label = "(" + std::to_string(a.x) + "," + std::to_string(a.y);
    if (!principal) label += ";" + std::to_string(a.a);
    raw.arrows.push_back({label + ")", static_cast<std::uint32_t>(a.x), static_cast<std::uint32_t>(a.y)});
  }
  for (int g = 0; g < size(); ++g) {
    for (int h = 0; h < size(); ++h) {
      if (auto gh = compose(g, h)) {
        raw.compose.push_back(
            {static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(*gh)});
      }
    }
  }
  return raw;
}

grpd::FiniteGroupoid Model::build() const { return grpd::validate_groupoid(raw()); }

Model make_model(const std::vector<std::pair<int, int>>& blocks, Rng* shuffle) {
  Model m;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const auto [k, mod] = blocks[b];
    const int first = m.object_count;
    m.modulus.push_back(mod);
    for (int i = 0; i < k; ++i) m.object_block.push_back(b);
    m.object_count += k;
    for (int x = first; x < first + k; ++x) {
      for (int y = first; y < first + k; ++y) {
        for (int a = 0; a < mod; ++a) m.arrows.push_back({b, x, y, a});
      }
    }
  }
  if (shuffle) std::shuffle(m.arrows.begin(), m.arrows.end(), *shuffle);
  for (int g = 0; g < m.size(); ++g) {
    const Arrow& a = m.arrows[g];
    m.index[{a.block, a.x, a.y, a.a}] = g;
  }
  return m;
}

Model random_model(Rng& rng, int max_objects, bool principal) {
  std::uniform_int_distribution<int> block_count(1, 3);
  std::uniform_int_distribution<int> mod(1, 3);
  std::vector<std::pair<int, int>> blocks;
  int objects = 0;
  const int wanted = block_count(rng);
  for (int b = 0; b < wanted && objects < max_objects; ++b) {
    std::uniform_int_distribution<int> k(1, std::min(4, max_objects - objects));
    const int size = k(rng);
    blocks.emplace_back(size, principal ? 1 : mod(rng));
    objects += size;
  }
  return make_model(blocks, &rng);
}

Model pair_model(int n) { return make_model({{n, 1}}, nullptr); }

GInt operator+(GInt a, GInt b) { return {a.re + b.re, a.im + b.im}; }
GInt operator-(GInt a, GInt b) { return {a.re - b.re, a.im - b.im}; }
GInt operator*(GInt a, GInt b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GInt conj(GInt a) { return {a.re, -a.im}; }

IntHom random_hom(const Model& m, Rng& rng) {
  std::uniform_int_distribution<long long> small(-3, 3);
  const bool isotropy = std::any_of(m.modulus.begin(), m.modulus.end(), [](int k) { return k > 1; });
  IntHom h;
  h.modulus = isotropy || std::bernoulli_distribution(0.3)(rng) ? 6 : 0;
  std::vector<long long> phi(m.object_count);
  for (auto& v : phi) v = small(rng);
  std::vector<long long> chi(m.modulus.size(), 0);
  if (h.modulus) {
    for (std::size_t b = 0; b < chi.size(); ++b) chi[b] = small(rng) * (6 / m.modulus[b]);
  }
  for (const Arrow& a : m.arrows) {
    long long v = phi[a.x] - phi[a.y] + chi[a.block] * a.a;
    if (h.modulus) v = ((v % h.modulus) + h.modulus) % h.modulus;
    h.values.push_back(v);
  }
  return h;
}

grpd::GroupoidHom to_library(const grpd::FiniteGroupoid& G, const IntHom& h) {
  const auto sig = h.modulus ? grpd::AbelianGroupSig::modular(h.modulus) : grpd::AbelianGroupSig::integers();
  return grpd::make_scalar_hom(G, sig, [&](grpd::ArrowId g) { return grpd::Gaussian(h.values[grpd::idx(g)]); });
}

std::vector<ScalarHom> random_separating_family(const Model& m, Rng& rng, int count, bool complex) {
  std::uniform_int_distribution<long long> small(-2, 2);
  for (;;) {
    std::vector<ScalarHom> family;
    for (int i = 0; i < count; ++i) {
      std::vector<GInt> phi(m.object_count);
      for (auto& v : phi) v = {small(rng), complex ? small(rng) : 0};
      ScalarHom h;
      for (const Arrow& a : m.arrows) h.push_back(phi[a.x] - phi[a.y]);
      family.push_back(std::move(h));
    }
    bool separating = true;
    for (int g = 0; g < m.size() && separating; ++g) {
      if (m.is_identity(g)) continue;
      separating = std::any_of(family.begin(), family.end(), [&](const ScalarHom& h) { return h[g] != GInt{}; });
    }
    if (separating) return family;
  }
}

grpd::GroupoidHom to_library(const grpd::FiniteGroupoid& G, const ScalarHom& h) {
  const bool real = std::all_of(h.begin(), h.end(), [](const GInt& z) { return z.im == 0; });
  const auto sig = real ? grpd::AbelianGroupSig::integers() : grpd::AbelianGroupSig::gaussian();
  return grpd::make_scalar_hom(G, sig, [&](grpd::ArrowId g) {
    const GInt& z = h[grpd::idx(g)];
    return grpd::Gaussian(grpd::Rational(z.re), grpd::Rational(z.im));
  });
}

std::vector<GInt> bihom_table(const Model& m, const std::vector<ScalarHom>& family) {
  const int n = m.size();
  std::vector<GInt> table(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      GInt sum;
      for (const ScalarHom& t : family) sum = sum + t[g] * conj(t[h]);
      table[g * n + h] = sum;
    }
  }
  return table;
}

std::optional<std::array<int, 4>> congruence_violation(const Model& m, const std::vector<int>& labels) {
  const int n = m.size();
  for (int g1 = 0; g1 < n; ++g1) {
    for (int g2 = 0; g2 < n; ++g2) {
      if (labels[g1] != labels[g2]) continue;
      for (int h1 = 0; h1 < n; ++h1) {
        for (int h2 = 0; h2 < n; ++h2) {
          if (labels[h1] != labels[h2]) continue;
          auto a = m.compose(g1, h1);
          auto b = m.compose(g2, h2);
          if (a && b && labels[*a] != labels[*b]) return std::array{g1, g2, h1, h2};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 4>> parallelism_violation(const Model& m, const std::vector<int>& labels) {
  const int n = m.size();
  for (int g1 = 0; g1 < n; ++g1) {
    for (int g2 = 0; g2 < n; ++g2) {
      if (labels[g1] != labels[g2]) continue;
      for (int h1 = 0; h1 < n; ++h1) {
        for (int h2 = 0; h2 < n; ++h2) {
          if (labels[h1] != labels[h2]) continue;
          auto a = m.compose(g1, h2);
          auto b = m.compose(h1, g2);
          if (a && b && labels[*a] != labels[*b]) return std::array{g1, g2, h1, h2};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

int fiber_hits(const Model& m, const std::vector<int>& labels, int g, int p) {
  int hits = 0;
  for (int k = 0; k < m.size(); ++k) hits += m.arrows[k].x == p && labels[k] == labels[g];
  return hits;
}

}  // namespace

std::optional<std::pair<int, int>> incomplete_at(const Model& m, const std::vector<int>& labels) {
  for (int g = 0; g < m.size(); ++g) {
    for (int p = 0; p < m.object_count; ++p) {
      if (fiber_hits(m, labels, g, p) == 0) return std::pair{g, p};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> non_simple_at(const Model& m, const std::vector<int>& labels) {
  for (int g = 0; g < m.size(); ++g) {
    for (int p = 0; p < m.object_count; ++p) {
      if (fiber_hits(m, labels, g, p) > 1) return std::pair{g, p};
    }
  }
  return std::nullopt;
}

bool kernel_trivial(const Model& m, const IntHom& h) {
  for (int g = 0; g < m.size(); ++g) {
    if (h.values[g] == 0 && !m.is_identity(g)) return false;
  }
  return true;
}

std::vector<int> row_classes(const std::vector<GInt>& table, int n) {
  std::vector<std::vector<GInt>> rows;
  for (int g = 0; g < n; ++g) rows.emplace_back(table.begin() + g * n, table.begin() + (g + 1) * n);
  return classes_of(rows);
}

std::vector<int> random_labels(int n, int classes, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, classes - 1);
  std::vector<int> out(n);
  for (auto& v : out) v = pick(rng);
  return out;
}

}  // namespace oracle
