#include "grpd/sip.hpp"

#include <algorithm>

namespace grpd {

namespace {

int compare(const Rational& a, const Rational& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// Lexicographic comparison of two rows restricted to `columns`.
struct RowLess {
  const Bihom* b;
  std::span<const ArrowId> columns;

  bool operator()(ArrowId x, ArrowId y) const {
    for (ArrowId h : columns) {
      const Gaussian& u = (*b)(x, h);
      const Gaussian& v = (*b)(y, h);
      if (int c = compare(u.re, v.re)) return c < 0;
      if (int c = compare(u.im, v.im)) return c < 0;
    }
    return false;
  }
};

std::vector<ArrowId> all_arrows(const FiniteGroupoid& G) {
  std::vector<ArrowId> out;
  out.reserve(G.arrow_count());
  for (ArrowId g : G.arrows()) out.push_back(g);
  return out;
}

Partition rows_on(const Bihom& b, std::span<const ArrowId> columns) {
  return Partition::by_key(
      b.groupoid().arrow_count(), [](ArrowId g) { return g; }, RowLess{&b, columns});
}

bool row_is_zero_on(const Bihom& b, ArrowId g, std::span<const ArrowId> columns) {
  return std::all_of(columns.begin(), columns.end(), [&](ArrowId h) { return b(g, h).is_zero(); });
}

}  // namespace

Bihom validate_bihom(const FiniteGroupoid& G, std::vector<Gaussian> table,
                     std::optional<FieldTag> field) {
  const std::size_t n = G.arrow_count();
  if (table.size() != n * n) {
    throw Error(Errc::MissingArrow, "table must hold one entry per ordered pair of arrows");
  }
  const bool all_real =
      std::all_of(table.begin(), table.end(), [](const Gaussian& z) { return z.is_real(); });
  if (field == FieldTag::Real && !all_real) {
    for (ArrowId g : G.arrows()) {
      for (ArrowId h : G.arrows()) {
        if (!table[idx(g) * n + idx(h)].is_real()) {
          throw Error(Errc::BadTarget, "real table has a non-real entry", {item(g), item(h)});
        }
      }
    }
  }
  Bihom b(G, field.value_or(all_real ? FieldTag::Real : FieldTag::Complex), std::move(table));

  for (int slot = 1; slot <= 2; ++slot) {
    for (ArrowId g : G.arrows()) {
      for (ArrowId h : G.source_fiber(G.target(g))) {
        const ArrowId gh = G.compose(g, h);
        for (ArrowId k : G.arrows()) {
          const bool ok = slot == 1 ? b(gh, k) == b(g, k) + b(h, k) : b(k, gh) == b(k, g) + b(k, h);
          if (!ok) {
            throw Error(Errc::NotBihom,
                        "slot " + std::to_string(slot) + " additivity fails at ('" + G.label(g) +
                            "', '" + G.label(h) + "', '" + G.label(k) + "')",
                        {item(g), item(h), item(k)});
          }
        }
      }
    }
  }
  return b;
}

Bihom sip_from_thetas(std::span<const GroupoidHom> thetas) {
  if (thetas.empty()) throw Error(Errc::EmptyList, "need at least one homomorphism");
  const FiniteGroupoid& G = thetas.front().groupoid();
  bool real = true;
  for (const GroupoidHom& theta : thetas) {
    if (!(theta.groupoid() == G)) {
      throw Error(Errc::MixedGroupoids, "homomorphisms are defined on different groupoids");
    }
    if (!theta.target().is_scalar()) {
      throw Error(Errc::BadTarget, "homomorphism into " + theta.target().str() + " is not scalar valued");
    }
    for (ArrowId g : G.arrows()) real = real && theta.scalar(g).is_real();
  }
  for (ArrowId g : G.arrows()) {
    if (G.is_identity(g)) continue;
    if (std::all_of(thetas.begin(), thetas.end(), [&](const GroupoidHom& t) { return t.scalar(g).is_zero(); })) {
      throw Error(Errc::NotSeparating,
                  "every homomorphism vanishes on the non-identity arrow '" + G.label(g) + "'",
                  {item(g)});
    }
  }
  const std::size_t n = G.arrow_count();
  std::vector<Gaussian> table(n * n);
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.arrows()) {
      Gaussian sum;
      for (const GroupoidHom& theta : thetas) sum += theta.scalar(g) * conj(theta.scalar(h));
      table[idx(g) * n + idx(h)] = std::move(sum);
    }
  }
  return validate_bihom(G, std::move(table), real ? FieldTag::Real : FieldTag::Complex);
}

SipReport validate_sip(const Bihom& b) {
  const FiniteGroupoid& G = b.groupoid();
  SipReport report;
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.arrows()) {
      if (b(g, h) != conj(b(h, g))) {
        report.conjugate_symmetric =
            Check::fail({item(g), item(h)}, "B(g,h) is not the conjugate of B(h,g)");
        break;
      }
    }
    if (!report.conjugate_symmetric) break;
  }
  for (ArrowId g : G.arrows()) {
    if (G.is_identity(g)) continue;
    const Gaussian& d = b(g, g);
    if (!d.is_real() || d.re.sign() <= 0) {
      report.positive_definite = Check::fail(
          {item(g)}, d.is_real() ? "B(g,g) <= 0 on a non-identity arrow" : "B(g,g) is not real");
      break;
    }
  }
  auto usable_diagonal = [&](ArrowId g) { return b(g, g).is_real() && b(g, g).re.sign() >= 0; };
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.arrows()) {
      bool ok = usable_diagonal(g) && usable_diagonal(h) &&
                abs_sq(b(g, h)).value() <= b(g, g).re * b(h, h).re;
      if (!ok) {
        report.cauchy_schwarz = Check::fail({item(g), item(h)}, "|B(g,h)|^2 > B(g,g) B(h,h)");
        break;
      }
    }
    if (!report.cauchy_schwarz) break;
  }
  return report;
}

BRelation b_relate(const Bihom& b, ArrowId g1, ArrowId g2) {
  BRelation rel;
  auto r1 = b.row(g1);
  auto r2 = b.row(g2);
  rel.congruent = std::equal(r1.begin(), r1.end(), r2.begin());
  rel.opposite = std::equal(r1.begin(), r1.end(), r2.begin(),
                            [](const Gaussian& x, const Gaussian& y) { return x == -y; });
  rel.orthogonal = b(g1, g2).is_zero();
  return rel;
}

Partition b_congruence(const Bihom& b) {
  const auto columns = all_arrows(b.groupoid());
  return rows_on(b, columns);
}

Check opposite_twice_is_congruent(const Bihom& b) {
  const FiniteGroupoid& G = b.groupoid();
  const Partition rows = b_congruence(b);
  // opposite[c]: some arrow whose row negates the rows of class c.
  std::vector<std::optional<ArrowId>> opposite(rows.class_count());
  for (std::uint32_t c = 0; c < rows.class_count(); ++c) {
    const ArrowId rep = rows.members(c).front();
    for (std::uint32_t d = 0; d < rows.class_count(); ++d) {
      if (b_relate(b, rep, rows.members(d).front()).opposite) {
        opposite[c] = rows.members(d).front();
        break;
      }
    }
  }
  for (ArrowId g1 : G.arrows()) {
    const auto& o2 = opposite[rows.class_of(g1)];
    if (!o2) continue;
    for (ArrowId g2 : rows.class_members(*o2)) {
      const auto& o3 = opposite[rows.class_of(g2)];
      if (!o3) continue;
      for (ArrowId g3 : rows.class_members(*o3)) {
        if (!rows.related(g1, g3)) {
          return Check::fail({item(g1), item(g2), item(g3)}, "g1 and g3 have different rows");
        }
      }
    }
  }
  return Check::pass();
}

BPartitionReport b_partition(const Bihom& b) {
  const FiniteGroupoid& G = b.groupoid();
  Partition partition = b_congruence(b);
  auto axioms = validate_affine_congruence(G, partition);
  auto profile = profile_unchecked(G, partition);
  const bool affine = profile.complete.holds && validate_sip(b).is_sip();
  return {std::move(partition), std::move(axioms), std::move(profile), affine};
}

std::optional<bool> kronecker_agreement(std::span<const GroupoidHom> thetas, const Bihom& b) {
  const FiniteGroupoid& G = b.groupoid();
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    bool found = false;
    for (ArrowId h : G.arrows()) {
      bool delta = true;
      for (std::size_t i = 0; i < thetas.size() && delta; ++i) {
        delta = thetas[i].scalar(h) == Gaussian(i == j ? 1 : 0);
      }
      if (delta) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return b_congruence(b) == congruence_from_hom(product_hom(thetas));
}

std::vector<ArrowId> scalar_set(const Bihom& b, const Gaussian& c, ArrowId g, std::optional<ObjectId> at) {
  const FiniteGroupoid& G = b.groupoid();
  std::vector<Gaussian> scaled;
  scaled.reserve(G.arrow_count());
  for (const Gaussian& z : b.row(g)) scaled.push_back(c * z);

  std::vector<ArrowId> out;
  auto consider = [&](ArrowId k) {
    auto row = b.row(k);
    if (std::equal(row.begin(), row.end(), scaled.begin())) out.push_back(k);
  };
  if (at) {
    for (ArrowId k : G.source_fiber(*at)) consider(k);
  } else {
    for (ArrowId k : G.arrows()) consider(k);
  }
  return out;
}

Check scalar_set_at_most_one_per_fiber(const Bihom& b, std::span<const ArrowId> members) {
  const FiniteGroupoid& G = b.groupoid();
  std::vector<std::optional<ArrowId>> seen(G.object_count());
  for (ArrowId k : members) {
    auto& slot = seen[idx(G.source(k))];
    if (slot) return Check::fail({item(*slot), item(k)}, "two members share a source");
    slot = k;
  }
  return Check::pass();
}

Check conjugate_scalar_law(const Bihom& b, const Gaussian& c, ArrowId h) {
  const FiniteGroupoid& G = b.groupoid();
  const Gaussian cbar = conj(c);
  for (ArrowId k : scalar_set(b, c, h)) {
    for (ArrowId g : G.arrows()) {
      if (b(g, k) != cbar * b(g, h)) {
        return Check::fail({item(g), item(k)}, "B(g,k) != conj(c) B(g,h)");
      }
    }
  }
  return Check::pass();
}

TransitivePropsReport transitive_props_check(const Bihom& b) {
  const FiniteGroupoid& G = b.groupoid();
  TransitivePropsReport report;
  if (!G.is_transitive()) return report;
  report.applicable = true;

  const auto everything = all_arrows(G);
  for (ArrowId g : G.arrows()) {
    const bool zero_row = row_is_zero_on(b, g, everything);
    for (ObjectId p : G.objects()) {
      if (!zero_row && row_is_zero_on(b, g, G.source_fiber(p))) {
        report.vanishing_rows =
            Check::fail({item(g), item(p)}, "row vanishes on the fiber but not everywhere");
        break;
      }
    }
    if (!report.vanishing_rows) break;
  }

  const Partition global = b_congruence(b);
  for (ObjectId s : G.objects()) {
    const Partition local = rows_on(b, G.source_fiber(s));
    if (local == global) continue;
    Witness w{item(s)};
    for (ArrowId g1 : G.arrows()) {
      for (ArrowId g2 : local.class_members(g1)) {
        if (idx(g2) > idx(g1) && !global.related(g1, g2)) {
          w.push_back(item(g1));
          w.push_back(item(g2));
          break;
        }
      }
      if (w.size() > 1) break;
    }
    report.fiber_congruence = Check::fail(std::move(w), "rows agree on the fiber but differ elsewhere");
    break;
  }
  return report;
}

}  // namespace grpd
