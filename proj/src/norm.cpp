#include "grpd/norm.hpp"

#include <algorithm>

namespace grpd {

NormTable::NormTable(FiniteGroupoid groupoid, std::vector<SqValue> sq)
    : groupoid_(std::move(groupoid)), sq_(std::move(sq)) {
  if (sq_.size() != groupoid_.arrow_count()) {
    throw Error(Errc::MissingArrow, "norm table must hold one value per arrow");
  }
}

NormTable norm_from_sip(const Bihom& b) {
  const SipReport report = validate_sip(b);
  if (!report.is_sip()) {
    const Check& bad = !report.conjugate_symmetric ? report.conjugate_symmetric
                       : !report.positive_definite ? report.positive_definite
                                                   : report.cauchy_schwarz;
    throw Error(Errc::NotSip, "bihomomorphism is not a semi-inner product: " + bad.detail, bad.witness);
  }
  std::vector<SqValue> sq;
  sq.reserve(b.groupoid().arrow_count());
  for (ArrowId g : b.groupoid().arrows()) sq.emplace_back(b(g, g).re);
  return NormTable(b.groupoid(), std::move(sq));
}

NormReport validate_norm(const NormTable& norm) {
  const FiniteGroupoid& G = norm.groupoid();
  NormReport report;
  for (ArrowId g : G.arrows()) {
    if (norm.sq(g).is_zero() != G.is_identity(g)) {
      report.identity_zero = Check::fail(
          {item(g)}, G.is_identity(g) ? "identity with nonzero norm" : "non-identity with zero norm");
      break;
    }
  }
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.source_fiber(G.target(g))) {
      if (!sqrt_leq(norm.sq(G.compose(g, h)), norm.sq(g), norm.sq(h))) {
        report.triangle = Check::fail({item(g), item(h)}, "||gh|| > ||g|| + ||h||");
        break;
      }
    }
    if (!report.triangle) break;
  }
  for (ArrowId g : G.arrows()) {
    if (norm.sq(G.inverse_of(g)) != norm.sq(g)) {
      report.inverse_invariant = Check::fail({item(g)}, "||g^-1|| != ||g||");
      break;
    }
  }
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.source_fiber(G.source(g))) {
      const SqValue& d = norm.sq(G.compose(G.inverse_of(g), h));
      if (!sqrt_leq(norm.sq(h), norm.sq(g), d) || !sqrt_leq(norm.sq(g), norm.sq(h), d)) {
        report.reverse_triangle = Check::fail({item(g), item(h)}, "| ||h|| - ||g|| | > ||g^-1 h||");
        break;
      }
    }
    if (!report.reverse_triangle) break;
  }
  return report;
}

ConsistencyReport consistency_check(const NormTable& norm, const Partition& lambda) {
  const FiniteGroupoid& G = norm.groupoid();
  ConsistencyReport report;
  for (ArrowId g1 : G.arrows()) {
    for (ArrowId g2 : lambda.class_members(g1)) {
      if (idx(g2) > idx(g1) && norm.sq(g1) != norm.sq(g2)) {
        report.class_constant = Check::fail({item(g1), item(g2)}, "class-mates with different norms");
        break;
      }
    }
    if (!report.class_constant) break;
  }
  const Rational four(4);
  for (ArrowId g1 : G.arrows()) {
    for (ArrowId g2 : lambda.class_members(g1)) {
      if (!G.composable(g1, g2)) continue;
      if (!G.is_identity(g1)) ++report.doubling_pairs;
      if (report.doubling &&
          norm.sq(G.compose(g1, g2)).value() != four * norm.sq(g1).value()) {
        report.doubling = Check::fail({item(g1), item(g2)}, "||g1 g2|| != 2||g1||");
      }
    }
  }
  return report;
}

namespace {

struct Quad {
  ArrowId g1, h1, g2, h2;
};

// All witness quadruples for (g, h), ordered by (g1, h1, g2, h2).
template <class Visit>
std::size_t for_each_quad(const FiniteGroupoid& G, const Partition& lambda, ArrowId g, ArrowId h,
                          Visit&& visit) {
  std::vector<std::pair<ArrowId, ArrowId>> forward;   // g1 h1 defined
  std::vector<std::pair<ArrowId, ArrowId>> backward;  // g2^-1 h2 defined
  for (ArrowId a : lambda.class_members(g)) {
    for (ArrowId b : lambda.class_members(h)) {
      if (G.target(a) == G.source(b)) forward.emplace_back(a, b);
      if (G.source(a) == G.source(b)) backward.emplace_back(a, b);
    }
  }
  std::size_t count = 0;
  for (const auto& [g1, h1] : forward) {
    for (const auto& [g2, h2] : backward) {
      ++count;
      if (!visit(Quad{g1, h1, g2, h2})) return count;
    }
  }
  return count;
}

SqValue sq_forward(const NormTable& N, const Quad& q) {
  return N.sq(N.groupoid().compose(q.g1, q.h1));
}

SqValue sq_backward(const NormTable& N, const Quad& q) {
  const FiniteGroupoid& G = N.groupoid();
  return N.sq(G.compose(G.inverse_of(q.g2), q.h2));
}

Witness quad_witness(const Quad& q) { return {item(q.g1), item(q.h1), item(q.g2), item(q.h2)}; }

ParallelogramResult parallelogram_unchecked(const NormTable& N, const Partition& lambda, ArrowId g,
                                            ArrowId h) {
  const Rational rhs = Rational(2) * N.sq(g).value() + Rational(2) * N.sq(h).value();
  ParallelogramResult result;
  result.witnesses_checked = for_each_quad(N.groupoid(), lambda, g, h, [&](const Quad& q) {
    if (sq_forward(N, q).value() + sq_backward(N, q).value() != rhs) {
      result.violation = quad_witness(q);
      return false;
    }
    return true;
  });
  if (result.witnesses_checked == 0) {
    result.status = ParallelogramResult::Status::NoWitness;
  } else {
    result.status = result.violation.empty() ? ParallelogramResult::Status::Holds
                                             : ParallelogramResult::Status::Fails;
  }
  return result;
}

void require_consistent(const NormTable& N, const Partition& lambda) {
  auto report = consistency_check(N, lambda);
  if (!report.holds()) {
    const Check& bad = report.class_constant.holds ? report.doubling : report.class_constant;
    throw Error(Errc::NotConsistent, "norm is not consistent with the relation: " + bad.detail,
                bad.witness);
  }
}

}  // namespace

ParallelogramResult parallelogram_check(const NormTable& norm, const Partition& lambda, ArrowId g,
                                        ArrowId h) {
  require_consistent(norm, lambda);
  return parallelogram_unchecked(norm, lambda, g, h);
}

PolarizedTable polarize_partial(const NormTable& norm, const Partition& lambda) {
  require_consistent(norm, lambda);
  const FiniteGroupoid& G = norm.groupoid();
  const std::size_t n = G.arrow_count();
  PolarizedTable table{G, std::vector<std::optional<Rational>>(n * n), 0};
  const Rational quarter = Rational(1) / Rational(4);

  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.arrows()) {
      std::optional<Rational> value;
      for_each_quad(G, lambda, g, h, [&](const Quad& q) {
        Rational v = quarter * (sq_forward(norm, q).value() - sq_backward(norm, q).value());
        if (value && *value != v) {
          throw Error(Errc::WitnessDisagreement,
                      "witnesses give " + value->str() + " and " + v.str() + " for ('" + G.label(g) +
                          "', '" + G.label(h) + "')",
                      {item(g), item(h)});
        }
        value = std::move(v);
        return true;
      });
      if (!value) continue;
      auto parallelogram = parallelogram_unchecked(norm, lambda, g, h);
      if (parallelogram.status == ParallelogramResult::Status::Fails) {
        throw Error(Errc::ParallelogramFails,
                    "parallelogram identity fails for ('" + G.label(g) + "', '" + G.label(h) + "')",
                    parallelogram.violation);
      }
      table.values[idx(g) * n + idx(h)] = std::move(value);
      ++table.defined;
    }
  }
  return table;
}

PolarizationReport check_polarized(const NormTable& norm, const PolarizedTable& table) {
  const FiniteGroupoid& G = norm.groupoid();
  PolarizationReport report;
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.arrows()) {
      const auto& gh = table.at(g, h);
      const auto& hg = table.at(h, g);
      if (report.symmetric && gh && hg && *gh != *hg) {
        report.symmetric = Check::fail({item(g), item(h)}, "B(g,h) != B(h,g)");
      }
      if (report.cauchy_schwarz && gh &&
          *gh * *gh > norm.sq(g).value() * norm.sq(h).value()) {
        report.cauchy_schwarz = Check::fail({item(g), item(h)}, "B(g,h)^2 > ||g||^2 ||h||^2");
      }
    }
  }
  for (ArrowId g : G.arrows()) {
    const auto& d = table.at(g, g);
    if (!d) continue;
    if (report.diagonal && *d != norm.sq(g).value()) {
      report.diagonal = Check::fail({item(g)}, "B(g,g) != ||g||^2");
    }
    if (report.positive_definite && !G.is_identity(g) && d->sign() <= 0) {
      report.positive_definite = Check::fail({item(g)}, "B(g,g) <= 0 off the identities");
    }
  }
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.source_fiber(G.target(g))) {
      const ArrowId gh = G.compose(g, h);
      for (ArrowId k : G.arrows()) {
        const auto& a = table.at(gh, k);
        const auto& b = table.at(g, k);
        const auto& c = table.at(h, k);
        if (!a || !b || !c) continue;
        ++report.additivity_triples;
        if (report.additivity && *a != *b + *c) {
          report.additivity = Check::fail({item(g), item(h), item(k)}, "B(gh,k) != B(g,k) + B(h,k)");
        }
      }
    }
  }
  return report;
}

Bihom polarize(const NormTable& norm, const Partition& lambda) {
  const FiniteGroupoid& G = norm.groupoid();
  PolarizedTable table = polarize_partial(norm, lambda);
  if (!table.complete()) {
    for (ArrowId g : G.arrows()) {
      for (ArrowId h : G.arrows()) {
        if (!table.at(g, h)) {
          throw Error(Errc::NoWitness,
                      "no witness quadruple for ('" + G.label(g) + "', '" + G.label(h) + "')",
                      {item(g), item(h)});
        }
      }
    }
  }
  std::vector<Gaussian> entries;
  entries.reserve(table.values.size());
  for (auto& v : table.values) entries.emplace_back(std::move(*v));

  std::optional<Bihom> b;
  try {
    b = validate_bihom(G, std::move(entries), FieldTag::Real);
  } catch (const Error& e) {
    throw Error(Errc::ResultNotSip, std::string("polarized table is not additive: ") + e.what(), e.witness());
  }
  const SipReport sip = validate_sip(*b);
  if (!sip.is_sip()) {
    const Check& bad = !sip.conjugate_symmetric ? sip.conjugate_symmetric
                       : !sip.positive_definite ? sip.positive_definite
                                                : sip.cauchy_schwarz;
    throw Error(Errc::ResultNotSip, "polarized table is not a semi-inner product: " + bad.detail, bad.witness);
  }
  for (ArrowId g : G.arrows()) {
    if ((*b)(g, g).re != norm.sq(g).value()) {
      throw Error(Errc::ResultNotSip, "polarized diagonal differs from the squared norm", {item(g)});
    }
  }
  return std::move(*b);
}

Check scale_check(const NormTable& norm, const Bihom& b, const Gaussian& c, ArrowId g) {
  const Rational expected = abs_sq(c).value() * norm.sq(g).value();
  for (ArrowId h : scalar_set(b, c, g)) {
    if (norm.sq(h).value() != expected) return Check::fail({item(h)}, "||h|| != |c| ||g||");
  }
  return Check::pass();
}

}  // namespace grpd
