#ifndef GRPD_NORM_HPP
#define GRPD_NORM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "grpd/check.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/partition.hpp"
#include "grpd/scalars.hpp"
#include "grpd/sip.hpp"

namespace grpd {

/// Squared norm per arrow. Whether the square roots form a groupoid norm is
/// a question for validate_norm; construction only fixes the size.
class NormTable {
 public:
  /// Throws Error(MissingArrow) unless there is one value per arrow.
  NormTable(FiniteGroupoid groupoid, std::vector<SqValue> sq);

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  const SqValue& sq(ArrowId g) const { return sq_[idx(g)]; }
  std::span<const SqValue> values() const { return sq_; }

 private:
  FiniteGroupoid groupoid_;
  std::vector<SqValue> sq_;
};

/// ||g||^2 = B(g, g). Throws Error(NotSip) when B is not a semi-inner product.
NormTable norm_from_sip(const Bihom& b);

struct NormReport {
  Check identity_zero;      // ||g|| = 0 exactly on identities; witness (g)
  Check triangle;           // ||gh|| <= ||g|| + ||h||; witness (g, h)
  Check inverse_invariant;  // ||g^-1|| = ||g||; witness (g)
  Check reverse_triangle;   // | ||h|| - ||g|| | <= ||g^-1 h||; witness (g, h)

  bool is_norm() const { return identity_zero.holds && triangle.holds && inverse_invariant.holds; }
  bool holds() const { return is_norm() && reverse_triangle.holds; }
};

/// Every inequality goes through sqrt_leq.
NormReport validate_norm(const NormTable& norm);

struct ConsistencyReport {
  Check class_constant;  // g1 ~ g2 => ||g1|| = ||g2||; witness (g1, g2)
  Check doubling;        // g1 ~ g2, g1g2 defined => ||g1g2|| = 2||g1||; witness (g1, g2)
  /// Composable class-mates (g1, g2) with g1 not an identity. Identity
  /// pairs satisfy doubling trivially once class_constant holds, so the
  /// doubling clause is reported as vacuous when this is zero.
  std::size_t doubling_pairs = 0;

  bool doubling_vacuous() const { return doubling_pairs == 0; }
  bool holds() const { return class_constant.holds && doubling.holds; }
};

ConsistencyReport consistency_check(const NormTable& norm, const Partition& lambda);

struct ParallelogramResult {
  enum class Status : std::uint8_t { Holds, Fails, NoWitness };
  Status status = Status::NoWitness;
  std::size_t witnesses_checked = 0;
  /// First failing (g1, h1, g2, h2).
  Witness violation;
};

/// Enumerates every (g1, h1, g2, h2) with g1, g2 in [g], h1, h2 in [h], g1h1
/// and g2^-1 h2 defined, and tests
///   ||g1h1||^2 + ||g2^-1 h2||^2 = 2||g||^2 + 2||h||^2
/// on each. Holds only when at least one exists and all pass. Throws
/// Error(NotConsistent) unless the norm is lambda-consistent.
ParallelogramResult parallelogram_check(const NormTable& norm, const Partition& lambda, ArrowId g,
                                        ArrowId h);

/// Polarized values where a witness exists.
struct PolarizedTable {
  FiniteGroupoid groupoid;
  std::vector<std::optional<Rational>> values;  // row-major
  std::size_t defined = 0;

  const std::optional<Rational>& at(ArrowId g, ArrowId h) const {
    return values[idx(g) * groupoid.arrow_count() + idx(h)];
  }
  std::size_t total() const { return values.size(); }
  bool complete() const { return defined == values.size(); }
};

/// B(g, h) = (||g1h1||^2 - ||g2^-1 h2||^2) / 4 over every witness, on every
/// pair that has one. Throws NotConsistent, WitnessDisagreement(g, h) when
/// witnesses give different values, ParallelogramFails(g1, h1, g2, h2).
PolarizedTable polarize_partial(const NormTable& norm, const Partition& lambda);

/// Checks on the defined part of a polarized table: each clause only looks at
/// entries that exist.
struct PolarizationReport {
  Check symmetric;          // B(g,h) = B(h,g); witness (g, h)
  Check diagonal;           // B(g,g) = ||g||^2; witness (g)
  Check positive_definite;  // B(g,g) > 0 off identities; witness (g)
  Check cauchy_schwarz;     // B(g,h)^2 <= ||g||^2 ||h||^2; witness (g, h)
  Check additivity;         // B(gh,k) = B(g,k) + B(h,k); witness (g, h, k)
  std::size_t additivity_triples = 0;

  bool holds() const {
    return symmetric.holds && diagonal.holds && positive_definite.holds && cauchy_schwarz.holds &&
           additivity.holds;
  }
};

PolarizationReport check_polarized(const NormTable& norm, const PolarizedTable& table);

/// Total polarization as a real bihomomorphism. Throws NoWitness(g, h) at the
/// first pair without a witness, plus everything polarize_partial throws,
/// and ResultNotSip when the table is not a real semi-inner product whose
/// diagonal is the squared norm.
Bihom polarize(const NormTable& norm, const Partition& lambda);

/// ||h||^2 = |c|^2 ||g||^2 for every h in c.g; witness (h).
Check scale_check(const NormTable& norm, const Bihom& b, const Gaussian& c, ArrowId g);

}  // namespace grpd

#endif  // GRPD_NORM_HPP
