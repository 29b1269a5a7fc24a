#include <doctest.h>

#include "grpd/congruence.hpp"
#include "grpd/families.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace grpd;
using testing::arr;
using testing::arrow;
using testing::arrows;
using testing::obj;
using testing::object;
using testing::partition_of;
using testing::same_relation;

namespace {

// Labels follow the fixture: e0, e1, a = (0,1), b = (1,0).
FiniteGroupoid p2() {
  RawGroupoid raw;
  raw.object_labels = {"0", "1"};
  raw.arrows = {{"e0", 0, 0}, {"e1", 1, 1}, {"a", 0, 1}, {"b", 1, 0}};
  raw.compose = {{0, 0, 0}, {0, 2, 2}, {1, 1, 1}, {1, 3, 3}, {2, 1, 2}, {2, 3, 0}, {3, 0, 3}, {3, 2, 1}};
  return validate_groupoid(raw);
}

GroupoidHom int_hom(const FiniteGroupoid& G, std::vector<long long> values) {
  return make_scalar_hom(G, AbelianGroupSig::integers(), [&](ArrowId g) { return Gaussian(values[idx(g)]); });
}

Errc hom_error(const FiniteGroupoid& G, std::vector<std::optional<AbelianElement>> values,
               const AbelianGroupSig& sig, Witness* w = nullptr) {
  try {
    validate_hom(G, std::move(values), sig);
  } catch (const Error& e) {
    if (w) *w = e.witness();
    return e.code();
  }
  FAIL("expected an error");
  return Errc::SchemaError;
}

AbelianElement el(long long v) { return {{Gaussian(v)}}; }

Witness to_witness(const std::array<int, 4>& t) { return arrows({t[0], t[1], t[2], t[3]}); }

}  // namespace

TEST_CASE("homomorphism validation") {
  const FiniteGroupoid G = p2();
  CHECK_NOTHROW(int_hom(G, {0, 0, -1, 1}));
  CHECK_NOTHROW(zero_hom(G, AbelianGroupSig::integers()));

  Witness w;
  CHECK(hom_error(G, {el(0), el(0), el(1), el(1)}, AbelianGroupSig::integers(), &w) == Errc::NotAdditive);
  CHECK(w == arrows({2, 3}));

  CHECK(hom_error(G, {el(0), el(0), el(-1), std::nullopt}, AbelianGroupSig::integers(), &w) == Errc::MissingArrow);
  CHECK(w == arrows({3}));

  const AbelianElement half{{Gaussian(Rational(mpz_class(1), mpz_class(2)))}};
  CHECK(hom_error(G, {el(0), el(0), half, half}, AbelianGroupSig::integers()) == Errc::BadTarget);
  const GroupoidHom mod3 = validate_hom(G, {el(0), el(0), el(4), el(2)}, AbelianGroupSig::modular(3));
  CHECK(mod3.scalar(arrow(G, "a")) == Gaussian(1));
}

TEST_CASE("modular targets reduce values") {
  const auto a3 = affine_cyclic(3);
  const GroupoidHom& theta = a3.canonical_homs.front();
  CHECK(theta.target() == AbelianGroupSig::modular(3));
  const FiniteGroupoid& A = a3.groupoid;
  CHECK(theta.scalar(arrow(A, "(2,2)")) == Gaussian(2));
  CHECK(theta.scalar(A.inverse_of(arrow(A, "(2,2)"))) == Gaussian(1));
  CHECK(AbelianGroupSig::modular(3).normalize(el(-4)) == el(2));
  CHECK_THROWS_AS(AbelianGroupSig::modular(1), Error);
}

TEST_CASE("product homomorphism") {
  const auto c4 = complex_pair(2);
  const FiniteGroupoid& C = c4.groupoid;
  REQUIRE(c4.canonical_homs.size() == 3);
  const std::vector<GroupoidHom> coords{c4.canonical_homs[1], c4.canonical_homs[2]};
  const GroupoidHom prod = product_hom(coords);
  CHECK(prod.target().str() == "Z x Z");
  CHECK(prod(arrow(C, "((1,0),(0,0))")) == AbelianElement{{Gaussian(1), Gaussian(0)}});

  const FiniteGroupoid G = p2();
  const GroupoidHom theta = int_hom(G, {0, 0, -1, 1});
  const std::vector<GroupoidHom> with_zero{theta, zero_hom(G, AbelianGroupSig::modular(2))};
  const GroupoidHom pz = product_hom(with_zero);
  for (ArrowId g : G.arrows()) CHECK(pz(g).parts[1].is_zero());

  const std::vector<GroupoidHom> single{theta};
  CHECK(congruence_from_hom(product_hom(single)) == congruence_from_hom(theta));

  CHECK_THROWS_AS(product_hom(std::vector<GroupoidHom>{}), Error);
  const std::vector<GroupoidHom> mixed{theta, pair_groupoid(2).canonical_homs.front()};
  try {
    product_hom(mixed);
    FAIL("mixed groupoids accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MixedGroupoids);
  }
}

TEST_CASE("relation induced by a homomorphism") {
  const FiniteGroupoid G = p2();
  const Partition lambda = congruence_from_hom(int_hom(G, {0, 0, -1, 1}));
  CHECK(lambda.class_count() == 3);
  CHECK(lambda.related(arrow(G, "e0"), arrow(G, "e1")));
  CHECK(lambda.class_members(arrow(G, "a")).size() == 1);
  CHECK(validate_affine_congruence(G, lambda).holds());

  const auto a3 = affine_cyclic(3);
  const Partition by_v = congruence_from_hom(a3.canonical_homs.front());
  CHECK(by_v.class_count() == 3);
  for (std::uint32_t c = 0; c < 3; ++c) CHECK(by_v.members(c).size() == 3);

  CHECK(congruence_from_hom(zero_hom(G, AbelianGroupSig::integers())).class_count() == 1);
}

TEST_CASE("parallelism failure on P2") {
  const FiniteGroupoid G = p2();
  // {a, e0}, {b, e1}
  const auto report = validate_affine_congruence(G, partition_of({0, 1, 0, 1}));
  CHECK_FALSE(report.parallelism.holds);
  CHECK(report.parallelism.witness == arrows({2, 0, 3, 1}));
}

TEST_CASE("discrete partition") {
  // On P2 the antecedent allows g1 = g2 = a, h1 = h2 = b, and then ab = e0
  // but ba = e1.
  const FiniteGroupoid G = p2();
  const auto on_p2 = validate_affine_congruence(G, Partition::discrete(4));
  CHECK(on_p2.congruence.holds);
  CHECK_FALSE(on_p2.parallelism.holds);
  CHECK(on_p2.parallelism.witness == arrows({2, 2, 3, 3}));

  CHECK(validate_affine_congruence(cyclic_group(5).groupoid, Partition::discrete(5)).holds());
  const FiniteGroupoid points = oracle::make_model({{1, 1}, {1, 1}, {1, 1}}, nullptr).build();
  CHECK(validate_affine_congruence(points, Partition::discrete(3)).holds());

  // S3 is not commutative, so parallelism fails there too.
  const std::vector<std::vector<std::uint32_t>> s3{{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
                                                   {3, 5, 4, 0, 2, 1}, {4, 3, 5, 1, 0, 2}, {5, 4, 3, 2, 1, 0}};
  CHECK_FALSE(validate_affine_congruence(group_groupoid(s3).groupoid, Partition::discrete(6)).parallelism.holds);
}

TEST_CASE("profile: A3 is efficient, P2 is simple but not complete") {
  const auto a3 = affine_cyclic(3);
  const auto pa = congruence_profile(a3.groupoid, congruence_from_hom(a3.canonical_homs.front()));
  CHECK(pa.complete.holds);
  CHECK(pa.simple.holds);
  CHECK(pa.efficient());

  const FiniteGroupoid G = p2();
  const auto pp = congruence_profile(G, congruence_from_hom(int_hom(G, {0, 0, -1, 1})));
  CHECK_FALSE(pp.complete.holds);
  CHECK(pp.complete.witness == Witness{arr(2), obj(1)});
  CHECK(pp.simple.holds);
  CHECK_FALSE(pp.efficient());

  // One class holding everything: complete but not simple.
  const auto ps = congruence_profile(G, Partition::single_class(4));
  CHECK(ps.complete.holds);
  CHECK_FALSE(ps.simple.holds);
  CHECK(ps.simple.witness == Witness{arr(0), obj(0)});
}

TEST_CASE("profile refuses a non-congruence") {
  try {
    congruence_profile(p2(), partition_of({0, 1, 0, 1}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotACongruence);
  }
}

TEST_CASE("class at an object") {
  const auto a3 = affine_cyclic(3);
  const FiniteGroupoid& A = a3.groupoid;
  const Partition lambda = congruence_from_hom(a3.canonical_homs.front());
  CHECK(class_at(A, lambda, arrow(A, "(0,1)"), object(A, "2")) == std::vector{arrow(A, "(2,1)")});

  const FiniteGroupoid G = p2();
  const Partition mu = congruence_from_hom(int_hom(G, {0, 0, -1, 1}));
  CHECK(class_at(G, mu, arrow(G, "a"), object(G, "1")).empty());
  for (ArrowId g : G.arrows()) {
    const auto here = class_at(G, mu, g, G.source(g));
    CHECK(std::find(here.begin(), here.end(), g) != here.end());
  }
}

TEST_CASE("monomorphism is kernel triviality") {
  const FiniteGroupoid G = p2();
  CHECK(is_monomorphism(int_hom(G, {0, 0, -1, 1})).holds);
  CHECK(is_monomorphism(affine_cyclic(3).canonical_homs.front()).holds);
  const auto zero = is_monomorphism(zero_hom(G, AbelianGroupSig::integers()));
  CHECK_FALSE(zero.holds);
  CHECK(zero.witness == arrow(G, "a"));
}

TEST_CASE("product relation is the meet") {
  const auto c4 = complex_pair(2);
  const std::vector<GroupoidHom> coords{c4.canonical_homs[1], c4.canonical_homs[2]};
  const Partition prod = congruence_from_hom(product_hom(coords));
  CHECK(prod == meet(congruence_from_hom(coords[0]), congruence_from_hom(coords[1])));
  CHECK(prod == congruence_from_hom(c4.canonical_homs[0]));
}

TEST_CASE("property: homomorphism relations against the block model") {
  oracle::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const oracle::Model m = oracle::random_model(rng, 8, false);
    const FiniteGroupoid G = m.build();
    const oracle::IntHom h = oracle::random_hom(m, rng);
    const GroupoidHom theta = oracle::to_library(G, h);
    const Partition lambda = congruence_from_hom(theta);
    const auto labels = oracle::classes_of(h.values);
    REQUIRE(same_relation(lambda, labels));

    CHECK(validate_affine_congruence(G, lambda).holds());
    CHECK_FALSE(oracle::congruence_violation(m, labels));
    CHECK_FALSE(oracle::parallelism_violation(m, labels));

    const auto profile = congruence_profile(G, lambda);
    CHECK(profile.complete.holds == !oracle::incomplete_at(m, labels));
    CHECK(profile.simple.holds == !oracle::non_simple_at(m, labels));

    const bool mono = is_monomorphism(theta).holds;
    CHECK(mono == oracle::kernel_trivial(m, h));
    if (mono) CHECK(profile.simple.holds);
  }
}

TEST_CASE("property: arbitrary partitions get the brute-force verdict and witness") {
  oracle::Rng rng(32);
  int failures = 0;
  for (int t = 0; t < 150; ++t) {
    const oracle::Model m = oracle::random_model(rng, 6, t % 2 == 0);
    const FiniteGroupoid G = m.build();
    const auto labels = oracle::random_labels(m.size(), 1 + t % 5, rng);
    const Partition lambda = partition_of(labels);
    const auto report = validate_affine_congruence(G, lambda);

    const auto cong = oracle::congruence_violation(m, labels);
    CHECK(report.congruence.holds == !cong);
    if (cong) CHECK(report.congruence.witness == to_witness(*cong));

    const auto par = oracle::parallelism_violation(m, labels);
    CHECK(report.parallelism.holds == !par);
    if (par) CHECK(report.parallelism.witness == to_witness(*par));
    failures += !report.holds();

    const auto profile = profile_unchecked(G, lambda);
    const auto incomplete = oracle::incomplete_at(m, labels);
    CHECK(profile.complete.holds == !incomplete);
    if (incomplete) CHECK(profile.complete.witness == Witness{arr(incomplete->first), obj(incomplete->second)});
    const auto crowded = oracle::non_simple_at(m, labels);
    CHECK(profile.simple.holds == !crowded);
    if (crowded) CHECK(profile.simple.witness == Witness{arr(crowded->first), obj(crowded->second)});
  }
  // The generator must exercise the failure paths.
  CHECK(failures > 20);
}
