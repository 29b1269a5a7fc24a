#include "grpd/cli.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "grpd/congruence.hpp"
#include "grpd/families.hpp"
#include "grpd/io.hpp"
#include "grpd/norm.hpp"
#include "grpd/sip.hpp"

namespace grpd {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problems with the input itself rather than with the mathematics it
// describes.
bool is_input_error(Errc code) {
  switch (code) {
    case Errc::SyntaxError:
    case Errc::SchemaError:
    case Errc::DanglingReference:
    case Errc::MissingArrow:
    case Errc::BadTarget:
    case Errc::TooLarge:
    case Errc::BadParams:
    case Errc::UnknownObject:
    case Errc::EmptyBase:
    case Errc::EmptyList:
    case Errc::MixedGroupoids:
      return true;
    default:
      return false;
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// What a command has loaded so far; used to put labels on witnesses of a
// semantic error.
struct Session {
  Limits limits = Limits::from_env();
  std::optional<GroupoidDocument> doc;
  std::optional<FiniteGroupoid> groupoid;

  FiniteGroupoid load(const std::string& path) {
    doc = parse_groupoid_document(read_file(path));
    groupoid = build_groupoid(*doc, limits);
    return *groupoid;
  }

  std::vector<std::string> labels(const Witness& witness) const {
    if (groupoid) return witness_labels(*groupoid, witness);
    std::vector<std::string> out;
    for (const WitnessItem& w : witness) {
      if (w.kind == WitnessItem::Kind::Arrow) {
        out.push_back(doc && w.index < doc->arrows.size() ? doc->arrows[w.index].id : std::to_string(w.index));
      } else {
        out.push_back("object " +
                      (doc && w.index < doc->objects.size() ? doc->objects[w.index] : std::to_string(w.index)));
      }
    }
    return out;
  }
};

ArrowId arrow_by_label(const FiniteGroupoid& G, const std::string& label) {
  auto g = G.find_arrow(label);
  if (!g) throw UsageError("unknown arrow '" + label + "'");
  return *g;
}

std::vector<std::string> arrow_labels(const FiniteGroupoid& G, std::span<const ArrowId> arrows) {
  std::vector<std::string> out;
  for (ArrowId g : arrows) out.push_back(G.label(g));
  return out;
}

Gaussian parse_scalar(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Gaussian(Rational::parse(text));
    return Gaussian(Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw UsageError("--c expects RE or RE,IM with rational parts, got '" + text + "'");
  }
}

Bihom load_bihom(const FiniteGroupoid& G, const std::string& path) {
  return build_bihom(G, parse_bihom_document(read_file(path)));
}

std::vector<GroupoidHom> load_homs(const FiniteGroupoid& G, const std::vector<std::string>& paths) {
  std::vector<GroupoidHom> out;
  for (const std::string& p : paths) out.push_back(build_hom(G, parse_hom_document(read_file(p))));
  return out;
}

// A lambda file is either a partition or a homomorphism (whose induced
// relation is used).
Partition load_lambda(const FiniteGroupoid& G, const std::string& path) {
  Document doc = parse_document(read_file(path));
  if (auto* p = std::get_if<PartitionDocument>(&doc)) return build_partition(G, *p);
  if (auto* h = std::get_if<HomDocument>(&doc)) return congruence_from_hom(build_hom(G, *h));
  throw Error(Errc::SchemaError, path + ": expected a partition or homomorphism document");
}

void add_axioms(Report& r, const FiniteGroupoid& G, const std::string& prefix, const AffineCongruenceReport& a) {
  r.add(G, prefix + "congruence", a.congruence);
  r.add(G, prefix + "parallelism", a.parallelism);
}

void add_sip(Report& r, const FiniteGroupoid& G, const std::string& prefix, const SipReport& s) {
  r.add(G, prefix + "conjugate_symmetric", s.conjugate_symmetric);
  r.add(G, prefix + "positive_definite", s.positive_definite);
  r.add(G, prefix + "cauchy_schwarz", s.cauchy_schwarz);
}

void add_norm(Report& r, const FiniteGroupoid& G, const std::string& prefix, const NormReport& n) {
  r.add(G, prefix + "identity_zero", n.identity_zero);
  r.add(G, prefix + "triangle", n.triangle);
  r.add(G, prefix + "inverse_invariant", n.inverse_invariant);
  r.add(G, prefix + "reverse_triangle", n.reverse_triangle);
}

void add_consistency(Report& r, const FiniteGroupoid& G, const std::string& prefix, const ConsistencyReport& c) {
  r.add(G, prefix + "class_constant", c.class_constant);
  if (c.doubling.holds && c.doubling_vacuous()) {
    r.add(prefix + "doubling", CheckResult::Vacuous, "vacuous", {}, "no composable non-identity class-mates");
  } else {
    r.add(G, prefix + "doubling", c.doubling);
  }
  r.fact(prefix + "doubling_pairs", std::to_string(c.doubling_pairs));
}

void add_polarized(Report& r, const FiniteGroupoid& G, const std::string& prefix, const PolarizationReport& p) {
  r.add(G, prefix + "symmetric", p.symmetric);
  r.add(G, prefix + "diagonal", p.diagonal);
  r.add(G, prefix + "positive_definite", p.positive_definite);
  r.add(G, prefix + "cauchy_schwarz", p.cauchy_schwarz);
  r.add(G, prefix + "additivity", p.additivity);
  r.fact(prefix + "additivity_triples", std::to_string(p.additivity_triples));
}

void add_error(Report& r, const Session& s, const Error& e) {
  r.add(std::string(errc_name(e.code())), CheckResult::Fail, "false", s.labels(e.witness()), e.what());
}

// Runs `step`; a semantic error becomes a failing check and the step's
// result is empty.
template <class F>
auto guarded(Report& r, const Session& s, F&& step) -> std::optional<decltype(step())> {
  try {
    return step();
  } catch (const Error& e) {
    if (is_input_error(e.code())) throw;
    add_error(r, s, e);
    return std::nullopt;
  }
}

// First failure over a family of checks, keeping the detail of the failing
// instance.
struct FirstFailure {
  Check check;
  void record(const Check& c, const std::string& where) {
    if (check.holds && !c.holds) {
      check = c;
      check.detail = where + (c.detail.empty() ? "" : ": " + c.detail);
    }
  }
};

Report scalar_set_suite(const NormTable& norm, const Bihom& b) {
  const FiniteGroupoid& G = b.groupoid();
  Report r;

  std::vector<ArrowId> identities;
  for (ArrowId g : G.arrows()) {
    if (G.is_identity(g)) identities.push_back(g);
  }
  Check zero;
  for (ArrowId g : G.arrows()) {
    if (scalar_set(b, Gaussian(0), g) != identities) {
      zero = Check::fail({item(g)}, "0.g is not the set of identities");
      break;
    }
  }
  r.add(G, "scalar_set.zero_is_identities", zero);

  if (b.field() == FieldTag::Real) {
    Check empty;
    for (ArrowId g : G.arrows()) {
      if (G.is_identity(g)) continue;
      auto members = scalar_set(b, Gaussian::i(), g);
      if (!members.empty()) {
        empty = Check::fail({item(g), item(members.front())}, "i.g is not empty");
        break;
      }
    }
    r.add(G, "scalar_set.i_empty_when_real", empty);
  } else {
    r.add("scalar_set.i_empty_when_real", CheckResult::NotApplicable, {}, {}, "semi-inner product is complex");
  }

  const std::array<Gaussian, 6> scalars{Gaussian(0), Gaussian(1), Gaussian(-1), Gaussian::i(), -Gaussian::i(),
                                        Gaussian(2)};
  FirstFailure per_fiber;
  FirstFailure conjugate;
  FirstFailure scaling;
  std::size_t members = 0;
  for (const Gaussian& c : scalars) {
    for (ArrowId g : G.arrows()) {
      const auto set = scalar_set(b, c, g);
      members += set.size();
      const std::string where = "c = " + c.str();
      per_fiber.record(scalar_set_at_most_one_per_fiber(b, set), where);
      conjugate.record(conjugate_scalar_law(b, c, g), where);
      scaling.record(scale_check(norm, b, c, g), where);
    }
  }
  r.add(G, "scalar_set.at_most_one_per_fiber", per_fiber.check);
  r.add(G, "scalar_set.conjugate_law", conjugate.check);
  r.add(G, "scalar_set.norm_scaling", scaling.check);
  r.fact("scalar_set.members_checked", std::to_string(members));
  return r;
}

void append(Report& into, Report&& from) {
  for (auto& c : from.checks) into.checks.push_back(std::move(c));
  for (auto& f : from.facts) into.facts.push_back(std::move(f));
}

// ---- commands ----------------------------------------------------------

struct Options {
  std::string format = "text";

  std::string kind;
  std::size_t size = 0;
  std::string output;
  std::string hom_output;

  std::string file;
  std::string hom;
  std::string partition;
  bool profile = false;
  bool check_axioms = false;

  std::vector<std::string> thetas;
  std::string table;
  std::string g;
  std::string h;
  std::string c;
  std::string at;

  std::string from_sip;
  std::string sq;
  std::string lambda;

  bool all = false;
};

Report cmd_gen(const Options& o, Session&, std::ostream& out) {
  GeneratedFamily family = generate(o.kind, o.size, Limits::from_env());
  const std::string text = serialize(to_document(family.groupoid));
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
  if (!o.hom_output.empty()) {
    if (family.canonical_homs.empty()) throw UsageError("family '" + o.kind + "' has no canonical homomorphism");
    write_file(o.hom_output, serialize(to_document(family.canonical_homs.front())));
  }
  return {};
}

Report cmd_validate(const Options& o, Session& s) {
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;
  r.add("groupoid", CheckResult::Pass);
  r.fact("objects", std::to_string(G->object_count()));
  r.fact("arrows", std::to_string(G->arrow_count()));
  r.fact("transitive", bool_str(G->is_transitive()));
  return r;
}

Report cmd_congruence(const Options& o, Session& s) {
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;

  std::optional<GroupoidHom> theta;
  auto lambda = guarded(r, s, [&] {
    if (!o.hom.empty()) {
      theta = build_hom(*G, parse_hom_document(read_file(o.hom)));
      return congruence_from_hom(*theta);
    }
    return build_partition(*G, parse_partition_document(read_file(o.partition)));
  });
  if (!lambda) return r;
  r.fact("classes", std::to_string(lambda->class_count()));
  if (theta) {
    const auto mono = is_monomorphism(*theta);
    r.fact("monomorphism", bool_str(mono.holds));
  }

  const auto axioms = validate_affine_congruence(*G, *lambda);
  if (o.check_axioms || !o.profile) add_axioms(r, *G, "", axioms);
  if (o.profile) {
    if (!axioms.holds()) {
      r.add("profile", CheckResult::NotApplicable, {}, {}, "not an affine congruence");
      if (!o.check_axioms) add_axioms(r, *G, "", axioms);
      return r;
    }
    const auto profile = congruence_profile(*G, *lambda);
    r.add(*G, "complete", profile.complete);
    r.add(*G, "simple", profile.simple);
    r.fact("efficient", bool_str(profile.efficient()));
  }
  return r;
}

std::optional<Bihom> sip_input(Report& r, Session& s, const FiniteGroupoid& G, const Options& o) {
  return guarded(r, s, [&] {
    if (!o.thetas.empty()) return sip_from_thetas(load_homs(G, o.thetas));
    return load_bihom(G, o.table);
  });
}

Report cmd_sip_check(const Options& o, Session& s) {
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;
  auto b = sip_input(r, s, *G, o);
  if (!b) return r;
  r.fact("field", b->field() == FieldTag::Real ? "real" : "complex");
  add_sip(r, *G, "", validate_sip(*b));
  return r;
}

Report cmd_sip_relate(const Options& o, Session& s) {
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;
  auto b = sip_input(r, s, *G, o);
  if (!b) return r;
  const ArrowId g = arrow_by_label(*G, o.g);
  const ArrowId h = arrow_by_label(*G, o.h);
  const BRelation rel = b_relate(*b, g, h);
  r.fact("B(g,h)", (*b)(g, h).str());
  r.fact("congruent", bool_str(rel.congruent));
  r.fact("opposite", bool_str(rel.opposite));
  r.fact("orthogonal", bool_str(rel.orthogonal));
  return r;
}

Report cmd_sip_scalar_set(const Options& o, Session& s) {
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;
  auto b = sip_input(r, s, *G, o);
  if (!b) return r;
  const Gaussian c = parse_scalar(o.c);
  const ArrowId g = arrow_by_label(*G, o.g);
  std::optional<ObjectId> at;
  if (!o.at.empty()) {
    at = G->find_object(o.at);
    if (!at) throw UsageError("unknown object '" + o.at + "'");
  }
  const auto members = scalar_set(*b, c, g, at);
  r.fact("members", join(arrow_labels(*G, members)));

  if (validate_sip(*b).is_sip()) {
    r.add(*G, "at_most_one_per_fiber", scalar_set_at_most_one_per_fiber(*b, members));
  } else {
    r.add("at_most_one_per_fiber", CheckResult::NotApplicable, {}, {}, "not a semi-inner product");
  }
  r.add(*G, "conjugate_law", conjugate_scalar_law(*b, c, g));
  return r;
}

Report cmd_norm_check(const Options& o, Session& s) {
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;
  auto norm = guarded(r, s, [&] {
    if (!o.from_sip.empty()) return norm_from_sip(load_bihom(*G, o.from_sip));
    return build_norm(*G, parse_norm_document(read_file(o.sq)));
  });
  if (!norm) return r;
  add_norm(r, *G, "", validate_norm(*norm));
  if (!o.lambda.empty()) {
    auto lambda = guarded(r, s, [&] { return load_lambda(*G, o.lambda); });
    if (!lambda) return r;
    add_consistency(r, *G, "", consistency_check(*norm, *lambda));
  }
  return r;
}

Report cmd_polarize(const Options& o, Session& s) {
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;
  auto norm = guarded(r, s, [&] { return build_norm(*G, parse_norm_document(read_file(o.sq))); });
  if (!norm) return r;
  auto lambda = guarded(r, s, [&] { return load_lambda(*G, o.lambda); });
  if (!lambda) return r;
  auto table = guarded(r, s, [&] { return polarize_partial(*norm, *lambda); });
  if (!table) return r;
  r.fact("defined", std::to_string(table->defined) + "/" + std::to_string(table->total()));
  add_polarized(r, *G, "", check_polarized(*norm, *table));
  if (!o.output.empty()) write_file(o.output, serialize(to_document(*table)));
  return r;
}

Report cmd_report(const Options& o, Session& s) {
  if (!o.all) throw UsageError("report requires --all");
  Report r;
  auto G = guarded(r, s, [&] { return s.load(o.file); });
  if (!G) return r;
  auto thetas = guarded(r, s, [&] { return load_homs(*G, o.thetas); });
  if (!thetas) return r;
  try {
    return full_report(*G, *thetas);
  } catch (const Error& e) {
    if (is_input_error(e.code())) throw;
    add_error(r, s, e);
    return r;
  }
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  out << (format == "json" ? render_json(r) : render_text(r));
}

}  // namespace

Report full_report(const FiniteGroupoid& G, std::span<const GroupoidHom> thetas) {
  Report r;
  Session s;
  s.groupoid = G;
  r.fact("objects", std::to_string(G.object_count()));
  r.fact("arrows", std::to_string(G.arrow_count()));
  r.fact("transitive", bool_str(G.is_transitive()));

  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const std::string prefix = "theta" + std::to_string(i + 1) + ".";
    const Partition lambda = congruence_from_hom(thetas[i]);
    const auto axioms = validate_affine_congruence(G, lambda);
    add_axioms(r, G, prefix, axioms);
    if (!axioms.holds()) continue;
    const auto profile = profile_unchecked(G, lambda);
    const auto mono = is_monomorphism(thetas[i]);
    if (mono.holds) {
      r.add(G, prefix + "monomorphism_simple", profile.simple);
    } else {
      r.add(prefix + "monomorphism_simple", CheckResult::NotApplicable, {}, {}, "not a monomorphism");
    }
    r.fact(prefix + "complete", bool_str(profile.complete.holds));
    r.fact(prefix + "simple", bool_str(profile.simple.holds));
    r.fact(prefix + "efficient", bool_str(profile.efficient()));
  }

  if (std::any_of(thetas.begin(), thetas.end(), [](const GroupoidHom& t) { return !t.target().is_scalar(); })) {
    r.add("sip", CheckResult::NotApplicable, {}, {}, "family is not scalar valued");
    return r;
  }
  auto b = guarded(r, s, [&] { return sip_from_thetas(thetas); });
  if (!b) return r;
  r.fact("sip.field", b->field() == FieldTag::Real ? "real" : "complex");
  const SipReport sip = validate_sip(*b);
  add_sip(r, G, "sip.", sip);

  const BPartitionReport rows = b_partition(*b);
  add_axioms(r, G, "rows.", rows.axioms);
  r.add(G, "rows.simple", rows.profile.simple);
  r.add(G, "rows.opposite_twice", opposite_twice_is_congruent(*b));
  r.fact("rows.classes", std::to_string(rows.partition.class_count()));
  r.fact("rows.complete", bool_str(rows.profile.complete.holds));
  r.fact("rows.b_affine", bool_str(rows.b_affine));
  if (auto agree = kronecker_agreement(thetas, *b)) {
    r.add("rows.kronecker_agreement", *agree ? CheckResult::Pass : CheckResult::Fail, bool_str(*agree));
  } else {
    r.add("rows.kronecker_agreement", CheckResult::NotApplicable, {}, {}, "no Kronecker arrows");
  }

  const TransitivePropsReport transitive = transitive_props_check(*b);
  if (transitive.applicable) {
    r.add(G, "transitive.vanishing_rows", transitive.vanishing_rows);
    r.add(G, "transitive.fiber_congruence", transitive.fiber_congruence);
  } else {
    r.add("transitive.vanishing_rows", CheckResult::NotApplicable, {}, {}, "groupoid is not transitive");
    r.add("transitive.fiber_congruence", CheckResult::NotApplicable, {}, {}, "groupoid is not transitive");
  }

  if (!sip.is_sip()) return r;
  const NormTable norm = norm_from_sip(*b);
  add_norm(r, G, "norm.", validate_norm(norm));
  const ConsistencyReport consistency = consistency_check(norm, rows.partition);
  add_consistency(r, G, "norm.", consistency);

  if (consistency.holds()) {
    std::size_t holding = 0;
    std::size_t without = 0;
    Check parallelogram;
    for (ArrowId g : G.arrows()) {
      for (ArrowId h : G.arrows()) {
        const auto res = parallelogram_check(norm, rows.partition, g, h);
        switch (res.status) {
          case ParallelogramResult::Status::Holds: ++holding; break;
          case ParallelogramResult::Status::NoWitness: ++without; break;
          case ParallelogramResult::Status::Fails:
            if (parallelogram.holds) parallelogram = Check::fail(res.violation, "parallelogram identity fails");
            break;
        }
      }
    }
    r.add(G, "parallelogram", parallelogram);
    r.fact("parallelogram.pairs_holding", std::to_string(holding));
    r.fact("parallelogram.pairs_without_witness", std::to_string(without));

    if (auto table = guarded(r, s, [&] { return polarize_partial(norm, rows.partition); })) {
      add_polarized(r, G, "polarize.", check_polarized(norm, *table));
      Check round_trip;
      for (ArrowId g : G.arrows()) {
        for (ArrowId h : G.arrows()) {
          const auto& v = table->at(g, h);
          if (v && *v != (*b)(g, h).re) {
            round_trip = Check::fail({item(g), item(h)}, "polarized value differs from Re B(g,h)");
            break;
          }
        }
        if (!round_trip.holds) break;
      }
      r.add(G, "polarize.round_trip", round_trip);
      r.fact("polarize.coverage", std::to_string(table->defined) + "/" + std::to_string(table->total()));
    }
  } else {
    r.add("parallelogram", CheckResult::NotApplicable, {}, {}, "norm is not consistent with the row relation");
  }

  append(r, scalar_set_suite(norm, *b));
  return r;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite groupoid verification tool", "grpd"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen", "Generate a groupoid family")->fallthrough();
  gen->add_option("kind", o.kind, "pair, group, affine_cyclic or complex_pair")
      ->required()
      ->check(CLI::IsMember({"pair", "group", "affine_cyclic", "complex_pair"}));
  gen->add_option("--size", o.size, "Family parameter")->required();
  gen->add_option("-o,--output", o.output, "Write the groupoid here instead of stdout");
  gen->add_option("--hom", o.hom_output, "Write the canonical homomorphism here");

  auto* validate = app.add_subcommand("validate", "Validate a groupoid document")->fallthrough();
  validate->add_option("file", o.file)->required();

  auto* congruence = app.add_subcommand("congruence", "Check an affine congruence")->fallthrough();
  congruence->add_option("file", o.file)->required();
  auto* hom_opt = congruence->add_option("--hom", o.hom, "Homomorphism inducing the relation");
  auto* part_opt = congruence->add_option("--partition", o.partition, "Explicit partition");
  hom_opt->excludes(part_opt);
  congruence->add_flag("--profile", o.profile, "Report completeness and simplicity");
  congruence->add_flag("--check-axioms", o.check_axioms, "Report both axioms");

  auto* sip = app.add_subcommand("sip", "Semi-inner products")->fallthrough()->require_subcommand(1);
  auto* sip_check = sip->add_subcommand("check", "Check the semi-inner product conditions")->fallthrough();
  sip_check->add_option("file", o.file)->required();
  auto* thetas_opt = sip_check->add_option("--thetas", o.thetas, "Homomorphism family")->expected(1, -1);
  auto* table_opt = sip_check->add_option("--table", o.table, "Bihomomorphism document");
  thetas_opt->excludes(table_opt);
  auto* sip_relate = sip->add_subcommand("relate", "Row relation between two arrows")->fallthrough();
  sip_relate->set_help_flag("--help", "Print this help message and exit");
  sip_relate->add_option("file", o.file)->required();
  sip_relate->add_option("--table", o.table)->required();
  sip_relate->add_option("--g", o.g)->required();
  sip_relate->add_option("--h", o.h)->required();
  auto* sip_scalar = sip->add_subcommand("scalar-set", "Arrows whose row is c times a row")->fallthrough();
  sip_scalar->add_option("file", o.file)->required();
  sip_scalar->add_option("--table", o.table)->required();
  sip_scalar->add_option("--c", o.c, "Scalar as RE or RE,IM")->required();
  sip_scalar->add_option("--g", o.g)->required();
  sip_scalar->add_option("--at", o.at, "Restrict to arrows leaving this object");

  auto* norm = app.add_subcommand("norm", "Groupoid norms")->fallthrough()->require_subcommand(1);
  auto* norm_check = norm->add_subcommand("check", "Check the norm conditions")->fallthrough();
  norm_check->add_option("file", o.file)->required();
  auto* from_sip_opt = norm_check->add_option("--from-sip", o.from_sip, "Bihomomorphism document");
  auto* sq_opt = norm_check->add_option("--sq", o.sq, "Squared norm document");
  from_sip_opt->excludes(sq_opt);
  norm_check->add_option("--lambda", o.lambda, "Partition or homomorphism for consistency");

  auto* polarize = app.add_subcommand("polarize", "Recover a bihomomorphism from a norm")->fallthrough();
  polarize->add_option("file", o.file)->required();
  polarize->add_option("--sq", o.sq)->required();
  polarize->add_option("--lambda", o.lambda)->required();
  polarize->add_option("-o,--output", o.output, "Write the polarized table here");

  auto* report = app.add_subcommand("report", "Run every check on one bundle")->fallthrough();
  report->add_flag("--all", o.all);
  report->add_option("file", o.file)->required();
  report->add_option("--thetas", o.thetas)->required()->expected(1, -1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Session session;
  try {
    Report r;
    bool print = true;
    if (*gen) {
      r = cmd_gen(o, session, out);
      print = false;
    } else if (*validate) {
      r = cmd_validate(o, session);
    } else if (*congruence) {
      if (o.hom.empty() && o.partition.empty()) throw UsageError("congruence needs --hom or --partition");
      r = cmd_congruence(o, session);
    } else if (*sip_check) {
      if (o.thetas.empty() && o.table.empty()) throw UsageError("sip check needs --thetas or --table");
      r = cmd_sip_check(o, session);
    } else if (*sip_relate) {
      r = cmd_sip_relate(o, session);
    } else if (*sip_scalar) {
      r = cmd_sip_scalar_set(o, session);
    } else if (*norm_check) {
      if (o.from_sip.empty() && o.sq.empty()) throw UsageError("norm check needs --from-sip or --sq");
      r = cmd_norm_check(o, session);
    } else if (*polarize) {
      r = cmd_polarize(o, session);
    } else if (*report) {
      r = cmd_report(o, session);
    }
    if (print) emit(r, o.format, out);
    return r.status() == ReportStatus::Pass ? kExitPass : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace grpd
