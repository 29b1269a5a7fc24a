#include <doctest.h>

#include <filesystem>

#include "grpd/families.hpp"
#include "grpd/io.hpp"
#include "helpers.hpp"

using namespace grpd;
using testing::fixture;

namespace {

std::string thrown(auto&& f, Errc expected) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == expected);
    return e.what();
  }
  FAIL("expected an error");
  return {};
}

const char* const kFixtures[] = {"p2.grpd",       "theta.hom", "p5.grpd", "p5_theta.hom", "p5.sip", "p5.sq",
                                 "a3.grpd",       "a3_theta.hom", "c4.grpd", "c4_theta.hom", "c4.sip"};

}  // namespace

TEST_CASE("P2 document") {
  const GroupoidDocument doc = parse_groupoid_document(read_file(fixture("p2.grpd")));
  CHECK(doc.objects.size() == 2);
  CHECK(doc.arrows.size() == 4);
  CHECK(doc.compose.size() == 8);
  const FiniteGroupoid G = build_groupoid(doc);
  CHECK(G.arrow_count() == 4);
  CHECK(G.label(G.inverse_of(*G.find_arrow("a"))) == "b");
}

TEST_CASE("parse, serialize, parse is the identity on fixtures") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    const Document first = parse_document(read_file(fixture(name)));
    const std::string text = serialize(first);
    const Document second = parse_document(text);
    CHECK(first == second);
    CHECK(serialize(second) == text);
  }
}

TEST_CASE("library values survive a document round trip") {
  const FiniteGroupoid G = build_groupoid(parse_groupoid_document(read_file(fixture("p5.grpd"))));
  const GroupoidDocument gdoc = to_document(G);
  const FiniteGroupoid G2 = build_groupoid(parse_groupoid_document(serialize(gdoc)));
  CHECK(to_document(G2) == gdoc);

  const GroupoidHom theta = build_hom(G, parse_hom_document(read_file(fixture("p5_theta.hom"))));
  CHECK(to_document(theta) == parse_hom_document(serialize(to_document(theta))));

  const Bihom B = build_bihom(G, parse_bihom_document(read_file(fixture("p5.sip"))));
  const BihomDocument table = to_document(B);
  CHECK_FALSE(table.from_thetas());
  const Bihom B2 = build_bihom(G, parse_bihom_document(serialize(table)));
  CHECK(std::ranges::equal(B.table(), B2.table()));

  const NormTable N = build_norm(G, parse_norm_document(read_file(fixture("p5.sq"))));
  const NormTable N2 = norm_from_sip(B);
  CHECK(std::ranges::equal(N.values(), N2.values()));

  const Partition rows = b_congruence(B);
  const Partition back = build_partition(G, parse_partition_document(serialize(to_document(G, rows))));
  CHECK(back == rows);
}

TEST_CASE("syntax errors carry a position") {
  const std::string msg = thrown([] { parse_document("{\n  \"objects\": [\"0\",\n}"); }, Errc::SyntaxError);
  CHECK(msg.find("line 3, column 1") != std::string::npos);
}

TEST_CASE("schema errors name the path") {
  CHECK(thrown([] { parse_groupoid_document(R"({"objects": [], "arrows": [], "compose": []})"); },
               Errc::SchemaError)
            .find("/objects: nonempty required") != std::string::npos);

  // a then a: r(a) = 1 but d(a) = 0.
  const char* bad_triple = R"({"objects": ["0", "1"],
    "arrows": [{"id": "e0", "src": "0", "dst": "0"}, {"id": "e1", "src": "1", "dst": "1"},
               {"id": "a", "src": "0", "dst": "1"}, {"id": "b", "src": "1", "dst": "0"}],
    "compose": [["e0", "e0", "e0"], ["a", "a", "a"]]})";
  CHECK(thrown([&] { parse_document(bad_triple); }, Errc::SchemaError).find("/compose/1:") != std::string::npos);

  CHECK(thrown([] { parse_document(R"({"objects": ["0"], "arrows": [{"id": "e", "src": "0", "dst": "9"}],
                                       "compose": []})"); },
               Errc::SchemaError)
            .find("/arrows/0/dst") != std::string::npos);
  CHECK(thrown([] { parse_document(R"({"sq": {"a": "-1"}})"); }, Errc::SchemaError).find("/sq/a") !=
        std::string::npos);
  CHECK(thrown([] { parse_document(R"({"target": ["R"], "values": {}})"); }, Errc::SchemaError)
            .find("/target") != std::string::npos);
  thrown([] { parse_document("[1, 2]"); }, Errc::SchemaError);
  thrown([] { parse_document(R"({"nothing": 1})"); }, Errc::SchemaError);
  thrown([] { parse_hom_document(R"({"sq": {}})"); }, Errc::SchemaError);
}

TEST_CASE("builders resolve labels") {
  GroupoidDocument doc = parse_groupoid_document(read_file(fixture("p2.grpd")));
  doc.compose.push_back({"a", "b", "zz"});
  thrown([&] { build_groupoid(doc); }, Errc::DanglingReference);

  doc = parse_groupoid_document(read_file(fixture("p2.grpd")));
  doc.inverse->erase("a");
  thrown([&] { build_groupoid(doc); }, Errc::DanglingReference);

  doc = parse_groupoid_document(read_file(fixture("p2.grpd")));
  (*doc.inverse)["a"] = "a";
  const Error e = [&] {
    try {
      build_groupoid(doc);
    } catch (const Error& err) {
      return err;
    }
    return Error(Errc::SchemaError, "no error");
  }();
  CHECK(e.code() == Errc::BadInverse);

  const FiniteGroupoid G = build_groupoid(parse_groupoid_document(read_file(fixture("p2.grpd"))));
  thrown([&] { build_norm(G, parse_norm_document(R"({"sq": {"e0": "0", "e1": "0", "a": "1"}})")); },
         Errc::MissingArrow);
  thrown([&] { build_partition(G, parse_partition_document(R"({"classes": [["e0", "e1"], ["a"]]})")); },
         Errc::SchemaError);
  thrown([&] { build_hom(G, parse_hom_document(R"({"target": ["Z"], "values": {"q": 1}})")); },
         Errc::SchemaError);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "grpd_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "p3.grpd").string();
  const std::string text = serialize(to_document(pair_groupoid(3).groupoid));
  write_file(path, text);
  CHECK(read_file(path) == text);
  CHECK_THROWS_AS(read_file((dir / "missing.grpd").string()), std::runtime_error);
  std::filesystem::remove_all(dir);
}
