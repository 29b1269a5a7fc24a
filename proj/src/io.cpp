#include "grpd/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace grpd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(Errc::SchemaError, (path.empty() ? std::string("/") : path) + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "/" + key, "required");
  return *it;
}

std::string as_label(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  schema_error(path, "expected a label");
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected a rational \"p/q\"");
}

Gaussian as_gaussian(const json& j, const std::string& path) {
  if (j.is_object()) {
    Gaussian z;
    if (j.contains("re")) z.re = as_rational(j["re"], path + "/re");
    if (j.contains("im")) z.im = as_rational(j["im"], path + "/im");
    for (const auto& [key, value] : j.items()) {
      if (key != "re" && key != "im") schema_error(path + "/" + key, "unexpected key");
    }
    return z;
  }
  return Gaussian(as_rational(j, path));
}

ordered_json rational_json(const Rational& r) { return r.str(); }

ordered_json gaussian_json(const Gaussian& z) {
  if (z.is_real()) return rational_json(z.re);
  ordered_json out;
  out["re"] = z.re.str();
  out["im"] = z.im.str();
  return out;
}

Component parse_component(const std::string& name, const std::string& path) {
  if (name == "Z") return {Component::Kind::Integer, 0};
  if (name == "Q") return {Component::Kind::Rational, 0};
  if (name == "C") return {Component::Kind::Gaussian, 0};
  for (const char* prefix : {"Z/", "Z_"}) {
    if (name.rfind(prefix, 0) == 0) {
      try {
        std::size_t used = 0;
        unsigned long m = std::stoul(name.substr(2), &used);
        if (used == name.size() - 2 && m >= 2 && m <= 0xffffffffUL) {
          return {Component::Kind::Modular, static_cast<std::uint32_t>(m)};
        }
      } catch (const std::exception&) {
      }
    }
  }
  schema_error(path, "unknown group component '" + name + "' (expected Z, Z/m, Q or C)");
}

std::string component_name(const Component& c) {
  switch (c.kind) {
    case Component::Kind::Integer: return "Z";
    case Component::Kind::Modular: return "Z/" + std::to_string(c.modulus);
    case Component::Kind::Rational: return "Q";
    case Component::Kind::Gaussian: return "C";
  }
  return "?";
}

GroupoidDocument groupoid_from_json(const json& j) {
  GroupoidDocument doc;
  const json& objects = member(j, "objects", "");
  if (!objects.is_array()) schema_error("/objects", "expected an array");
  if (objects.empty()) schema_error("/objects", "nonempty required");
  std::set<std::string> object_set;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string path = "/objects/" + std::to_string(i);
    std::string label = as_label(objects[i], path);
    if (!object_set.insert(label).second) schema_error(path, "duplicate object '" + label + "'");
    doc.objects.push_back(std::move(label));
  }

  const json& arrows = member(j, "arrows", "");
  if (!arrows.is_array()) schema_error("/arrows", "expected an array");
  std::unordered_map<std::string, std::pair<std::string, std::string>> ends;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string path = "/arrows/" + std::to_string(i);
    const json& a = arrows[i];
    if (!a.is_object()) schema_error(path, "expected {id, src, dst}");
    GroupoidDocument::Arrow arrow{as_label(member(a, "id", path), path + "/id"),
                                  as_label(member(a, "src", path), path + "/src"),
                                  as_label(member(a, "dst", path), path + "/dst")};
    if (!object_set.count(arrow.src)) schema_error(path + "/src", "unknown object '" + arrow.src + "'");
    if (!object_set.count(arrow.dst)) schema_error(path + "/dst", "unknown object '" + arrow.dst + "'");
    if (!ends.emplace(arrow.id, std::pair{arrow.src, arrow.dst}).second) {
      schema_error(path + "/id", "duplicate arrow '" + arrow.id + "'");
    }
    doc.arrows.push_back(std::move(arrow));
  }

  auto arrow_ref = [&](const json& v, const std::string& path) {
    std::string label = as_label(v, path);
    if (!ends.count(label)) schema_error(path, "unknown arrow '" + label + "'");
    return label;
  };

  const json& compose = member(j, "compose", "");
  if (!compose.is_array()) schema_error("/compose", "expected an array");
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string path = "/compose/" + std::to_string(i);
    const json& t = compose[i];
    if (!t.is_array() || t.size() != 3) schema_error(path, "expected [f, g, fg]");
    std::array<std::string, 3> triple{arrow_ref(t[0], path + "/0"), arrow_ref(t[1], path + "/1"),
                                      arrow_ref(t[2], path + "/2")};
    if (ends[triple[0]].second != ends[triple[1]].first) {
      schema_error(path, "target of '" + triple[0] + "' is not the source of '" + triple[1] + "'");
    }
    doc.compose.push_back(std::move(triple));
  }

  if (j.contains("inverse")) {
    const json& inv = j["inverse"];
    if (!inv.is_object()) schema_error("/inverse", "expected an object");
    std::map<std::string, std::string> map;
    for (const auto& [key, value] : inv.items()) {
      if (!ends.count(key)) schema_error("/inverse/" + key, "unknown arrow '" + key + "'");
      map[key] = arrow_ref(value, "/inverse/" + key);
    }
    doc.inverse = std::move(map);
  }
  if (j.contains("identity")) {
    const json& id = j["identity"];
    if (!id.is_object()) schema_error("/identity", "expected an object");
    std::map<std::string, std::string> map;
    for (const auto& [key, value] : id.items()) {
      if (!object_set.count(key)) schema_error("/identity/" + key, "unknown object '" + key + "'");
      map[key] = arrow_ref(value, "/identity/" + key);
    }
    doc.identity = std::move(map);
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "objects" && key != "arrows" && key != "compose" && key != "inverse" && key != "identity") {
      schema_error("/" + key, "unexpected key");
    }
  }
  return doc;
}

HomDocument hom_from_json(const json& j, const std::string& base) {
  const json& target = member(j, "target", base);
  std::vector<Component> components;
  if (target.is_string()) {
    components.push_back(parse_component(target.get<std::string>(), base + "/target"));
  } else if (target.is_array() && !target.empty()) {
    for (std::size_t i = 0; i < target.size(); ++i) {
      const std::string path = base + "/target/" + std::to_string(i);
      if (!target[i].is_string()) schema_error(path, "expected a component name");
      components.push_back(parse_component(target[i].get<std::string>(), path));
    }
  } else {
    schema_error(base + "/target", "expected a nonempty list of components");
  }
  HomDocument doc{AbelianGroupSig(std::move(components)), {}};

  const json& values = member(j, "values", base);
  if (!values.is_object()) schema_error(base + "/values", "expected an object keyed by arrow");
  for (const auto& [label, v] : values.items()) {
    const std::string path = base + "/values/" + label;
    AbelianElement e;
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) e.parts.push_back(as_gaussian(v[i], path + "/" + std::to_string(i)));
    } else {
      e.parts.push_back(as_gaussian(v, path));
    }
    if (e.parts.size() != doc.target.size()) {
      schema_error(path, "expected " + std::to_string(doc.target.size()) + " components");
    }
    doc.values.emplace(label, std::move(e));
  }
  return doc;
}

BihomDocument bihom_from_json(const json& j) {
  BihomDocument doc;
  if (j.contains("thetas")) {
    const json& thetas = j["thetas"];
    if (!thetas.is_array() || thetas.empty()) schema_error("/thetas", "expected a nonempty array");
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      doc.thetas.push_back(hom_from_json(thetas[i], "/thetas/" + std::to_string(i)));
    }
    return doc;
  }
  const json& table = member(j, "table", "");
  if (!table.is_object()) schema_error("/table", "expected an object of rows");
  for (const auto& [g, row] : table.items()) {
    if (!row.is_object()) schema_error("/table/" + g, "expected an object");
    for (const auto& [h, v] : row.items()) doc.table[g][h] = as_gaussian(v, "/table/" + g + "/" + h);
  }
  if (j.contains("field")) {
    const json& f = j["field"];
    if (f == "real") {
      doc.field = FieldTag::Real;
    } else if (f == "complex") {
      doc.field = FieldTag::Complex;
    } else {
      schema_error("/field", "expected \"real\" or \"complex\"");
    }
  }
  return doc;
}

NormDocument norm_from_json(const json& j) {
  const json& sq = member(j, "sq", "");
  if (!sq.is_object()) schema_error("/sq", "expected an object keyed by arrow");
  NormDocument doc;
  for (const auto& [label, v] : sq.items()) {
    Rational r = as_rational(v, "/sq/" + label);
    if (r.sign() < 0) schema_error("/sq/" + label, "squared norm must be nonnegative");
    doc.sq.emplace(label, std::move(r));
  }
  return doc;
}

PartitionDocument partition_from_json(const json& j) {
  const json& classes = member(j, "classes", "");
  if (!classes.is_array()) schema_error("/classes", "expected an array of arrays");
  PartitionDocument doc;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string path = "/classes/" + std::to_string(i);
    if (!classes[i].is_array() || classes[i].empty()) schema_error(path, "expected a nonempty array");
    std::vector<std::string> cls;
    for (std::size_t k = 0; k < classes[i].size(); ++k) {
      cls.push_back(as_label(classes[i][k], path + "/" + std::to_string(k)));
    }
    doc.classes.push_back(std::move(cls));
  }
  return doc;
}

ordered_json hom_json(const HomDocument& doc) {
  ordered_json out;
  ordered_json target = ordered_json::array();
  for (const Component& c : doc.target.components()) target.push_back(component_name(c));
  out["target"] = std::move(target);
  ordered_json values = ordered_json::object();
  for (const auto& [label, e] : doc.values) {
    if (e.parts.size() == 1) {
      values[label] = gaussian_json(e.parts[0]);
    } else {
      ordered_json parts = ordered_json::array();
      for (const Gaussian& z : e.parts) parts.push_back(gaussian_json(z));
      values[label] = std::move(parts);
    }
  }
  out["values"] = std::move(values);
  return out;
}

struct ToJson {
  ordered_json operator()(const GroupoidDocument& doc) const {
    ordered_json out;
    out["objects"] = doc.objects;
    ordered_json arrows = ordered_json::array();
    for (const auto& a : doc.arrows) arrows.push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
    out["arrows"] = std::move(arrows);
    ordered_json compose = ordered_json::array();
    for (const auto& t : doc.compose) compose.push_back({t[0], t[1], t[2]});
    out["compose"] = std::move(compose);
    if (doc.inverse) out["inverse"] = *doc.inverse;
    if (doc.identity) out["identity"] = *doc.identity;
    return out;
  }
  ordered_json operator()(const HomDocument& doc) const { return hom_json(doc); }
  ordered_json operator()(const BihomDocument& doc) const {
    ordered_json out;
    if (doc.from_thetas()) {
      ordered_json thetas = ordered_json::array();
      for (const auto& t : doc.thetas) thetas.push_back(hom_json(t));
      out["thetas"] = std::move(thetas);
      return out;
    }
    if (doc.field) out["field"] = *doc.field == FieldTag::Real ? "real" : "complex";
    ordered_json table = ordered_json::object();
    for (const auto& [g, row] : doc.table) {
      ordered_json r = ordered_json::object();
      for (const auto& [h, z] : row) r[h] = gaussian_json(z);
      table[g] = std::move(r);
    }
    out["table"] = std::move(table);
    return out;
  }
  ordered_json operator()(const NormDocument& doc) const {
    ordered_json sq = ordered_json::object();
    for (const auto& [label, r] : doc.sq) sq[label] = rational_json(r);
    ordered_json out;
    out["sq"] = std::move(sq);
    return out;
  }
  ordered_json operator()(const PartitionDocument& doc) const {
    ordered_json out;
    out["classes"] = doc.classes;
    return out;
  }
};

ArrowId resolve_arrow(const FiniteGroupoid& G, const std::string& label, const std::string& path) {
  auto g = G.find_arrow(label);
  if (!g) schema_error(path, "unknown arrow '" + label + "'");
  return *g;
}

}  // namespace

Document parse_document(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) schema_error("", "expected a JSON object");
  if (j.contains("objects")) return groupoid_from_json(j);
  if (j.contains("values")) return hom_from_json(j, "");
  if (j.contains("thetas") || j.contains("table")) return bihom_from_json(j);
  if (j.contains("sq")) return norm_from_json(j);
  if (j.contains("classes")) return partition_from_json(j);
  schema_error("", "unrecognised document (expected objects, values, thetas, table, sq or classes)");
}

namespace {

template <class T>
T parse_as(std::string_view text, const char* what) {
  Document doc = parse_document(text);
  if (auto* typed = std::get_if<T>(&doc)) return std::move(*typed);
  schema_error("", std::string("expected a ") + what + " document");
}

}  // namespace

GroupoidDocument parse_groupoid_document(std::string_view text) {
  return parse_as<GroupoidDocument>(text, "groupoid");
}
HomDocument parse_hom_document(std::string_view text) { return parse_as<HomDocument>(text, "homomorphism"); }
BihomDocument parse_bihom_document(std::string_view text) {
  return parse_as<BihomDocument>(text, "bihomomorphism");
}
NormDocument parse_norm_document(std::string_view text) { return parse_as<NormDocument>(text, "norm"); }
PartitionDocument parse_partition_document(std::string_view text) {
  return parse_as<PartitionDocument>(text, "partition");
}

std::string serialize(const Document& doc) { return std::visit(ToJson{}, doc).dump(2) + "\n"; }

FiniteGroupoid build_groupoid(const GroupoidDocument& doc, const Limits& limits) {
  RawGroupoid raw;
  std::unordered_map<std::string, std::uint32_t> object_index;
  std::unordered_map<std::string, std::uint32_t> arrow_index;
  raw.object_labels = doc.objects;
  for (std::uint32_t p = 0; p < doc.objects.size(); ++p) object_index.emplace(doc.objects[p], p);
  auto object_of = [&](const std::string& label, const std::string& path) {
    auto it = object_index.find(label);
    if (it == object_index.end()) throw Error(Errc::DanglingReference, path + ": unknown object '" + label + "'");
    return it->second;
  };
  for (std::uint32_t g = 0; g < doc.arrows.size(); ++g) {
    const auto& a = doc.arrows[g];
    const std::string path = "/arrows/" + std::to_string(g);
    raw.arrows.push_back({a.id, object_of(a.src, path), object_of(a.dst, path)});
    arrow_index.emplace(a.id, g);
  }
  auto arrow_of = [&](const std::string& label, const std::string& path) {
    auto it = arrow_index.find(label);
    if (it == arrow_index.end()) throw Error(Errc::DanglingReference, path + ": unknown arrow '" + label + "'");
    return it->second;
  };
  for (std::size_t i = 0; i < doc.compose.size(); ++i) {
    const std::string path = "/compose/" + std::to_string(i);
    const auto& t = doc.compose[i];
    raw.compose.push_back({arrow_of(t[0], path), arrow_of(t[1], path), arrow_of(t[2], path)});
  }
  if (doc.inverse) {
    std::vector<std::uint32_t> inverse(doc.arrows.size());
    for (std::uint32_t g = 0; g < doc.arrows.size(); ++g) {
      auto it = doc.inverse->find(doc.arrows[g].id);
      if (it == doc.inverse->end()) {
        throw Error(Errc::DanglingReference, "/inverse: no entry for '" + doc.arrows[g].id + "'");
      }
      inverse[g] = arrow_of(it->second, "/inverse");
    }
    raw.inverse = std::move(inverse);
  }
  if (doc.identity) {
    std::vector<std::uint32_t> identity(doc.objects.size());
    for (std::uint32_t p = 0; p < doc.objects.size(); ++p) {
      auto it = doc.identity->find(doc.objects[p]);
      if (it == doc.identity->end()) {
        throw Error(Errc::DanglingReference, "/identity: no entry for '" + doc.objects[p] + "'");
      }
      identity[p] = arrow_of(it->second, "/identity");
    }
    raw.identity = std::move(identity);
  }
  return validate_groupoid(raw, limits);
}

GroupoidHom build_hom(const FiniteGroupoid& G, const HomDocument& doc) {
  std::vector<std::optional<AbelianElement>> values(G.arrow_count());
  for (const auto& [label, e] : doc.values) values[idx(resolve_arrow(G, label, "/values/" + label))] = e;
  return validate_hom(G, std::move(values), doc.target);
}

Bihom build_bihom(const FiniteGroupoid& G, const BihomDocument& doc) {
  if (doc.from_thetas()) {
    std::vector<GroupoidHom> thetas;
    for (const HomDocument& t : doc.thetas) thetas.push_back(build_hom(G, t));
    return sip_from_thetas(thetas);
  }
  const std::size_t n = G.arrow_count();
  std::vector<std::optional<Gaussian>> entries(n * n);
  for (const auto& [gl, row] : doc.table) {
    const ArrowId g = resolve_arrow(G, gl, "/table/" + gl);
    for (const auto& [hl, z] : row) {
      const ArrowId h = resolve_arrow(G, hl, "/table/" + gl + "/" + hl);
      entries[idx(g) * n + idx(h)] = z;
    }
  }
  std::vector<Gaussian> table;
  table.reserve(n * n);
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.arrows()) {
      auto& z = entries[idx(g) * n + idx(h)];
      if (!z) {
        throw Error(Errc::MissingArrow, "table has no entry for ('" + G.label(g) + "', '" + G.label(h) + "')",
                    {item(g), item(h)});
      }
      table.push_back(std::move(*z));
    }
  }
  return validate_bihom(G, std::move(table), doc.field);
}

NormTable build_norm(const FiniteGroupoid& G, const NormDocument& doc) {
  std::vector<std::optional<SqValue>> values(G.arrow_count());
  for (const auto& [label, r] : doc.sq) values[idx(resolve_arrow(G, label, "/sq/" + label))] = SqValue(r);
  std::vector<SqValue> sq;
  for (ArrowId g : G.arrows()) {
    if (!values[idx(g)]) {
      throw Error(Errc::MissingArrow, "no squared norm for arrow '" + G.label(g) + "'", {item(g)});
    }
    sq.push_back(*values[idx(g)]);
  }
  return NormTable(G, std::move(sq));
}

Partition build_partition(const FiniteGroupoid& G, const PartitionDocument& doc) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> labels(G.arrow_count(), kUnset);
  for (std::uint32_t c = 0; c < doc.classes.size(); ++c) {
    for (std::size_t k = 0; k < doc.classes[c].size(); ++k) {
      const std::string path = "/classes/" + std::to_string(c) + "/" + std::to_string(k);
      const ArrowId g = resolve_arrow(G, doc.classes[c][k], path);
      if (labels[idx(g)] != kUnset) schema_error(path, "arrow '" + G.label(g) + "' listed twice");
      labels[idx(g)] = c;
    }
  }
  for (ArrowId g : G.arrows()) {
    if (labels[idx(g)] == kUnset) schema_error("/classes", "arrow '" + G.label(g) + "' is in no class");
  }
  return Partition::from_labels(labels);
}

GroupoidDocument to_document(const FiniteGroupoid& G) {
  GroupoidDocument doc;
  for (ObjectId p : G.objects()) doc.objects.push_back(G.label(p));
  for (ArrowId g : G.arrows()) doc.arrows.push_back({G.label(g), G.label(G.source(g)), G.label(G.target(g))});
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.source_fiber(G.target(g))) doc.compose.push_back({G.label(g), G.label(h), G.label(G.compose(g, h))});
  }
  return doc;
}

HomDocument to_document(const GroupoidHom& theta) {
  HomDocument doc{theta.target(), {}};
  for (ArrowId g : theta.groupoid().arrows()) doc.values.emplace(theta.groupoid().label(g), theta(g));
  return doc;
}

BihomDocument to_document(const Bihom& b) {
  BihomDocument doc;
  doc.field = b.field();
  const FiniteGroupoid& G = b.groupoid();
  for (ArrowId g : G.arrows()) {
    auto& row = doc.table[G.label(g)];
    for (ArrowId h : G.arrows()) row.emplace(G.label(h), b(g, h));
  }
  return doc;
}

NormDocument to_document(const NormTable& norm) {
  NormDocument doc;
  for (ArrowId g : norm.groupoid().arrows()) doc.sq.emplace(norm.groupoid().label(g), norm.sq(g).value());
  return doc;
}

PartitionDocument to_document(const FiniteGroupoid& G, const Partition& lambda) {
  PartitionDocument doc;
  for (std::uint32_t c = 0; c < lambda.class_count(); ++c) {
    std::vector<std::string> cls;
    for (ArrowId g : lambda.members(c)) cls.push_back(G.label(g));
    doc.classes.push_back(std::move(cls));
  }
  return doc;
}

BihomDocument to_document(const PolarizedTable& table) {
  BihomDocument doc;
  doc.field = FieldTag::Real;
  const FiniteGroupoid& G = table.groupoid;
  for (ArrowId g : G.arrows()) {
    for (ArrowId h : G.arrows()) {
      if (const auto& v = table.at(g, h)) doc.table[G.label(g)].emplace(G.label(h), *v);
    }
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace grpd
