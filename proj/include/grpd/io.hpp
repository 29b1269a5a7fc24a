#ifndef GRPD_IO_HPP
#define GRPD_IO_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/hom.hpp"
#include "grpd/norm.hpp"
#include "grpd/partition.hpp"
#include "grpd/sip.hpp"

namespace grpd {

// Documents are JSON and refer to everything by label. The groupoid
// document looks like
//
//   {"objects": ["0", "1"],
//    "arrows": [{"id": "e0", "src": "0", "dst": "0"}, ...],
//    "compose": [["a", "b", "e0"], ...],     // a then b is e0
//    "inverse": {"a": "b", ...},             // optional, cross-checked
//    "identity": {"0": "e0", ...}}           // optional, cross-checked
//
// Rationals are written "p/q" (or "p"), Gaussian rationals as
// {"re": "p/q", "im": "p/q"}; integers may also be bare JSON numbers.

struct GroupoidDocument {
  struct Arrow {
    std::string id;
    std::string src;
    std::string dst;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::array<std::string, 3>> compose;
  std::optional<std::map<std::string, std::string>> inverse;
  std::optional<std::map<std::string, std::string>> identity;

  friend bool operator==(const GroupoidDocument&, const GroupoidDocument&) = default;
};

/// {"target": ["Z", "Z/3", "Q", "C"], "values": {"a": [...], ...}}; a
/// one-component value may be written without the array.
struct HomDocument {
  AbelianGroupSig target;
  std::map<std::string, AbelianElement> values;

  friend bool operator==(const HomDocument&, const HomDocument&) = default;
};

/// {"thetas": [hom documents]} or {"table": {"g": {"h": value}}, "field": "real"|"complex"}.
struct BihomDocument {
  std::vector<HomDocument> thetas;
  std::map<std::string, std::map<std::string, Gaussian>> table;
  std::optional<FieldTag> field;

  bool from_thetas() const { return !thetas.empty(); }
  friend bool operator==(const BihomDocument&, const BihomDocument&) = default;
};

/// {"sq": {"a": "p/q", ...}}: squared norms.
struct NormDocument {
  std::map<std::string, Rational> sq;
  friend bool operator==(const NormDocument&, const NormDocument&) = default;
};

/// {"classes": [["e0", "e1"], ["a"], ...]}
struct PartitionDocument {
  std::vector<std::vector<std::string>> classes;
  friend bool operator==(const PartitionDocument&, const PartitionDocument&) = default;
};

using Document =
    std::variant<GroupoidDocument, HomDocument, BihomDocument, NormDocument, PartitionDocument>;

/// Detects the document kind from its top-level keys. Throws
/// Error(SyntaxError) with "line L, column C" in the message, or
/// Error(SchemaError) naming the offending path (e.g. "/compose/3").
Document parse_document(std::string_view text);

GroupoidDocument parse_groupoid_document(std::string_view text);
HomDocument parse_hom_document(std::string_view text);
BihomDocument parse_bihom_document(std::string_view text);
NormDocument parse_norm_document(std::string_view text);
PartitionDocument parse_partition_document(std::string_view text);

std::string serialize(const Document& doc);

// Documents <-> library values.
FiniteGroupoid build_groupoid(const GroupoidDocument& doc, const Limits& limits = {});
GroupoidHom build_hom(const FiniteGroupoid& groupoid, const HomDocument& doc);
Bihom build_bihom(const FiniteGroupoid& groupoid, const BihomDocument& doc);
NormTable build_norm(const FiniteGroupoid& groupoid, const NormDocument& doc);
Partition build_partition(const FiniteGroupoid& groupoid, const PartitionDocument& doc);

GroupoidDocument to_document(const FiniteGroupoid& groupoid);
HomDocument to_document(const GroupoidHom& theta);
BihomDocument to_document(const Bihom& b);
NormDocument to_document(const NormTable& norm);
PartitionDocument to_document(const FiniteGroupoid& groupoid, const Partition& lambda);
/// Defined entries only; pairs without a witness are left out.
BihomDocument to_document(const PolarizedTable& table);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace grpd

#endif  // GRPD_IO_HPP
