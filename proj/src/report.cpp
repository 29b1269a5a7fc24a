#include "grpd/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace grpd {

std::string_view to_string(CheckResult r) {
  switch (r) {
    case CheckResult::Pass: return "pass";
    case CheckResult::Fail: return "fail";
    case CheckResult::NotApplicable: return "not_applicable";
    case CheckResult::Vacuous: return "vacuous";
  }
  return "?";
}

std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

ReportStatus Report::status() const {
  auto has = [&](CheckResult r) {
    return std::any_of(checks.begin(), checks.end(), [r](const ReportCheck& c) { return c.result == r; });
  };
  if (has(CheckResult::Fail)) return ReportStatus::Fail;
  if (!checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) {
        return c.result == CheckResult::NotApplicable;
      })) {
    return ReportStatus::NotApplicable;
  }
  return ReportStatus::Pass;
}

void Report::add(const FiniteGroupoid& groupoid, std::string name, const Check& check) {
  add(std::move(name), check.holds ? CheckResult::Pass : CheckResult::Fail, check.holds ? "true" : "false",
      witness_labels(groupoid, check.witness), check.holds ? std::string() : check.detail);
}

void Report::add(std::string name, CheckResult result, std::string value, std::vector<std::string> witness,
                 std::string detail) {
  if (value.empty()) value = result == CheckResult::Pass ? "true" : std::string(to_string(result));
  checks.push_back({std::move(name), result, std::move(value), std::move(witness), std::move(detail)});
}

void Report::fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }

std::vector<std::string> witness_labels(const FiniteGroupoid& G, const Witness& witness) {
  std::vector<std::string> out;
  out.reserve(witness.size());
  for (const WitnessItem& w : witness) {
    if (w.kind == WitnessItem::Kind::Arrow) {
      out.push_back(G.label(ArrowId{w.index}));
    } else {
      out.push_back("object " + G.label(ObjectId{w.index}));
    }
  }
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "status: " << to_string(report.status()) << "\n";
  for (const ReportCheck& c : report.checks) {
    out << "[" << to_string(c.result) << "] " << c.name << ": " << c.value;
    if (!c.witness.empty()) {
      out << ", witness: (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? ", " : "") << c.witness[i];
      out << ")";
    }
    if (!c.detail.empty()) out << "; " << c.detail;
    out << "\n";
  }
  for (const auto& [key, value] : report.facts) out << "  " << key << ": " << value << "\n";
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json out;
  out["status"] = to_string(report.status());
  auto checks = nlohmann::ordered_json::array();
  for (const ReportCheck& c : report.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["result"] = to_string(c.result);
    j["value"] = c.value;
    j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  auto facts = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.facts) facts[key] = value;
  out["facts"] = std::move(facts);
  return out.dump(2) + "\n";
}

}  // namespace grpd
