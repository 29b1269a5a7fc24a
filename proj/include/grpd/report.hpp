#ifndef GRPD_REPORT_HPP
#define GRPD_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "grpd/check.hpp"
#include "grpd/groupoid.hpp"

namespace grpd {

enum class CheckResult : std::uint8_t { Pass, Fail, NotApplicable, Vacuous };
enum class ReportStatus : std::uint8_t { Pass, Fail, NotApplicable };

std::string_view to_string(CheckResult r);
std::string_view to_string(ReportStatus s);

/// One line of a verification report. Witnesses are already rendered as
/// labels: arrows by their label, objects as "object <label>".
struct ReportCheck {
  std::string name;
  CheckResult result = CheckResult::Pass;
  std::string value;  // "true", "false", ...
  std::vector<std::string> witness;
  std::string detail;
};

struct Report {
  std::vector<ReportCheck> checks;
  std::vector<std::pair<std::string, std::string>> facts;

  /// Fail if any check failed; NotApplicable if every check was; Pass
  /// otherwise (vacuous checks do not fail a report).
  ReportStatus status() const;

  void add(const FiniteGroupoid& groupoid, std::string name, const Check& check);
  void add(std::string name, CheckResult result, std::string value = {},
           std::vector<std::string> witness = {}, std::string detail = {});
  void fact(std::string key, std::string value);
};

std::vector<std::string> witness_labels(const FiniteGroupoid& groupoid, const Witness& witness);

/// Human-readable form, e.g. "[fail] complete: false, witness: (a, object 1)".
std::string render_text(const Report& report);
/// Machine form with the same content.
std::string render_json(const Report& report);

}  // namespace grpd

#endif  // GRPD_REPORT_HPP
