#ifndef GRPD_CLI_HPP
#define GRPD_CLI_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "grpd/hom.hpp"
#include "grpd/report.hpp"

namespace grpd {

/// Exit codes of the command-line driver.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command (arguments without the program name). Reports go to
/// `out`, usage and input errors to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Every proposition check the library knows, on one groupoid and a scalar
/// family: congruence from the family, the semi-inner product it induces,
/// the row relation, the norm, consistency, parallelogram, polarization and
/// the scalar-set laws.
Report full_report(const FiniteGroupoid& groupoid, std::span<const GroupoidHom> thetas);

}  // namespace grpd

#endif  // GRPD_CLI_HPP
