#ifndef VG_VERIFY_HPP
#define VG_VERIFY_HPP

#include <string>
#include <vector>

namespace vg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Names accepted by run_module_checks.
std::vector<std::string> verify_module_names();

/// Per-module invariant and example suites (catalog invariants, property
/// checks with fixed seeds). Used by the CLI `verify` subcommand.
std::vector<CheckResult> run_module_checks(const std::string& module);

/// The numbered acceptance criteria, one CheckResult each.
std::vector<CheckResult> run_acceptance();

}  // namespace vg

#endif
