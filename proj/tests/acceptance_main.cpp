// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
#include <cstdio>

#include "vg/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : vg::run_acceptance()) {
    std::printf("%s %s -- %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%s\n", failed == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: FAILURES present");
  return failed == 0 ? 0 : 1;
}
