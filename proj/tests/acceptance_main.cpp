// Acceptance gate: runs the nine fixed checks and prints one verdict line
// per check. Exit status 0 only when every check passes.

#include <cstdio>

#include "coxbuild/verify.hpp"

int main() {
  std::vector<coxbuild::CriterionResult> results = coxbuild::run_acceptance();
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const coxbuild::CriterionResult& r = results[i];
    all = all && r.pass;
    std::printf("[%s] %zu %-24s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", i + 1,
                r.name.c_str(), r.seconds, r.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all 9 criteria passed"
                          : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
