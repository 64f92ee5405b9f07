#include <cstdio>

#include "hypstab/acceptance.hpp"

int main() {
  const hypstab::AcceptanceReport report = hypstab::run_acceptance(1);
  for (const hypstab::CriterionResult& c : report.criteria) {
    std::printf("criterion %d [%s] %-34s measured=%-12.6g bound=%-12.6g %s\n", c.id,
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.bound,
                c.detail.c_str());
  }
  std::printf("acceptance: %s\n", report.all_pass() ? "PASS" : "FAIL");
  return report.all_pass() ? 0 : 1;
}
