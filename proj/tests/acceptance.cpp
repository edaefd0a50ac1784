// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "kdmonoid/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const kdm::VerifyReport report = kdm::run_verify(kdm::VerifyOptions{});
  const double seconds = std::chrono::duration<double>(clock::now() - start).count();

  int failed = 0;
  for (int c = 1; c <= kdm::kCriteriaCount; ++c) {
    const bool ok = report.criterion_passed(c);
    failed += !ok;
    std::cout << "criterion " << c << " (" << kdm::criterion_title(c) << "): "
              << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      for (const kdm::CheckResult* check : report.checks_for(c)) {
        if (check->status != kdm::CheckStatus::fail) continue;
        std::cout << "    " << check->id << ": " << check->description << " (" << check->details
                  << ")\n";
      }
    }
  }
  std::printf("%d/%d criteria passed in %.2f s\n", kdm::kCriteriaCount - failed,
              kdm::kCriteriaCount, seconds);
  return failed == 0 ? 0 : 1;
}
