// Runs every registered claim and prints one line per claim.
#include <iostream>

#include "strata/catalog/claims.hpp"

int main() {
  using namespace strata::catalog;
  ClaimRun run;
  try {
    run = run_claims();
  } catch (const std::exception& e) {
    std::cout << "acceptance run failed: " << e.what() << '\n';
    return 1;
  }
  for (const auto& r : run.results) {
    std::cout << r.claim.id << (r.claim.id.size() < 3 ? "  " : " ") << (r.pass ? "PASS" : "FAIL") << "  "
              << r.claim.description << "  [" << r.observed << "]";
    if (!r.error.empty()) std::cout << "  error: " << r.error;
    std::cout << '\n';
  }
  std::cout << run.passed() << "/" << run.results.size() << " criteria pass\n";
  return run.ok() ? 0 : 1;
}
