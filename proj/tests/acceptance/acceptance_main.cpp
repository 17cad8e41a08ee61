#include "acceptance/criteria.hpp"

#include <cstdio>

int main() {
  const auto results = llc::acceptance::run_all();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %2d: %s -- %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}
