// One line per acceptance criterion; nonzero exit if any fails.

#include <iostream>

#include "bgrank/acceptance.hpp"

int main() {
  bool ok = true;
  bgrank::acceptance::run_all({}, [&](const bgrank::acceptance::CriterionResult& r) {
    std::cout << bgrank::acceptance::format_line(r) << '\n' << std::flush;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
