#include <chrono>
#include <iostream>

#include "kahler/acceptance.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : kahler::acceptance::run_all()) {
    std::cout << kahler::acceptance::format_line(c) << '\n';
    if (!c.passed) ++failed;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
            << elapsed.count() << " s\n";
  return failed == 0 ? 0 : 1;
}
