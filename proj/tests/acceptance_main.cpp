#include <cstring>
#include <iostream>

#include "sig/acceptance.hpp"

int main(int argc, char** argv) {
  sig::AcceptanceConfig config;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      config.quick = true;
    } else {
      std::cerr << "usage: acceptance [--quick]\n";
      return 2;
    }
  }
  const sig::AcceptanceReport report = sig::run_acceptance(config);
  for (const auto& r : report.results) std::cout << sig::format_result(r) << '\n';
  return report.all_passed() ? 0 : 1;
}
