#include <cstdlib>
#include <iostream>
#include <string>

#include "gasket/validation.hpp"

// Runs every acceptance criterion with the default sample sizes and
// thresholds. Usage: acceptance [--strict] [--seed N]
int main(int argc, char** argv) {
  gasket::ValidationConfig config;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--strict") {
      config.strict = true;
    } else if (arg == "--seed" && i + 1 < argc) {
      config.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--strict] [--seed N]\n";
      return 2;
    }
  }
  auto reports = gasket::run_validation_suite(config, [&](const gasket::ValidationReport& r) {
    std::cout << gasket::format_report_line(r, config.strict) << "\n";
    std::cout.flush();
  });
  bool ok = gasket::suite_passed(reports, config.strict);
  std::cout << (ok ? "all gating criteria passed" : "gating criteria failed") << "\n";
  return ok ? 0 : 1;
}
