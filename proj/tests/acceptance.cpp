// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "clustree/verify.hpp"

int main(int argc, char** argv) {
  clustree::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--verbose") continue;
    options.only = clustree::parse_suite_selection(arg);
  }
  const bool verbose = argc > 1 && std::string(argv[1]) == "--verbose";
  bool all = true;
  for (int id : clustree::selected_criteria(options)) {
    const auto report = clustree::run_criterion(id, options);
    std::printf("%s\n", report.line().c_str());
    for (const auto& check : report.checks)
      if (!check.pass || verbose)
        std::printf("    %s %s: %s\n", check.pass ? "ok  " : "FAIL", check.subject.c_str(), check.claim.c_str());
    std::fflush(stdout);
    all = all && report.pass();
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
