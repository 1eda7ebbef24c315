#include "qmf/acceptance.hpp"

#include <cstdio>
#include <cstring>
#include <string>

// One line per criterion: PASS|FAIL <id> <title> (<seconds>s)
int main(int argc, char** argv) {
  qmf::SuiteOptions opt;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--fast")) opt.fast = true;
    else if (!std::strcmp(argv[i], "--verbose")) verbose = true;
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) opt.only.push_back(std::stoi(argv[++i]));
    else {
      std::fprintf(stderr, "usage: %s [--fast] [--verbose] [--seed N] [--only ID]...\n", argv[0]);
      return 2;
    }
  }
  int failed = 0;
  qmf::run_acceptance(opt, [&](const qmf::Criterion& c) {
    failed += !c.pass;
    std::printf("%s %d %s (%.2fs)\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds);
    if (verbose || !c.pass) std::printf("  %s\n", c.detail.dump().c_str());
    std::fflush(stdout);
  });
  return failed ? 1 : 0;
}
