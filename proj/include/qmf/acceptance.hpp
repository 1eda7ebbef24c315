#pragma once

#include "qmf/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qmf {

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double time_limit = 0;  // 0: no limit
  json detail;
};

struct SuiteOptions {
  bool fast = false;  // reduced bounds: n <= 3 in the tau identity, 200 samples per algebra
  std::uint64_t seed = 1729;
  std::vector<int> only;  // empty: all ten
};

std::vector<Criterion> run_acceptance(const SuiteOptions& opt,
                                      const std::function<void(const Criterion&)>& on_done = {});

}  // namespace qmf
