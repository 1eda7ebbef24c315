#pragma once

#include "qmf/rational.hpp"

#include <cstdint>
#include <vector>

namespace qmf {

Integer sigma(int k, std::int64_t n);
// Coefficients tau(1..n) of q prod (1 - q^m)^24.
std::vector<Integer> ramanujan_tau_table(int n);
Integer ramanujan_tau(int n);

}  // namespace qmf
