#pragma once

#include <string>
#include <vector>

#include "simlab/recdsl/parse.hpp"

namespace simlab::rec {

struct NamedTerm {
  std::string name;
  Term term;
};

// Named helper terms usable from scenario files: add, mul, pred, monus,
// double, square, isqrt, half, ...
const Definitions& standard_definitions();

// Total unary terms exercising every construct: arithmetic, predecessor,
// mu-search, and small Ackermann sections. All converge on [0, 64] well
// within 10^6 steps.
std::vector<NamedTerm> benchmark_suite();

// Unary terms that are undefined on some inputs (unsatisfiable or
// parity-dependent mu-searches).
std::vector<NamedTerm> partial_suite();

}  // namespace simlab::rec
