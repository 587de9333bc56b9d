#pragma once

#include <cstddef>

#include "simlab/core/nat.hpp"

namespace simlab::rec {

struct AckLimits {
  Nat max_m = 4;
  // Largest admissible result, in bits.
  std::size_t max_result_bits = std::size_t{1} << 17;
};

// A(0, n) = n+1, A(m+1, 0) = A(m, 1), A(m+1, n+1) = A(m, A(m+1, n)).
// Raises BoundError("ack bound exceeded") beyond `limits`.
Nat ackermann(const Nat& m, const Nat& n, const AckLimits& limits = {});

}  // namespace simlab::rec
