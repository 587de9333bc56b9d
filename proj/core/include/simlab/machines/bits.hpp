#pragma once

#include "simlab/core/nat.hpp"
#include "simlab/core/value.hpp"

namespace simlab::machines {

// Bijection N -> {0,1}*: 0 maps to the empty string, n > 0 to the shortest
// binary representation of n+1 with its leading 1 removed. Enumerates
// e, 0, 1, 00, 01, 10, 11, 000, ...
Bits nat_to_bits(const Nat& n);
Nat bits_to_nat(const Bits& b);

}  // namespace simlab::machines
