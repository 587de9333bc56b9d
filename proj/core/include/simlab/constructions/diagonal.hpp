#pragma once

#include <cstdint>

#include "simlab/core/nat.hpp"
#include "simlab/recdsl/ackermann.hpp"
#include "simlab/recdsl/term.hpp"

namespace simlab::constructions {

struct DiagOptions {
  std::uint64_t fuel_per_probe = 10'000'000;
  rec::AckLimits ack_limits{};
};

// h(n) = e(min { i : e(i) > ack(n, n) }) with the search limited to
// i < bound. e must be a unary PRIM term; it plays the role of an encoding
// that successor-simulation would force to be primitive recursive.
// Raises BoundError("search bound exceeded") when no i < bound qualifies.
Nat diag_h(const rec::Term& e, const Nat& n, const Nat& bound, const DiagOptions& options = {});

}  // namespace simlab::constructions
