#pragma once

#include <cstdint>
#include <span>

#include "simlab/core/outcome.hpp"
#include "simlab/recdsl/term.hpp"

namespace simlab::rec {

// Big-step evaluation under a step budget. Every node visit, every
// primitive-recursion iteration, every mu probe and every Ackermann stack
// step costs one unit. Raises ArityError if args.size() != t.arity().
Outcome eval_term(const Term& t, std::span<const Nat> args, Fuel& fuel);
Outcome eval_term(const Term& t, std::span<const Nat> args, std::uint64_t fuel);

}  // namespace simlab::rec
