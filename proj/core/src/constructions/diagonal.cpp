#include "simlab/constructions/diagonal.hpp"

#include "simlab/core/errors.hpp"
#include "simlab/recdsl/eval.hpp"

namespace simlab::constructions {

Nat diag_h(const rec::Term& e, const Nat& n, const Nat& bound, const DiagOptions& options) {
  if (e.arity() != 1) throw ArityError("diag_h needs a unary term, got " + rec::to_string(e));
  if (rec::classify(e) != rec::TermClass::prim) {
    throw DomainError("diag_h needs a primitive recursive term, got " + rec::to_string(e));
  }
  const Nat target = rec::ackermann(n, n, options.ack_limits);
  for (Nat i = 0; i < bound; ++i) {
    const Outcome v = rec::eval_term(e, std::span<const Nat>(&i, 1), options.fuel_per_probe);
    if (!v.is_converged()) {
      throw BoundError("e(" + i.str() + ") did not converge within " +
                       std::to_string(options.fuel_per_probe) + " steps");
    }
    if (v.value().as_nat() > target) return v.value().as_nat();
  }
  throw BoundError("search bound exceeded");
}

}  // namespace simlab::constructions
