#pragma once

#include "simlab/machines/cm.hpp"
#include "simlab/recdsl/term.hpp"

namespace simlab::machines {

// Compiles a unary term to a counter machine reading register 0 and
// writing register 1. Mu compiles to an outer search loop that re-runs the
// body. Ack is supported when its first argument is a constant (K m); the
// section A(m, .) is unrolled into m nested iteration loops. Anything else
// raises CompileError naming the construct.
CmProgram compile_rec_to_cm(const rec::Term& t);

}  // namespace simlab::machines
