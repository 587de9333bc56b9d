#pragma once

#include <string>

#include "simlab/core/model.hpp"
#include "simlab/core/value.hpp"

namespace simlab::constructions {

// nil -> 0, cons(x, y) -> 2^code(x) * (2 code(y) + 1). A bijection between
// pure lists and the naturals.
Nat godel_encode(const List& x);
List godel_decode(const Nat& n);

// The list-domain copy <pi>M of a model over the naturals (pure Lisp
// functions isomorphic to M under the pairing).
Model godel_list_model(const Model& nat_model, std::string name);

}  // namespace simlab::constructions
