#pragma once

#include <string>
#include <vector>

#include "simlab/core/encoding.hpp"
#include "simlab/core/model.hpp"
#include "simlab/recdsl/term.hpp"

namespace simlab::constructions {

// lambda n. d*n + r with d >= 2 and r < d. stripe_encoding(2, 0) is the
// doubling encoding under which the "even" functions simulate Rec.
Encoding stripe_encoding(const Nat& d, const Nat& r);

// The striped copy of f: n -> d*f((n-r)/d) + r when n = r (mod d) and n >= r,
// n otherwise.
PartialMap stripe_model_member(const PartialMap& f, const Nat& d, const Nat& r);
PartialMap stripe_model_member(const rec::Term& t, const Nat& d, const Nat& r,
                               std::string name = "t");

// Striped copies of every listed member of `base` (R_2 for d=2, r=0 and
// R_1 for d=2, r=1 when `base` samples Rec).
Model stripe_model(const Model& base, const Nat& d, const Nat& r, std::string name);

// Every stripe(d, r) with 1 <= d <= d_max and r < d, ordered by d then r.
// stripe(1, 0) is the identity on naturals.
std::vector<Encoding> stripe_family(unsigned d_max);

}  // namespace simlab::constructions
