#pragma once

#include <string>

#include "simlab/core/model.hpp"
#include "simlab/core/nat.hpp"

namespace simlab::constructions {

// Naturals laid out in rows: row m holds [m^2, m^2 + 2m], 2m+1 entries.
//
//   f_{i,j}(n) = (isqrt(n) + i)^2 + (j mod (2 isqrt(n) + 2i + 1))
//   g_i(n)     = f_{i,0}(n) = (isqrt(n) + i)^2
//   pi(n)      = f_{0, n - isqrt(n)^2 + 1}(n)
//
// f and g accept i = 0 and j = 0; membership in F and G is enforced by the
// model builders below.
Nat tri_f(const Nat& i, const Nat& j, const Nat& n);
Nat tri_g(const Nat& i, const Nat& n);
// Successor within the row of n, wrapping at the row's end. Cycles are
// exactly the rows: (0) (1 2 3) (4 5 6 7 8) ...
Nat tri_pi(const Nat& n);
Nat tri_pi_inverse(const Nat& n);

// Member maps. Names: "iota", "kappa_<k>", "f_<i>_<j>", "g_<i>".
PartialMap tri_iota();
PartialMap tri_kappa(const Nat& k);
PartialMap tri_f_map(const Nat& i, const Nat& j);
PartialMap tri_g_map(const Nat& i);

// K = {iota} + {kappa_k : k <= k_max}
Model tri_k_model(unsigned k_max);
// F = {f_{i,j} : 1 <= i <= i_max, 1 <= j <= j_max}
Model tri_f_model(unsigned i_max, unsigned j_max);
// G = {g_i : 1 <= i <= i_max}
Model tri_g_model(unsigned i_max);

struct TriModels {
  Model a;  // K + F + G
  Model b;  // K + F
};

// Finite samples of A = K u F u G and B = K u F. Each model also carries an
// enumerator over the whole infinite model (by level: iota, then for
// L = 0, 1, 2, ...: kappa_L, f_{i,j} with i + j = L, and for A also g_L),
// so witness searches can reach members outside the sample.
TriModels tri_models(unsigned i_max, unsigned j_max, unsigned k_max);

}  // namespace simlab::constructions
