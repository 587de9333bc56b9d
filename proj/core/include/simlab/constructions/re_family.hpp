#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "simlab/core/encoding.hpp"
#include "simlab/core/model.hpp"

namespace simlab::constructions {

// Stand-in for the (non-computable) uniform-halting predicate: any total
// 0/1-valued map with h(0) = 0.
class OracleH {
 public:
  OracleH(std::string name, std::function<unsigned(const Nat&)> h);

  static OracleH zeros();
  static OracleH parity();
  // Deterministic pseudorandom bits keyed by (seed, n); h(0) = 0.
  static OracleH pseudorandom(std::uint64_t seed);

  const std::string& name() const noexcept { return name_; }
  // Raises ValidationError if the wrapped map returns something other
  // than 0 or 1.
  unsigned operator()(const Nat& n) const;

 private:
  std::string name_;
  std::function<unsigned(const Nat&)> h_;
};

struct ReFamily {
  PartialMap h_i;        // 0 if n < i or h(n) = 0, bottom otherwise
  PartialMap h_prime_i;  // 0 if floor(n/2) < i or n even, bottom otherwise
  Encoding rho;          // n -> 2n + h(n)
};

// Raises ValidationError if h(0) != 0.
ReFamily re_family(const OracleH& h, const Nat& i);

// rho alone.
Encoding re_encoding(const OracleH& h);

struct ReModels {
  Model source;  // {h_0 .. h_{i_max}}
  Model target;  // {h'_0 .. h'_{i_max}}
};

ReModels re_models(const OracleH& h, unsigned i_max);

}  // namespace simlab::constructions
