#include "simlab/recdsl/ackermann.hpp"

#include "simlab/core/errors.hpp"

namespace simlab::rec {
namespace {

[[noreturn]] void exceeded() { throw BoundError("ack bound exceeded"); }

void check(const Nat& v, const AckLimits& limits) {
  if (v != 0 && boost::multiprecision::msb(v) + 1 > limits.max_result_bits) exceeded();
}

Nat level(unsigned m, const Nat& n, const AckLimits& limits) {
  Nat r;
  switch (m) {
    case 0: r = n + 1; break;
    case 1: r = n + 2; break;
    case 2: r = 2 * n + 3; break;
    case 3: {
      if (n + 3 > limits.max_result_bits) exceeded();
      r = (Nat(1) << (n.convert_to<unsigned>() + 3)) - 3;
      break;
    }
    default: {
      // A(m, n) = A(m-1)^(n+1)(1); blows past any sane bound in a few rounds.
      r = 1;
      for (Nat i = 0; i <= n; ++i) r = level(m - 1, r, limits);
      break;
    }
  }
  check(r, limits);
  return r;
}

}  // namespace

Nat ackermann(const Nat& m, const Nat& n, const AckLimits& limits) {
  if (m < 0 || n < 0) throw DomainError("ackermann of a negative number");
  if (m > limits.max_m) exceeded();
  if (m > 64) exceeded();
  return level(m.convert_to<unsigned>(), n, limits);
}

}  // namespace simlab::rec
