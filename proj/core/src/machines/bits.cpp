#include "simlab/machines/bits.hpp"

#include <algorithm>

#include "simlab/core/errors.hpp"

namespace simlab::machines {

Bits nat_to_bits(const Nat& n) {
  if (n < 0) throw DomainError("nat_to_bits of a negative number");
  Nat m = n + 1;
  std::string digits;
  while (m > 1) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(m & 1)));
    m >>= 1;
  }
  std::reverse(digits.begin(), digits.end());
  return Bits(std::move(digits));
}

Nat bits_to_nat(const Bits& b) {
  Nat m = 1;
  for (char c : b.str()) {
    m <<= 1;
    if (c == '1') m += 1;
  }
  return m - 1;
}

}  // namespace simlab::machines
