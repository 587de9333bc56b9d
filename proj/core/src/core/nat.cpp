#include "simlab/core/nat.hpp"

#include <bit>

#include "simlab/core/errors.hpp"

namespace simlab {
namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  // Newton from above: x0 = 2^ceil(bits/2) >= sqrt(n).
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

}  // namespace

Nat isqrt(const Nat& n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  if (auto small = to_u64(n)) return Nat(isqrt_u64(*small));
  return boost::multiprecision::sqrt(n);
}

std::optional<std::uint64_t> to_u64(const Nat& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return n.convert_to<std::uint64_t>();
}

Nat parse_nat(std::string_view text) {
  if (text.empty()) throw ParseError("expected a natural number, got nothing", 0, 0);
  Nat n = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c < '0' || c > '9') {
      throw ParseError("expected a natural number, got '" + std::string(text) + "'", 0, 0);
    }
    n = n * 10 + (c - '0');
  }
  return n;
}

}  // namespace simlab
