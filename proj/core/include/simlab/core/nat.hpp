#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace simlab {

// Natural numbers are arbitrary precision throughout: Goedel codes and
// Ackermann values overflow any fixed width.
using Nat = boost::multiprecision::cpp_int;

// Exact floor(sqrt(n)); no floating point. Throws DomainError for n < 0.
Nat isqrt(const Nat& n);

std::optional<std::uint64_t> to_u64(const Nat& n);

// Decimal digits only; throws ParseError otherwise.
Nat parse_nat(std::string_view text);

}  // namespace simlab
