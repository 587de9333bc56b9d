#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simlab/core/nat.hpp"

namespace simlab {

enum class Domain { nat, bits, list };

std::string_view to_string(Domain d) noexcept;
std::optional<Domain> parse_domain(std::string_view text) noexcept;

// A finite string over {0,1}; the empty string is allowed.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::string digits);

  const std::string& str() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits&, const Bits&) = default;

 private:
  std::string digits_;
};

// A pure list: either nil or a cons of two pure lists. Cells are shared
// and immutable, so copies are cheap.
class List {
 public:
  List() = default;  // nil

  static List nil() { return List{}; }
  static List cons(List head, List tail);
  static List of(std::vector<List> elements);

  bool is_nil() const noexcept { return cell_ == nullptr; }
  const List& head() const;
  const List& tail() const;

  // Number of top-level elements.
  std::size_t length() const noexcept;

  friend bool operator==(const List& a, const List& b);

 private:
  struct Cell;
  explicit List(std::shared_ptr<const Cell> cell) : cell_(std::move(cell)) {}

  std::shared_ptr<const Cell> cell_;
};

// Parenthesised list notation: nil is "()", cons(nil, nil) is "(())".
std::string to_string(const List& list);
List parse_list(std::string_view text);

class Value {
 public:
  Value(Nat n);  // NOLINT(google-explicit-constructor)
  Value(Bits b) : v_(std::move(b)) {}  // NOLINT(google-explicit-constructor)
  Value(List l) : v_(std::move(l)) {}  // NOLINT(google-explicit-constructor)

  static Value nat(std::uint64_t n) { return Value(Nat(n)); }

  Domain domain() const noexcept;

  const Nat& as_nat() const;
  const Bits& as_bits() const;
  const List& as_list() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<Nat, Bits, List> v_;
};

// Text form used in reports: 7, b"0110", (() ()).
std::string to_string(const Value& v);
Value parse_value(std::string_view text, Domain domain);

// The n-th element of a domain's canonical enumeration: n itself for
// naturals, nat_to_bits(n) for bit strings, godel_decode(n) for lists.
Value canonical_value(Domain domain, const Nat& index);

void require_domain(const Value& v, Domain expected, std::string_view context);

}  // namespace simlab
