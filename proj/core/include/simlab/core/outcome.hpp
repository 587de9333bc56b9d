#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "simlab/core/value.hpp"

namespace simlab {

// Result of a fuel-bounded evaluation. Diverged is certified undefinedness
// (off-range conjugation, a finite table gap, an oracle saying so);
// FuelExhausted only means "not decided within the budget".
class Outcome {
 public:
  enum class Kind : std::uint8_t { converged, diverged, fuel_exhausted };

  static Outcome converged(Value v) { return Outcome(Kind::converged, std::move(v)); }
  static Outcome diverged() { return Outcome(Kind::diverged, std::nullopt); }
  static Outcome fuel_exhausted() { return Outcome(Kind::fuel_exhausted, std::nullopt); }

  Kind kind() const noexcept { return kind_; }
  bool is_converged() const noexcept { return kind_ == Kind::converged; }
  bool is_diverged() const noexcept { return kind_ == Kind::diverged; }
  bool is_exhausted() const noexcept { return kind_ == Kind::fuel_exhausted; }
  bool is_decided() const noexcept { return kind_ != Kind::fuel_exhausted; }

  const Value& value() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  Outcome(Kind k, std::optional<Value> v) : kind_(k), value_(std::move(v)) {}

  Kind kind_;
  std::optional<Value> value_;
};

std::string to_string(const Outcome& o);

// Step budget shared by every evaluator: term reductions, machine
// transitions, and mu-search probes all cost one unit.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget) noexcept : budget_(budget) {}

  [[nodiscard]] bool spend(std::uint64_t units = 1) noexcept {
    if (budget_ - spent_ < units) {
      spent_ = budget_;
      return false;
    }
    spent_ += units;
    return true;
  }

  std::uint64_t budget() const noexcept { return budget_; }
  std::uint64_t spent() const noexcept { return spent_; }
  std::uint64_t remaining() const noexcept { return budget_ - spent_; }

 private:
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
};

}  // namespace simlab
